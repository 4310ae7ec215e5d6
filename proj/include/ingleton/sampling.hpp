#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ingleton/distribution.hpp"
#include "ingleton/graphs.hpp"

namespace ingleton::sampling {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Seeded generator with platform-independent integer draws (the standard
/// distributions are implementation-defined, mt19937_64 itself is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n). n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    /// Derived generator for an independent stream.
    Rng fork(std::uint64_t stream);

private:
    std::mt19937_64 engine_;
};

/// Random joint law: alphabet sizes in [2, max_alphabet], distinct support
/// tuples (at most max_support of them), integer weights in [1, max_weight].
entropy::JointDistribution random_distribution(Rng& rng, std::size_t arity, std::size_t max_alphabet,
                                               std::size_t max_support, std::uint32_t max_weight = 16);

/// Random integer row of the given length summing to `total`, entries >= 0.
std::vector<std::uint32_t> random_row(Rng& rng, std::size_t length, std::uint32_t total, bool allow_zero = true);

/// Uniformly random nonempty subset of {0..n-1} (sorted).
std::vector<graphs::Vertex> random_subset(Rng& rng, std::size_t n);

}  // namespace ingleton::sampling
