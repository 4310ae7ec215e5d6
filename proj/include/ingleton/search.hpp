#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ingleton/bounds.hpp"
#include "ingleton/distribution.hpp"
#include "ingleton/graphs.hpp"
#include "ingleton/sampling.hpp"

namespace ingleton::search {

/// Conditional laws P(A|X,Y) and P(B|X,Y), one row per edge in sorted edge order.
struct KernelPair {
    std::size_t alphabet_a = 1;
    std::size_t alphabet_b = 1;
    std::vector<std::vector<mpq_class>> a;
    std::vector<std::vector<mpq_class>> b;

    friend bool operator==(const KernelPair&, const KernelPair&) = default;
};

/// The quadruple (X,Y,A,B) with (X,Y) uniform on the edges and A, B drawn
/// independently given (X,Y). Errors: MissingKernelRow, RowNotNormalized.
entropy::JointDistribution extension(const graphs::BiregularBipartiteGraph& graph, const KernelPair& kernels);

/// Roles of `extension`: X=0, Y=1, A=2, B=3.
inline const entropy::IngletonRoles kQuadRoles{entropy::VarSet{0}, entropy::VarSet{1}, entropy::VarSet{2},
                                               entropy::VarSet{3}};

/// Kernels A=X, B=Y (relabelled to the vertex indices).
KernelPair copy_kernels(const graphs::BiregularBipartiteGraph& graph);
/// Kernels A=B=constant.
KernelPair constant_kernels(const graphs::BiregularBipartiteGraph& graph);

enum class Strategy { Exhaustive, Random, Local };
Strategy strategy_from_string(const std::string& s);
const char* to_string(Strategy s);

struct SearchConfig {
    std::size_t alphabet_a = 2;
    std::size_t alphabet_b = 2;
    Strategy strategy = Strategy::Local;
    std::size_t restarts = 20;
    std::size_t max_steps = 1000;
    double step_scale = 0.5;
    std::uint64_t seed = sampling::kDefaultSeed;
    bounds::BoundConfig bound{};
    /// Starting point of the first restart (local strategy).
    std::optional<KernelPair> initial;
};

struct SearchReport {
    double best_ing = 0.0;
    KernelPair best_kernels;
    std::vector<double> trace;                  // best value of each restart
    std::vector<std::vector<double>> histories;  // accepted values, per restart
    std::size_t evaluations = 0;
    double mutual_information = 0.0;
    std::optional<bounds::CertifiedBoundReport> certified_at_best;  // absent when I(X:Y) < epsilon0
};

/// Exact minimum over deterministic kernels E -> alphabet.
/// Errors: SearchSpaceTooLarge when a^|E| * b^|E| > 2^24.
SearchReport exhaustive_min(const graphs::BiregularBipartiteGraph& graph, const SearchConfig& config);

/// Descent on integer kernel rows: multiplicative perturbation, or with
/// probability 1/5 a snap of the row to a point mass. Best over restarts.
SearchReport local_min(const graphs::BiregularBipartiteGraph& graph, const SearchConfig& config);

/// Best over independent random kernels (restarts * max_steps draws).
SearchReport random_min(const graphs::BiregularBipartiteGraph& graph, const SearchConfig& config);

/// Dispatch on config.strategy.
SearchReport run(const graphs::BiregularBipartiteGraph& graph, const SearchConfig& config);

}  // namespace ingleton::search
