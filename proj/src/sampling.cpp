#include "ingleton/sampling.hpp"

#include <algorithm>
#include <set>

#include "ingleton/error.hpp"

namespace ingleton::sampling {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) fail(ErrorKind::InvalidArgument, "empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = 0;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) fail(ErrorKind::InvalidArgument, "empty range");
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng Rng::fork(std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(engine_()), static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    std::uint64_t s = 0;
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    s = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
    return Rng(s);
}

entropy::JointDistribution random_distribution(Rng& rng, std::size_t arity, std::size_t max_alphabet,
                                               std::size_t max_support, std::uint32_t max_weight) {
    if (arity == 0 || max_alphabet < 2 || max_support < 2 || max_weight == 0) {
        fail(ErrorKind::InvalidArgument, "degenerate sampling parameters");
    }
    std::vector<std::size_t> sizes(arity);
    std::size_t space = 1;
    for (auto& s : sizes) {
        s = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(max_alphabet)));
        space = std::min<std::size_t>(space * s, std::size_t{1} << 40);
    }
    const auto support = static_cast<std::size_t>(
        rng.between(2, static_cast<std::int64_t>(std::min(max_support, space))));
    std::set<entropy::Tuple> tuples;
    while (tuples.size() < support) {
        entropy::Tuple t(arity);
        for (std::size_t i = 0; i < arity; ++i) t[i] = static_cast<entropy::Symbol>(rng.below(sizes[i]));
        tuples.insert(std::move(t));
    }
    std::vector<std::uint64_t> weights;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < support; ++i) {
        weights.push_back(static_cast<std::uint64_t>(rng.between(1, max_weight)));
        total += weights.back();
    }
    std::vector<entropy::Atom> atoms;
    std::size_t k = 0;
    for (const auto& t : tuples) {
        mpq_class m(static_cast<unsigned long>(weights[k++]), static_cast<unsigned long>(total));
        m.canonicalize();
        atoms.push_back({t, m});
    }
    return entropy::JointDistribution::with_sizes(sizes, std::move(atoms));
}

std::vector<std::uint32_t> random_row(Rng& rng, std::size_t length, std::uint32_t total, bool allow_zero) {
    if (length == 0) fail(ErrorKind::InvalidArgument, "empty row");
    if (!allow_zero && total < length) fail(ErrorKind::InvalidArgument, "total too small for a positive row");
    // stars and bars: length-1 distinct bars among the slots
    const std::uint64_t slots = allow_zero ? std::uint64_t{total} + length - 1 : std::uint64_t{total} - 1;
    std::set<std::uint64_t> bars;
    while (bars.size() < length - 1) bars.insert(rng.below(slots));
    std::vector<std::uint32_t> row;
    std::uint64_t begin = 0;
    for (auto b : bars) {
        row.push_back(static_cast<std::uint32_t>(allow_zero ? b - begin : b + 1 - begin));
        begin = b + 1;
    }
    row.push_back(static_cast<std::uint32_t>(allow_zero ? slots - begin : std::uint64_t{total} - begin));
    return row;
}

std::vector<graphs::Vertex> random_subset(Rng& rng, std::size_t n) {
    if (n == 0) fail(ErrorKind::EmptySubset, "no vertices to draw from");
    std::vector<graphs::Vertex> out;
    while (out.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.below(2)) out.push_back(static_cast<graphs::Vertex>(i));
        }
    }
    return out;
}

}  // namespace ingleton::sampling
