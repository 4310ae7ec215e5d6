#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's numerical code paths.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ingleton/distribution.hpp"

namespace oracle {

/// a * b mod p by repeated addition.
inline std::uint32_t slow_mul(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < b; ++i) r = (r + a) % p;
    return r;
}

/// Inverse by exhaustive search; 0 if none.
inline std::uint32_t slow_inv(std::uint32_t p, std::uint32_t a) {
    for (std::uint32_t b = 1; b < p; ++b) {
        if (slow_mul(p, a, b) == 1) return b;
    }
    return 0;
}

using Vec = std::vector<std::uint32_t>;

inline std::vector<Vec> all_vectors(std::uint32_t p, std::size_t n) {
    std::vector<Vec> out{Vec(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vec> next;
        for (const auto& v : out) {
            for (std::uint32_t c = 0; c < p; ++c) {
                auto w = v;
                w[i] = c;
                next.push_back(w);
            }
        }
        out = std::move(next);
    }
    return out;
}

/// Set of all linear combinations of the generators.
inline std::set<Vec> span(std::uint32_t p, const std::vector<Vec>& gens, std::size_t n) {
    std::set<Vec> s{Vec(n, 0)};
    for (const auto& g : gens) {
        std::set<Vec> next;
        for (const auto& v : s) {
            for (std::uint32_t c = 0; c < p; ++c) {
                Vec w(n);
                for (std::size_t i = 0; i < n; ++i) w[i] = (v[i] + c * g[i]) % p;
                next.insert(w);
            }
        }
        s = std::move(next);
    }
    return s;
}

/// Number of k-dimensional subspaces of F_p^n, by enumerating spans of all
/// k-tuples of vectors.
inline std::size_t count_subspaces(std::uint32_t p, std::size_t n, std::size_t k) {
    const auto vecs = all_vectors(p, n);
    std::size_t target = 1;
    for (std::size_t i = 0; i < k; ++i) target *= p;
    std::set<std::set<Vec>> found;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        std::vector<Vec> gens;
        for (auto i : idx) gens.push_back(vecs[i]);
        auto s = span(p, gens, n);
        if (s.size() == target) found.insert(std::move(s));
        std::size_t pos = 0;
        while (pos < k && ++idx[pos] == vecs.size()) idx[pos++] = 0;
        if (pos == k) break;
    }
    return found.size();
}

/// Entropy of the marginal on the variables in `mask`, straight from the atoms.
inline double subset_entropy(const ingleton::entropy::JointDistribution& d, std::uint32_t mask) {
    std::map<std::vector<std::uint32_t>, long double> m;
    for (const auto& a : d.atoms()) {
        std::vector<std::uint32_t> key;
        for (std::size_t i = 0; i < d.arity(); ++i) {
            if ((mask >> i) & 1u) key.push_back(a.tuple[i]);
        }
        m[key] += static_cast<long double>(a.mass.get_d());
    }
    long double h = 0;
    for (const auto& [_, p] : m) {
        if (p > 0) h -= p * std::log2(p);
    }
    return static_cast<double>(h);
}

/// I(A:B|C) from subset entropies, with empty-mask entropy 0.
inline double cmi(const ingleton::entropy::JointDistribution& d, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    auto h = [&](std::uint32_t m) { return m ? subset_entropy(d, m) : 0.0; };
    return h(a | c) + h(b | c) - h(a | b | c) - h(c);
}

inline double ingleton(const ingleton::entropy::JointDistribution& d, std::uint32_t x, std::uint32_t y,
                       std::uint32_t a, std::uint32_t b) {
    return cmi(d, x, y, a) + cmi(d, x, y, b) + cmi(d, a, b, 0) - cmi(d, x, y, 0);
}

/// max/min over J-projections of the number of distinct (I,J)-projections,
/// for a 2-dimensional point set given by a bitmask over `pts`.
inline double fiber_ratio_2d(const std::vector<std::pair<int, int>>& pts, std::uint32_t mask, bool swap) {
    std::map<int, std::set<int>> fib;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!((mask >> i) & 1u)) continue;
        const auto [u, v] = pts[i];
        if (swap) {
            fib[u].insert(v);
        } else {
            fib[v].insert(u);
        }
    }
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& [_, s] : fib) {
        lo = std::min(lo, s.size());
        hi = std::max(hi, s.size());
    }
    return static_cast<double>(hi) / static_cast<double>(lo);
}

/// Fewest d-regular parts covering a 2-D point set (at most 12 points).
inline std::size_t min_regular_parts(const std::vector<std::pair<int, int>>& pts, double d) {
    const std::uint32_t full = (1u << pts.size()) - 1;
    std::vector<char> good(full + 1, 0);
    for (std::uint32_t m = 1; m <= full; ++m) {
        good[m] = fiber_ratio_2d(pts, m, false) <= d && fiber_ratio_2d(pts, m, true) <= d;
    }
    std::vector<std::size_t> best(full + 1, SIZE_MAX);
    best[0] = 0;
    for (std::uint32_t m = 1; m <= full; ++m) {
        const std::uint32_t low = m & (~m + 1);
        for (std::uint32_t s = m; s; s = (s - 1) & m) {
            if ((s & low) && good[s] && best[m ^ s] != SIZE_MAX) best[m] = std::min(best[m], best[m ^ s] + 1);
        }
    }
    return best[full];
}

}  // namespace oracle
