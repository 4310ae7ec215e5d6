#include "ingleton/splitter.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "ingleton/entropy.hpp"
#include "ingleton/error.hpp"
#include "ingleton/uniformity.hpp"

namespace ingleton::splitter {

using entropy::JointDistribution;
using entropy::Tuple;
using entropy::VarSet;

namespace {

constexpr double kSlack = 1e-9;

double weights_entropy(const std::vector<mpq_class>& weights, const mpq_class& tail) {
    double h = 0.0;
    auto add = [&h](const mpq_class& w) {
        if (sgn(w) > 0) {
            const double p = w.get_d();
            h -= p * std::log2(p);
        }
    };
    for (const auto& w : weights) add(w);
    add(tail);
    return h;
}

mpq_class mass_ratio_of(const JointDistribution& dist, const std::vector<std::size_t>& part) {
    const auto [lo, hi] = std::minmax_element(part.begin(), part.end(), [&](std::size_t a, std::size_t b) {
        return dist.atoms()[a].mass < dist.atoms()[b].mass;
    });
    mpq_class r = dist.atoms()[*hi].mass / dist.atoms()[*lo].mass;
    return r;
}

mpq_class sum_mass(const JointDistribution& dist, const std::vector<std::size_t>& part) {
    mpq_class s = 0;
    for (auto i : part) s += dist.atoms()[i].mass;
    return s;
}

Tuple project_point(const Tuple& t, std::uint32_t mask) { return entropy::project(t, VarSet(mask)); }

struct FiberStats {
    std::size_t max = 0;
    std::size_t min = 0;
    std::map<Tuple, std::size_t> count;  // J-projection -> fiber size
};

FiberStats fiber_stats(std::span<const Tuple> points, const std::vector<std::size_t>& members, std::uint32_t i,
                       std::uint32_t j) {
    std::set<Tuple> joint;
    for (auto m : members) joint.insert(project_point(points[m], i | j));
    // positions of J inside the (I|J)-projection
    std::vector<std::size_t> j_pos;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < 32; ++v) {
        if (((i | j) >> v) & 1u) {
            if ((j >> v) & 1u) j_pos.push_back(pos);
            ++pos;
        }
    }
    FiberStats s;
    for (const auto& t : joint) {
        Tuple key;
        for (auto p : j_pos) key.push_back(t[p]);
        ++s.count[key];
    }
    s.max = 0;
    s.min = SIZE_MAX;
    for (const auto& [_, c] : s.count) {
        s.max = std::max(s.max, c);
        s.min = std::min(s.min, c);
    }
    return s;
}

mpq_class regularity_of(std::span<const Tuple> points, const std::vector<std::size_t>& members, std::size_t dim) {
    mpq_class worst = 1;
    const std::uint32_t full = (1u << dim) - 1;
    for (std::uint32_t i = 1; i <= full; ++i) {
        const std::uint32_t rest = full & ~i;
        for (std::uint32_t j = rest; j != 0; j = (j - 1) & rest) {
            const auto s = fiber_stats(points, members, i, j);
            mpq_class r(static_cast<unsigned long>(s.max), static_cast<unsigned long>(s.min));
            r.canonicalize();
            if (r > worst) worst = r;
        }
    }
    return worst;
}

std::size_t floor_log2(std::size_t v) { return static_cast<std::size_t>(std::bit_width(v)) - 1; }

}  // namespace

SplitResult split_single(const JointDistribution& dist) {
    const auto& atoms = dist.atoms();
    if (atoms.size() < 2) fail(ErrorKind::ZeroEntropyInput, "a point mass has zero entropy");

    SplitResult r;
    r.source_entropy = entropy::entropy(dist, VarSet::all(dist.arity()));
    const double h2 = r.source_entropy * r.source_entropy;
    r.k0 = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(h2)));

    std::vector<std::size_t> order(atoms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return atoms[a].mass > atoms[b].mass; });

    // i_j = min{ i : p_i <= 2^-j }
    r.level_indices.reserve(r.k0 + 1);
    std::size_t cursor = 0;
    for (std::size_t j = 0; j <= r.k0; ++j) {
        mpz_class pow2 = 1;
        pow2 <<= static_cast<mp_bitcnt_t>(j);
        const mpq_class threshold(1, pow2);
        while (cursor < order.size() && atoms[order[cursor]].mass > threshold) ++cursor;
        r.level_indices.push_back(cursor);
    }
    for (std::size_t j = 0; j < r.k0; ++j) {
        const auto begin = r.level_indices[j], end = r.level_indices[j + 1];
        if (begin == end) continue;
        r.parts.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(begin),
                             order.begin() + static_cast<std::ptrdiff_t>(end));
        r.part_levels.push_back(j);
    }
    r.tail.assign(order.begin() + static_cast<std::ptrdiff_t>(r.level_indices[r.k0]), order.end());

    for (const auto& part : r.parts) {
        r.part_weights.push_back(sum_mass(dist, part));
        r.achieved_delta.push_back(mass_ratio_of(dist, part));
    }
    r.tail_weight = sum_mass(dist, r.tail);
    r.partition_entropy = weights_entropy(r.part_weights, r.tail_weight);

    if (!audit_single_split(dist, r).passed()) {
        fail(ErrorKind::TheoremViolation, "dyadic split failed its own guarantees");
    }
    return r;
}

SingleSplitAudit audit_single_split(const JointDistribution& dist, const SplitResult& split) {
    SingleSplitAudit a;
    std::vector<int> seen(dist.atoms().size(), 0);
    for (const auto& part : split.parts) {
        for (auto i : part) ++seen.at(i);
    }
    for (auto i : split.tail) ++seen.at(i);
    a.is_partition = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }) &&
                     std::none_of(split.parts.begin(), split.parts.end(), [](const auto& p) { return p.empty(); });

    const double h = split.source_entropy;
    a.small_tail = split.tail_weight.get_d() * h <= 1.0 + kSlack;
    a.entropy_bound_applies = h >= 2.0;
    a.entropy_bound = !a.entropy_bound_applies || split.partition_entropy <= 2.0 * std::log2(h) + 1.0 + kSlack;
    a.two_uniform = std::all_of(split.parts.begin(), split.parts.end(),
                                [&](const auto& p) { return mass_ratio_of(dist, p) <= 2; });
    a.small_parts = std::all_of(split.parts.begin(), split.parts.end(), [&](const auto& p) {
        return std::log2(static_cast<double>(p.size())) <= h * h + kSlack;
    });
    return a;
}

mpq_class measure_regularity(std::span<const Tuple> points) {
    if (points.empty()) return 1;
    std::vector<std::size_t> all(points.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return regularity_of(points, all, points.front().size());
}

RegularPartition regularize(std::span<const Tuple> support, double d_target) {
    if (!(d_target >= 2.0)) fail(ErrorKind::InvalidArgument, "d_target must be at least 2");
    if (support.empty()) fail(ErrorKind::InvalidArgument, "empty point set");
    const std::size_t dim = support.front().size();
    if (dim == 0 || dim > 4) fail(ErrorKind::DimensionGuard, "dimension must be between 1 and 4");
    if (support.size() > (std::size_t{1} << 16)) fail(ErrorKind::SizeGuard, "more than 2^16 points");
    for (const auto& t : support) {
        if (t.size() != dim) fail(ErrorKind::InvalidArgument, "points have different dimensions");
    }
    {
        std::vector<Tuple> sorted(support.begin(), support.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            fail(ErrorKind::InvalidArgument, "repeated point");
        }
    }

    RegularPartition out;
    std::deque<std::vector<std::size_t>> work;
    work.emplace_back(support.size());
    std::iota(work.front().begin(), work.front().end(), std::size_t{0});
    const std::uint32_t full = (1u << dim) - 1;

    while (!work.empty()) {
        auto part = std::move(work.front());
        work.pop_front();
        bool split = false;
        for (std::uint32_t i = 1; i <= full && !split; ++i) {
            const std::uint32_t rest = full & ~i;
            for (std::uint32_t j = rest; j != 0 && !split; j = (j - 1) & rest) {
                const auto s = fiber_stats(support, part, i, j);
                if (static_cast<double>(s.max) <= d_target * static_cast<double>(s.min)) continue;
                std::map<std::size_t, std::vector<std::size_t>> buckets;
                for (auto m : part) {
                    const auto c = s.count.at(project_point(support[m], j));
                    buckets[floor_log2(c)].push_back(m);
                }
                for (auto& [_, b] : buckets) work.push_back(std::move(b));
                ++out.pass_count;
                split = true;
            }
        }
        if (!split) out.parts.push_back(std::move(part));
    }

    std::sort(out.parts.begin(), out.parts.end());
    for (const auto& p : out.parts) {
        auto d = regularity_of(support, p, dim);
        if (d > mpq_class(d_target)) fail(ErrorKind::TheoremViolation, "refined part failed the regularity audit");
        out.achieved_d.push_back(std::move(d));
    }
    return out;
}

SplitResult split_tuple(const JointDistribution& dist, double d_target) {
    if (dist.arity() > 4) fail(ErrorKind::DimensionGuard, "tuple split supports at most 4 variables");
    const SplitResult single = split_single(dist);

    SplitResult r;
    r.source_entropy = single.source_entropy;
    r.k0 = single.k0;
    r.level_indices = single.level_indices;
    r.tail = single.tail;
    r.tail_weight = single.tail_weight;
    for (std::size_t p = 0; p < single.parts.size(); ++p) {
        const auto& part = single.parts[p];
        std::vector<Tuple> points;
        points.reserve(part.size());
        for (auto i : part) points.push_back(dist.atoms()[i].tuple);
        const auto refined = regularize(points, d_target);
        for (const auto& sub : refined.parts) {
            std::vector<std::size_t> atoms;
            for (auto k : sub) atoms.push_back(part[k]);
            std::sort(atoms.begin(), atoms.end());
            r.parts.push_back(std::move(atoms));
            r.part_levels.push_back(single.part_levels[p]);
        }
    }
    for (const auto& part : r.parts) {
        r.part_weights.push_back(sum_mass(dist, part));
        const auto conditioned = entropy::restrict_to_atoms(dist, part);
        r.achieved_delta.push_back(entropy::uniformity_report(conditioned).delta());
    }
    r.partition_entropy = weights_entropy(r.part_weights, r.tail_weight);

    if (!audit_tuple_split(dist, r, d_target).passed()) {
        fail(ErrorKind::TheoremViolation, "tuple split failed its own guarantees");
    }
    return r;
}

TupleSplitAudit audit_tuple_split(const JointDistribution& dist, const SplitResult& split, double d_target) {
    TupleSplitAudit a;
    a.small_tail = split.tail_weight.get_d() * split.source_entropy <= 1.0 + kSlack;
    const mpq_class limit(2 * d_target);
    a.parts_quasi_uniform = std::all_of(split.achieved_delta.begin(), split.achieved_delta.end(),
                                        [&](const mpq_class& d) { return d <= limit; });
    mpq_class total = split.tail_weight;
    for (const auto& w : split.part_weights) total += w;
    a.weights_sum_to_one = total == 1;
    (void)dist;
    return a;
}

}  // namespace ingleton::splitter
