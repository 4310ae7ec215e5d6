#include "ingleton/uniformity.hpp"

#include <map>

#include "ingleton/error.hpp"

namespace ingleton::entropy {

namespace {

UniformityWitness mass_witness(const JointDistribution& dist, VarSet vars) {
    const auto masses = marginal_numerators(dist, vars);
    auto hi = masses.begin(), lo = masses.begin();
    for (auto it = masses.begin(); it != masses.end(); ++it) {
        if (it->second > hi->second) hi = it;
        if (it->second < lo->second) lo = it;
    }
    UniformityWitness w;
    w.target = vars;
    w.high = hi->first;
    w.low = lo->first;
    w.ratio = mpq_class(hi->second, lo->second);
    w.ratio.canonicalize();
    return w;
}

// fiber sizes #(X_I | s) for s over the atoms of X_J
UniformityWitness fiber_witness(const std::map<Tuple, mpz_class>& joint_support, VarSet i, VarSet j) {
    // joint_support is keyed by projections onto i|j; re-key by the j part
    const VarSet both = i | j;
    std::vector<std::size_t> j_pos;  // positions of j within the projection onto `both`
    std::size_t pos = 0;
    for (auto v : both.indices()) {
        if (j.contains(v)) j_pos.push_back(pos);
        ++pos;
    }
    std::map<Tuple, std::size_t> fiber;
    for (const auto& [t, _] : joint_support) {
        Tuple key;
        key.reserve(j_pos.size());
        for (auto p : j_pos) key.push_back(t[p]);
        ++fiber[key];
    }
    auto hi = fiber.begin(), lo = fiber.begin();
    for (auto it = fiber.begin(); it != fiber.end(); ++it) {
        if (it->second > hi->second) hi = it;
        if (it->second < lo->second) lo = it;
    }
    UniformityWitness w;
    w.target = i;
    w.given = j;
    w.high = hi->first;
    w.low = lo->first;
    w.ratio = mpq_class(static_cast<unsigned long>(hi->second), static_cast<unsigned long>(lo->second));
    w.ratio.canonicalize();
    return w;
}

}  // namespace

mpq_class mass_ratio(const JointDistribution& dist, VarSet vars) { return mass_witness(dist, vars).ratio; }

UniformityReport uniformity_report(const JointDistribution& dist) {
    const std::size_t n = dist.arity();
    if (n > 5) fail(ErrorKind::ArityGuard, "uniformity scan limited to arity <= 5");
    const std::uint32_t full = (1u << n) - 1;

    std::vector<std::map<Tuple, mpz_class>> supports(full + 1);
    for (std::uint32_t m = 1; m <= full; ++m) supports[m] = marginal_numerators(dist, VarSet(m));

    UniformityReport r;
    r.uniform_witness.target = VarSet(full);
    r.regular_witness.target = VarSet(full);
    for (std::uint32_t m = 1; m <= full; ++m) {
        auto w = mass_witness(dist, VarSet(m));
        if (w.ratio > r.delta_uniform) {
            r.delta_uniform = w.ratio;
            r.uniform_witness = std::move(w);
        }
    }
    for (std::uint32_t i = 1; i <= full; ++i) {
        const std::uint32_t rest = full & ~i;
        for (std::uint32_t j = rest; j != 0; j = (j - 1) & rest) {
            auto w = fiber_witness(supports[i | j], VarSet(i), VarSet(j));
            if (w.ratio > r.delta_regular) {
                r.delta_regular = w.ratio;
                r.regular_witness = std::move(w);
            }
        }
    }
    return r;
}

}  // namespace ingleton::entropy
