#include "ingleton/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ingleton/error.hpp"

namespace ingleton::entropy {

namespace {

/// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct Split {
    double mantissa;
    long exponent;
};

Split split(const mpz_class& z) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return {m, e};
}

double log2_ratio(const mpz_class& num, const mpz_class& den) {
    const auto a = split(num);
    const auto b = split(den);
    return std::log2(a.mantissa / b.mantissa) + static_cast<double>(a.exponent - b.exponent);
}

double ratio(const mpz_class& num, const mpz_class& den) {
    const auto a = split(num);
    const auto b = split(den);
    return std::ldexp(a.mantissa / b.mantissa, static_cast<int>(a.exponent - b.exponent));
}

void check_set(const JointDistribution& dist, VarSet s) {
    if (!s.empty() && s.max_index() >= dist.arity()) {
        fail(ErrorKind::IndexOutOfRange,
             "variable " + std::to_string(s.max_index()) + " beyond arity " + std::to_string(dist.arity()));
    }
}

bool equal_on(const Tuple& a, const Tuple& b, const std::vector<std::size_t>& idx) {
    for (auto i : idx) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

void check_disjoint(std::initializer_list<VarSet> sets) {
    VarSet seen;
    for (auto s : sets) {
        if (!seen.disjoint(s)) fail(ErrorKind::OverlappingSets, "variable roles overlap at " + (seen & s).to_string());
        seen = seen | s;
    }
}

}  // namespace

double entropy(const JointDistribution& dist, VarSet i, VarSet j) {
    if (i.empty()) fail(ErrorKind::EmptyIndexSet, "entropy of an empty variable set");
    if (!i.disjoint(j)) fail(ErrorKind::OverlappingSets, "conditioning set overlaps the target set");
    check_set(dist, i);
    check_set(dist, j);

    const auto& atoms = dist.atoms();
    const auto& num = dist.numerators();
    const auto j_idx = j.indices();
    const auto i_idx = i.indices();

    // order atoms by (J-projection, I-projection); runs then give fibers
    std::vector<std::size_t> order(atoms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ta = atoms[a].tuple;
        const auto& tb = atoms[b].tuple;
        for (auto k : j_idx) {
            if (ta[k] != tb[k]) return ta[k] < tb[k];
        }
        for (auto k : i_idx) {
            if (ta[k] != tb[k]) return ta[k] < tb[k];
        }
        return false;
    });

    CompensatedSum h;
    std::size_t start = 0;
    while (start < order.size()) {
        std::size_t end = start;
        mpz_class n_j = 0;
        while (end < order.size() && equal_on(atoms[order[start]].tuple, atoms[order[end]].tuple, j_idx)) {
            n_j += num[order[end]];
            ++end;
        }
        std::size_t s = start;
        while (s < end) {
            std::size_t e = s;
            mpz_class n_ij = 0;
            while (e < end && equal_on(atoms[order[s]].tuple, atoms[order[e]].tuple, i_idx)) {
                n_ij += num[order[e]];
                ++e;
            }
            h.add(ratio(n_ij, dist.denominator()) * log2_ratio(n_j, n_ij));
            s = e;
        }
        start = end;
    }
    return h.value();
}

double mutual_information(const JointDistribution& dist, VarSet i, VarSet j, VarSet k) {
    if (i.empty() || j.empty()) fail(ErrorKind::EmptyIndexSet, "mutual information needs nonempty arguments");
    check_disjoint({i, j, k});
    return entropy(dist, i, k) - entropy(dist, i, j | k);
}

double clamp_reported(double value) { return std::abs(value) <= kTolerance ? 0.0 : value; }

double ingleton(const JointDistribution& dist, const IngletonRoles& r, VarSet u) {
    check_disjoint({r.x, r.y, r.a, r.b, u});
    return mutual_information(dist, r.x, r.y, r.a | u) + mutual_information(dist, r.x, r.y, r.b | u) +
           mutual_information(dist, r.a, r.b, u) - mutual_information(dist, r.x, r.y, u);
}

double ell_metric(const JointDistribution& dist, VarSet x, VarSet y, VarSet z) {
    check_disjoint({x, y, z});
    if (x.empty() || y.empty()) fail(ErrorKind::EmptyIndexSet, "L needs nonempty arguments");
    const double conditional_form = 0.5 * (entropy(dist, x, y | z) + entropy(dist, y, x | z));
    const double info_form =
        0.5 * entropy(dist, x, z) + 0.5 * entropy(dist, y, z) - mutual_information(dist, x, y, z);
    if (std::abs(conditional_form - info_form) > kTolerance) {
        fail(ErrorKind::NumericalFailure, "the two forms of L disagree");
    }
    return conditional_form;
}

}  // namespace ingleton::entropy
