#include "doctest.h"

#include <cmath>

#include "ingleton/bounds.hpp"
#include "ingleton/sampling.hpp"
#include "ingleton/search.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ingleton;
using namespace ingleton::bounds;
using entropy::VarSet;

namespace {

const double kLog73 = std::log2(7.0 / 3.0);

struct Fano {
    graphs::BiregularBipartiteGraph g = graphs::build_projective_plane(2);
    double lambda2 = std::sqrt(2.0);
};

}  // namespace

TEST_CASE("lll gap") {
    Fano f;
    const auto copy = search::extension(f.g, search::copy_kernels(f.g));
    const auto r = ing_lll_gap(copy, search::kQuadRoles);
    CHECK(r.ing == doctest::Approx(0.0));
    CHECK(r.lll_bound == doctest::Approx(0.0));

    const auto constant = search::extension(f.g, search::constant_kernels(f.g));
    const auto c = ing_lll_gap(constant, search::kQuadRoles);
    CHECK(c.lll_bound == doctest::Approx(-std::log2(3.0)));
    CHECK(c.ing == doctest::Approx(kLog73));

    sampling::Rng rng(1);
    for (int t = 0; t < 300; ++t) {
        const auto d = sampling::random_distribution(rng, 4, 3, 64);
        const auto g = ing_lll_gap(d, search::kQuadRoles);
        CHECK(g.ing == doctest::Approx(oracle::ingleton(d, 1, 2, 4, 8)).epsilon(1e-9));
        CHECK(g.ing >= g.lll_bound - 1e-9);
    }
    CHECK(kind_of([&] { ing_lll_gap(copy, {VarSet{0}, VarSet{0}, VarSet{2}, VarSet{3}}); }) ==
          ErrorKind::OverlappingSets);
}

TEST_CASE("five-variable bound") {
    Fano f;
    const IngletonRoles roles{VarSet{0}, VarSet{1}, VarSet{2}, VarSet{3}};
    // W constant: the bound is -I(X:Y)
    auto k = search::constant_kernels(f.g);
    auto quad = search::extension(f.g, k);
    auto five = entropy::extend(quad, entropy::Kernel::deterministic(quad, {"0"}, [](const auto&) { return 0; }));
    auto r = makarychev_gap(five, roles, VarSet{4});
    CHECK(r.mk_bound == doctest::Approx(-kLog73));
    // W = X: the bound is -H(X|Y)
    std::vector<std::string> labels;
    for (int i = 0; i < 7; ++i) labels.push_back(std::to_string(i));
    five = entropy::extend(quad, entropy::Kernel::deterministic(quad, labels, [](const auto& t) { return t[0]; }));
    r = makarychev_gap(five, roles, VarSet{4});
    CHECK(r.mk_bound == doctest::Approx(-std::log2(3.0)));
    CHECK(r.w_quality == doctest::Approx(std::abs(kLog73 - std::log2(7.0)) + 2 * std::log2(3.0)));
    CHECK(r.ing >= r.mk_bound - 1e-9);
    CHECK(-r.mk_bound <= r.w_quality + 1e-9);
}

TEST_CASE("triple alternative hand traces") {
    Fano f;
    const auto constant = search::extension(f.g, search::constant_kernels(f.g));
    const auto t = triple_alternative(constant, VarSet{0}, VarSet{1}, VarSet{2}, f.g, f.lambda2, 1.0);
    CHECK(t.info);
    CHECK(t.conditional_information == doctest::Approx(kLog73));
    CHECK(t.info_threshold == doctest::Approx(kLog73 - 1.0));

    const auto copy = search::extension(f.g, search::copy_kernels(f.g));
    const auto m = triple_alternative(copy, VarSet{0}, VarSet{1}, VarSet{2}, f.g, f.lambda2, 1.0);
    CHECK(m.branch == Branch::Metric);
    CHECK(m.conditional_ell == doctest::Approx(0.5 * std::log2(3.0)));
    CHECK(m.metric_threshold == doctest::Approx(1.5));
    CHECK_FALSE(m.info);

    const auto small = graphs::build_polynomial_graph(2, 1);
    CHECK(kind_of([&] { triple_alternative(copy, VarSet{0}, VarSet{1}, VarSet{2}, small, 1.0, 1.0); }) ==
          ErrorKind::NotSubsupported);
}

TEST_CASE("quasi-uniform certificate hand traces") {
    Fano f;
    const auto copy = search::extension(f.g, search::copy_kernels(f.g));
    const auto r = certified_quasi_uniform(copy, search::kQuadRoles, f.g, f.lambda2);
    REQUIRE(r.parts.size() == 1);
    const auto& p = r.parts[0];
    CHECK(p.alt_a.branch == Branch::Metric);
    CHECK(p.alt_b.branch == Branch::Metric);
    REQUIRE(p.metric_bound);
    CHECK(*p.metric_bound == doctest::Approx(-1.0 - 2.0 + std::log2(3.0)));
    CHECK(p.trivial_bound == doctest::Approx(-kLog73));
    CHECK(r.certified == doctest::Approx(-kLog73));
    CHECK(r.actual_ing == doctest::Approx(0.0));

    const auto constant = search::extension(f.g, search::constant_kernels(f.g));
    const auto c = certified_quasi_uniform(constant, search::kQuadRoles, f.g, f.lambda2);
    REQUIRE(c.parts[0].info_bound);
    CHECK(*c.parts[0].info_bound == doctest::Approx(-1.0));
    CHECK(c.certified == doctest::Approx(-1.0));
    CHECK(c.actual_ing == doctest::Approx(kLog73));
}

TEST_CASE("main certificate") {
    Fano f;
    const auto copy = search::extension(f.g, search::copy_kernels(f.g));
    const auto r = certified_main(copy, search::kQuadRoles, f.g);
    CHECK(r.certified == doctest::Approx(-kLog73 - 1.0).epsilon(1e-12));
    CHECK(std::abs(r.certified - (-2.22239242)) < 1e-8);
    CHECK(std::abs(r.actual_ing) < 1e-12);
    CHECK(r.partition_entropy == doctest::Approx(0.0));
    CHECK(r.tail_weight == 0);
    CHECK(r.residual == doctest::Approx(1.0 - std::log2(3.0)));

    sampling::Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        search::KernelPair k{2, 2, {}, {}};
        for (auto* rows : {&k.a, &k.b}) {
            for (std::size_t e = 0; e < f.g.edge_count(); ++e) {
                const auto row = sampling::random_row(rng, 2, 64);
                rows->push_back({mpq_class(row[0], 64), mpq_class(row[1], 64)});
                for (auto& v : rows->back()) v.canonicalize();
            }
        }
        const auto rep = certified_main(search::extension(f.g, k), search::kQuadRoles, f.g);
        CHECK(rep.actual_ing >= rep.certified - 1e-9);
        CHECK(rep.residual >= -kLog73 + 1.0 - std::log2(3.0) - 1e-9);
    }
}

TEST_CASE("main certificate preconditions") {
    const auto k33 = graphs::build_from_edges(
        3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
    const auto d = search::extension(k33, search::constant_kernels(k33));
    CHECK(kind_of([&] { certified_main(d, search::kQuadRoles, k33); }) == ErrorKind::BelowEpsilonThreshold);

    Fano f;
    const auto wrong = search::extension(f.g, search::constant_kernels(f.g));
    CHECK(kind_of([&] { certified_main(wrong, search::kQuadRoles, graphs::build_projective_plane(3)); }) ==
          ErrorKind::NotUniformPair);
}
