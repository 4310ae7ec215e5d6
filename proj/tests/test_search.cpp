#include "doctest.h"

#include <cmath>

#include "ingleton/search.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ingleton;
using namespace ingleton::search;

TEST_CASE("kernel validation") {
    const auto g = graphs::build_projective_plane(2);
    auto k = constant_kernels(g);
    k.a.pop_back();
    CHECK(kind_of([&] { extension(g, k); }) == ErrorKind::MissingKernelRow);
    k = constant_kernels(g);
    k.b[3][0] = mpq_class(1, 2);
    CHECK(kind_of([&] { extension(g, k); }) == ErrorKind::RowNotNormalized);
}

TEST_CASE("exhaustive search") {
    const auto k22 = graphs::build_from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    SearchConfig cfg;
    cfg.strategy = Strategy::Exhaustive;
    const auto r = exhaustive_min(k22, cfg);
    CHECK(r.best_ing == doctest::Approx(0.0));
    CHECK_FALSE(r.certified_at_best);
    CHECK(r.evaluations == 256);

    const auto fano = graphs::build_projective_plane(2);
    CHECK(kind_of([&] { exhaustive_min(fano, cfg); }) == ErrorKind::SearchSpaceTooLarge);
}

TEST_CASE("exhaustive minimum on the 8-cycle is exact and bounded below") {
    const auto g = graphs::build_polynomial_graph(2, 1);
    SearchConfig cfg;
    const auto r = exhaustive_min(g, cfg);
    CHECK(r.evaluations == 65536);
    CHECK(r.best_ing >= -1.0 - 1e-9);
    const auto d = extension(g, r.best_kernels);
    CHECK(oracle::ingleton(d, 1, 2, 4, 8) == doctest::Approx(r.best_ing).epsilon(1e-9));
    REQUIRE(r.certified_at_best);
    CHECK(r.certified_at_best->actual_ing >= r.certified_at_best->certified - 1e-9);

    cfg.restarts = 10;
    const auto local = local_min(g, cfg);
    CHECK(local.best_ing >= r.best_ing - 1e-9);
    const auto rnd = random_min(g, cfg);
    CHECK(rnd.best_ing >= r.best_ing - 1e-9);
}

TEST_CASE("local descent from A=X, B=Y") {
    const auto g = graphs::build_projective_plane(2);
    SearchConfig cfg;
    cfg.initial = copy_kernels(g);
    cfg.restarts = 2;
    cfg.max_steps = 100;
    const auto r = local_min(g, cfg);
    REQUIRE(!r.histories.empty());
    CHECK(std::abs(r.histories[0].front()) < 1e-12);
    for (const auto& h : r.histories) {
        for (std::size_t i = 1; i < h.size(); ++i) CHECK(h[i] < h[i - 1]);
    }
    const auto recomputed = entropy::ingleton(extension(g, r.best_kernels), kQuadRoles);
    CHECK(recomputed == doctest::Approx(r.best_ing).epsilon(1e-9));
    CHECK(r.best_ing >= -std::log2(7.0 / 3.0) - 1e-9);
}

TEST_CASE("identical seeds give identical reports") {
    const auto g = graphs::build_projective_plane(2);
    SearchConfig cfg;
    cfg.restarts = 3;
    cfg.max_steps = 150;
    cfg.seed = 99;
    const auto a = local_min(g, cfg);
    const auto b = local_min(g, cfg);
    CHECK(a.best_ing == b.best_ing);
    CHECK(a.best_kernels == b.best_kernels);
    CHECK(a.trace == b.trace);
    cfg.seed = 100;
    CHECK(local_min(g, cfg).trace != a.trace);
}

TEST_CASE("strategy names") {
    CHECK(strategy_from_string("local") == Strategy::Local);
    CHECK(std::string(to_string(Strategy::Exhaustive)) == "exhaustive");
    CHECK(kind_of([] { strategy_from_string("anneal"); }) == ErrorKind::InvalidArgument);
}
