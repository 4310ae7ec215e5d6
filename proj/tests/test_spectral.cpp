#include "doctest.h"

#include <cmath>

#include "ingleton/graphs.hpp"
#include "ingleton/sampling.hpp"
#include "ingleton/spectral.hpp"
#include "test_util.hpp"

using namespace ingleton;
using namespace ingleton::spectral;

TEST_CASE("projective plane spectrum") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const auto s = singular_values(graphs::build_projective_plane(q));
        CHECK(s.lambda1 == doctest::Approx(q + 1.0).epsilon(1e-10));
        CHECK(s.lambda2 == doctest::Approx(std::sqrt(double(q))).epsilon(1e-9));
        REQUIRE(s.closed_form);
        CHECK(s.closed_form->second == doctest::Approx(std::sqrt(double(q))));
        CHECK_FALSE(s.disconnected_suspect);
    }
}

TEST_CASE("polynomial graph spectrum") {
    for (auto [q, k] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{3u, 2u}}) {
        const auto s = singular_values(graphs::build_polynomial_graph(q, k));
        CHECK(s.lambda1 == doctest::Approx(std::pow(q, (k + 1) / 2.0)).epsilon(1e-9));
        CHECK(s.lambda2 == doctest::Approx(std::pow(q, k / 2.0)).epsilon(1e-9));
    }
    CHECK_FALSE(closed_form_spectrum(graphs::build_polynomial_graph(3, 0)));
}

TEST_CASE("disconnected graphs are flagged") {
    const auto g = graphs::build_from_edges(4, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
    const auto s = singular_values(g);
    CHECK(s.disconnected_suspect);
    CHECK(s.lambda2 == doctest::Approx(2.0));
}

TEST_CASE("spectral slack report") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const auto r = alon_bound_report(graphs::build_projective_plane(q));
        CHECK(r.slack_strong == doctest::Approx(-std::log2(1.0 + 1.0 / q)));
        CHECK(r.slack_strong > -1.0);
        CHECK(r.slack_strong < 0.0);
    }
    const auto k22 = graphs::build_from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(kind_of([&] { alon_bound_report(k22); }) == ErrorKind::CompleteBipartite);
}

TEST_CASE("mixing lemma") {
    const auto g = graphs::build_projective_plane(3);
    const double l2 = singular_values(g).lambda2;
    const std::vector<graphs::Vertex> all_x{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    const auto full = mixing_check(g, l2, all_x, all_x);
    CHECK(full.observed == g.edge_count());
    CHECK(full.expected == doctest::Approx(double(g.edge_count())));
    CHECK(full.holds);

    sampling::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto xs = sampling::random_subset(rng, g.x_size());
        const auto ys = sampling::random_subset(rng, g.y_size());
        const auto r = mixing_check(g, l2, xs, ys);
        // independent recount
        std::size_t e = 0;
        for (auto x : xs) {
            for (auto y : ys) e += g.has_edge(x, y);
        }
        CHECK(r.observed == e);
        CHECK(r.holds);
    }
    const std::vector<graphs::Vertex> none;
    CHECK(kind_of([&] { mixing_check(g, l2, none, all_x); }) == ErrorKind::EmptySubset);
}

TEST_CASE("log-scale alternative") {
    const auto g = graphs::build_projective_plane(2);
    const auto [x, y] = g.edges().front();
    const auto one_edge = graphs::Subgraph::induced(g, {x}, {y});
    CHECK(mixing_log_alternative(one_edge) != MixingBranch::Dense);
    const auto whole = graphs::Subgraph::induced(g, {0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 5, 6});
    CHECK(mixing_log_alternative(whole) != MixingBranch::Sparse);
    const auto empty = graphs::Subgraph(g, {x}, {y}, {});
    CHECK(kind_of([&] { mixing_log_alternative(empty); }) == ErrorKind::EmptySubgraph);
}
