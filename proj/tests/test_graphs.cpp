#include "doctest.h"

#include <sstream>

#include "ingleton/graphs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ingleton;
using namespace ingleton::graphs;

namespace {

std::vector<std::uint32_t> parse_triple(const std::string& label) {
    std::vector<std::uint32_t> v;
    std::string body = label.substr(1, label.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ':')) v.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    return v;
}

}  // namespace

TEST_CASE("projective planes: sizes and incidence by dot product") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const auto g = build_projective_plane(q);
        const std::size_t n = q * q + q + 1;
        CHECK(g.x_size() == n);
        CHECK(g.y_size() == n);
        CHECK(g.d1() == q + 1);
        CHECK(g.d2() == q + 1);
        CHECK(g.edge_count() == n * (q + 1));
        REQUIRE(g.has_labels());
        for (Vertex x = 0; x < n; ++x) {
            const auto p = parse_triple(g.x_labels()[x]);
            for (Vertex y = 0; y < n; ++y) {
                const auto l = parse_triple(g.y_labels()[y]);
                const auto dot = (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q;
                CHECK(g.has_edge(x, y) == (dot == 0));
            }
        }
    }
    CHECK(kind_of([] { build_projective_plane(6); }) == ErrorKind::NonPrimeModulus);
    CHECK(kind_of([] { build_projective_plane(103); }) == ErrorKind::SizeGuard);
}

TEST_CASE("polynomial graphs") {
    struct Case {
        std::uint32_t q, k;
    };
    for (auto c : {Case{2, 1}, Case{3, 1}, Case{3, 2}, Case{5, 2}}) {
        const auto g = build_polynomial_graph(c.q, c.k);
        std::size_t polys = 1;
        for (std::uint32_t i = 0; i <= c.k; ++i) polys *= c.q;
        CHECK(g.x_size() == c.q * c.q);
        CHECK(g.y_size() == polys);
        CHECK(g.d2() == c.q);
        CHECK(g.d1() == polys / c.q);
    }
    const auto line = build_polynomial_graph(3, 0);
    CHECK(line.d1() == 1);
    CHECK(line.d2() == 3);
}

TEST_CASE("Grassmann graph sizes follow brute-force subspace counts") {
    const auto g = build_grassmann_graph(2, 4, 1, 2);
    CHECK(g.x_size() == oracle::count_subspaces(2, 4, 1));
    CHECK(g.y_size() == oracle::count_subspaces(2, 4, 2));
    CHECK(g.x_size() == 15);
    CHECK(g.y_size() == 35);
    CHECK(g.edge_count() == 105);
    CHECK(g.d1() == 7);
    CHECK(g.d2() == 3);
    CHECK(kind_of([] { build_grassmann_graph(2, 4, 2, 2); }) == ErrorKind::DimensionOutOfRange);
}

TEST_CASE("edge-list validation") {
    CHECK(build_from_edges(2, 2, {{1, 1}, {0, 0}}).edges() == std::vector<Edge>{{0, 0}, {1, 1}});
    CHECK(kind_of([] { build_from_edges(2, 2, {{0, 0}, {0, 0}, {1, 1}}); }) == ErrorKind::DuplicateEdge);
    CHECK(kind_of([] { build_from_edges(2, 2, {{0, 0}, {0, 1}, {1, 1}}); }) == ErrorKind::NotBiregular);
    CHECK(kind_of([] { build_from_edges(2, 2, {{0, 0}, {2, 1}}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { build_from_edges(3, 2, {{0, 0}, {1, 1}}); }) == ErrorKind::NotBiregular);
    try {
        build_from_edges(2, 2, {{0, 0}, {0, 1}, {1, 1}});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("vertex") != std::string::npos);
    }
}

TEST_CASE("subgraphs") {
    const auto g = build_projective_plane(2);
    const auto h = Subgraph::induced(g, {0, 1, 2}, {0, 1, 2});
    CHECK(h.edge_subset().size() == count_induced_edges(g, h.x_subset(), h.y_subset()));
    for (const auto& [x, y] : h.edge_subset()) CHECK(g.has_edge(x, y));
    const auto [x0, y0] = g.edges().front();
    CHECK(kind_of([&] { Subgraph(g, {x0}, {y0 == 0 ? 1u : 0u}, {{x0, y0}}); }) == ErrorKind::InvalidSubgraph);
    const Subgraph partial(g, {x0}, {y0}, {});
    CHECK(induced_closure(partial).edge_subset().size() == 1);
}
