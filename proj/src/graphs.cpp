#include "ingleton/graphs.hpp"

#include <algorithm>

#include "ingleton/error.hpp"
#include "ingleton/galois.hpp"

namespace ingleton::graphs {

namespace {

constexpr std::size_t kEdgeLimit = std::size_t{1} << 20;

void check_edge_budget(std::uint64_t edges) {
    if (edges > kEdgeLimit) {
        fail(ErrorKind::SizeGuard, "graph would have " + std::to_string(edges) + " edges (limit 2^20)");
    }
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > (std::uint64_t{1} << 40)) fail(ErrorKind::SizeGuard, "family parameters too large");
    }
    return r;
}

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool left, std::vector<std::size_t>& offsets,
               std::vector<Vertex>& adj) {
    offsets.assign(n + 1, 0);
    for (const auto& [x, y] : edges) ++offsets[(left ? x : y) + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    adj.resize(edges.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [x, y] : edges) {
        const Vertex from = left ? x : y;
        adj[cursor[from]++] = left ? y : x;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
                  adj.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
    }
}

std::vector<galois::Vector> projective_points(const galois::PrimeField& field) {
    const std::uint32_t q = field.modulus();
    std::vector<galois::Vector> pts;
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
            for (std::uint32_t c = 0; c < q; ++c) {
                const galois::Vector v{a, b, c};
                const auto lead = std::find_if(v.begin(), v.end(), [](auto e) { return e != 0; });
                if (lead != v.end() && *lead == 1) pts.push_back(v);
            }
        }
    }
    return pts;  // already lexicographic
}

std::string vector_label(const galois::Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

BiregularBipartiteGraph BiregularBipartiteGraph::from_edges(std::size_t x_size, std::size_t y_size,
                                                            std::vector<Edge> edges) {
    check_edge_budget(edges.size());
    for (const auto& [x, y] : edges) {
        if (x >= x_size || y >= y_size) {
            fail(ErrorKind::IndexOutOfRange,
                 "edge (" + std::to_string(x) + "," + std::to_string(y) + ") outside " + std::to_string(x_size) +
                     "x" + std::to_string(y_size));
        }
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        fail(ErrorKind::DuplicateEdge,
             "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") repeated");
    }
    if (x_size == 0 || y_size == 0) fail(ErrorKind::NotBiregular, "empty vertex part");

    BiregularBipartiteGraph g;
    g.x_size_ = x_size;
    g.y_size_ = y_size;
    g.edges_ = std::move(edges);
    build_csr(x_size, g.edges_, true, g.left_offsets_, g.left_adj_);
    build_csr(y_size, g.edges_, false, g.right_offsets_, g.right_adj_);

    const std::size_t d1 = g.left_offsets_[1] - g.left_offsets_[0];
    const std::size_t d2 = g.right_offsets_[1] - g.right_offsets_[0];
    for (std::size_t x = 0; x < x_size; ++x) {
        const std::size_t deg = g.left_offsets_[x + 1] - g.left_offsets_[x];
        if (deg != d1 || deg == 0) {
            fail(ErrorKind::NotBiregular, "left vertex " + std::to_string(x) + " has degree " + std::to_string(deg) +
                                              ", expected " + std::to_string(d1));
        }
    }
    for (std::size_t y = 0; y < y_size; ++y) {
        const std::size_t deg = g.right_offsets_[y + 1] - g.right_offsets_[y];
        if (deg != d2 || deg == 0) {
            fail(ErrorKind::NotBiregular, "right vertex " + std::to_string(y) + " has degree " +
                                              std::to_string(deg) + ", expected " + std::to_string(d2));
        }
    }
    g.d1_ = d1;
    g.d2_ = d2;
    return g;
}

std::span<const Vertex> BiregularBipartiteGraph::left_neighbors(Vertex x) const {
    if (x >= x_size_) fail(ErrorKind::IndexOutOfRange, "left vertex " + std::to_string(x));
    return {left_adj_.data() + left_offsets_[x], left_offsets_[x + 1] - left_offsets_[x]};
}

std::span<const Vertex> BiregularBipartiteGraph::right_neighbors(Vertex y) const {
    if (y >= y_size_) fail(ErrorKind::IndexOutOfRange, "right vertex " + std::to_string(y));
    return {right_adj_.data() + right_offsets_[y], right_offsets_[y + 1] - right_offsets_[y]};
}

bool BiregularBipartiteGraph::has_edge(Vertex x, Vertex y) const { return edge_index(x, y).has_value(); }

std::optional<std::size_t> BiregularBipartiteGraph::edge_index(Vertex x, Vertex y) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{x, y});
    if (it == edges_.end() || *it != Edge{x, y}) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

void BiregularBipartiteGraph::set_labels(std::vector<std::string> x_labels, std::vector<std::string> y_labels) {
    if (x_labels.size() != x_size_ || y_labels.size() != y_size_) {
        fail(ErrorKind::IndexOutOfRange, "label tables must match the vertex part sizes");
    }
    x_labels_ = std::move(x_labels);
    y_labels_ = std::move(y_labels);
}

BiregularBipartiteGraph build_projective_plane(std::uint32_t q) {
    const galois::PrimeField field(q);
    if (q > 101) fail(ErrorKind::SizeGuard, "projective plane order limited to q <= 101");
    const std::uint64_t n = std::uint64_t{q} * q + q + 1;
    check_edge_budget(n * (q + 1));

    const auto pts = projective_points(field);
    std::vector<Edge> edges;
    edges.reserve(n * (q + 1));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (field.dot(pts[i], pts[j]) == 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    auto g = BiregularBipartiteGraph::from_edges(pts.size(), pts.size(), std::move(edges));
    std::vector<std::string> xl, yl;
    for (const auto& p : pts) {
        xl.push_back(vector_label(p));
        yl.push_back("[" + vector_label(p).substr(1, vector_label(p).size() - 2) + "]");
    }
    g.set_labels(std::move(xl), std::move(yl));
    g.set_family({FamilyTag::Kind::ProjectivePlane, q, 0, 0, 3});
    return g;
}

BiregularBipartiteGraph build_polynomial_graph(std::uint32_t q, std::uint32_t k) {
    const galois::PrimeField field(q);
    check_edge_budget(checked_pow(q, std::uint64_t{k} + 2));
    const std::uint64_t polys = checked_pow(q, std::uint64_t{k} + 1);

    std::vector<Edge> edges;
    edges.reserve(polys * q);
    std::vector<std::string> yl;
    // polynomial index = c_0 + c_1 q + ... + c_k q^k ; point index = x q + y
    for (std::uint64_t idx = 0; idx < polys; ++idx) {
        galois::Vector coeffs(k + 1);
        std::uint64_t rest = idx;
        for (auto& c : coeffs) {
            c = static_cast<galois::Element>(rest % q);
            rest /= q;
        }
        std::string label;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) label += '+';
            label += std::to_string(coeffs[i]);
            if (i) label += (i == 1 ? "t" : "t^" + std::to_string(i));
        }
        yl.push_back(std::move(label));
        for (galois::Element x = 0; x < q; ++x) {
            galois::Element y = 0;  // Horner
            for (std::size_t i = coeffs.size(); i-- > 0;) y = field.add(field.mul(y, x), coeffs[i]);
            edges.emplace_back(static_cast<Vertex>(x * q + y), static_cast<Vertex>(idx));
        }
    }
    auto g = BiregularBipartiteGraph::from_edges(std::size_t{q} * q, polys, std::move(edges));
    std::vector<std::string> xl;
    for (std::uint32_t x = 0; x < q; ++x) {
        for (std::uint32_t y = 0; y < q; ++y) xl.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
    g.set_labels(std::move(xl), std::move(yl));
    g.set_family({FamilyTag::Kind::Polynomial, q, k, 0, 0});
    return g;
}

BiregularBipartiteGraph build_grassmann_graph(std::uint32_t q, std::uint32_t n, std::uint32_t k, std::uint32_t l) {
    const galois::PrimeField field(q);
    if (!(0 < k && k < l && l < n)) fail(ErrorKind::DimensionOutOfRange, "need 0 < k < l < n");
    const mpz_class edges_expected = galois::gaussian_binomial(n, l, q) * galois::gaussian_binomial(l, k, q);
    if (edges_expected > mpz_class(static_cast<unsigned long>(kEdgeLimit))) {
        fail(ErrorKind::SizeGuard, "Grassmann graph exceeds 2^20 edges");
    }
    const auto left = galois::enumerate_subspaces(q, n, k);
    const auto right = galois::enumerate_subspaces(q, n, l);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (right[j].contains(field, left[i])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    auto g = BiregularBipartiteGraph::from_edges(left.size(), right.size(), std::move(edges));
    std::vector<std::string> xl, yl;
    for (const auto& s : left) xl.push_back(s.label());
    for (const auto& s : right) yl.push_back(s.label());
    g.set_labels(std::move(xl), std::move(yl));
    g.set_family({FamilyTag::Kind::Grassmann, q, k, l, n});
    return g;
}

BiregularBipartiteGraph build_from_edges(std::size_t x_size, std::size_t y_size, std::vector<Edge> edges) {
    return BiregularBipartiteGraph::from_edges(x_size, y_size, std::move(edges));
}

Subgraph::Subgraph(const BiregularBipartiteGraph& parent, std::vector<Vertex> x_subset, std::vector<Vertex> y_subset,
                   std::vector<Edge> edge_subset)
    : parent_(&parent), x_(std::move(x_subset)), y_(std::move(y_subset)), e_(std::move(edge_subset)) {
    auto normalize = [](auto& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    normalize(x_);
    normalize(y_);
    normalize(e_);
    for (auto x : x_) {
        if (x >= parent.x_size()) fail(ErrorKind::IndexOutOfRange, "left vertex " + std::to_string(x));
    }
    for (auto y : y_) {
        if (y >= parent.y_size()) fail(ErrorKind::IndexOutOfRange, "right vertex " + std::to_string(y));
    }
    for (const auto& [x, y] : e_) {
        if (!std::binary_search(x_.begin(), x_.end(), x) || !std::binary_search(y_.begin(), y_.end(), y) ||
            !parent.has_edge(x, y)) {
            fail(ErrorKind::InvalidSubgraph,
                 "edge (" + std::to_string(x) + "," + std::to_string(y) + ") is not a parent edge inside the subsets");
        }
    }
}

Subgraph Subgraph::induced(const BiregularBipartiteGraph& parent, std::vector<Vertex> x_subset,
                           std::vector<Vertex> y_subset) {
    return induced_closure(Subgraph(parent, std::move(x_subset), std::move(y_subset), {}));
}

Subgraph induced_closure(const Subgraph& sub) {
    const auto& g = sub.parent();
    std::vector<Edge> edges;
    for (auto x : sub.x_subset()) {
        for (auto y : g.left_neighbors(x)) {
            if (std::binary_search(sub.y_subset().begin(), sub.y_subset().end(), y)) edges.emplace_back(x, y);
        }
    }
    return Subgraph(g, sub.x_subset(), sub.y_subset(), std::move(edges));
}

std::size_t count_induced_edges(const BiregularBipartiteGraph& g, std::span<const Vertex> x_subset,
                                std::span<const Vertex> y_subset) {
    std::vector<char> in_y(g.y_size(), 0);
    for (auto y : y_subset) {
        if (y >= g.y_size()) fail(ErrorKind::IndexOutOfRange, "right vertex " + std::to_string(y));
        in_y[y] = 1;
    }
    std::size_t count = 0;
    for (auto x : x_subset) {
        for (auto y : g.left_neighbors(x)) count += static_cast<std::size_t>(in_y[y]);
    }
    return count;
}

}  // namespace ingleton::graphs
