#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ingleton::graphs {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // (left index, right index)

/// Families with known closed-form spectra; carried along so the spectral
/// layer can cross-check its numerics.
struct FamilyTag {
    enum class Kind { ProjectivePlane, Polynomial, Grassmann };
    Kind kind;
    std::uint32_t q = 0;
    std::uint32_t k = 0;
    std::uint32_t l = 0;
    std::uint32_t n = 0;
};

/// Bipartite graph (X ⊔ Y, E) in which every left vertex has degree d1 and
/// every right vertex has degree d2. Only constructible through validation.
class BiregularBipartiteGraph {
public:
    /// Validates and builds. Errors: IndexOutOfRange, DuplicateEdge,
    /// NotBiregular (message names the first offending vertex).
    static BiregularBipartiteGraph from_edges(std::size_t x_size, std::size_t y_size, std::vector<Edge> edges);

    std::size_t x_size() const noexcept { return x_size_; }
    std::size_t y_size() const noexcept { return y_size_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t d1() const noexcept { return d1_; }
    std::size_t d2() const noexcept { return d2_; }

    /// Lexicographically sorted edge list.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> left_neighbors(Vertex x) const;
    std::span<const Vertex> right_neighbors(Vertex y) const;
    bool has_edge(Vertex x, Vertex y) const;
    /// Position of (x, y) in `edges()`, if present.
    std::optional<std::size_t> edge_index(Vertex x, Vertex y) const;

    bool is_complete() const noexcept { return edges_.size() == x_size_ * y_size_; }

    const std::vector<std::string>& x_labels() const noexcept { return x_labels_; }
    const std::vector<std::string>& y_labels() const noexcept { return y_labels_; }
    bool has_labels() const noexcept { return !x_labels_.empty(); }
    void set_labels(std::vector<std::string> x_labels, std::vector<std::string> y_labels);

    const std::optional<FamilyTag>& family() const noexcept { return family_; }
    void set_family(FamilyTag tag) { family_ = tag; }

    /// Same sizes and edge set; labels and family tags are ignored.
    friend bool operator==(const BiregularBipartiteGraph& a, const BiregularBipartiteGraph& b) {
        return a.x_size_ == b.x_size_ && a.y_size_ == b.y_size_ && a.edges_ == b.edges_;
    }

private:
    BiregularBipartiteGraph() = default;

    std::size_t x_size_ = 0;
    std::size_t y_size_ = 0;
    std::size_t d1_ = 0;
    std::size_t d2_ = 0;
    std::vector<Edge> edges_;
    // CSR adjacency for both sides
    std::vector<std::size_t> left_offsets_, right_offsets_;
    std::vector<Vertex> left_adj_, right_adj_;
    std::vector<std::string> x_labels_, y_labels_;
    std::optional<FamilyTag> family_;
};

/// Point-line incidence graph of the projective plane over F_q, q prime.
/// Points and lines are normalized homogeneous triples (first nonzero
/// coordinate 1), ordered lexicographically; a point lies on a line when
/// their dot product vanishes.
BiregularBipartiteGraph build_projective_plane(std::uint32_t q);

/// Points of F_q^2 against polynomials of degree <= k, joined when the
/// point lies on the polynomial's graph.
BiregularBipartiteGraph build_polynomial_graph(std::uint32_t q, std::uint32_t k);

/// k-dimensional against l-dimensional subspaces of F_q^n, joined by
/// containment.
BiregularBipartiteGraph build_grassmann_graph(std::uint32_t q, std::uint32_t n, std::uint32_t k, std::uint32_t l);

BiregularBipartiteGraph build_from_edges(std::size_t x_size, std::size_t y_size, std::vector<Edge> edges);

/// A (not necessarily induced) subgraph of a parent graph. Vertex subsets and
/// the edge subset are stored sorted; the parent must outlive the view.
class Subgraph {
public:
    Subgraph(const BiregularBipartiteGraph& parent, std::vector<Vertex> x_subset, std::vector<Vertex> y_subset,
             std::vector<Edge> edge_subset);

    /// Induced subgraph on the given vertex subsets.
    static Subgraph induced(const BiregularBipartiteGraph& parent, std::vector<Vertex> x_subset,
                            std::vector<Vertex> y_subset);

    const BiregularBipartiteGraph& parent() const noexcept { return *parent_; }
    const std::vector<Vertex>& x_subset() const noexcept { return x_; }
    const std::vector<Vertex>& y_subset() const noexcept { return y_; }
    const std::vector<Edge>& edge_subset() const noexcept { return e_; }

private:
    const BiregularBipartiteGraph* parent_;
    std::vector<Vertex> x_, y_;
    std::vector<Edge> e_;
};

/// Same vertex subsets, with every parent edge inside them.
Subgraph induced_closure(const Subgraph& sub);

/// Number of parent edges with both endpoints in the given (sorted) subsets.
std::size_t count_induced_edges(const BiregularBipartiteGraph& g, std::span<const Vertex> x_subset,
                                std::span<const Vertex> y_subset);

}  // namespace ingleton::graphs
