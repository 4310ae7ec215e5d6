#include "ingleton/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "ingleton/error.hpp"

namespace ingleton::spectral {

namespace {

constexpr std::size_t kDenseSideLimit = 4096;
constexpr std::size_t kEdgeLimit = std::size_t{1} << 20;
constexpr double kSlack = 1e-9;

}  // namespace

std::optional<std::pair<double, double>> closed_form_spectrum(const graphs::BiregularBipartiteGraph& graph) {
    const auto& tag = graph.family();
    if (!tag) return std::nullopt;
    const double q = tag->q;
    switch (tag->kind) {
        case graphs::FamilyTag::Kind::ProjectivePlane:
            return std::pair{q + 1.0, std::sqrt(q)};
        case graphs::FamilyTag::Kind::Polynomial:
            if (tag->k == 0) return std::nullopt;
            return std::pair{std::pow(q, (tag->k + 1) / 2.0), std::pow(q, tag->k / 2.0)};
        case graphs::FamilyTag::Kind::Grassmann:
            return std::nullopt;
    }
    return std::nullopt;
}

SpectralSummary singular_values(const graphs::BiregularBipartiteGraph& graph) {
    const std::size_t rows = graph.x_size();
    const std::size_t cols = graph.y_size();
    const std::size_t small = std::min(rows, cols);
    if (graph.edge_count() > kEdgeLimit || small > kDenseSideLimit) {
        fail(ErrorKind::SizeGuard, "graph too large for the dense spectral path");
    }

    // Gram = B B^T when |X| <= |Y|, else B^T B; entries count common neighbours.
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(small), static_cast<Eigen::Index>(small));
    const bool left_small = rows <= cols;
    const std::size_t large = left_small ? cols : rows;
    for (std::size_t v = 0; v < large; ++v) {
        const auto nbrs = left_small ? graph.right_neighbors(static_cast<graphs::Vertex>(v))
                                     : graph.left_neighbors(static_cast<graphs::Vertex>(v));
        for (auto a : nbrs) {
            for (auto b : nbrs) gram(a, b) += 1.0;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) fail(ErrorKind::NumericalFailure, "eigensolver did not converge");

    SpectralSummary s;
    s.d1 = graph.d1();
    s.d2 = graph.d2();
    const auto& ev = solver.eigenvalues();  // ascending
    s.singular_values.reserve(small);
    for (Eigen::Index i = ev.size(); i-- > 0;) s.singular_values.push_back(std::sqrt(std::max(ev[i], 0.0)));
    s.lambda1 = s.singular_values.front();
    s.lambda2 = s.singular_values.size() > 1 ? s.singular_values[1] : 0.0;

    const double expected = std::sqrt(static_cast<double>(s.d1) * static_cast<double>(s.d2));
    if (std::abs(s.lambda1 - expected) > 1e-8 * expected) {
        fail(ErrorKind::NumericalFailure, "top singular value deviates from sqrt(d1*d2)");
    }
    s.disconnected_suspect = s.singular_values.size() > 1 && s.lambda1 - s.lambda2 <= 1e-9 * s.lambda1;
    s.closed_form = closed_form_spectrum(graph);
    return s;
}

MixingResult mixing_check(const graphs::BiregularBipartiteGraph& graph, double lambda2,
                          std::span<const graphs::Vertex> x_subset, std::span<const graphs::Vertex> y_subset) {
    if (x_subset.empty() || y_subset.empty()) fail(ErrorKind::EmptySubset, "mixing check needs nonempty subsets");
    std::vector<graphs::Vertex> xs(x_subset.begin(), x_subset.end()), ys(y_subset.begin(), y_subset.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    MixingResult r;
    r.observed = graphs::count_induced_edges(graph, xs, ys);
    const double nx = static_cast<double>(xs.size());
    const double ny = static_cast<double>(ys.size());
    r.expected = static_cast<double>(graph.edge_count()) * (nx / static_cast<double>(graph.x_size())) *
                 (ny / static_cast<double>(graph.y_size()));
    r.bound = lambda2 * std::sqrt(nx * ny);
    r.holds = std::abs(static_cast<double>(r.observed) - r.expected) <= r.bound + kSlack;
    return r;
}

MixingResult mixing_check(const graphs::BiregularBipartiteGraph& graph, std::span<const graphs::Vertex> x_subset,
                          std::span<const graphs::Vertex> y_subset) {
    return mixing_check(graph, singular_values(graph).lambda2, x_subset, y_subset);
}

const char* to_string(MixingBranch b) {
    switch (b) {
        case MixingBranch::Dense: return "dense";
        case MixingBranch::Sparse: return "sparse";
        case MixingBranch::Both: return "both";
    }
    return "?";
}

MixingBranch mixing_log_alternative(const graphs::Subgraph& subgraph, double lambda2) {
    const auto& g = subgraph.parent();
    const double xh = static_cast<double>(subgraph.x_subset().size());
    const double yh = static_cast<double>(subgraph.y_subset().size());
    const double eh = static_cast<double>(subgraph.edge_subset().size());
    if (xh == 0 || yh == 0 || eh == 0) fail(ErrorKind::EmptySubgraph, "subgraph needs vertices on both sides and an edge");

    const double lhs_dense = std::log2(eh) - std::log2(xh) - std::log2(yh);
    const double rhs_dense = std::log2(static_cast<double>(g.edge_count())) -
                             std::log2(static_cast<double>(g.x_size())) - std::log2(static_cast<double>(g.y_size())) + 1.0;
    const double lhs_sparse = std::log2(eh) - 0.5 * std::log2(xh) - 0.5 * std::log2(yh);
    const double rhs_sparse = std::log2(lambda2) + 1.0;

    const bool dense = lhs_dense <= rhs_dense + kSlack;
    const bool sparse = lhs_sparse <= rhs_sparse + kSlack;
    if (dense && sparse) return MixingBranch::Both;
    if (dense) return MixingBranch::Dense;
    if (sparse) return MixingBranch::Sparse;
    fail(ErrorKind::TheoremViolation, "neither branch of the log-scale mixing alternative holds");
}

MixingBranch mixing_log_alternative(const graphs::Subgraph& subgraph) {
    return mixing_log_alternative(subgraph, singular_values(subgraph.parent()).lambda2);
}

SpectralSlackReport alon_bound_report(const graphs::BiregularBipartiteGraph& graph, const SpectralSummary& spectrum) {
    if (graph.is_complete()) fail(ErrorKind::CompleteBipartite, "report undefined for complete bipartite graphs");
    SpectralSlackReport r;
    const double nx = static_cast<double>(graph.x_size());
    const double ny = static_cast<double>(graph.y_size());
    r.epsilon = std::log(nx * ny / static_cast<double>(graph.edge_count()));
    const double dmax = static_cast<double>(std::max(graph.d1(), graph.d2()));
    r.slack_strong = 2.0 * std::log2(spectrum.lambda2) - std::log2(dmax);
    r.slack_weak = 2.0 * std::log2(spectrum.lambda2) - std::log2(spectrum.lambda1);
    return r;
}

SpectralSlackReport alon_bound_report(const graphs::BiregularBipartiteGraph& graph) {
    return alon_bound_report(graph, singular_values(graph));
}

}  // namespace ingleton::spectral
