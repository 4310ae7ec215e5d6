#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ingleton/graphs.hpp"

namespace ingleton::spectral {

struct SpectralSummary {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::vector<double> singular_values;  // descending, min(|X|,|Y|) entries
    std::size_t d1 = 0;
    std::size_t d2 = 0;
    /// Expected (lambda1, lambda2) for family graphs with a known spectrum.
    std::optional<std::pair<double, double>> closed_form;
    /// lambda2 numerically equal to lambda1: the graph is likely disconnected.
    bool disconnected_suspect = false;
};

/// Singular values of the 0/1 biadjacency array, i.e. the nonnegative half of
/// the bipartite adjacency spectrum. Uses a dense symmetric eigensolve of the
/// smaller Gram array. Errors: SizeGuard, NumericalFailure.
SpectralSummary singular_values(const graphs::BiregularBipartiteGraph& graph);

/// Known (lambda1, lambda2) for projective planes and polynomial graphs
/// (k >= 1); nullopt otherwise.
std::optional<std::pair<double, double>> closed_form_spectrum(const graphs::BiregularBipartiteGraph& graph);

struct MixingResult {
    std::size_t observed = 0;
    double expected = 0.0;
    double bound = 0.0;
    bool holds = false;
};

/// Bipartite expander mixing lemma on the induced subgraph spanned by the two
/// vertex subsets (duplicates ignored). Errors: EmptySubset.
MixingResult mixing_check(const graphs::BiregularBipartiteGraph& graph, double lambda2,
                          std::span<const graphs::Vertex> x_subset, std::span<const graphs::Vertex> y_subset);
MixingResult mixing_check(const graphs::BiregularBipartiteGraph& graph, std::span<const graphs::Vertex> x_subset,
                          std::span<const graphs::Vertex> y_subset);

enum class MixingBranch { Dense, Sparse, Both };

const char* to_string(MixingBranch b);

/// Log-scale alternative for an arbitrary subgraph (all logs base 2):
///   dense:  log|E_H| - log|X_H| - log|Y_H| <= log|E| - log|X| - log|Y| + 1
///   sparse: log|E_H| - log|X_H|/2 - log|Y_H|/2 <= log lambda2 + 1
/// At least one must hold; otherwise TheoremViolation.
/// Errors: EmptySubgraph (no vertices on a side, or no edges).
MixingBranch mixing_log_alternative(const graphs::Subgraph& subgraph, double lambda2);
MixingBranch mixing_log_alternative(const graphs::Subgraph& subgraph);

struct SpectralSlackReport {
    double epsilon = 0.0;        // ln(|X||Y|/|E|), nats
    double slack_strong = 0.0;   // 2 log lambda2 - log max(d1, d2)
    double slack_weak = 0.0;     // 2 log lambda2 - log lambda1
};

/// Slack of the second eigenvalue against the degree- and lambda1-based
/// lower estimates. Report only. Errors: CompleteBipartite.
SpectralSlackReport alon_bound_report(const graphs::BiregularBipartiteGraph& graph, const SpectralSummary& spectrum);
SpectralSlackReport alon_bound_report(const graphs::BiregularBipartiteGraph& graph);

}  // namespace ingleton::spectral
