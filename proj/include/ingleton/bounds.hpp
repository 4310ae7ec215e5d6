#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ingleton/distribution.hpp"
#include "ingleton/entropy.hpp"
#include "ingleton/graphs.hpp"
#include "ingleton/spectral.hpp"

namespace ingleton::bounds {

using entropy::IngletonRoles;
using entropy::JointDistribution;
using entropy::VarSet;

struct BoundConfig {
    double epsilon0 = 1.0;   // threshold on I(X:Y), bits
    double tolerance = 1e-9;
};

struct LllGap {
    double ing = 0.0;
    double lll_bound = 0.0;  // -L(X,Y|A) - L(X,Y|B) + L(X,Y)
};

/// Ing together with its Shannon-type lower bound in terms of L.
/// Errors: OverlappingSets.
LllGap ing_lll_gap(const JointDistribution& dist, const IngletonRoles& roles);

struct FiveVariableGap {
    double ing = 0.0;
    double mk_bound = 0.0;   // -(I(X:W|Y) + I(Y:W|X) + I(X:Y|W))
    double w_quality = 0.0;  // |I(X:Y) - H(W)| + 2H(W|X) + 2H(W|Y)
};

/// Errors: OverlappingSets (five roles must be disjoint).
FiveVariableGap makarychev_gap(const JointDistribution& dist, const IngletonRoles& roles, VarSet w);

enum class Branch { Info, Metric, Both };
const char* to_string(Branch b);

struct TripleAlternative {
    Branch branch = Branch::Both;
    bool info = false;
    bool metric = false;
    double conditional_information = 0.0;  // I(X:Y|A)
    double info_threshold = 0.0;           // log(|X||Y|/|E|) - 1 - 5 log delta
    double conditional_ell = 0.0;          // L(X,Y|A)
    double metric_threshold = 0.0;         // log lambda2 + 1 + 4 log delta
};

/// Dichotomy for the triple (X,Y,A) whose pair is supported on `graph`:
/// either I(X:Y|A) is close to log(|X||Y|/|E|) or L(X,Y|A) is at most about
/// log lambda2. `delta` must dominate the measured uniformity of the triple.
/// Errors: NotSubsupported; TheoremViolation if neither side holds.
TripleAlternative triple_alternative(const JointDistribution& dist, VarSet x, VarSet y, VarSet a,
                                     const graphs::BiregularBipartiteGraph& graph, double lambda2, double delta,
                                     double tolerance = 1e-9);

struct PartCertificate {
    mpq_class weight = 1;
    double actual_ing = 0.0;
    double certified = 0.0;
    double delta_a = 1.0;
    double delta_b = 1.0;
    TripleAlternative alt_a;
    TripleAlternative alt_b;
    std::optional<double> info_bound;    // fires when A or B is on the information side
    std::optional<double> metric_bound;  // fires when both are on the metric side
    double trivial_bound = 0.0;          // -I(X:Y)
};

struct CertifiedBoundReport {
    double actual_ing = 0.0;
    double certified = 0.0;
    double residual = 0.0;  // actual + 2 log lambda2 - L(X,Y)
    double mutual_information = 0.0;
    double ell = 0.0;
    double lambda2 = 0.0;
    std::vector<PartCertificate> parts;
    mpq_class tail_weight = 0;
    double tail_contribution = 0.0;
    double partition_entropy = 0.0;  // H(V)
    double correction = 0.0;         // -4 H(V)
    double conditional_ing = 0.0;    // Ing(X,Y,A,B|V)
    double floor = 0.0;              // -I(X:Y) - 4H(V) - 1
    bool floor_holds = true;
};

/// Bound for a pair supported on `graph` (X,Y,A,B marginals taken from the
/// roles): max over the applicable information, metric and trivial bounds,
/// each triple using its own measured uniformity.
/// Errors: NotSubsupported, TheoremViolation.
CertifiedBoundReport certified_quasi_uniform(const JointDistribution& dist, const IngletonRoles& roles,
                                             const graphs::BiregularBipartiteGraph& graph, double lambda2,
                                             const BoundConfig& config = {});

/// General case: split the quadruple into quasi-uniform parts V plus a tail,
/// certify each part and assemble with the -4H(V) and -1 corrections.
/// X and Y must be single variables whose joint law is the uniform pair of
/// `graph`. Errors: NotUniformPair, BelowEpsilonThreshold, TheoremViolation.
CertifiedBoundReport certified_main(const JointDistribution& dist, const IngletonRoles& roles,
                                    const graphs::BiregularBipartiteGraph& graph, const BoundConfig& config = {});
CertifiedBoundReport certified_main(const JointDistribution& dist, const IngletonRoles& roles,
                                    const graphs::BiregularBipartiteGraph& graph,
                                    const spectral::SpectralSummary& spectrum, const BoundConfig& config = {});

}  // namespace ingleton::bounds
