#include "ingleton/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ingleton/error.hpp"
#include "ingleton/splitter.hpp"
#include "ingleton/uniformity.hpp"

namespace ingleton::bounds {

namespace {

void require_disjoint(std::initializer_list<VarSet> sets) {
    VarSet seen;
    for (auto s : sets) {
        if (s.empty()) fail(ErrorKind::EmptyIndexSet, "empty role");
        if (!seen.disjoint(s)) fail(ErrorKind::OverlappingSets, "roles overlap at " + (seen & s).to_string());
        seen = seen | s;
    }
}

std::size_t single_index(VarSet s, const char* role) {
    if (s.size() != 1) fail(ErrorKind::InvalidArgument, std::string(role) + " must be a single variable");
    return s.max_index();
}

void require_subsupported(const JointDistribution& dist, VarSet x, VarSet y,
                          const graphs::BiregularBipartiteGraph& graph) {
    const auto xi = single_index(x, "X");
    const auto yi = single_index(y, "Y");
    for (const auto& atom : dist.atoms()) {
        const auto u = atom.tuple[xi];
        const auto v = atom.tuple[yi];
        if (u >= graph.x_size() || v >= graph.y_size() || !graph.has_edge(u, v)) {
            fail(ErrorKind::NotSubsupported,
                 "pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
        }
    }
}

double triple_delta(const JointDistribution& dist, VarSet triple) {
    return entropy::uniformity_report(entropy::marginal(dist, triple)).delta().get_d();
}

double density_gap(const graphs::BiregularBipartiteGraph& graph) {
    return std::log2(static_cast<double>(graph.x_size())) + std::log2(static_cast<double>(graph.y_size())) -
           std::log2(static_cast<double>(graph.edge_count()));
}

}  // namespace

const char* to_string(Branch b) {
    switch (b) {
        case Branch::Info: return "info";
        case Branch::Metric: return "metric";
        case Branch::Both: return "both";
    }
    return "?";
}

LllGap ing_lll_gap(const JointDistribution& dist, const IngletonRoles& r) {
    require_disjoint({r.x, r.y, r.a, r.b});
    LllGap g;
    g.ing = entropy::ingleton(dist, r);
    g.lll_bound = -entropy::ell_metric(dist, r.x, r.y, r.a) - entropy::ell_metric(dist, r.x, r.y, r.b) +
                  entropy::ell_metric(dist, r.x, r.y);
    return g;
}

FiveVariableGap makarychev_gap(const JointDistribution& dist, const IngletonRoles& r, VarSet w) {
    require_disjoint({r.x, r.y, r.a, r.b, w});
    using entropy::entropy;
    using entropy::mutual_information;
    FiveVariableGap g;
    g.ing = entropy::ingleton(dist, r);
    g.mk_bound = -(mutual_information(dist, r.x, w, r.y) + mutual_information(dist, r.y, w, r.x) +
                   mutual_information(dist, r.x, r.y, w));
    g.w_quality = std::abs(mutual_information(dist, r.x, r.y) - entropy(dist, w)) + 2.0 * entropy(dist, w, r.x) +
                  2.0 * entropy(dist, w, r.y);
    return g;
}

TripleAlternative triple_alternative(const JointDistribution& dist, VarSet x, VarSet y, VarSet a,
                                     const graphs::BiregularBipartiteGraph& graph, double lambda2, double delta,
                                     double tolerance) {
    require_disjoint({x, y, a});
    require_subsupported(dist, x, y, graph);
    if (!(delta >= 1.0)) fail(ErrorKind::InvalidArgument, "delta must be at least 1");

    TripleAlternative t;
    const double log_delta = std::log2(delta);
    t.conditional_information = entropy::mutual_information(dist, x, y, a);
    t.info_threshold = density_gap(graph) - (1.0 + 5.0 * log_delta);
    t.conditional_ell = entropy::ell_metric(dist, x, y, a);
    t.metric_threshold = std::log2(lambda2) + 1.0 + 4.0 * log_delta;
    t.info = t.conditional_information >= t.info_threshold - tolerance;
    t.metric = t.conditional_ell <= t.metric_threshold + tolerance;
    if (!t.info && !t.metric) {
        fail(ErrorKind::TheoremViolation, "neither side of the dichotomy holds for triple " +
                                              (x | y | a).to_string());
    }
    t.branch = t.info && t.metric ? Branch::Both : (t.info ? Branch::Info : Branch::Metric);
    return t;
}

namespace {

PartCertificate certify_part(const JointDistribution& dist, const IngletonRoles& r,
                             const graphs::BiregularBipartiteGraph& graph, double lambda2, const BoundConfig& config) {
    PartCertificate p;
    p.delta_a = triple_delta(dist, r.x | r.y | r.a);
    p.delta_b = triple_delta(dist, r.x | r.y | r.b);
    p.alt_a = triple_alternative(dist, r.x, r.y, r.a, graph, lambda2, p.delta_a, config.tolerance);
    p.alt_b = triple_alternative(dist, r.x, r.y, r.b, graph, lambda2, p.delta_b, config.tolerance);

    const double mi = entropy::mutual_information(dist, r.x, r.y);
    p.actual_ing = entropy::ingleton(dist, r);
    p.trivial_bound = -mi;

    std::optional<double> info_delta;
    if (p.alt_a.info) info_delta = p.delta_a;
    if (p.alt_b.info) info_delta = info_delta ? std::min(*info_delta, p.delta_b) : p.delta_b;
    if (info_delta) p.info_bound = density_gap(graph) - mi - (1.0 + 5.0 * std::log2(*info_delta));
    if (p.alt_a.metric && p.alt_b.metric) {
        p.metric_bound = -2.0 * std::log2(lambda2) - 2.0 - 4.0 * std::log2(p.delta_a) - 4.0 * std::log2(p.delta_b) +
                         entropy::ell_metric(dist, r.x, r.y);
    }
    p.certified = std::max({p.trivial_bound, p.info_bound.value_or(p.trivial_bound),
                            p.metric_bound.value_or(p.trivial_bound)});
    if (p.actual_ing < p.certified - config.tolerance) {
        fail(ErrorKind::TheoremViolation, "Ing below its certified bound on a quasi-uniform part");
    }
    return p;
}

}  // namespace

CertifiedBoundReport certified_quasi_uniform(const JointDistribution& dist, const IngletonRoles& roles,
                                             const graphs::BiregularBipartiteGraph& graph, double lambda2,
                                             const BoundConfig& config) {
    require_disjoint({roles.x, roles.y, roles.a, roles.b});
    CertifiedBoundReport rep;
    rep.lambda2 = lambda2;
    rep.parts.push_back(certify_part(dist, roles, graph, lambda2, config));
    const auto& p = rep.parts.front();
    rep.actual_ing = p.actual_ing;
    rep.certified = p.certified;
    rep.conditional_ing = p.actual_ing;
    rep.mutual_information = entropy::mutual_information(dist, roles.x, roles.y);
    rep.ell = entropy::ell_metric(dist, roles.x, roles.y);
    rep.residual = rep.actual_ing + 2.0 * std::log2(lambda2) - rep.ell;
    rep.floor = -rep.mutual_information - 1.0;
    rep.floor_holds = rep.certified >= rep.floor - config.tolerance;
    return rep;
}

CertifiedBoundReport certified_main(const JointDistribution& dist, const IngletonRoles& roles,
                                    const graphs::BiregularBipartiteGraph& graph, const BoundConfig& config) {
    return certified_main(dist, roles, graph, spectral::singular_values(graph), config);
}

CertifiedBoundReport certified_main(const JointDistribution& dist, const IngletonRoles& roles,
                                    const graphs::BiregularBipartiteGraph& graph,
                                    const spectral::SpectralSummary& spectrum, const BoundConfig& config) {
    if (!(config.epsilon0 > 0.0)) fail(ErrorKind::InvalidArgument, "epsilon0 must be positive");
    require_disjoint({roles.x, roles.y, roles.a, roles.b});
    single_index(roles.x, "X");
    single_index(roles.y, "Y");
    if ((roles.x | roles.y | roles.a | roles.b).max_index() >= dist.arity()) {
        fail(ErrorKind::IndexOutOfRange, "role beyond arity " + std::to_string(dist.arity()));
    }

    const std::vector<VarSet> groups{roles.x, roles.y, roles.a, roles.b};
    const auto quad = entropy::group_variables(dist, groups);
    const IngletonRoles r{VarSet{0}, VarSet{1}, VarSet{2}, VarSet{3}};

    const auto pair = entropy::marginal(quad, r.x | r.y);
    const mpq_class edge_mass(1, static_cast<unsigned long>(graph.edge_count()));
    bool uniform = pair.atoms().size() == graph.edge_count();
    for (const auto& atom : pair.atoms()) {
        if (!uniform) break;
        uniform = atom.mass == edge_mass && atom.tuple[0] < graph.x_size() && atom.tuple[1] < graph.y_size() &&
                  graph.has_edge(atom.tuple[0], atom.tuple[1]);
    }
    if (!uniform) fail(ErrorKind::NotUniformPair, "the (X,Y) law is not the uniform pair of the graph");

    CertifiedBoundReport rep;
    rep.lambda2 = spectrum.lambda2;
    rep.mutual_information = entropy::mutual_information(quad, r.x, r.y);
    if (rep.mutual_information < config.epsilon0 - config.tolerance) {
        fail(ErrorKind::BelowEpsilonThreshold, "I(X:Y) = " + std::to_string(rep.mutual_information) +
                                                   " is below epsilon0 = " + std::to_string(config.epsilon0));
    }
    rep.actual_ing = entropy::ingleton(quad, r);
    rep.ell = entropy::ell_metric(quad, r.x, r.y);

    const auto split = splitter::split_tuple(quad);
    double assembled = 0.0;
    for (std::size_t i = 0; i < split.parts.size(); ++i) {
        const auto part = entropy::restrict_to_atoms(quad, split.parts[i]);
        auto cert = certify_part(part, r, graph, spectrum.lambda2, config);
        cert.weight = split.part_weights[i];
        assembled += cert.weight.get_d() * cert.certified;
        rep.conditional_ing += cert.weight.get_d() * cert.actual_ing;
        rep.parts.push_back(std::move(cert));
    }
    rep.tail_weight = split.tail_weight;
    if (!split.tail.empty()) {
        const auto tail = entropy::restrict_to_atoms(quad, split.tail);
        rep.conditional_ing += split.tail_weight.get_d() * entropy::ingleton(tail, r);
    }
    rep.tail_contribution = -1.0;
    rep.partition_entropy = split.partition_entropy;
    rep.correction = -4.0 * split.partition_entropy;
    rep.certified = assembled + rep.tail_contribution + rep.correction;
    rep.residual = rep.actual_ing + 2.0 * std::log2(spectrum.lambda2) - rep.ell;
    rep.floor = -rep.mutual_information + rep.correction - 1.0;
    rep.floor_holds = rep.certified >= rep.floor - config.tolerance;

    if (rep.actual_ing < rep.conditional_ing + rep.correction - config.tolerance) {
        fail(ErrorKind::TheoremViolation, "conditioning on V moved Ing by more than 4H(V)");
    }
    if (rep.actual_ing < rep.certified - config.tolerance) {
        fail(ErrorKind::TheoremViolation, "Ing = " + std::to_string(rep.actual_ing) +
                                              " below certified bound " + std::to_string(rep.certified));
    }
    return rep;
}

}  // namespace ingleton::bounds
