#include "ingleton/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "CLI11.hpp"
#include "ingleton/bounds.hpp"
#include "ingleton/error.hpp"
#include "ingleton/expression.hpp"
#include "ingleton/graphs.hpp"
#include "ingleton/json_io.hpp"
#include "ingleton/sampling.hpp"
#include "ingleton/search.hpp"
#include "ingleton/spectral.hpp"
#include "ingleton/splitter.hpp"
#include "ingleton/verify.hpp"

namespace ingleton::cli {

namespace {

using io::Json;

struct Options {
    std::string family;
    std::uint32_t q = 0, k = 1, l = 2, n = 4;
    std::string input, output, kernels, expr, mode = "auto", suite, strategy = "local";
    std::size_t samples = 1000;
    std::uint64_t seed = sampling::kDefaultSeed;
    double epsilon0 = 1.0, step_scale = 0.5, scale = 1.0;
    std::size_t alphabet_a = 2, alphabet_b = 2, restarts = 20, max_steps = 1000;
};

graphs::BiregularBipartiteGraph load_graph(const std::string& path) {
    return io::graph_from_json(io::read_file(path));
}

Json graph_summary(const graphs::BiregularBipartiteGraph& g) {
    return {{"x_size", g.x_size()}, {"y_size", g.y_size()}, {"edges", g.edge_count()}, {"d1", g.d1()},
            {"d2", g.d2()}};
}

Json graph_gen(const Options& o) {
    graphs::BiregularBipartiteGraph g = [&] {
        if (o.family == "projective-plane") return graphs::build_projective_plane(o.q);
        if (o.family == "poly") return graphs::build_polynomial_graph(o.q, o.k);
        if (o.family == "grassmann") return graphs::build_grassmann_graph(o.q, o.n, o.k, o.l);
        fail(ErrorKind::InvalidArgument, "unknown family '" + o.family + "'");
    }();
    if (o.output.empty()) return io::to_json(g);
    io::write_file(o.output, io::to_json(g));
    auto s = graph_summary(g);
    s["output"] = o.output;
    return s;
}

Json graph_validate(const Options& o) {
    auto s = graph_summary(load_graph(o.input));
    s["valid"] = true;
    return s;
}

Json spectrum(const Options& o) {
    const auto g = load_graph(o.input);
    const auto s = spectral::singular_values(g);
    auto j = io::to_json(s);
    if (!g.is_complete()) j["alon"] = io::to_json(spectral::alon_bound_report(g, s));
    return j;
}

Json mixing(const Options& o, int& code) {
    const auto g = load_graph(o.input);
    const auto s = spectral::singular_values(g);
    sampling::Rng rng(o.seed);
    std::size_t violations = 0, dense = 0, sparse = 0, both = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < o.samples; ++i) {
        const auto xs = sampling::random_subset(rng, g.x_size());
        const auto ys = sampling::random_subset(rng, g.y_size());
        const auto r = spectral::mixing_check(g, s.lambda2, xs, ys);
        if (!r.holds) ++violations;
        if (r.bound > 0.0) worst = std::max(worst, std::abs(static_cast<double>(r.observed) - r.expected) / r.bound);
    }
    for (std::size_t i = 0; i < o.samples; ++i) {
        std::vector<graphs::Vertex> xs, ys;
        do {
            xs = sampling::random_subset(rng, g.x_size());
            ys = sampling::random_subset(rng, g.y_size());
        } while (graphs::count_induced_edges(g, xs, ys) == 0);
        switch (spectral::mixing_log_alternative(graphs::Subgraph::induced(g, xs, ys), s.lambda2)) {
            case spectral::MixingBranch::Dense: ++dense; break;
            case spectral::MixingBranch::Sparse: ++sparse; break;
            case spectral::MixingBranch::Both: ++both; break;
        }
    }
    if (violations) code = kTheorem;
    return {{"samples", o.samples},
            {"seed", o.seed},
            {"lambda2", s.lambda2},
            {"violations", violations},
            {"worst_ratio", worst},
            {"log_alternative", {{"dense", dense}, {"sparse", sparse}, {"both", both}}}};
}

Json entropy_eval(const Options& o) {
    const auto d = io::distribution_from_json(io::read_file(o.input));
    const auto q = entropy::parse_expression(o.expr);
    return {{"expr", q.to_string()}, {"value", q.evaluate(d)}};
}

Json entropy_pair(const Options& o) {
    const auto d = entropy::uniform_pair(load_graph(o.input));
    if (o.output.empty()) return io::to_json(d);
    io::write_file(o.output, io::to_json(d));
    return {{"atoms", d.atoms().size()}, {"output", o.output}};
}

Json split(const Options& o) {
    const auto d = io::distribution_from_json(io::read_file(o.input));
    std::string mode = o.mode;
    if (mode == "auto") mode = d.arity() <= 4 ? "tuple" : "single";
    const auto r = mode == "tuple" ? splitter::split_tuple(d) : splitter::split_single(d);
    auto j = io::to_json(r);
    j["mode"] = mode;
    return j;
}

Json certify(const Options& o) {
    const auto g = load_graph(o.input);
    const auto k = io::kernels_from_json(io::read_file(o.kernels));
    bounds::BoundConfig cfg;
    cfg.epsilon0 = o.epsilon0;
    return io::to_json(bounds::certified_main(search::extension(g, k), search::kQuadRoles, g, cfg));
}

Json search_cmd(const Options& o) {
    const auto g = load_graph(o.input);
    search::SearchConfig cfg;
    cfg.strategy = search::strategy_from_string(o.strategy);
    cfg.seed = o.seed;
    cfg.alphabet_a = o.alphabet_a;
    cfg.alphabet_b = o.alphabet_b;
    cfg.restarts = o.restarts;
    cfg.max_steps = o.max_steps;
    cfg.step_scale = o.step_scale;
    cfg.bound.epsilon0 = o.epsilon0;
    const auto r = search::run(g, cfg);
    if (!o.output.empty()) io::write_file(o.output, io::to_json(r.best_kernels));
    auto j = io::to_json(r);
    j["strategy"] = o.strategy;
    j["seed"] = o.seed;
    return j;
}

Json verify_cmd(const Options& o, int& code) {
    const auto r = verify::run_suite(o.suite, {o.seed, o.scale});
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(
            {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"advisory", c.advisory},
             {"examples", c.examples}});
    }
    if (!r.passed()) code = kTheorem;
    return {{"suite", r.suite}, {"seed", o.seed}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ingleton expression bounds on expander-supported pairs", "ingleton"};
    app.require_subcommand(1);
    Options o;

    auto* graph = app.add_subcommand("graph", "build or check bipartite graphs");
    graph->require_subcommand(1);
    auto* gen = graph->add_subcommand("gen", "generate a family graph");
    gen->add_option("--family", o.family, "projective-plane | poly | grassmann")
        ->required()
        ->check(CLI::IsMember({"projective-plane", "poly", "grassmann"}));
    gen->add_option("--q", o.q, "prime field size")->required();
    gen->add_option("--k", o.k, "polynomial degree or subspace dimension");
    gen->add_option("--l", o.l, "larger subspace dimension (grassmann)");
    gen->add_option("--n", o.n, "ambient dimension (grassmann)");
    gen->add_option("-o,--output", o.output, "output graph file");
    auto* validate = graph->add_subcommand("validate", "validate an edge-list graph");
    validate->add_option("-i,--input", o.input)->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "singular values and spectral report");
    spectrum_cmd->add_option("-i,--input", o.input)->required();

    auto* mix = app.add_subcommand("mixing", "sample the mixing lemma and its log-scale alternative");
    mix->add_option("-i,--input", o.input)->required();
    mix->add_option("--samples", o.samples);
    mix->add_option("--seed", o.seed);

    auto* ent = app.add_subcommand("entropy", "entropic quantities");
    ent->require_subcommand(1);
    auto* eval = ent->add_subcommand("eval", "evaluate an expression");
    eval->add_option("-i,--input", o.input)->required();
    eval->add_option("--expr", o.expr)->required();
    auto* pair = ent->add_subcommand("pair", "uniform distribution on the edges of a graph");
    pair->add_option("-i,--input", o.input)->required();
    pair->add_option("-o,--output", o.output);

    auto* spl = app.add_subcommand("split", "partition a distribution into quasi-uniform parts");
    spl->add_option("-i,--input", o.input)->required();
    spl->add_option("--mode", o.mode)->check(CLI::IsMember({"single", "tuple", "auto"}));

    auto* cert = app.add_subcommand("certify", "certified lower bound on Ing for given kernels");
    cert->add_option("-i,--input", o.input)->required();
    cert->add_option("--kernels", o.kernels)->required();
    cert->add_option("--epsilon0", o.epsilon0);

    auto* srch = app.add_subcommand("search", "minimize Ing over auxiliary kernels");
    srch->add_option("-i,--input", o.input)->required();
    srch->add_option("--strategy", o.strategy)->check(CLI::IsMember({"exhaustive", "random", "local"}));
    srch->add_option("--seed", o.seed);
    srch->add_option("--alphabet-a", o.alphabet_a);
    srch->add_option("--alphabet-b", o.alphabet_b);
    srch->add_option("--restarts", o.restarts);
    srch->add_option("--max-steps", o.max_steps);
    srch->add_option("--step-scale", o.step_scale);
    srch->add_option("--epsilon0", o.epsilon0);
    srch->add_option("-o,--output", o.output, "write the best kernels here");

    auto* ver = app.add_subcommand("verify", "run a property audit suite");
    ver->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"shannon", "mixing", "splitter", "bounds"}));
    ver->add_option("--seed", o.seed);
    ver->add_option("--scale", o.scale, "sample-count multiplier");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    int code = kOk;
    try {
        Json result;
        if (*gen) result = graph_gen(o);
        else if (*validate) result = graph_validate(o);
        else if (*spectrum_cmd) result = spectrum(o);
        else if (*mix) result = mixing(o, code);
        else if (*eval) result = entropy_eval(o);
        else if (*pair) result = entropy_pair(o);
        else if (*spl) result = split(o);
        else if (*cert) result = certify(o);
        else if (*srch) result = search_cmd(o);
        else if (*ver) result = verify_cmd(o, code);
        out << io::dump(result);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::TheoremViolation ? kTheorem : kValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    }
    return code;
}

}  // namespace ingleton::cli
