#include "ingleton/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ingleton/error.hpp"
#include "ingleton/spectral.hpp"

namespace ingleton::search {

using entropy::JointDistribution;

namespace {

constexpr std::uint32_t kRowTotal = 4096;
constexpr std::int64_t kUnit = 64;

std::vector<std::string> indexed(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

std::vector<std::string> side_labels(const std::vector<std::string>& labels, std::size_t n) {
    return labels.empty() ? indexed(n) : labels;
}

void check_rows(const std::vector<std::vector<mpq_class>>& rows, std::size_t edges, std::size_t alphabet,
                const char* name) {
    if (alphabet == 0) fail(ErrorKind::RowNotNormalized, std::string("kernel ") + name + " has an empty alphabet");
    if (rows.size() != edges) {
        fail(ErrorKind::MissingKernelRow, std::string("kernel ") + name + " has " + std::to_string(rows.size()) +
                                              " rows for " + std::to_string(edges) + " edges");
    }
    for (std::size_t e = 0; e < rows.size(); ++e) {
        const auto& row = rows[e];
        mpq_class sum = 0;
        bool ok = row.size() == alphabet;
        for (const auto& v : row) {
            ok = ok && sgn(v) >= 0;
            sum += v;
        }
        if (!ok || sum != 1) {
            fail(ErrorKind::RowNotNormalized, std::string("kernel ") + name + " row " + std::to_string(e));
        }
    }
}

/// Integer kernels over a fixed row total.
struct IntKernels {
    std::size_t alphabet_a = 1;
    std::size_t alphabet_b = 1;
    std::vector<std::vector<std::uint32_t>> a;
    std::vector<std::vector<std::uint32_t>> b;
};

KernelPair to_rational(const IntKernels& k) {
    auto convert = [](const std::vector<std::vector<std::uint32_t>>& rows) {
        std::vector<std::vector<mpq_class>> out;
        for (const auto& row : rows) {
            auto& r = out.emplace_back();
            for (auto c : row) {
                mpq_class q(static_cast<unsigned long>(c), static_cast<unsigned long>(kRowTotal));
                q.canonicalize();
                r.push_back(std::move(q));
            }
        }
        return out;
    };
    return {k.alphabet_a, k.alphabet_b, convert(k.a), convert(k.b)};
}

/// Exact conversion of rational rows onto the integer grid, when possible.
std::optional<IntKernels> to_integer(const KernelPair& k) {
    IntKernels out{k.alphabet_a, k.alphabet_b, {}, {}};
    auto convert = [](const std::vector<std::vector<mpq_class>>& rows, auto& dst) {
        for (const auto& row : rows) {
            auto& r = dst.emplace_back();
            for (const auto& v : row) {
                mpq_class scaled = v * kRowTotal;
                if (scaled.get_den() != 1) return false;
                r.push_back(static_cast<std::uint32_t>(scaled.get_num().get_ui()));
            }
        }
        return true;
    };
    if (!convert(k.a, out.a) || !convert(k.b, out.b)) return std::nullopt;
    return out;
}

class Evaluator {
public:
    explicit Evaluator(const graphs::BiregularBipartiteGraph& graph) : graph_(graph) {}

    double operator()(const IntKernels& k) {
        ++count;
        std::vector<entropy::Atom> atoms;
        const auto& edges = graph_.edges();
        const unsigned long den = static_cast<unsigned long>(edges.size()) * kRowTotal * kRowTotal;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            for (std::size_t i = 0; i < k.alphabet_a; ++i) {
                if (k.a[e][i] == 0) continue;
                for (std::size_t j = 0; j < k.alphabet_b; ++j) {
                    if (k.b[e][j] == 0) continue;
                    mpq_class m(static_cast<unsigned long>(k.a[e][i]) * k.b[e][j], den);
                    m.canonicalize();
                    atoms.push_back({{edges[e].first, edges[e].second, static_cast<entropy::Symbol>(i),
                                      static_cast<entropy::Symbol>(j)},
                                     std::move(m)});
                }
            }
        }
        const std::size_t sizes[] = {graph_.x_size(), graph_.y_size(), k.alphabet_a, k.alphabet_b};
        return entropy::ingleton(JointDistribution::with_sizes(sizes, std::move(atoms)), kQuadRoles);
    }

    std::size_t count = 0;

private:
    const graphs::BiregularBipartiteGraph& graph_;
};

void check_config(const SearchConfig& c) {
    if (c.alphabet_a == 0 || c.alphabet_b == 0) fail(ErrorKind::InvalidArgument, "alphabet sizes must be >= 1");
    if (c.restarts == 0) fail(ErrorKind::InvalidArgument, "restarts must be >= 1");
    if (!(c.step_scale > 0.0) || c.step_scale > 1.0) fail(ErrorKind::InvalidArgument, "step_scale must be in (0,1]");
}

std::vector<std::uint32_t> random_kernel_row(sampling::Rng& rng, std::size_t alphabet) {
    return sampling::random_row(rng, alphabet, kRowTotal);
}

IntKernels random_kernels(sampling::Rng& rng, std::size_t edges, std::size_t alphabet_a, std::size_t alphabet_b) {
    IntKernels k{alphabet_a, alphabet_b, {}, {}};
    for (std::size_t e = 0; e < edges; ++e) k.a.push_back(random_kernel_row(rng, alphabet_a));
    for (std::size_t e = 0; e < edges; ++e) k.b.push_back(random_kernel_row(rng, alphabet_b));
    return k;
}

/// Scale each entry by (64+m)/64 plus a small additive term, then round back
/// to the row total by largest remainder.
void perturb(std::vector<std::uint32_t>& row, sampling::Rng& rng, std::int64_t spread) {
    std::vector<std::uint64_t> w(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        const auto m = rng.between(-spread, spread);
        const auto n = rng.between(0, spread);
        w[i] = static_cast<std::uint64_t>(std::int64_t{row[i]} * (kUnit + m) + kUnit * n);
    }
    const std::uint64_t total = std::accumulate(w.begin(), w.end(), std::uint64_t{0});
    if (total == 0) return;
    std::vector<std::uint64_t> rem(row.size());
    std::uint64_t assigned = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const std::uint64_t scaled = w[i] * kRowTotal;
        row[i] = static_cast<std::uint32_t>(scaled / total);
        rem[i] = scaled % total;
        assigned += row[i];
    }
    std::vector<std::size_t> order(row.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return rem[x] > rem[y]; });
    for (std::size_t i = 0; assigned < kRowTotal; ++i, ++assigned) ++row[order[i % order.size()]];
}

void finish(SearchReport& report, const graphs::BiregularBipartiteGraph& graph, const SearchConfig& config) {
    const auto pair = entropy::uniform_pair(graph);
    report.mutual_information = entropy::mutual_information(pair, entropy::VarSet{0}, entropy::VarSet{1});
    if (report.mutual_information >= config.bound.epsilon0 - config.bound.tolerance) {
        report.certified_at_best =
            bounds::certified_main(extension(graph, report.best_kernels), kQuadRoles, graph, config.bound);
    }
}

}  // namespace

JointDistribution extension(const graphs::BiregularBipartiteGraph& graph, const KernelPair& k) {
    const auto& edges = graph.edges();
    check_rows(k.a, edges.size(), k.alphabet_a, "A");
    check_rows(k.b, edges.size(), k.alphabet_b, "B");
    const mpq_class edge_mass(1, static_cast<unsigned long>(edges.size()));
    std::vector<entropy::Atom> atoms;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (std::size_t i = 0; i < k.alphabet_a; ++i) {
            if (sgn(k.a[e][i]) == 0) continue;
            for (std::size_t j = 0; j < k.alphabet_b; ++j) {
                if (sgn(k.b[e][j]) == 0) continue;
                atoms.push_back({{edges[e].first, edges[e].second, static_cast<entropy::Symbol>(i),
                                  static_cast<entropy::Symbol>(j)},
                                 edge_mass * k.a[e][i] * k.b[e][j]});
            }
        }
    }
    return JointDistribution({side_labels(graph.x_labels(), graph.x_size()),
                              side_labels(graph.y_labels(), graph.y_size()), indexed(k.alphabet_a),
                              indexed(k.alphabet_b)},
                             std::move(atoms));
}

KernelPair copy_kernels(const graphs::BiregularBipartiteGraph& graph) {
    KernelPair k{graph.x_size(), graph.y_size(), {}, {}};
    for (const auto& [x, y] : graph.edges()) {
        auto& ra = k.a.emplace_back(graph.x_size(), mpq_class(0));
        ra[x] = 1;
        auto& rb = k.b.emplace_back(graph.y_size(), mpq_class(0));
        rb[y] = 1;
    }
    return k;
}

KernelPair constant_kernels(const graphs::BiregularBipartiteGraph& graph) {
    KernelPair k{1, 1, {}, {}};
    k.a.assign(graph.edge_count(), {mpq_class(1)});
    k.b.assign(graph.edge_count(), {mpq_class(1)});
    return k;
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "exhaustive") return Strategy::Exhaustive;
    if (s == "random") return Strategy::Random;
    if (s == "local") return Strategy::Local;
    fail(ErrorKind::InvalidArgument, "unknown strategy '" + s + "'");
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Exhaustive: return "exhaustive";
        case Strategy::Random: return "random";
        case Strategy::Local: return "local";
    }
    return "?";
}

SearchReport exhaustive_min(const graphs::BiregularBipartiteGraph& graph, const SearchConfig& config) {
    check_config(config);
    const std::size_t edges = graph.edge_count();
    const double log_space = static_cast<double>(edges) * (std::log2(static_cast<double>(config.alphabet_a)) +
                                                           std::log2(static_cast<double>(config.alphabet_b)));
    if (log_space > 24.0 + 1e-9) {
        fail(ErrorKind::SearchSpaceTooLarge, "2^" + std::to_string(log_space) + " deterministic kernel pairs");
    }

    IntKernels k{config.alphabet_a, config.alphabet_b, {}, {}};
    k.a.assign(edges, std::vector<std::uint32_t>(config.alphabet_a, 0));
    k.b.assign(edges, std::vector<std::uint32_t>(config.alphabet_b, 0));
    std::vector<std::size_t> map_a(edges, 0), map_b(edges, 0);
    for (std::size_t e = 0; e < edges; ++e) {
        k.a[e][0] = kRowTotal;
        k.b[e][0] = kRowTotal;
    }
    // little-endian odometer over maps E -> alphabet; false once it wraps
    auto advance = [](std::vector<std::size_t>& digits, std::vector<std::vector<std::uint32_t>>& rows,
                      std::size_t base) {
        for (std::size_t e = 0; e < digits.size(); ++e) {
            rows[e][digits[e]] = 0;
            digits[e] = (digits[e] + 1) % base;
            rows[e][digits[e]] = kRowTotal;
            if (digits[e] != 0) return true;
        }
        return false;
    };

    Evaluator eval(graph);
    SearchReport report;
    report.best_ing = std::numeric_limits<double>::infinity();
    IntKernels best = k;
    do {
        do {
            const double v = eval(k);
            if (v < report.best_ing) {
                report.best_ing = v;
                best = k;
            }
        } while (advance(map_b, k.b, config.alphabet_b));
    } while (advance(map_a, k.a, config.alphabet_a));

    report.best_kernels = to_rational(best);
    report.trace = {report.best_ing};
    report.evaluations = eval.count;
    finish(report, graph, config);
    return report;
}

SearchReport local_min(const graphs::BiregularBipartiteGraph& graph, const SearchConfig& config) {
    check_config(config);
    const std::size_t edges = graph.edge_count();
    const std::int64_t spread = std::clamp<std::int64_t>(std::llround(config.step_scale * kUnit), 1, kUnit - 1);

    std::optional<IntKernels> initial;
    if (config.initial) {
        extension(graph, *config.initial);
        initial = to_integer(*config.initial);
        if (!initial) fail(ErrorKind::InvalidArgument, "initial kernels must have denominators dividing 4096");
    }

    Evaluator eval(graph);
    sampling::Rng master(config.seed);
    SearchReport report;
    report.best_ing = std::numeric_limits<double>::infinity();
    IntKernels best;
    for (std::size_t r = 0; r < config.restarts; ++r) {
        auto rng = master.fork(r);
        IntKernels current = (r == 0 && initial) ? *initial
                                                 : random_kernels(rng, edges, config.alphabet_a, config.alphabet_b);
        double value = eval(current);
        auto& history = report.histories.emplace_back(1, value);
        for (std::size_t step = 0; step < config.max_steps; ++step) {
            const bool side_a = current.alphabet_b < 2 || (current.alphabet_a >= 2 && rng.below(2) == 0);
            const std::size_t alphabet = side_a ? current.alphabet_a : current.alphabet_b;
            if (alphabet < 2) break;
            IntKernels candidate = current;
            auto& row = (side_a ? candidate.a : candidate.b)[rng.below(edges)];
            if (rng.below(5) == 0) {
                std::fill(row.begin(), row.end(), 0);
                row[rng.below(alphabet)] = kRowTotal;
            } else {
                perturb(row, rng, spread);
            }
            const double v = eval(candidate);
            if (v < value) {
                value = v;
                current = std::move(candidate);
                history.push_back(value);
            }
        }
        report.trace.push_back(value);
        if (value < report.best_ing) {
            report.best_ing = value;
            best = current;
        }
    }
    report.best_kernels = to_rational(best);
    report.evaluations = eval.count;
    finish(report, graph, config);
    return report;
}

SearchReport random_min(const graphs::BiregularBipartiteGraph& graph, const SearchConfig& config) {
    check_config(config);
    const std::size_t edges = graph.edge_count();
    Evaluator eval(graph);
    sampling::Rng master(config.seed);
    SearchReport report;
    report.best_ing = std::numeric_limits<double>::infinity();
    IntKernels best;
    for (std::size_t r = 0; r < config.restarts; ++r) {
        auto rng = master.fork(r);
        double restart_best = std::numeric_limits<double>::infinity();
        auto& history = report.histories.emplace_back();
        for (std::size_t s = 0; s < std::max<std::size_t>(1, config.max_steps); ++s) {
            auto k = random_kernels(rng, edges, config.alphabet_a, config.alphabet_b);
            const double v = eval(k);
            if (v < restart_best) {
                restart_best = v;
                history.push_back(v);
            }
            if (v < report.best_ing) {
                report.best_ing = v;
                best = std::move(k);
            }
        }
        report.trace.push_back(restart_best);
    }
    report.best_kernels = to_rational(best);
    report.evaluations = eval.count;
    finish(report, graph, config);
    return report;
}

SearchReport run(const graphs::BiregularBipartiteGraph& graph, const SearchConfig& config) {
    switch (config.strategy) {
        case Strategy::Exhaustive: return exhaustive_min(graph, config);
        case Strategy::Random: return random_min(graph, config);
        case Strategy::Local: return local_min(graph, config);
    }
    fail(ErrorKind::InvalidArgument, "unknown strategy");
}

}  // namespace ingleton::search
