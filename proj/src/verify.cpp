#include "ingleton/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "ingleton/bounds.hpp"
#include "ingleton/entropy.hpp"
#include "ingleton/error.hpp"
#include "ingleton/graphs.hpp"
#include "ingleton/search.hpp"
#include "ingleton/spectral.hpp"
#include "ingleton/splitter.hpp"
#include "ingleton/uniformity.hpp"

namespace ingleton::verify {

using entropy::JointDistribution;
using entropy::VarSet;

namespace {

constexpr double kTol = 1e-9;
constexpr std::size_t kMaxExamples = 5;

std::size_t scaled(const SuiteOptions& o, std::size_t n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * o.scale)));
}

/// Collects checks by name in first-seen order.
class Recorder {
public:
    explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

    /// Runs `body`; a false result or any exception is a failure of `name`.
    void check(const std::string& name, const std::function<bool(std::string&)>& body, bool advisory = false) {
        auto& c = find(name);
        c.advisory = advisory;
        ++c.cases;
        std::string why;
        bool ok = false;
        try {
            ok = body(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!ok) {
            ++c.failures;
            if (c.examples.size() < kMaxExamples) c.examples.push_back(why.empty() ? "check returned false" : why);
        }
    }

    SuiteReport take() { return std::move(report_); }

private:
    Check& find(const std::string& name) {
        for (auto& c : report_.checks) {
            if (c.name == name) return c;
        }
        auto& c = report_.checks.emplace_back();
        c.name = name;
        return c;
    }

    SuiteReport report_;
};

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

bool at_least(double lhs, double rhs, std::string& why, const char* what) {
    if (lhs >= rhs - kTol) return true;
    why = std::string(what) + ": " + fmt(lhs) + " < " + fmt(rhs);
    return false;
}

// ---- shannon ---------------------------------------------------------------

void audit_arity4(Recorder& rec, const JointDistribution& d) {
    rec.check("basic_conditional_information", [&](std::string& why) {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                const VarSet rest = VarSet::all(4) - VarSet{i, j};
                for (std::uint32_t k = rest.bits();; k = (k - 1) & rest.bits()) {
                    const double v = entropy::mutual_information(d, VarSet{i}, VarSet{j}, VarSet(k));
                    if (v < -kTol) {
                        why = "I(" + std::to_string(i) + ":" + std::to_string(j) + "|" + VarSet(k).to_string() +
                              ") = " + fmt(v);
                        return false;
                    }
                    if (k == 0) break;
                }
            }
        }
        return true;
    });
    rec.check("ing_lll_gap", [&](std::string& why) {
        const auto g = bounds::ing_lll_gap(d, search::kQuadRoles);
        return at_least(g.ing, g.lll_bound, why, "Ing below the L bound");
    });
    rec.check("entropy_of_quasi_uniform", [&](std::string& why) {
        for (std::uint32_t m = 1; m < 16; ++m) {
            const auto marg = entropy::marginal(d, VarSet(m));
            const double support = std::log2(static_cast<double>(marg.atoms().size()));
            const double h = entropy::entropy(d, VarSet(m));
            const double delta = entropy::mass_ratio(d, VarSet(m)).get_d();
            if (!at_least(support, h, why, "log support below H") ||
                !at_least(h, support - std::log2(delta), why, "H below log support - log delta")) {
                why += " on " + VarSet(m).to_string();
                return false;
            }
        }
        return true;
    });
    rec.check("combined_uniformity", [&](std::string& why) {
        const auto r = entropy::uniformity_report(d);
        if (r.delta_regular <= r.delta_uniform * r.delta_uniform) return true;
        why = "regularity " + entropy::rational_to_string(r.delta_regular) + " exceeds delta^2";
        return false;
    });
}

// ---- splitter --------------------------------------------------------------

JointDistribution random_split_input(sampling::Rng& rng) {
    const std::size_t sizes[] = {static_cast<std::size_t>(rng.between(1, 64)),
                                 static_cast<std::size_t>(rng.between(2, 64))};
    const std::size_t space = sizes[0] * sizes[1];
    const auto support = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(std::min<std::size_t>(space, 4096))));
    // choose `support` distinct cells by a partial shuffle
    std::vector<std::uint32_t> cells(space);
    for (std::size_t i = 0; i < space; ++i) cells[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < support; ++i) {
        std::swap(cells[i], cells[i + rng.below(space - i)]);
    }
    const auto mode = rng.below(3);
    std::vector<std::uint64_t> weights(support);
    std::uint64_t total = 0;
    for (auto& w : weights) {
        if (mode == 0) {
            w = static_cast<std::uint64_t>(rng.between(1, 16));
        } else if (mode == 1) {
            w = static_cast<std::uint64_t>(rng.between(1, 1000000));
        } else {
            w = (std::uint64_t{1} << rng.below(30)) + rng.below(1000);
        }
        total += w;
    }
    std::vector<entropy::Atom> atoms;
    for (std::size_t i = 0; i < support; ++i) {
        mpq_class m(static_cast<unsigned long>(weights[i]), static_cast<unsigned long>(total));
        m.canonicalize();
        atoms.push_back({{cells[i] / static_cast<std::uint32_t>(sizes[1]), cells[i] % static_cast<std::uint32_t>(sizes[1])},
                         std::move(m)});
    }
    return JointDistribution::with_sizes(sizes, std::move(atoms));
}

std::vector<entropy::Tuple> random_point_set(sampling::Rng& rng) {
    std::size_t sizes[4];
    std::size_t space = 1;
    for (auto& s : sizes) {
        s = static_cast<std::size_t>(rng.between(2, 6));
        space *= s;
    }
    const auto n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(std::min<std::size_t>(space, 500))));
    std::set<entropy::Tuple> pts;
    while (pts.size() < n) {
        entropy::Tuple t(4);
        for (std::size_t i = 0; i < 4; ++i) t[i] = static_cast<entropy::Symbol>(rng.below(sizes[i]));
        pts.insert(std::move(t));
    }
    return {pts.begin(), pts.end()};
}

// ---- bounds ----------------------------------------------------------------

search::KernelPair random_binary_kernels(sampling::Rng& rng, std::size_t edges) {
    search::KernelPair k{2, 2, {}, {}};
    for (auto* rows : {&k.a, &k.b}) {
        for (std::size_t e = 0; e < edges; ++e) {
            auto& row = rows->emplace_back();
            for (auto c : sampling::random_row(rng, 2, 4096)) {
                mpq_class q(static_cast<unsigned long>(c), 4096UL);
                q.canonicalize();
                row.push_back(std::move(q));
            }
        }
    }
    return k;
}

void certify(Recorder& rec, const std::string& name, const graphs::BiregularBipartiteGraph& g,
             const spectral::SpectralSummary& sv, const search::KernelPair& k) {
    const auto d = search::extension(g, k);
    std::optional<bounds::CertifiedBoundReport> rep;
    rec.check(name, [&](std::string& why) {
        rep = bounds::certified_main(d, search::kQuadRoles, g, sv);
        return at_least(rep->actual_ing, rep->certified, why, "Ing below certified");
    });
    if (!rep) return;
    rec.check("trivial_floor", [&](std::string& why) {
        return at_least(rep->actual_ing, -rep->mutual_information, why, "Ing below -I(X:Y)");
    });
    rec.check("certified_floor", [&](std::string& why) {
        if (rep->floor_holds) return true;
        why = name + ": certified " + fmt(rep->certified) + " below floor " + fmt(rep->floor);
        return false;
    }, true);
}

}  // namespace

bool SuiteReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return !c.advisory && c.failures; });
}

std::size_t SuiteReport::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) {
        if (!c.advisory) n += c.failures;
    }
    return n;
}

SuiteReport shannon_suite(const SuiteOptions& o) {
    Recorder rec("shannon");
    sampling::Rng rng(o.seed);
    for (std::size_t i = 0, n = scaled(o, 10000); i < n; ++i) {
        audit_arity4(rec, sampling::random_distribution(rng, 4, 4, 64));
    }
    const entropy::IngletonRoles roles{VarSet{0}, VarSet{1}, VarSet{2}, VarSet{3}};
    for (std::size_t i = 0, n = scaled(o, 10000); i < n; ++i) {
        const auto d = sampling::random_distribution(rng, 5, 3, 64);
        rec.check("makarychev_gap", [&](std::string& why) {
            const auto g = bounds::makarychev_gap(d, roles, VarSet{4});
            return at_least(g.ing, g.mk_bound, why, "Ing below the five-variable bound") &&
                   at_least(g.w_quality, -g.mk_bound, why, "W quality below the bound deficit");
        });
    }
    return rec.take();
}

SuiteReport mixing_suite(const SuiteOptions& o) {
    Recorder rec("mixing");
    sampling::Rng rng(o.seed);
    const std::pair<std::string, graphs::BiregularBipartiteGraph> graphs_under_test[] = {
        {"fano", graphs::build_projective_plane(2)},
        {"poly(3,2)", graphs::build_polynomial_graph(3, 2)},
        {"grassmann(2,4,1,2)", graphs::build_grassmann_graph(2, 4, 1, 2)},
    };
    for (const auto& [name, g] : graphs_under_test) {
        const auto sv = spectral::singular_values(g);
        rec.check("spectrum", [&](std::string& why) {
            if (sv.closed_form && std::abs(sv.closed_form->second - sv.lambda2) > 1e-6) {
                why = name + ": lambda2 " + fmt(sv.lambda2) + " vs closed form " + fmt(sv.closed_form->second);
                return false;
            }
            return sv.lambda2 < sv.lambda1;
        });
        for (std::size_t i = 0, n = scaled(o, 1000); i < n; ++i) {
            const auto xs = sampling::random_subset(rng, g.x_size());
            const auto ys = sampling::random_subset(rng, g.y_size());
            rec.check("mixing_lemma", [&](std::string& why) {
                const auto r = spectral::mixing_check(g, sv.lambda2, xs, ys);
                if (!r.holds) why = name + ": |e - expected| exceeds " + fmt(r.bound);
                return r.holds;
            });
        }
        for (std::size_t i = 0, n = scaled(o, 500); i < n; ++i) {
            std::vector<graphs::Vertex> xs, ys;
            do {
                xs = sampling::random_subset(rng, g.x_size());
                ys = sampling::random_subset(rng, g.y_size());
            } while (graphs::count_induced_edges(g, xs, ys) == 0);
            rec.check("log_alternative", [&](std::string&) {
                spectral::mixing_log_alternative(graphs::Subgraph::induced(g, xs, ys), sv.lambda2);
                return true;
            });
        }
    }
    return rec.take();
}

SuiteReport splitter_suite(const SuiteOptions& o) {
    Recorder rec("splitter");
    sampling::Rng rng(o.seed);

    rec.check("worked_example", [](std::string& why) {
        std::vector<entropy::Atom> atoms;
        const long masses[] = {4, 3, 2, 1};
        for (std::uint32_t i = 0; i < 4; ++i) {
            mpq_class m(masses[i], 10);
            m.canonicalize();
            atoms.push_back({{i}, m});
        }
        const std::size_t sizes[] = {4};
        const auto s = splitter::split_single(JointDistribution::with_sizes(sizes, std::move(atoms)));
        const std::vector<std::vector<std::size_t>> parts{{0, 1}, {2}, {3}};
        const std::vector<mpq_class> weights{mpq_class(7, 10), mpq_class(1, 5), mpq_class(1, 10)};
        if (s.parts == parts && s.part_weights == weights && s.tail.empty()) return true;
        why = "unexpected parts for (0.4,0.3,0.2,0.1)";
        return false;
    });

    for (std::size_t i = 0, n = scaled(o, 1000); i < n; ++i) {
        const auto d = random_split_input(rng);
        rec.check("single_split", [&](std::string& why) {
            const auto s = splitter::split_single(d);
            const auto a = splitter::audit_single_split(d, s);
            if (a.passed()) return true;
            why = "audit failed: partition=" + std::to_string(a.is_partition) +
                  " tail=" + std::to_string(a.small_tail) + " entropy=" + std::to_string(a.entropy_bound) +
                  " ratio=" + std::to_string(a.two_uniform) + " size=" + std::to_string(a.small_parts);
            return false;
        });
    }

    for (std::size_t i = 0, n = scaled(o, 100); i < n; ++i) {
        const auto pts = random_point_set(rng);
        rec.check("regularize", [&](std::string& why) {
            const auto r = splitter::regularize(pts, 2.0);
            std::vector<int> seen(pts.size(), 0);
            for (const auto& p : r.parts) {
                for (auto k : p) ++seen[k];
            }
            const bool partition = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
            const bool regular = std::all_of(r.achieved_d.begin(), r.achieved_d.end(),
                                             [](const mpq_class& d) { return d <= 2; });
            if (partition && regular && r.parts.size() <= pts.size()) return true;
            why = "refinement of " + std::to_string(pts.size()) + " points is not a regular partition";
            return false;
        });
    }

    for (std::size_t i = 0, n = scaled(o, 100); i < n; ++i) {
        const auto d = sampling::random_distribution(rng, 4, 4, 64);
        rec.check("tuple_split", [&](std::string& why) {
            const auto s = splitter::split_tuple(d);
            if (splitter::audit_tuple_split(d, s).passed()) return true;
            why = "tuple split audit failed";
            return false;
        });
    }
    return rec.take();
}

SuiteReport bounds_suite(const SuiteOptions& o) {
    Recorder rec("bounds");
    sampling::Rng rng(o.seed);

    const std::pair<std::string, graphs::BiregularBipartiteGraph> pairs[] = {
        {"fano", graphs::build_projective_plane(2)},
        {"poly(2,1)", graphs::build_polynomial_graph(2, 1)},
    };
    for (const auto& [name, g] : pairs) {
        const auto sv = spectral::singular_values(g);
        certify(rec, "certified_copy", g, sv, search::copy_kernels(g));
        certify(rec, "certified_constant", g, sv, search::constant_kernels(g));
        for (std::size_t i = 0, n = scaled(o, 100); i < n; ++i) {
            certify(rec, "certified_random_binary", g, sv, random_binary_kernels(rng, g.edge_count()));
        }
        rec.check("certified_local_min", [&](std::string& why) {
            search::SearchConfig cfg;
            cfg.restarts = 20;
            cfg.seed = o.seed;
            const auto r = search::local_min(g, cfg);
            if (!r.certified_at_best) {
                why = name + ": no certificate at the search minimum";
                return false;
            }
            return at_least(r.certified_at_best->actual_ing, r.certified_at_best->certified, why,
                            "Ing below certified at the search minimum");
        });
    }

    rec.check("fano_hand_trace", [&](std::string& why) {
        const auto& g = pairs[0].second;
        const auto r = bounds::certified_main(search::extension(g, search::copy_kernels(g)), search::kQuadRoles, g);
        const double expected = -std::log2(7.0 / 3.0) - 1.0;
        if (std::abs(r.certified - expected) <= kTol && std::abs(r.actual_ing) <= kTol) return true;
        why = "certified " + fmt(r.certified) + ", actual " + fmt(r.actual_ing);
        return false;
    });

    const std::pair<std::string, graphs::BiregularBipartiteGraph> families[] = {
        {"projective(2)", graphs::build_projective_plane(2)},
        {"projective(3)", graphs::build_projective_plane(3)},
        {"poly(2,1)", graphs::build_polynomial_graph(2, 1)},
        {"poly(3,1)", graphs::build_polynomial_graph(3, 1)},
        {"grassmann(2,4,1,2)", graphs::build_grassmann_graph(2, 4, 1, 2)},
        {"grassmann(3,4,1,2)", graphs::build_grassmann_graph(3, 4, 1, 2)},
    };
    for (const auto& [name, g] : families) {
        const auto sv = spectral::singular_values(g);
        const auto pair = entropy::uniform_pair(g);
        for (std::size_t i = 0, n = scaled(o, 1000); i < n; ++i) {
            const auto alphabet = static_cast<std::size_t>(rng.between(1, 4));
            std::vector<std::size_t> f(g.edge_count());
            for (auto& v : f) v = rng.below(alphabet);
            rec.check("triple_alternative", [&](std::string&) {
                std::vector<std::string> labels;
                for (std::size_t s = 0; s < alphabet; ++s) labels.push_back(std::to_string(s));
                const auto k = entropy::Kernel::deterministic(pair, labels, [&](const entropy::Tuple& t) {
                    return f[*g.edge_index(t[0], t[1])];
                });
                const auto triple = entropy::extend(pair, k);
                const double delta = entropy::uniformity_report(triple).delta().get_d();
                bounds::triple_alternative(triple, VarSet{0}, VarSet{1}, VarSet{2}, g, sv.lambda2, delta);
                return true;
            });
        }
    }
    return rec.take();
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "shannon") return shannon_suite(options);
    if (name == "mixing") return mixing_suite(options);
    if (name == "splitter") return splitter_suite(options);
    if (name == "bounds") return bounds_suite(options);
    fail(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace ingleton::verify
