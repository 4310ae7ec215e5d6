#include "ingleton/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ingleton/error.hpp"

namespace ingleton::io {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

void write(std::ostringstream& out, const Json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out << ",\n";
                first = false;
                out << pad << Json(it.key()).dump() << ": ";
                write(out, it.value(), depth + 1);
            }
            out << "\n" << close << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out << "[]";
                return;
            }
            // scalar arrays stay on one line
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
            if (flat) {
                out << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out << ", ";
                    write(out, j[i], depth + 1);
                }
                out << "]";
                return;
            }
            out << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out << ",\n";
                out << pad;
                write(out, j[i], depth + 1);
            }
            out << "\n" << close << "]";
            return;
        }
        case Json::value_t::number_float:
            out << format_double(j.get<double>());
            return;
        default:
            out << j.dump();
    }
}

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::ParseError, what); }

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        malformed(std::string("field '") + key + "': " + e.what());
    }
}

std::string rational(const mpq_class& q) { return entropy::rational_to_string(q); }

mpq_class rational_from(const Json& j) {
    if (j.is_string()) return entropy::rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    malformed("expected a rational \"num/den\"");
}

const char* family_name(graphs::FamilyTag::Kind k) {
    switch (k) {
        case graphs::FamilyTag::Kind::ProjectivePlane: return "projective-plane";
        case graphs::FamilyTag::Kind::Polynomial: return "poly";
        case graphs::FamilyTag::Kind::Grassmann: return "grassmann";
    }
    return "?";
}

Json rows_to_json(const std::vector<std::vector<mpq_class>>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rational(v));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::vector<mpq_class>> rows_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) malformed(std::string("missing array '") + key + "'");
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& r : j.at(key)) {
        if (!r.is_array()) malformed("kernel rows must be arrays");
        auto& row = rows.emplace_back();
        for (const auto& v : r) row.push_back(rational_from(v));
    }
    return rows;
}

Json indices(const std::vector<std::size_t>& v) { return Json(v); }

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json part_to_json(const bounds::PartCertificate& p) {
    return {{"weight", rational(p.weight)},
            {"actual_ing", p.actual_ing},
            {"certified", p.certified},
            {"delta_a", p.delta_a},
            {"delta_b", p.delta_b},
            {"branch_a", to_json(p.alt_a)},
            {"branch_b", to_json(p.alt_b)},
            {"info_bound", optional_number(p.info_bound)},
            {"metric_bound", optional_number(p.metric_bound)},
            {"trivial_bound", p.trivial_bound}};
}

}  // namespace

std::string dump(const Json& j) {
    std::ostringstream out;
    write(out, j, 0);
    out << "\n";
    return out.str();
}

Json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

void write_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << dump(j);
}

Json to_json(const graphs::BiregularBipartiteGraph& g) {
    Json edges = Json::array();
    for (const auto& [x, y] : g.edges()) edges.push_back({x, y});
    Json j{{"x_size", g.x_size()}, {"y_size", g.y_size()}, {"edges", std::move(edges)}};
    if (g.has_labels()) j["labels"] = {{"x", g.x_labels()}, {"y", g.y_labels()}};
    if (const auto& f = g.family()) {
        Json fam{{"kind", family_name(f->kind)}, {"q", f->q}};
        if (f->kind != graphs::FamilyTag::Kind::ProjectivePlane) fam["k"] = f->k;
        if (f->kind == graphs::FamilyTag::Kind::Grassmann) {
            fam["l"] = f->l;
            fam["n"] = f->n;
        }
        j["family"] = std::move(fam);
    }
    return j;
}

graphs::BiregularBipartiteGraph graph_from_json(const Json& j) {
    const auto x_size = field<std::size_t>(j, "x_size");
    const auto y_size = field<std::size_t>(j, "y_size");
    if (!j.contains("edges") || !j.at("edges").is_array()) malformed("missing array 'edges'");
    std::vector<graphs::Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            malformed("edges must be pairs of nonnegative integers");
        }
        edges.emplace_back(e[0].get<graphs::Vertex>(), e[1].get<graphs::Vertex>());
    }
    auto g = graphs::BiregularBipartiteGraph::from_edges(x_size, y_size, std::move(edges));
    if (j.contains("labels")) {
        const auto& l = j.at("labels");
        g.set_labels(field<std::vector<std::string>>(l, "x"), field<std::vector<std::string>>(l, "y"));
    }
    if (j.contains("family")) {
        const auto& f = j.at("family");
        const auto kind = field<std::string>(f, "kind");
        graphs::FamilyTag tag{};
        if (kind == "projective-plane") {
            tag.kind = graphs::FamilyTag::Kind::ProjectivePlane;
        } else if (kind == "poly") {
            tag.kind = graphs::FamilyTag::Kind::Polynomial;
        } else if (kind == "grassmann") {
            tag.kind = graphs::FamilyTag::Kind::Grassmann;
        } else {
            malformed("unknown family '" + kind + "'");
        }
        tag.q = field<std::uint32_t>(f, "q");
        if (f.contains("k")) tag.k = field<std::uint32_t>(f, "k");
        if (f.contains("l")) tag.l = field<std::uint32_t>(f, "l");
        if (f.contains("n")) tag.n = field<std::uint32_t>(f, "n");
        g.set_family(tag);
    }
    return g;
}

Json to_json(const entropy::JointDistribution& d) {
    Json atoms = Json::array();
    for (const auto& a : d.atoms()) atoms.push_back({{"t", a.tuple}, {"p", rational(a.mass)}});
    return {{"arity", d.arity()}, {"alphabets", d.alphabets()}, {"atoms", std::move(atoms)}};
}

entropy::JointDistribution distribution_from_json(const Json& j) {
    auto alphabets = field<std::vector<std::vector<std::string>>>(j, "alphabets");
    if (j.contains("arity") && field<std::size_t>(j, "arity") != alphabets.size()) {
        malformed("arity does not match the number of alphabets");
    }
    if (!j.contains("atoms") || !j.at("atoms").is_array()) malformed("missing array 'atoms'");
    std::vector<entropy::Atom> atoms;
    for (const auto& a : j.at("atoms")) {
        atoms.push_back({field<entropy::Tuple>(a, "t"), rational_from(a.contains("p") ? a.at("p") : Json())});
    }
    return entropy::JointDistribution(std::move(alphabets), std::move(atoms));
}

Json to_json(const search::KernelPair& k) {
    return {{"alphabet_a", k.alphabet_a}, {"alphabet_b", k.alphabet_b}, {"a", rows_to_json(k.a)},
            {"b", rows_to_json(k.b)}};
}

search::KernelPair kernels_from_json(const Json& j) {
    return {field<std::size_t>(j, "alphabet_a"), field<std::size_t>(j, "alphabet_b"), rows_from_json(j, "a"),
            rows_from_json(j, "b")};
}

Json to_json(const spectral::SpectralSummary& s) {
    Json j{{"lambda1", s.lambda1},
           {"lambda2", s.lambda2},
           {"d1", s.d1},
           {"d2", s.d2},
           {"singular_values", s.singular_values},
           {"disconnected_suspect", s.disconnected_suspect}};
    if (s.closed_form) j["closed_form"] = {{"lambda1", s.closed_form->first}, {"lambda2", s.closed_form->second}};
    return j;
}

Json to_json(const spectral::SpectralSlackReport& a) {
    return {{"epsilon", a.epsilon}, {"slack_strong", a.slack_strong}, {"slack_weak", a.slack_weak}};
}

Json to_json(const splitter::SplitResult& s) {
    Json parts = Json::array();
    for (const auto& p : s.parts) parts.push_back(indices(p));
    Json weights = Json::array();
    for (const auto& w : s.part_weights) weights.push_back(rational(w));
    Json deltas = Json::array();
    for (const auto& d : s.achieved_delta) deltas.push_back(d.get_d());
    return {{"parts", std::move(parts)},
            {"tail", indices(s.tail)},
            {"weights", std::move(weights)},
            {"tail_weight", rational(s.tail_weight)},
            {"achieved_delta", std::move(deltas)},
            {"k0", s.k0},
            {"level_indices", indices(s.level_indices)},
            {"part_levels", indices(s.part_levels)},
            {"source_entropy", s.source_entropy},
            {"partition_entropy", s.partition_entropy}};
}

Json to_json(const entropy::UniformityReport& u) {
    return {{"delta_uniform", rational(u.delta_uniform)},
            {"delta_regular", rational(u.delta_regular)},
            {"delta", u.delta().get_d()}};
}

Json to_json(const bounds::TripleAlternative& t) {
    return {{"branch", bounds::to_string(t.branch)},
            {"info", t.info},
            {"metric", t.metric},
            {"conditional_information", t.conditional_information},
            {"info_threshold", t.info_threshold},
            {"conditional_ell", t.conditional_ell},
            {"metric_threshold", t.metric_threshold}};
}

Json to_json(const bounds::CertifiedBoundReport& r) {
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(part_to_json(p));
    Json j{{"actual_ing", r.actual_ing},
           {"certified", r.certified},
           {"residual", r.residual},
           {"mutual_information", r.mutual_information},
           {"ell", r.ell},
           {"lambda2", r.lambda2},
           {"parts", std::move(parts)},
           {"tail_weight", rational(r.tail_weight)},
           {"tail_contribution", r.tail_contribution},
           {"partition_entropy", r.partition_entropy},
           {"correction", r.correction},
           {"conditional_ing", r.conditional_ing},
           {"floor", r.floor},
           {"floor_holds", r.floor_holds}};
    if (r.parts.size() == 1) {
        j["branches"] = {{"a", bounds::to_string(r.parts[0].alt_a.branch)},
                         {"b", bounds::to_string(r.parts[0].alt_b.branch)}};
    } else {
        Json br = Json::array();
        for (const auto& p : r.parts) {
            br.push_back({{"a", bounds::to_string(p.alt_a.branch)}, {"b", bounds::to_string(p.alt_b.branch)}});
        }
        j["branches"] = std::move(br);
    }
    return j;
}

Json to_json(const search::SearchReport& r) {
    Json j{{"best_ing", r.best_ing},
           {"best_kernels", to_json(r.best_kernels)},
           {"trace", r.trace},
           {"histories", r.histories},
           {"evaluations", r.evaluations},
           {"mutual_information", r.mutual_information}};
    j["certified_at_best"] = r.certified_at_best ? to_json(*r.certified_at_best) : Json(nullptr);
    return j;
}

}  // namespace ingleton::io
