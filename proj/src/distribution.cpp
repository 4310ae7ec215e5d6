#include "ingleton/distribution.hpp"

#include <algorithm>
#include <bit>

#include "ingleton/error.hpp"

namespace ingleton::entropy {

VarSet::VarSet(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) {
        if (i >= 32) fail(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(i) + " exceeds 31");
        bits_ |= std::uint32_t{1} << i;
    }
}

VarSet VarSet::of(std::span<const std::size_t> indices) {
    std::uint32_t bits = 0;
    for (auto i : indices) {
        if (i >= 32) fail(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(i) + " exceeds 31");
        bits |= std::uint32_t{1} << i;
    }
    return VarSet(bits);
}

std::size_t VarSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::size_t VarSet::max_index() const noexcept { return 31 - static_cast<std::size_t>(std::countl_zero(bits_)); }

std::vector<std::size_t> VarSet::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string VarSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto i : indices()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

JointDistribution::JointDistribution(std::vector<std::vector<std::string>> alphabets, std::vector<Atom> atoms)
    : alphabets_(std::move(alphabets)), atoms_(std::move(atoms)) {
    if (alphabets_.empty()) fail(ErrorKind::InvalidDistribution, "arity must be at least 1");
    if (alphabets_.size() > 32) fail(ErrorKind::ArityGuard, "at most 32 variables");
    if (atoms_.empty()) fail(ErrorKind::InvalidDistribution, "distribution has no atoms");
    mpq_class total = 0;
    for (auto& a : atoms_) {
        if (a.tuple.size() != alphabets_.size()) fail(ErrorKind::InvalidDistribution, "tuple length differs from arity");
        for (std::size_t v = 0; v < a.tuple.size(); ++v) {
            if (a.tuple[v] >= alphabets_[v].size()) {
                fail(ErrorKind::InvalidDistribution, "symbol " + std::to_string(a.tuple[v]) + " outside alphabet of variable " +
                                                         std::to_string(v));
            }
        }
        a.mass.canonicalize();
        if (sgn(a.mass) <= 0) fail(ErrorKind::InvalidDistribution, "atom masses must be positive");
        total += a.mass;
    }
    if (total != 1) fail(ErrorKind::InvalidDistribution, "masses sum to " + total.get_str() + ", not 1");
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return a.tuple < b.tuple; });
    for (std::size_t i = 1; i < atoms_.size(); ++i) {
        if (atoms_[i - 1].tuple == atoms_[i].tuple) fail(ErrorKind::InvalidDistribution, "repeated atom tuple");
    }

    denominator_ = 1;
    for (const auto& a : atoms_) mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), a.mass.get_den_mpz_t());
    numerators_.reserve(atoms_.size());
    for (const auto& a : atoms_) numerators_.push_back(a.mass.get_num() * (denominator_ / a.mass.get_den()));
}

JointDistribution JointDistribution::with_sizes(std::span<const std::size_t> alphabet_sizes, std::vector<Atom> atoms) {
    std::vector<std::vector<std::string>> alphabets;
    for (auto n : alphabet_sizes) {
        std::vector<std::string> a;
        a.reserve(n);
        for (std::size_t i = 0; i < n; ++i) a.push_back(std::to_string(i));
        alphabets.push_back(std::move(a));
    }
    return JointDistribution(std::move(alphabets), std::move(atoms));
}

mpq_class JointDistribution::mass_of(const Tuple& t) const {
    const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), t,
                                     [](const Atom& a, const Tuple& key) { return a.tuple < key; });
    if (it == atoms_.end() || it->tuple != t) return 0;
    return it->mass;
}

bool operator==(const JointDistribution& a, const JointDistribution& b) {
    if (a.alphabets_ != b.alphabets_ || a.atoms_.size() != b.atoms_.size()) return false;
    for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
        if (a.atoms_[i].tuple != b.atoms_[i].tuple || a.atoms_[i].mass != b.atoms_[i].mass) return false;
    }
    return true;
}

Tuple project(const Tuple& t, VarSet vars) {
    Tuple out;
    out.reserve(vars.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (vars.contains(i)) out.push_back(t[i]);
    }
    return out;
}

namespace {

void check_vars(const JointDistribution& dist, VarSet vars) {
    if (vars.empty()) fail(ErrorKind::EmptyIndexSet, "variable set is empty");
    if (vars.max_index() >= dist.arity()) {
        fail(ErrorKind::IndexOutOfRange, "variable " + std::to_string(vars.max_index()) + " beyond arity " +
                                             std::to_string(dist.arity()));
    }
}

}  // namespace

std::map<Tuple, mpz_class> marginal_numerators(const JointDistribution& dist, VarSet vars) {
    std::map<Tuple, mpz_class> out;
    const auto& atoms = dist.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) out[project(atoms[i].tuple, vars)] += dist.numerators()[i];
    return out;
}

JointDistribution uniform_pair(const graphs::BiregularBipartiteGraph& graph) {
    std::vector<std::vector<std::string>> alphabets(2);
    for (std::size_t x = 0; x < graph.x_size(); ++x) {
        alphabets[0].push_back(graph.has_labels() ? graph.x_labels()[x] : std::to_string(x));
    }
    for (std::size_t y = 0; y < graph.y_size(); ++y) {
        alphabets[1].push_back(graph.has_labels() ? graph.y_labels()[y] : std::to_string(y));
    }
    const mpq_class mass(1, static_cast<unsigned long>(graph.edge_count()));
    std::vector<Atom> atoms;
    atoms.reserve(graph.edge_count());
    for (const auto& [x, y] : graph.edges()) atoms.push_back({{x, y}, mass});
    return JointDistribution(std::move(alphabets), std::move(atoms));
}

JointDistribution extend(const JointDistribution& dist, const Kernel& kernel) {
    if (kernel.target_alphabet.empty()) fail(ErrorKind::RowNotNormalized, "kernel has an empty target alphabet");
    std::vector<Atom> atoms;
    for (const auto& a : dist.atoms()) {
        const auto row = kernel.rows.find(a.tuple);
        if (row == kernel.rows.end()) fail(ErrorKind::MissingKernelRow, "no kernel row for an atom of the source");
        if (row->second.size() != kernel.target_alphabet.size()) {
            fail(ErrorKind::RowNotNormalized, "kernel row length differs from the target alphabet");
        }
        std::vector<mpq_class> entries = row->second;
        mpq_class sum = 0;
        for (auto& p : entries) {
            p.canonicalize();
            if (sgn(p) < 0) fail(ErrorKind::RowNotNormalized, "negative kernel entry");
            sum += p;
        }
        if (sum != 1) fail(ErrorKind::RowNotNormalized, "kernel row sums to " + sum.get_str());
        for (std::size_t s = 0; s < entries.size(); ++s) {
            if (sgn(entries[s]) == 0) continue;
            Tuple t = a.tuple;
            t.push_back(static_cast<Symbol>(s));
            atoms.push_back({std::move(t), a.mass * entries[s]});
        }
    }
    auto alphabets = dist.alphabets();
    alphabets.push_back(kernel.target_alphabet);
    return JointDistribution(std::move(alphabets), std::move(atoms));
}

JointDistribution marginal(const JointDistribution& dist, VarSet vars) {
    check_vars(dist, vars);
    std::vector<std::vector<std::string>> alphabets;
    for (auto i : vars.indices()) alphabets.push_back(dist.alphabets()[i]);
    std::vector<Atom> atoms;
    for (auto& [t, num] : marginal_numerators(dist, vars)) atoms.push_back({t, mpq_class(num, dist.denominator())});
    return JointDistribution(std::move(alphabets), std::move(atoms));
}

JointDistribution condition(const JointDistribution& dist, VarSet vars, const Tuple& values) {
    check_vars(dist, vars);
    if (values.size() != vars.size()) fail(ErrorKind::InvalidArgument, "conditioning atom has the wrong length");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < dist.atoms().size(); ++i) {
        if (project(dist.atoms()[i].tuple, vars) == values) keep.push_back(i);
    }
    if (keep.empty()) fail(ErrorKind::ZeroProbabilityAtom, "conditioning atom has zero probability");
    return restrict_to_atoms(dist, keep);
}

JointDistribution restrict_to_atoms(const JointDistribution& dist, std::span<const std::size_t> atom_indices) {
    if (atom_indices.empty()) fail(ErrorKind::EmptyIndexSet, "no atoms selected");
    mpz_class total = 0;
    for (auto i : atom_indices) total += dist.numerators().at(i);
    std::vector<Atom> atoms;
    atoms.reserve(atom_indices.size());
    for (auto i : atom_indices) atoms.push_back({dist.atoms()[i].tuple, mpq_class(dist.numerators()[i], total)});
    return JointDistribution(dist.alphabets(), std::move(atoms));
}

JointDistribution group_variables(const JointDistribution& dist, std::span<const VarSet> groups) {
    VarSet seen;
    for (auto g : groups) {
        check_vars(dist, g);
        if (!seen.disjoint(g)) fail(ErrorKind::OverlappingSets, "variable groups overlap");
        seen = seen | g;
    }
    std::vector<std::map<Tuple, Symbol>> codes(groups.size());
    for (const auto& a : dist.atoms()) {
        for (std::size_t g = 0; g < groups.size(); ++g) codes[g].emplace(project(a.tuple, groups[g]), 0);
    }
    std::vector<std::vector<std::string>> alphabets(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        Symbol next = 0;
        const auto vars = groups[g].indices();
        for (auto& [t, code] : codes[g]) {
            code = next++;
            std::string label;
            for (std::size_t j = 0; j < t.size(); ++j) {
                if (j) label += '|';
                label += dist.alphabets()[vars[j]][t[j]];
            }
            alphabets[g].push_back(std::move(label));
        }
    }
    std::map<Tuple, mpq_class> merged;
    for (const auto& a : dist.atoms()) {
        Tuple t;
        for (std::size_t g = 0; g < groups.size(); ++g) t.push_back(codes[g].at(project(a.tuple, groups[g])));
        merged[t] += a.mass;
    }
    std::vector<Atom> atoms;
    for (auto& [t, m] : merged) atoms.push_back({t, m});
    return JointDistribution(std::move(alphabets), std::move(atoms));
}

std::string rational_to_string(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) fail(ErrorKind::ParseError, "not a rational: '" + s + "'");
    if (sgn(q.get_den()) == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace ingleton::entropy
