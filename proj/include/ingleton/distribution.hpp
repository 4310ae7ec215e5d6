#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ingleton/graphs.hpp"

namespace ingleton::entropy {

using Symbol = std::uint32_t;
using Tuple = std::vector<Symbol>;

/// A set of variable positions (at most 32 variables).
class VarSet {
public:
    constexpr VarSet() = default;
    constexpr explicit VarSet(std::uint32_t bits) : bits_(bits) {}
    VarSet(std::initializer_list<std::size_t> indices);

    static VarSet of(std::span<const std::size_t> indices);
    static constexpr VarSet single(std::size_t i) { return VarSet(std::uint32_t{1} << i); }
    /// {0, ..., n-1}
    static constexpr VarSet all(std::size_t n) {
        return VarSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    }

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1u; }
    constexpr bool disjoint(VarSet o) const noexcept { return (bits_ & o.bits_) == 0; }
    constexpr bool subset_of(VarSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    std::size_t size() const noexcept;
    std::size_t max_index() const noexcept;  // requires !empty()
    std::vector<std::size_t> indices() const;

    constexpr VarSet operator|(VarSet o) const noexcept { return VarSet(bits_ | o.bits_); }
    constexpr VarSet operator&(VarSet o) const noexcept { return VarSet(bits_ & o.bits_); }
    constexpr VarSet operator-(VarSet o) const noexcept { return VarSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VarSet&) const = default;

    std::string to_string() const;

private:
    std::uint32_t bits_ = 0;
};

struct Atom {
    Tuple tuple;
    mpq_class mass;
};

/// Finite joint distribution of `arity` variables with exact rational
/// masses. Atoms are kept sorted by tuple; only positive masses are stored.
class JointDistribution {
public:
    /// Validates: arity >= 1, tuples of the right length with symbols inside
    /// the alphabets, distinct tuples, positive masses summing exactly to 1.
    JointDistribution(std::vector<std::vector<std::string>> alphabets, std::vector<Atom> atoms);

    /// Alphabets of the given sizes labelled "0", "1", ...
    static JointDistribution with_sizes(std::span<const std::size_t> alphabet_sizes, std::vector<Atom> atoms);

    std::size_t arity() const noexcept { return alphabets_.size(); }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const std::vector<std::vector<std::string>>& alphabets() const noexcept { return alphabets_; }
    std::size_t alphabet_size(std::size_t var) const { return alphabets_.at(var).size(); }

    /// Masses over the common denominator: mass_i = numerators()[i] / denominator().
    const std::vector<mpz_class>& numerators() const noexcept { return numerators_; }
    const mpz_class& denominator() const noexcept { return denominator_; }

    /// Mass of an exact tuple (zero if not an atom).
    mpq_class mass_of(const Tuple& t) const;

    friend bool operator==(const JointDistribution& a, const JointDistribution& b);

private:
    std::vector<std::vector<std::string>> alphabets_;
    std::vector<Atom> atoms_;
    std::vector<mpz_class> numerators_;
    mpz_class denominator_;
};

/// Conditional distribution of a new variable given full atoms of a source
/// distribution.
struct Kernel {
    std::vector<std::string> target_alphabet;
    std::map<Tuple, std::vector<mpq_class>> rows;

    /// Deterministic kernel: the new symbol is f(atom).
    template <class F>
    static Kernel deterministic(const JointDistribution& source, std::vector<std::string> alphabet, F&& f) {
        Kernel k;
        k.target_alphabet = std::move(alphabet);
        for (const auto& a : source.atoms()) {
            std::vector<mpq_class> row(k.target_alphabet.size(), mpq_class(0));
            row.at(f(a.tuple)) = 1;
            k.rows.emplace(a.tuple, std::move(row));
        }
        return k;
    }
};

/// Mass 1/|E| on every edge of the graph; variable 0 is the left vertex,
/// variable 1 the right vertex, symbol ids are vertex indices.
JointDistribution uniform_pair(const graphs::BiregularBipartiteGraph& graph);

/// Appends a variable drawn from `kernel` given the current atom.
/// Errors: MissingKernelRow, RowNotNormalized.
JointDistribution extend(const JointDistribution& dist, const Kernel& kernel);

/// Marginal over `vars`, variables kept in increasing index order.
/// Errors: EmptyIndexSet, IndexOutOfRange.
JointDistribution marginal(const JointDistribution& dist, VarSet vars);

/// Conditions on X_J = values (one value per index of J, increasing order).
/// The result keeps every variable; those in J become constant.
/// Errors: ZeroProbabilityAtom.
JointDistribution condition(const JointDistribution& dist, VarSet vars, const Tuple& values);

/// Renormalized restriction to a subset of atom positions (indices into
/// `dist.atoms()`). Errors: EmptyIndexSet.
JointDistribution restrict_to_atoms(const JointDistribution& dist, std::span<const std::size_t> atom_indices);

/// Collapses each group of variables into one variable whose symbols are the
/// observed sub-tuples (numbered in lexicographic order). Groups must be
/// nonempty and pairwise disjoint.
JointDistribution group_variables(const JointDistribution& dist, std::span<const VarSet> groups);

/// Projection of a tuple onto the positions in `vars`.
Tuple project(const Tuple& t, VarSet vars);

/// Marginal masses of X_vars as (sub-tuple -> numerator over dist.denominator()).
std::map<Tuple, mpz_class> marginal_numerators(const JointDistribution& dist, VarSet vars);

/// "num/den", gcd-reduced with positive denominator.
std::string rational_to_string(const mpq_class& q);
/// Parses "num/den" or an integer. Errors: ParseError.
mpq_class rational_from_string(const std::string& s);

}  // namespace ingleton::entropy
