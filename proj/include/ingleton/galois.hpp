#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ingleton::galois {

using Element = std::uint32_t;
using Vector = std::vector<Element>;

bool is_prime(std::uint64_t n);

/// Integers modulo a prime p. Elements are canonical residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element mul(Element a, Element b) const;
    Element neg(Element a) const;
    Element inv(Element a) const;

    /// Dot product of two equal-length vectors.
    Element dot(std::span<const Element> a, std::span<const Element> b) const;

private:
    void check(Element a) const;

    std::uint32_t p_;
};

enum class FieldOp { Add, Mul, Inv, Neg };

/// One-shot arithmetic: validates the modulus and operands on every call.
Element field_arith(std::uint32_t p, FieldOp op, Element a, Element b = 0);

/// A linear subspace of F_p^n stored by its reduced row-echelon basis.
/// The basis is unique per subspace, so defaulted comparison is subspace
/// equality and a total order.
class Subspace {
public:
    /// Row-reduces `rows` (any spanning set) into canonical form.
    Subspace(const PrimeField& field, std::size_t ambient_dim, std::vector<Vector> rows);

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }

    bool contains(const PrimeField& field, std::span<const Element> v) const;
    /// True when `other` is a subspace of `*this`.
    bool contains(const PrimeField& field, const Subspace& other) const;

    std::string label() const;

    auto operator<=>(const Subspace&) const = default;

private:
    Subspace(std::size_t ambient_dim, std::vector<Vector> rref, bool);
    friend std::vector<Subspace> enumerate_subspaces(std::uint32_t, std::size_t, std::size_t);

    std::size_t n_ = 0;
    std::vector<Vector> basis_;
};

/// Reduced row-echelon form of `rows` over `field`; zero rows are dropped.
std::vector<Vector> row_reduce(const PrimeField& field, std::vector<Vector> rows);

/// Every k-dimensional subspace of F_p^n in lexicographic order of the
/// echelon matrices. Requires p^n <= 2^20.
std::vector<Subspace> enumerate_subspaces(std::uint32_t p, std::size_t n, std::size_t k);

/// Number of k-dimensional subspaces of an n-dimensional space over a
/// q-element field, by the exact product formula.
mpz_class gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

}  // namespace ingleton::galois
