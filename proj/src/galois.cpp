#include "ingleton/galois.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ingleton/error.hpp"

namespace ingleton::galois {

namespace {

constexpr std::uint64_t kAmbientLimit = 1u << 20;

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) fail(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not prime");
}

void PrimeField::check(Element a) const {
    if (a >= p_) {
        fail(ErrorKind::ElementOutOfRange,
             std::to_string(a) + " is not a residue modulo " + std::to_string(p_));
    }
}

Element PrimeField::add(Element a, Element b) const {
    check(a);
    check(b);
    return static_cast<Element>((std::uint64_t{a} + b) % p_);
}

Element PrimeField::sub(Element a, Element b) const {
    check(a);
    check(b);
    return static_cast<Element>((std::uint64_t{a} + p_ - b) % p_);
}

Element PrimeField::mul(Element a, Element b) const {
    check(a);
    check(b);
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
}

Element PrimeField::neg(Element a) const {
    check(a);
    return a == 0 ? 0 : p_ - a;
}

Element PrimeField::inv(Element a) const {
    check(a);
    if (a == 0) fail(ErrorKind::InverseOfZero, "0 has no inverse modulo " + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
}

Element PrimeField::dot(std::span<const Element> a, std::span<const Element> b) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + std::uint64_t{a[i]} * b[i]) % p_;
    return static_cast<Element>(acc);
}

Element field_arith(std::uint32_t p, FieldOp op, Element a, Element b) {
    const PrimeField field(p);
    switch (op) {
        case FieldOp::Add: return field.add(a, b);
        case FieldOp::Mul: return field.mul(a, b);
        case FieldOp::Inv: return field.inv(a);
        case FieldOp::Neg: return field.neg(a);
    }
    fail(ErrorKind::InvalidArgument, "unknown field operation");
}

std::vector<Vector> row_reduce(const PrimeField& field, std::vector<Vector> rows) {
    const std::uint64_t p = field.modulus();
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                  [c](const Vector& r) { return r[c] != 0; });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
        Vector& prow = rows[rank];
        const std::uint64_t scale = field.inv(prow[c]);
        for (auto& e : prow) e = static_cast<Element>(e * scale % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::uint64_t f = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) {
                rows[r][j] = static_cast<Element>((rows[r][j] + (p - f) * prow[j]) % p);
            }
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

Subspace::Subspace(const PrimeField& field, std::size_t ambient_dim, std::vector<Vector> rows)
    : n_(ambient_dim) {
    for (const auto& r : rows) {
        if (r.size() != n_) fail(ErrorKind::DimensionOutOfRange, "row length differs from ambient dimension");
        for (auto e : r) {
            if (e >= field.modulus()) fail(ErrorKind::ElementOutOfRange, "coordinate out of field range");
        }
    }
    basis_ = row_reduce(field, std::move(rows));
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> rref, bool)
    : n_(ambient_dim), basis_(std::move(rref)) {}

bool Subspace::contains(const PrimeField& field, std::span<const Element> v) const {
    const std::uint64_t p = field.modulus();
    Vector w(v.begin(), v.end());
    // eliminate against each pivot; v is in the span iff the residue vanishes
    for (const auto& row : basis_) {
        const auto pc = static_cast<std::size_t>(
            std::find_if(row.begin(), row.end(), [](Element e) { return e != 0; }) - row.begin());
        const std::uint64_t f = w[pc];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) w[j] = static_cast<Element>((w[j] + (p - f) * row[j]) % p);
    }
    return std::all_of(w.begin(), w.end(), [](Element e) { return e == 0; });
}

bool Subspace::contains(const PrimeField& field, const Subspace& other) const {
    if (other.n_ != n_ || other.dim() > dim()) return false;
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vector& r) { return contains(field, r); });
}

std::string Subspace::label() const {
    std::string out = "[";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) out += ',';
            out += std::to_string(basis_[i][j]);
        }
    }
    return out + "]";
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t p, std::size_t n, std::size_t k) {
    const PrimeField field(p);
    if (k > n) fail(ErrorKind::DimensionOutOfRange, "subspace dimension exceeds ambient dimension");
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        size *= p;
        if (size > kAmbientLimit) fail(ErrorKind::AmbientTooLarge, "p^n exceeds 2^20");
    }

    std::vector<Subspace> out;
    std::vector<std::size_t> pivots(k);
    std::iota(pivots.begin(), pivots.end(), std::size_t{0});
    while (true) {
        // free cells: row i, column j > pivot_i, j not a pivot column
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = pivots[i] + 1; j < n; ++j) {
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_cells.emplace_back(i, j);
            }
        }
        std::vector<Element> digits(free_cells.size(), 0);
        while (true) {
            std::vector<Vector> rows(k, Vector(n, 0));
            for (std::size_t i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
            for (std::size_t f = 0; f < free_cells.size(); ++f) rows[free_cells[f].first][free_cells[f].second] = digits[f];
            out.push_back(Subspace(n, std::move(rows), true));

            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
        // next pivot combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
    if (k > n) fail(ErrorKind::DimensionOutOfRange, "k must not exceed n");
    if (q < 2) fail(ErrorKind::InvalidArgument, "q must be at least 2");
    const mpz_class base(std::to_string(q));
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        mpz_class qn, qk, qi;
        mpz_pow_ui(qn.get_mpz_t(), base.get_mpz_t(), n);
        mpz_pow_ui(qk.get_mpz_t(), base.get_mpz_t(), k);
        mpz_pow_ui(qi.get_mpz_t(), base.get_mpz_t(), i);
        num *= qn - qi;
        den *= qk - qi;
    }
    return num / den;
}

}  // namespace ingleton::galois
