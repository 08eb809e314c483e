#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lieball {

/// Exponent multi-index of a monomial z_1^a_1 ... z_n^a_n.
using Exponent = std::vector<int>;

/// Graded lexicographic order: lower total degree first; within a degree,
/// lexicographically larger exponents first (z_1^d is the first monomial of degree d).
struct GrlexOrder {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Monomials of Pol^degree(C^n) in GrlexOrder.
std::vector<Exponent> monomial_basis(int nvars, int degree);

/// Polynomial in n commuting indeterminates with exact rational coefficients.
/// Zero coefficients are never stored.
class SparsePolynomial {
public:
    using Terms = std::map<Exponent, mpq_class, GrlexOrder>;

    explicit SparsePolynomial(int nvars);

    static SparsePolynomial constant(int nvars, const mpq_class& c);
    static SparsePolynomial variable(int nvars, int index);  // z_{index+1}
    static SparsePolynomial monomial(int nvars, Exponent exp, const mpq_class& c = 1);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    mpq_class coefficient(const Exponent& exp) const;

    /// Adds c * z^exp, dropping the term if the coefficient cancels.
    void add_term(const Exponent& exp, const mpq_class& c);

    /// Total degree of the highest term; -1 for the zero polynomial.
    int degree() const;
    /// The common degree of all terms when they agree (0 for the zero polynomial).
    std::optional<int> homogeneous_degree() const;

    /// d/dz_{index+1}
    SparsePolynomial derivative(int index) const;
    /// z_{index+1} * f
    SparsePolynomial times_variable(int index) const;

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial& operator*=(const mpq_class& c);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const mpq_class& c, SparsePolynomial p) { return p *= c; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void require_same_ring(const SparsePolynomial& o) const;

    int nvars_;
    Terms terms_;
};

/// {"nvars": n, "terms": [{"exp": [...], "num": ..., "den": ...}]}, terms in GrlexOrder.
/// num/den are JSON integers when they fit in 64 bits and decimal strings otherwise.
std::string polynomial_to_json(const SparsePolynomial& p);
/// Throws std::invalid_argument on malformed input.
SparsePolynomial polynomial_from_json(std::string_view json);

}  // namespace lieball
