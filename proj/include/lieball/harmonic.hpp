#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lieball/linalg.hpp"
#include "lieball/polynomial.hpp"
#include "lieball/table.hpp"

// The holomorphic Laplacian sum_i d^2/dz_i^2 on polynomials in n = 2m variables
// and the SO(2m)-structure of its kernel. The z_i are formal commuting
// indeterminates.

namespace lieball::harmonic {

SparsePolynomial laplacian(const SparsePolynomial& f);

/// Laplacian applied l times; l = 0 is the identity. Throws for l < 0.
SparsePolynomial laplacian_power(const SparsePolynomial& f, int l);

/// Matrix of a linear map between spaces of polynomials with monomial bases.
struct LinearMapMatrix {
    std::vector<Exponent> source_basis;  // columns
    std::vector<Exponent> target_basis;  // rows
    SparseRationalMatrix matrix;
};

/// Laplacian : Pol^degree(C^n) -> Pol^{degree-2}(C^n) in grlex monomial bases.
/// For degree < 2 the target space is zero.
LinearMapMatrix laplacian_matrix(int n, int degree);

/// dim ker(Laplacian on Pol^l(C^n)) by exact rank computation. Requires n >= 2, l >= 0.
std::size_t harmonic_dimension(int n, int l);

/// A basis of H^l(C^n) = ker(Laplacian) cap Pol^l, from the exact kernel of laplacian_matrix.
std::vector<SparsePolynomial> harmonic_basis(int n, int l);

/// r^2 = z_1^2 + ... + z_n^2
SparsePolynomial radius_squared(int n);

enum class GeneratorForm {
    rotation,          // z_a d_b - z_b d_a, an so(n) generator
    broken_symmetric,  // z_a d_b + z_b d_a, which does not commute with the Laplacian
};

/// Applies the first-order operator z_a d_b -+ z_b d_a (0-based a, b).
SparsePolynomial apply_generator(const SparsePolynomial& f, int a, int b, GeneratorForm form = GeneratorForm::rotation);

/// Homogeneous polynomial of the given degree whose support is a random subset
/// of the monomials and whose coefficients are random small rationals.
SparsePolynomial random_homogeneous(int n, int degree, std::mt19937_64& rng);

/// For `trials` random homogeneous polynomials (degrees 2..4) from a generator
/// seeded with `seed`, checks Laplacian(L_ab f) == L_ab(Laplacian f) exactly for
/// every pair a < b.
bool so_invariance_check(int n, int trials, std::uint64_t seed, GeneratorForm form = GeneratorForm::rotation);

/// Raised when the harmonic-side K-type table fails its dimension certificate.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RowCertificate {
    int l;
    KTypeParam ktype;
    std::size_t harmonic_dim;  // dim H^l(C^{2m}) by exact rank
    std::uint64_t weyl_dim;    // dim F^{SO(2m)}(l, 0, ..., 0) by the Weyl formula
};

struct SolTable {
    KTypeTable table;
    std::vector<RowCertificate> rows;
};

/// K-types of the Laplacian kernel on O(D, V_{m-1}):
/// (l + m - 1; l, 0, ..., 0) with multiplicity one for 0 <= l <= max_l. Each row
/// is certified by harmonic_dimension(2m, l) == weyl_dim_so2m(m, (l, 0, ..., 0));
/// a mismatch throws CertificationError.
SolTable sol_ktype_table(int m, int max_l);

}  // namespace lieball::harmonic
