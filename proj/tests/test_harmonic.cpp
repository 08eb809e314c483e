#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieball/harmonic.hpp"
#include "lieball/linalg.hpp"

using namespace lieball;
using harmonic::GeneratorForm;

namespace {

long long binom(int n, int k)
{
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long closed_form(int n, int l) { return binom(n + l - 1, l) - binom(n + l - 3, l - 2); }

SparsePolynomial mono(int n, Exponent e, mpq_class c = 1) { return SparsePolynomial::monomial(n, std::move(e), c); }

SparsePolynomial power(const SparsePolynomial& f, int k)
{
    auto out = SparsePolynomial::constant(f.nvars(), 1);
    for (int i = 0; i < k; ++i) out = out * f;
    return out;
}

// Rank of a set of polynomials as vectors in the monomial basis, via Bareiss.
std::size_t span_dimension(const std::vector<SparsePolynomial>& ps, int n, int degree)
{
    const auto basis = monomial_basis(n, degree);
    SparseRationalMatrix a(ps.size(), basis.size());
    for (std::size_t r = 0; r < ps.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (const auto v = ps[r].coefficient(basis[c]); v != 0) a.add(r, c, v);
    return bareiss_rank(a.to_integer_rows());
}

}  // namespace

TEST_CASE("laplacian examples")
{
    CHECK(harmonic::laplacian(mono(2, {2, 0}) - mono(2, {0, 2})).is_zero());
    for (int n = 2; n <= 8; ++n) CHECK(harmonic::laplacian(harmonic::radius_squared(n)) == SparsePolynomial::constant(n, 2 * n));
    CHECK(harmonic::laplacian(mono(4, {4, 0, 0, 0})) == mono(4, {2, 0, 0, 0}, 12));
    CHECK(harmonic::laplacian(SparsePolynomial::constant(3, 5)).is_zero());
}

TEST_CASE("laplacian powers of r^2k")
{
    // Delta(r^{2k}) = 2k(n + 2k - 2) r^{2k-2}
    const auto r4 = power(harmonic::radius_squared(4), 2);
    CHECK(harmonic::laplacian_power(r4, 2) == SparsePolynomial::constant(4, 192));
    CHECK(harmonic::laplacian_power(r4, 0) == r4);
    CHECK(harmonic::laplacian_power(r4, 3).is_zero());
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 3; ++k) {
            const auto r2 = harmonic::radius_squared(n);
            CHECK(harmonic::laplacian(power(r2, k)) == mpq_class(2 * k * (n + 2 * k - 2)) * power(r2, k - 1));
        }
    CHECK_THROWS_AS(harmonic::laplacian_power(r4, -1), std::invalid_argument);
}

TEST_CASE("laplacian matrix shape and surjectivity")
{
    const auto lm = harmonic::laplacian_matrix(4, 2);
    CHECK(lm.matrix.rows() == 1);
    CHECK(lm.matrix.cols() == 10);
    CHECK(lm.matrix.rank() == 1);
    CHECK(harmonic::laplacian_matrix(3, 1).matrix.rows() == 0);
    for (int n = 2; n <= 6; ++n)
        for (int l = 2; l <= 5; ++l) {
            const auto m = harmonic::laplacian_matrix(n, l);
            CHECK(m.matrix.rank() == m.target_basis.size());
            CHECK(bareiss_rank(m.matrix.to_integer_rows()) == m.target_basis.size());
            // column c maps the source monomial onto its laplacian
            for (std::size_t c = 0; c < m.source_basis.size(); ++c) {
                const auto image = harmonic::laplacian(mono(n, m.source_basis[c]));
                for (std::size_t r = 0; r < m.target_basis.size(); ++r)
                    CHECK(m.matrix.at(r, c) == image.coefficient(m.target_basis[r]));
            }
        }
}

TEST_CASE("harmonic dimensions")
{
    CHECK(harmonic::harmonic_dimension(4, 0) == 1);
    CHECK(harmonic::harmonic_dimension(4, 2) == 9);
    CHECK(harmonic::harmonic_dimension(6, 3) == 50);
    for (int n = 2; n <= 8; ++n)
        for (int l = 0; l <= (n <= 6 ? 6 : 4); ++l) {
            CAPTURE(n);
            CAPTURE(l);
            CHECK(static_cast<long long>(harmonic::harmonic_dimension(n, l)) == closed_form(n, l));
        }
    CHECK_THROWS_AS(harmonic::harmonic_dimension(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(harmonic::harmonic_dimension(4, -1), std::invalid_argument);
}

TEST_CASE("harmonic basis: annihilated, independent, complementary to r^2 Pol^{l-2}")
{
    for (int n = 3; n <= 6; ++n)
        for (int l = 0; l <= 4; ++l) {
            const auto basis = harmonic::harmonic_basis(n, l);
            CHECK(basis.size() == harmonic::harmonic_dimension(n, l));
            for (const auto& h : basis) {
                CHECK(harmonic::laplacian(h).is_zero());
                CHECK(harmonic::laplacian_power(h, 1 + l / 2).is_zero());
                CHECK(h.homogeneous_degree() == l);
            }
            CHECK(span_dimension(basis, n, l) == basis.size());

            // Pol^l = H^l (+) r^2 Pol^{l-2}
            auto all = basis;
            for (const auto& e : monomial_basis(n, l - 2))
                all.push_back(harmonic::radius_squared(n) * mono(n, e));
            CHECK(span_dimension(all, n, l) == static_cast<std::size_t>(binom(n + l - 1, l)));
        }
}

TEST_CASE("multiplication by r^2 is injective on harmonics")
{
    for (int n : {4, 6})
        for (int k = 0; k <= 3; ++k) {
            auto basis = harmonic::harmonic_basis(n, k);
            for (int j = 1; j <= 2; ++j) {
                std::vector<SparsePolynomial> shifted;
                for (const auto& h : basis) shifted.push_back(power(harmonic::radius_squared(n), j) * h);
                CHECK(span_dimension(shifted, n, k + 2 * j) == basis.size());
            }
        }
}

TEST_CASE("rotations commute with the laplacian")
{
    const auto f = mono(2, {1, 1});
    const auto lhs = harmonic::laplacian(harmonic::apply_generator(f, 0, 1));
    const auto rhs = harmonic::apply_generator(harmonic::laplacian(f), 0, 1);
    CHECK(lhs.is_zero());
    CHECK(rhs.is_zero());

    CHECK(harmonic::so_invariance_check(4, 50, 1));
    CHECK(harmonic::so_invariance_check(6, 10, 2));
    CHECK_FALSE(harmonic::so_invariance_check(4, 5, 1, GeneratorForm::broken_symmetric));

    // The broken operator's commutator is 4 d_a d_b.
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto g = harmonic::random_homogeneous(4, 3, rng);
        const auto comm = harmonic::laplacian(harmonic::apply_generator(g, 0, 2, GeneratorForm::broken_symmetric)) -
                          harmonic::apply_generator(harmonic::laplacian(g), 0, 2, GeneratorForm::broken_symmetric);
        CHECK(comm == mpq_class(4) * g.derivative(0).derivative(2));
    }

    // so(n) preserves harmonics.
    for (const auto& h : harmonic::harmonic_basis(4, 3))
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) CHECK(harmonic::laplacian(harmonic::apply_generator(h, a, b)).is_zero());
}

TEST_CASE("random_homogeneous is homogeneous and reproducible")
{
    std::mt19937_64 a(42), b(42);
    for (int d = 0; d <= 4; ++d) {
        const auto p = harmonic::random_homogeneous(5, d, a);
        CHECK(p == harmonic::random_homogeneous(5, d, b));
        CHECK_FALSE(p.is_zero());
        CHECK(p.homogeneous_degree() == d);
    }
}

TEST_CASE("sol_ktype_table")
{
    const auto t2 = harmonic::sol_ktype_table(2, 2);
    CHECK(t2.table.entries ==
          std::map<KTypeParam, int>{{{1, {0, 0}}, 1}, {{2, {1, 0}}, 1}, {{3, {2, 0}}, 1}});
    REQUIRE(t2.rows.size() == 3);
    CHECK(t2.rows[0].harmonic_dim == 1);
    CHECK(t2.rows[1].harmonic_dim == 4);
    CHECK(t2.rows[2].harmonic_dim == 9);
    for (const auto& r : t2.rows) CHECK(r.harmonic_dim == r.weyl_dim);

    const auto t3 = harmonic::sol_ktype_table(3, 1);
    CHECK(t3.table.entries == std::map<KTypeParam, int>{{{2, {0, 0, 0}}, 1}, {{3, {1, 0, 0}}, 1}});
    CHECK(t3.rows[1].weyl_dim == 6);
    CHECK(t3.table.lambda == 2);
    CHECK(t3.table.kind == TableKind::multiplicity);

    CHECK_THROWS_AS(harmonic::sol_ktype_table(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(harmonic::sol_ktype_table(2, -1), std::invalid_argument);
}
