#include "lieball/harmonic.hpp"

#include <map>
#include <string>

#include "lieball/parallel.hpp"
#include "lieball/repdata.hpp"

namespace lieball::harmonic {

SparsePolynomial laplacian(const SparsePolynomial& f)
{
    SparsePolynomial out(f.nvars());
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 2) continue;
            Exponent d = e;
            d[i] -= 2;
            out.add_term(d, c * (e[i] * (e[i] - 1)));
        }
    return out;
}

SparsePolynomial laplacian_power(const SparsePolynomial& f, int l)
{
    if (l < 0) throw std::invalid_argument("laplacian_power: exponent must be nonnegative");
    SparsePolynomial out = f;
    for (int k = 0; k < l && !out.is_zero(); ++k) out = laplacian(out);
    return out;
}

LinearMapMatrix laplacian_matrix(int n, int degree)
{
    if (n < 1 || degree < 0) throw std::invalid_argument("laplacian_matrix: need n >= 1 and degree >= 0");
    auto source = monomial_basis(n, degree);
    auto target = monomial_basis(n, degree - 2);
    std::map<Exponent, std::size_t> row_of;
    for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r], r);

    SparseRationalMatrix a(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
        const auto& e = source[c];
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 2) continue;
            Exponent d = e;
            d[i] -= 2;
            a.add(row_of.at(d), c, mpq_class(e[i] * (e[i] - 1)));
        }
    }
    return {std::move(source), std::move(target), std::move(a)};
}

std::size_t harmonic_dimension(int n, int l)
{
    if (n < 2) throw std::invalid_argument("harmonic_dimension: need n >= 2");
    if (l < 0) throw std::invalid_argument("harmonic_dimension: degree must be nonnegative");
    const auto lm = laplacian_matrix(n, l);
    return lm.matrix.cols() - lm.matrix.rank();
}

std::vector<SparsePolynomial> harmonic_basis(int n, int l)
{
    if (n < 2) throw std::invalid_argument("harmonic_basis: need n >= 2");
    const auto lm = laplacian_matrix(n, l);
    std::vector<SparsePolynomial> out;
    for (const auto& v : lm.matrix.kernel_basis()) {
        SparsePolynomial p(n);
        for (std::size_t c = 0; c < v.size(); ++c) p.add_term(lm.source_basis[c], v[c]);
        out.push_back(std::move(p));
    }
    return out;
}

SparsePolynomial radius_squared(int n)
{
    SparsePolynomial r(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 2;
        r.add_term(e, 1);
    }
    return r;
}

SparsePolynomial apply_generator(const SparsePolynomial& f, int a, int b, GeneratorForm form)
{
    const SparsePolynomial first = f.derivative(b).times_variable(a);
    const SparsePolynomial second = f.derivative(a).times_variable(b);
    return form == GeneratorForm::rotation ? first - second : first + second;
}

SparsePolynomial random_homogeneous(int n, int degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> keep(0, 1);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    SparsePolynomial p(n);
    for (const auto& e : monomial_basis(n, degree)) {
        if (!keep(rng)) continue;
        mpq_class c(num(rng), den(rng));
        c.canonicalize();
        p.add_term(e, c);
    }
    if (p.is_zero()) p.add_term(monomial_basis(n, degree).front(), 1);
    return p;
}

bool so_invariance_check(int n, int trials, std::uint64_t seed, GeneratorForm form)
{
    if (n < 2) throw std::invalid_argument("so_invariance_check: need n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> degree(2, 4);
    for (int t = 0; t < trials; ++t) {
        const auto f = random_homogeneous(n, degree(rng), rng);
        const auto lap_f = laplacian(f);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (laplacian(apply_generator(f, a, b, form)) != apply_generator(lap_f, a, b, form)) return false;
    }
    return true;
}

SolTable sol_ktype_table(int m, int max_l)
{
    if (m < 2) throw std::invalid_argument("sol_ktype_table: m must be at least 2");
    if (max_l < 0) throw std::invalid_argument("sol_ktype_table: max_l must be nonnegative");

    SolTable out;
    out.table.m = m;
    out.table.lambda = m - 1;
    out.table.max_mu0 = m - 1 + max_l;
    out.table.max_mu1 = max_l;
    out.table.kind = TableKind::multiplicity;
    out.rows.resize(static_cast<std::size_t>(max_l) + 1);

    parallel_for(out.rows.size(), [&](std::size_t idx) {
        const int l = static_cast<int>(idx);
        std::vector<int> hw(static_cast<std::size_t>(m), 0);
        hw[0] = l;
        // Pol^l carries the SO(2)-character l; the trivialization of V_{m-1} adds m - 1.
        out.rows[idx] = {l, KTypeParam{l + m - 1, hw}, harmonic_dimension(2 * m, l), repdata::weyl_dim_so2m(m, hw)};
    });

    for (const auto& row : out.rows) {
        if (row.harmonic_dim != row.weyl_dim)
            throw CertificationError("harmonic certification failed at l = " + std::to_string(row.l) +
                                     ": dim H^l = " + std::to_string(row.harmonic_dim) +
                                     " but Weyl dimension = " + std::to_string(row.weyl_dim));
        out.table.entries.emplace(row.ktype, 1);
    }
    return out;
}

}  // namespace lieball::harmonic
