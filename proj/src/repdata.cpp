#include "lieball/repdata.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lieball/root_data.hpp"
#include "lieball/weyl.hpp"

namespace lieball::repdata {

namespace {

void require_m(int m)
{
    if (m < 2) throw std::invalid_argument("rank parameter m must be at least 2");
}

// Natural number (including 0) represented by q, if any.
std::optional<int> as_natural(const mpq_class& q)
{
    if (q.get_den() != 1 || q < 0 || !q.get_num().fits_sint_p()) return std::nullopt;
    return static_cast<int>(q.get_num().get_si());
}

mpq_class canonical(mpq_class q)
{
    q.canonicalize();  // GMP arithmetic assumes canonical operands
    return q;
}

mpq_class half(int n) { return canonical(mpq_class(n, 2)); }

}  // namespace

std::uint64_t weyl_dim_so2m(int m, std::span<const int> mu)
{
    require_m(m);
    if (static_cast<int>(mu.size()) != m)
        throw std::invalid_argument("weyl_dim_so2m: weight must have m = " + std::to_string(m) + " entries");
    if (!weyl::is_so_dominant(mu)) throw std::invalid_argument("weyl_dim_so2m: weight is not dominant");

    const auto rho = rho_c(m).to_ints();
    mpq_class dim = 1;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = i + 1; j < mu.size(); ++j)
            for (int t : {-1, 1}) {
                const long shifted = (mu[i] + rho[i]) + t * (mu[j] + rho[j]);
                const long base = rho[i] + t * rho[j];
                dim *= canonical(mpq_class(mpz_class(shifted), mpz_class(base)));
            }
    dim.canonicalize();
    if (dim.get_den() != 1) throw std::logic_error("weyl_dim_so2m: non-integral dimension");
    if (!dim.get_num().fits_ulong_p()) throw std::overflow_error("weyl_dim_so2m: dimension exceeds 64 bits");
    return dim.get_num().get_ui();
}

Weight inf_char(int m, int lambda)
{
    require_m(m);
    Weight w(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) w[static_cast<std::size_t>(i)] = lambda - i;
    return w;
}

bool is_regular_d(const Weight& w)
{
    if (w.rank() < 2) throw std::invalid_argument("is_regular_d: rank must be at least 2");
    for (std::size_t i = 0; i < w.rank(); ++i)
        for (std::size_t j = i + 1; j < w.rank(); ++j)
            if (w[i].abs() == w[j].abs()) return false;
    return true;
}

RangeVerdict range_verdict(int m, int lambda)
{
    const auto rd = build_root_sets(m);
    const auto rank = static_cast<std::size_t>(m) + 1;
    const Weight fair = Weight::constant(rank, lambda) - rho_u(m);
    const Weight shifted = fair + rho_l(m);

    RangeVerdict v{true, true, {}, {}};
    for (const auto& alpha : rd.u) {
        const HalfInt a = pairing(fair, alpha);
        if (a < 0) {
            v.weakly_fair = false;
            v.weakly_fair_violations.push_back({alpha, a});
        }
        const HalfInt b = pairing(shifted, alpha);
        if (b <= 0) {
            v.good = false;
            v.good_violations.push_back({alpha, b});
        }
    }
    return v;
}

std::optional<int> verma_hom_condition(int m, const mpq_class& lambda, const mpq_class& nu)
{
    const auto l = canonical(lambda), v = canonical(nu);
    if (l + v != 2 * m) return std::nullopt;
    return as_natural(mpq_class(m) - l);
}

Weight verma_inf_char(int m, int lambda)
{
    require_m(m);
    Weight w(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) w[static_cast<std::size_t>(i)] = m - i;
    w[0] -= lambda;
    return w;
}

std::optional<int> knapp_stein_residue_degree(int n, const mpq_class& lambda)
{
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("knapp_stein_residue_degree: n must be even and at least 4");
    return as_natural(half(n) - canonical(lambda));
}

EhwConstants ehw_constants(int n)
{
    if (n < 4) throw std::invalid_argument("ehw_constants: n must be at least 4");
    return {half(n), mpq_class(n - 1)};
}

bool ehw_unitarizable(int n, const mpq_class& z)
{
    const auto c = ehw_constants(n);
    const auto q = canonical(z);
    return q <= 0 || q == c.a || q == c.b;
}

std::optional<KTypeParam> bwb_target(int m, int lambda)
{
    require_m(m);
    KTypeParam k{lambda, std::vector<int>(static_cast<std::size_t>(m), lambda - m + 1)};
    if (!k.is_dominant()) return std::nullopt;
    return k;
}

bool orbit_equal(const Weight& w1, const Weight& w2)
{
    if (w1.rank() != w2.rank()) throw std::invalid_argument("orbit_equal: rank mismatch");
    auto abs_sorted = [](const Weight& w) {
        std::vector<HalfInt> a;
        for (auto c : w.coords()) a.push_back(c.abs());
        std::sort(a.begin(), a.end());
        return a;
    };
    if (abs_sorted(w1) != abs_sorted(w2)) return false;
    const auto& c = w1.coords();
    if (std::find(c.begin(), c.end(), HalfInt(0)) != c.end()) return true;
    auto negatives = [](const Weight& w) {
        return std::count_if(w.coords().begin(), w.coords().end(), [](HalfInt h) { return h < 0; });
    };
    return negatives(w1) % 2 == negatives(w2) % 2;
}

}  // namespace lieball::repdata
