#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "lieball/kostant.hpp"
#include "lieball/weight.hpp"

namespace lieball::repdata {

/// Weyl dimension formula for the SO(2m) module F(mu):
/// prod over Delta+(D_m) of <mu + rho_c, alpha> / <rho_c, alpha>.
/// Throws std::invalid_argument if mu is not dominant, std::overflow_error if
/// the dimension does not fit in 64 bits.
std::uint64_t weyl_dim_so2m(int m, std::span<const int> mu);

/// Infinitesimal character (lambda - m/2) 1_{m+1} + rho_l = (lambda, lambda-1, ..., lambda-m).
Weight inf_char(int m, int lambda);

/// <w, alpha> != 0 for every root of D_rank, i.e. the |w_i| are pairwise distinct.
bool is_regular_d(const Weight& w);

struct Witness {
    Weight root;
    HalfInt pairing;
};

struct RangeVerdict {
    bool weakly_fair;
    bool good;
    std::vector<Witness> weakly_fair_violations;  // <lambda 1 - rho(u), alpha> < 0
    std::vector<Witness> good_violations;         // <lambda 1 - rho(u) + rho_l, alpha> <= 0
};

/// Positivity tests of the character lambda 1_{m+1} - rho(u) against Delta(u).
RangeVerdict range_verdict(int m, int lambda);

/// Homomorphisms between the scalar generalized Verma modules with parameters
/// nu -> lambda exist iff (lambda, nu) = (m - l, m + l) with l in N. Returns l.
std::optional<int> verma_hom_condition(int m, const mpq_class& lambda, const mpq_class& nu);

/// Harish-Chandra parameter -lambda e_0 + rho_G of the scalar generalized Verma
/// module with parameter lambda, rho_G = (m, m-1, ..., 1, 0). Rank m+1.
Weight verma_inf_char(int m, int lambda);

/// The Knapp-Stein operator I(lambda) -> I(n - lambda) has residue Delta^l
/// with l = n/2 - lambda when that is a natural number.
/// Throws std::invalid_argument unless n is even and n >= 4.
std::optional<int> knapp_stein_residue_degree(int n, const mpq_class& lambda);

/// Reduction points of the lowest weight modules L((n-1-z) e_0) of so(2, n).
struct EhwConstants {
    mpq_class a;  // first reduction point n/2
    mpq_class b;  // last reduction point n-1
};
EhwConstants ehw_constants(int n);

/// z <= 0 or z in {n/2, n-1}. Throws std::invalid_argument for n < 4.
bool ehw_unitarizable(int n, const mpq_class& z);

/// mu_lambda = (lambda; (lambda - m + 1) 1_m) when it is Delta+(k)-dominant.
std::optional<KTypeParam> bwb_target(int m, int lambda);

/// Whether w2 lies in the W(D_rank)-orbit of w1: same multiset of |w_i|, and
/// when no coordinate vanishes, the same parity of negative entries.
/// Throws std::invalid_argument on rank mismatch.
bool orbit_equal(const Weight& w1, const Weight& w2);

}  // namespace lieball::repdata
