#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieball/kostant.hpp"
#include "lieball/table.hpp"

// Generalized Blattner formula for the derived functor modules R_q^j(C_{lambda - rho(u)}):
//
//   sum_i (-1)^i dim Hom_K(pi, R_q^{S-i})
//     = sum_j (-1)^j dim Hom_{L cap K}(H^j(u cap k, pi), S(u cap p) (x) C_{mu_lambda}).
//
// The right-hand side is finite for each pi: the T-charge of H^j(u cap k, pi) is
// mu_0, and S^l(u cap p) (x) C_{mu_lambda} has charge l + lambda, so only
// l = mu_0 - lambda contributes.

namespace lieball::blattner {

/// mu_lambda = C_lambda (x) Lambda^S(k/(q cap k)) as an L cap K-type:
/// (lambda; (lambda - m + 1) 1_m).
struct MuLambda {
    int lambda;
    LKTypeParam as_lk;
};
MuLambda mu_lambda(int m, int lambda);

/// Degree-l piece of S(u cap p) = C_l [x] S^l(C^m), i.e. (l; l, 0, ..., 0).
/// Throws std::invalid_argument for l < 0.
LKTypeParam s_u_cap_p_component(int m, int l);

/// Right-hand side of the Blattner identity for pi. Equals dim Hom_K(pi, R_q^S)
/// when lambda is weakly fair.
int multiplicity(int m, int lambda, const KTypeParam& pi);
/// As above with an explicit rho_c (length m).
int multiplicity(int m, int lambda, const KTypeParam& pi, const std::vector<int>& rho_c);

/// Every dominant mu of SO(2m) with mu_1 <= max_mu1, lexicographically ascending.
std::vector<std::vector<int>> dominant_so_weights(int m, int max_mu1);

/// Scans all dominant K-types with mu_0 <= max_mu0 and mu_1 <= max_mu1 and
/// keeps the nonzero values. K-types with mu_0 < lambda have value 0 and are
/// skipped. `kind` is multiplicity iff lambda is weakly fair.
KTypeTable ktype_table(int m, int lambda, int max_mu0, int max_mu1);
KTypeTable ktype_table(int m, int lambda, int max_mu0, int max_mu1, const std::vector<int>& rho_c);

/// Bounds that capture every K-type with l = mu_0 - lambda <= max_l.
struct ScanBounds {
    int max_mu0;
    int max_mu1;
};
ScanBounds bounds_for_degree(int m, int lambda, int max_l);

/// Which equivalence to test for the combinatorial lemma behind the K-type formula.
enum class LemmaForm {
    /// For each dominant mu, l and coset rep w:
    ///   w(mu + rho_c) - rho_c = (l, 0, ..., 0)  <=>  w = e and mu = (l, 0, ..., 0).
    as_stated,
    /// For each dominant mu and l: some w matches <=> mu = (l, 0, ..., 0),
    /// and at most one w matches.
    without_identity,
};

struct LemmaReport {
    bool holds = true;
    long long cases = 0;
    std::optional<std::string> counterexample;
};

/// Exhaustive check over dominant mu with entries in [-grid_bound, grid_bound]
/// and 0 <= l <= 2 grid_bound.
LemmaReport lemma_scan(int m, int grid_bound, LemmaForm form = LemmaForm::as_stated);
bool lemma_check(int m, int grid_bound, LemmaForm form = LemmaForm::as_stated);

}  // namespace lieball::blattner
