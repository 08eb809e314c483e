#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lieball/weight.hpp"

namespace lieball {

/// Highest weight (mu_0; mu_1, ..., mu_m) of the irreducible K = SO(2) x SO(2m)
/// module C_{mu_0} [x] F^{SO(2m)}(mu).
struct KTypeParam {
    int mu0 = 0;
    std::vector<int> mu;

    /// mu_1 >= ... >= mu_{m-1} >= |mu_m|
    bool is_dominant() const;
    std::string to_string() const;

    friend bool operator==(const KTypeParam&, const KTypeParam&) = default;
    /// Lexicographic in (mu_0, mu).
    friend auto operator<=>(const KTypeParam&, const KTypeParam&) = default;
};

/// Highest weight of an irreducible L cap K = T x U(m) module: a T-charge and
/// a gl(m)-dominant integer vector.
struct LKTypeParam {
    int charge = 0;
    std::vector<int> hw;

    bool is_dominant() const;
    std::string to_string() const;

    friend bool operator==(const LKTypeParam&, const LKTypeParam&) = default;
    friend auto operator<=>(const LKTypeParam&, const LKTypeParam&) = default;
};

namespace kostant {

/// H^j(u cap k, pi) via Kostant's theorem: the L cap K-types
/// (mu_0; w(mu + rho_c) - rho_c) over coset representatives w of length j,
/// in coset_reps order. Degrees above dim(u cap k) give an empty list.
/// Throws std::invalid_argument if pi is not dominant, pi.mu has size != m,
/// or j < 0.
std::vector<LKTypeParam> cohomology(int m, const KTypeParam& pi, int j);

struct SignedLKType {
    LKTypeParam type;
    int degree;
    int sign;  // (-1)^degree
};

/// All cohomology degrees at once, each term carrying (-1)^j.
std::vector<SignedLKType> euler_character(int m, const KTypeParam& pi);

/// Same, with an explicit rho_c (length m). Used to probe how the Blattner
/// evaluation reacts to a wrong rho shift; pass root_data's rho_c for the
/// genuine computation.
std::vector<SignedLKType> euler_character(int m, const KTypeParam& pi, const std::vector<int>& rho_c);

}  // namespace kostant
}  // namespace lieball
