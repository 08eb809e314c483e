#pragma once

#include <string_view>
#include <vector>

#include "lieball/weight.hpp"

// Root data of so(2m+2, C) = g for the real form so(2, 2m), relative to the
// compact Cartan t of k = so(2) + so(2m) and the theta-stable parabolic
// q = l + u defined by 1_{m+1} = e_0 + ... + e_m.

namespace lieball {

enum class RootSetLabel { g, p_plus, p_minus, u, u_cap_k, u_cap_p, k, l, l_cap_k };

std::string_view to_string(RootSetLabel label);

/// A finite list of roots. Every root has exactly two nonzero coordinates,
/// each equal to +-1, and no root is repeated.
class RootSet {
public:
    RootSet(RootSetLabel label, std::size_t rank, std::vector<Weight> roots);

    RootSetLabel label() const { return label_; }
    std::size_t rank() const { return rank_; }
    const std::vector<Weight>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    bool empty() const { return roots_.empty(); }
    bool contains(const Weight& root) const;

    auto begin() const { return roots_.begin(); }
    auto end() const { return roots_.end(); }

private:
    RootSetLabel label_;
    std::size_t rank_;
    std::vector<Weight> roots_;
};

/// All root sets used by the library, in rank m+1 coordinates (e_0..e_m).
/// `k` holds the positive system Delta+(k) = {e_i +- e_j : 1 <= i < j <= m};
/// `l_cap_k` holds all roots of l cap k.
struct RootData {
    int m;
    RootSet g;
    RootSet p_plus;
    RootSet p_minus;
    RootSet u;
    RootSet u_cap_k;
    RootSet u_cap_p;
    RootSet k;
    RootSet l;
    RootSet l_cap_k;
};

/// Throws std::invalid_argument for m < 2.
RootData build_root_sets(int m);

/// Drops the e_0 coordinate of a root set supported on e_1..e_m, giving the
/// rank-m description used by the SO(2m) factor. Throws if some root has a
/// nonzero e_0 component.
RootSet restrict_to_so2m(const RootSet& rs);

/// (1/2) * sum of the roots; the zero weight of rank rs.rank() when empty.
Weight half_sum(const RootSet& rs);

/// Half-sum of Delta+(so(2m)) = (m-1, m-2, ..., 1, 0), rank m.
Weight rho_c(int m);

/// Half-sum of Delta+(l) = {e_i - e_j : 0 <= i < j <= m}, i.e. (m/2, m/2-1, ..., -m/2), rank m+1.
Weight rho_l(int m);

/// rho(u) = (m/2) 1_{m+1}.
Weight rho_u(int m);

/// S = dim_C(K / (L cap K)) = m(m-1).
constexpr int compact_dimension(int m) { return m * (m - 1); }

/// Roots of D_rank: {+-e_i +- e_j : i < j}, positive ones first.
std::vector<Weight> roots_of_type_d(std::size_t rank);

/// A root of type D is positive iff its first nonzero coordinate is positive.
bool is_positive_d_root(const Weight& root);

}  // namespace lieball
