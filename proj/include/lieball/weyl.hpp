#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lieball/root_data.hpp"
#include "lieball/weight.hpp"

namespace lieball::weyl {

/// Full enumeration of W(D_m) is only attempted up to this rank (8! * 2^7 elements).
inline constexpr int kMaxEnumerationRank = 8;

/// Element of W(D_m): a permutation of the coordinates followed by an even
/// number of sign changes. Acts on the left by
///     (w mu)_i = signs[i] * mu[perm^-1(i)],
/// so that w e_j = signs[perm(j)] e_{perm(j)}. Indices are 0-based.
class SignedPermutation {
public:
    /// Throws std::invalid_argument unless `perm` is a bijection of {0..m-1},
    /// `signs` has entries +-1 and the number of -1 entries is even.
    SignedPermutation(std::vector<int> perm, std::vector<int> signs);

    static SignedPermutation identity(int m);

    int rank() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }
    /// perm^-1
    const std::vector<int>& inverse_perm() const { return inv_; }

    bool is_identity() const;
    SignedPermutation inverse() const;
    /// (*this) o other, i.e. act(a * b, mu) == act(a, act(b, mu)).
    SignedPermutation operator*(const SignedPermutation& other) const;

    /// Deterministic ordering key: lexicographic rank of the permutation
    /// (its Lehmer code read as a factorial-base number) times 2^m plus the
    /// bitmask of negative signs.
    std::uint64_t code() const;

    /// Whether w^-1 (e_i + t e_j) is a negative root, for i != j, t = +-1 (0-based).
    bool inverts(int i, int j, int t) const;

    std::string to_string() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
    std::vector<int> inv_;
};

/// Throws std::invalid_argument on rank mismatch.
Weight act(const SignedPermutation& w, const Weight& mu);
std::vector<int> act(const SignedPermutation& w, std::span<const int> mu);

/// Delta+(w) = {alpha in Delta+(k) : w^-1 alpha in Delta-(k)}, rank-m coordinates.
RootSet inversion_set(const SignedPermutation& w);
/// l(w) = #Delta+(w).
int length(const SignedPermutation& w);

/// Every element of W(D_m), ordered by code(). Throws for m < 2 or m > kMaxEnumerationRank.
std::vector<SignedPermutation> enumerate_all(int m);

struct CosetRep {
    SignedPermutation w;
    int length;
};

/// W_K^{l cap k} = {w : Delta+(w) subset Delta(u cap k)}, sorted by (length, code).
/// Computed once per m and cached; the reference stays valid for the process lifetime.
const std::vector<CosetRep>& coset_reps(int m);

/// Same set as coset_reps(m) without the lengths.
std::vector<SignedPermutation> enumerate_coset_reps(int m);

/// nu_1 >= nu_2 >= ... >= nu_m, i.e. dominant for Delta+(l cap k) = Delta+(gl(m)).
bool is_gl_dominant(std::span<const int> nu);
bool is_gl_dominant(const Weight& nu);

/// mu_1 >= ... >= mu_{m-1} >= |mu_m|, i.e. dominant for Delta+(so(2m)).
bool is_so_dominant(std::span<const int> mu);
bool is_so_dominant(const Weight& mu);

}  // namespace lieball::weyl
