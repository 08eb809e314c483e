#include "lieball/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lieball::weyl {

namespace {

void require_enumerable(int m)
{
    if (m < 2 || m > kMaxEnumerationRank)
        throw std::out_of_range("W(D_m) enumeration supports 2 <= m <= " + std::to_string(kMaxEnumerationRank) +
                                ", got m = " + std::to_string(m));
}

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Fast length: counts inverted positive roots without materializing them.
int count_inversions(const SignedPermutation& w, bool only_e_minus)
{
    const int m = w.rank();
    int n = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            n += w.inverts(i, j, -1) ? 1 : 0;
            if (!only_e_minus) n += w.inverts(i, j, +1) ? 1 : 0;
        }
    return n;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)), inv_(perm_.size(), -1)
{
    const auto m = perm_.size();
    if (m == 0) throw std::invalid_argument("SignedPermutation: empty");
    if (signs_.size() != m) throw std::invalid_argument("SignedPermutation: perm/signs length mismatch");
    for (std::size_t j = 0; j < m; ++j) {
        const int p = perm_[j];
        if (p < 0 || static_cast<std::size_t>(p) >= m || inv_[static_cast<std::size_t>(p)] != -1)
            throw std::invalid_argument("SignedPermutation: perm is not a bijection");
        inv_[static_cast<std::size_t>(p)] = static_cast<int>(j);
    }
    int negatives = 0;
    for (int s : signs_) {
        if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation: signs must be +-1");
        negatives += s < 0 ? 1 : 0;
    }
    if (negatives % 2 != 0) throw std::invalid_argument("SignedPermutation: odd number of sign changes (not in type D)");
}

SignedPermutation SignedPermutation::identity(int m)
{
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    return SignedPermutation(std::move(p), std::vector<int>(static_cast<std::size_t>(m), 1));
}

bool SignedPermutation::is_identity() const
{
    for (std::size_t i = 0; i < perm_.size(); ++i)
        if (perm_[i] != static_cast<int>(i) || signs_[i] != 1) return false;
    return true;
}

SignedPermutation SignedPermutation::inverse() const
{
    std::vector<int> s(perm_.size());
    for (std::size_t j = 0; j < perm_.size(); ++j) s[j] = signs_[static_cast<std::size_t>(perm_[j])];
    return SignedPermutation(inv_, std::move(s));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& other) const
{
    if (other.rank() != rank()) throw std::invalid_argument("SignedPermutation: rank mismatch in product");
    const auto m = perm_.size();
    std::vector<int> p(m), s(m);
    for (std::size_t j = 0; j < m; ++j) p[j] = perm_[static_cast<std::size_t>(other.perm_[j])];
    for (std::size_t i = 0; i < m; ++i) s[i] = signs_[i] * other.signs_[static_cast<std::size_t>(inv_[i])];
    return SignedPermutation(std::move(p), std::move(s));
}

std::uint64_t SignedPermutation::code() const
{
    const int m = rank();
    std::uint64_t lehmer = 0;
    for (int i = 0; i < m; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j < m; ++j)
            if (perm_[static_cast<std::size_t>(j)] < perm_[static_cast<std::size_t>(i)]) ++smaller_after;
        lehmer += static_cast<std::uint64_t>(smaller_after) * factorial(m - 1 - i);
    }
    std::uint64_t mask = 0;
    for (int i = 0; i < m; ++i)
        if (signs_[static_cast<std::size_t>(i)] < 0) mask |= std::uint64_t{1} << i;
    return (lehmer << m) | mask;
}

bool SignedPermutation::inverts(int i, int j, int t) const
{
    // w^-1 e_i = signs[i] e_{perm^-1(i)}
    const int a = inv_[static_cast<std::size_t>(i)];
    const int b = inv_[static_cast<std::size_t>(j)];
    const int lead = a < b ? signs_[static_cast<std::size_t>(i)] : t * signs_[static_cast<std::size_t>(j)];
    return lead < 0;
}

std::string SignedPermutation::to_string() const
{
    // One-line notation of the images of e_1..e_m, e.g. [-2, -1].
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < perm_.size(); ++j) {
        if (j) os << ", ";
        const int target = perm_[j];
        if (signs_[static_cast<std::size_t>(target)] < 0) os << '-';
        os << target + 1;
    }
    os << ']';
    return os.str();
}

Weight act(const SignedPermutation& w, const Weight& mu)
{
    if (static_cast<int>(mu.rank()) != w.rank())
        throw std::invalid_argument("act: weight rank " + std::to_string(mu.rank()) + " does not match W(D_" +
                                    std::to_string(w.rank()) + ")");
    Weight out(mu.rank());
    for (std::size_t i = 0; i < mu.rank(); ++i)
        out[i] = w.signs()[i] * mu[static_cast<std::size_t>(w.inverse_perm()[i])];
    return out;
}

std::vector<int> act(const SignedPermutation& w, std::span<const int> mu)
{
    if (static_cast<int>(mu.size()) != w.rank()) throw std::invalid_argument("act: rank mismatch");
    std::vector<int> out(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i)
        out[i] = w.signs()[i] * mu[static_cast<std::size_t>(w.inverse_perm()[i])];
    return out;
}

RootSet inversion_set(const SignedPermutation& w)
{
    const int m = w.rank();
    const auto rank = static_cast<std::size_t>(m);
    std::vector<Weight> roots;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int t : {-1, 1}) {
                if (!w.inverts(i, j, t)) continue;
                Weight r(rank);
                r[static_cast<std::size_t>(i)] = 1;
                r[static_cast<std::size_t>(j)] = t;
                roots.push_back(std::move(r));
            }
    return RootSet(RootSetLabel::k, rank, std::move(roots));
}

int length(const SignedPermutation& w) { return count_inversions(w, false); }

std::vector<SignedPermutation> enumerate_all(int m)
{
    require_enumerable(m);
    const auto n = static_cast<std::size_t>(m);
    std::vector<SignedPermutation> out;
    out.reserve(factorial(m) << (m - 1));
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) % 2 != 0) continue;
            std::vector<int> s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1u ? -1 : 1;
            out.emplace_back(p, std::move(s));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

const std::vector<CosetRep>& coset_reps(int m)
{
    require_enumerable(m);
    static std::mutex mutex;
    static std::map<int, std::vector<CosetRep>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    std::vector<CosetRep> reps;
    const auto n = static_cast<std::size_t>(m);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) % 2 != 0) continue;
            std::vector<int> s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1u ? -1 : 1;
            SignedPermutation w(p, std::move(s));
            // Delta+(w) lies in u cap k = {e_i + e_j} iff no e_i - e_j is inverted.
            if (count_inversions(w, true) != 0) continue;
            const int len = length(w);
            reps.push_back({std::move(w), len});
        }
    } while (std::next_permutation(p.begin(), p.end()));

    std::stable_sort(reps.begin(), reps.end(), [](const CosetRep& a, const CosetRep& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.w.code() < b.w.code();
    });
    return cache.emplace(m, std::move(reps)).first->second;
}

std::vector<SignedPermutation> enumerate_coset_reps(int m)
{
    std::vector<SignedPermutation> out;
    for (const auto& rep : coset_reps(m)) out.push_back(rep.w);
    return out;
}

bool is_gl_dominant(std::span<const int> nu)
{
    return std::is_sorted(nu.begin(), nu.end(), std::greater<>{});
}

bool is_gl_dominant(const Weight& nu)
{
    return std::is_sorted(nu.coords().begin(), nu.coords().end(), std::greater<>{});
}

bool is_so_dominant(std::span<const int> mu)
{
    if (mu.empty()) return true;
    const auto last = mu.size() - 1;
    for (std::size_t i = 0; i + 1 < last; ++i)
        if (mu[i] < mu[i + 1]) return false;
    if (last == 0) return mu[0] >= 0;
    return mu[last - 1] >= (mu[last] < 0 ? -mu[last] : mu[last]);
}

bool is_so_dominant(const Weight& mu)
{
    if (mu.rank() == 0) return true;
    const auto last = mu.rank() - 1;
    for (std::size_t i = 0; i + 1 < last; ++i)
        if (mu[i] < mu[i + 1]) return false;
    if (last == 0) return mu[0] >= 0;
    return mu[last - 1] >= mu[last].abs();
}

}  // namespace lieball::weyl
