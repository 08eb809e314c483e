#include "lieball/root_data.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lieball {

namespace {

void require_rank(int m)
{
    if (m < 2) throw std::invalid_argument("rank parameter m must be at least 2, got " + std::to_string(m));
}

// s_i e_i + s_j e_j in rank `rank`.
Weight two_term(std::size_t rank, std::size_t i, int si, std::size_t j, int sj)
{
    Weight w(rank);
    w[i] = si;
    w[j] = sj;
    return w;
}

std::vector<Weight> negated(const std::vector<Weight>& roots)
{
    std::vector<Weight> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.push_back(-r);
    return out;
}

std::vector<Weight> concat(std::vector<Weight> a, const std::vector<Weight>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

std::string_view to_string(RootSetLabel label)
{
    switch (label) {
    case RootSetLabel::g: return "g";
    case RootSetLabel::p_plus: return "p+";
    case RootSetLabel::p_minus: return "p-";
    case RootSetLabel::u: return "u";
    case RootSetLabel::u_cap_k: return "u∩k";
    case RootSetLabel::u_cap_p: return "u∩p";
    case RootSetLabel::k: return "k";
    case RootSetLabel::l: return "l";
    case RootSetLabel::l_cap_k: return "l∩k";
    }
    return "?";
}

RootSet::RootSet(RootSetLabel label, std::size_t rank, std::vector<Weight> roots)
    : label_(label), rank_(rank), roots_(std::move(roots))
{
    if (rank_ == 0) throw std::invalid_argument("RootSet: rank must be positive");
    std::set<Weight> seen;
    for (const auto& r : roots_) {
        if (r.rank() != rank_) throw std::invalid_argument("RootSet: root " + r.to_string() + " has wrong rank");
        int nonzero = 0;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (r[i] == 0) continue;
            if (r[i] != 1 && r[i] != -1)
                throw std::invalid_argument("RootSet: root " + r.to_string() + " has a coordinate other than 0, +-1");
            ++nonzero;
        }
        if (nonzero != 2) throw std::invalid_argument("RootSet: root " + r.to_string() + " is not of the form +-e_i +- e_j");
        if (!seen.insert(r).second) throw std::invalid_argument("RootSet: repeated root " + r.to_string());
    }
}

bool RootSet::contains(const Weight& root) const
{
    return std::find(roots_.begin(), roots_.end(), root) != roots_.end();
}

std::vector<Weight> roots_of_type_d(std::size_t rank)
{
    std::vector<Weight> pos;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) {
            pos.push_back(two_term(rank, i, 1, j, -1));
            pos.push_back(two_term(rank, i, 1, j, 1));
        }
    return concat(pos, negated(pos));
}

bool is_positive_d_root(const Weight& root)
{
    for (std::size_t i = 0; i < root.rank(); ++i)
        if (root[i] != 0) return root[i] > 0;
    return false;
}

RootData build_root_sets(int m)
{
    require_rank(m);
    const auto rank = static_cast<std::size_t>(m) + 1;

    std::vector<Weight> p_plus;
    for (std::size_t j = 1; j < rank; ++j) {
        p_plus.push_back(two_term(rank, 0, 1, j, 1));
        p_plus.push_back(two_term(rank, 0, 1, j, -1));
    }

    std::vector<Weight> u_cap_k;
    for (std::size_t i = 1; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) u_cap_k.push_back(two_term(rank, i, 1, j, 1));

    std::vector<Weight> u_cap_p;
    for (std::size_t j = 1; j < rank; ++j) u_cap_p.push_back(two_term(rank, 0, 1, j, 1));

    std::vector<Weight> k_pos;
    for (std::size_t i = 1; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) {
            k_pos.push_back(two_term(rank, i, 1, j, -1));
            k_pos.push_back(two_term(rank, i, 1, j, 1));
        }

    std::vector<Weight> l_pos;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) l_pos.push_back(two_term(rank, i, 1, j, -1));

    std::vector<Weight> lk_pos;
    for (std::size_t i = 1; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) lk_pos.push_back(two_term(rank, i, 1, j, -1));

    return RootData{
        .m = m,
        .g = RootSet(RootSetLabel::g, rank, roots_of_type_d(rank)),
        .p_plus = RootSet(RootSetLabel::p_plus, rank, p_plus),
        .p_minus = RootSet(RootSetLabel::p_minus, rank, negated(p_plus)),
        .u = RootSet(RootSetLabel::u, rank, concat(u_cap_k, u_cap_p)),
        .u_cap_k = RootSet(RootSetLabel::u_cap_k, rank, u_cap_k),
        .u_cap_p = RootSet(RootSetLabel::u_cap_p, rank, u_cap_p),
        .k = RootSet(RootSetLabel::k, rank, k_pos),
        .l = RootSet(RootSetLabel::l, rank, concat(l_pos, negated(l_pos))),
        .l_cap_k = RootSet(RootSetLabel::l_cap_k, rank, concat(lk_pos, negated(lk_pos))),
    };
}

RootSet restrict_to_so2m(const RootSet& rs)
{
    std::vector<Weight> out;
    out.reserve(rs.size());
    for (const auto& r : rs) {
        if (r[0] != 0) throw std::invalid_argument("restrict_to_so2m: root " + r.to_string() + " involves e_0");
        out.emplace_back(std::vector<HalfInt>(r.coords().begin() + 1, r.coords().end()));
    }
    return RootSet(rs.label(), rs.rank() - 1, std::move(out));
}

Weight half_sum(const RootSet& rs)
{
    Weight sum(rs.rank());
    for (const auto& r : rs) sum += r;
    return sum.halved();
}

Weight rho_c(int m)
{
    require_rank(m);
    Weight w(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = m - 1 - i;
    return w;
}

Weight rho_l(int m)
{
    require_rank(m);
    Weight w(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) w[static_cast<std::size_t>(i)] = HalfInt::from_twice(m - 2 * i);
    return w;
}

Weight rho_u(int m)
{
    require_rank(m);
    return Weight::constant(static_cast<std::size_t>(m) + 1, HalfInt::from_twice(m));
}

}  // namespace lieball
