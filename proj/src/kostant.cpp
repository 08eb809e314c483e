#include "lieball/kostant.hpp"

#include <sstream>
#include <stdexcept>

#include "lieball/root_data.hpp"
#include "lieball/weyl.hpp"

namespace lieball {

namespace {

std::string join(const std::vector<int>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

void require_valid(int m, const KTypeParam& pi)
{
    if (static_cast<int>(pi.mu.size()) != m)
        throw std::invalid_argument("K-type " + pi.to_string() + " does not have m = " + std::to_string(m) + " entries");
    if (!pi.is_dominant()) throw std::invalid_argument("K-type " + pi.to_string() + " is not dominant");
}

std::vector<int> shifted(const std::vector<int>& a, const std::vector<int>& b, int sign)
{
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sign * b[i];
    return out;
}

}  // namespace

bool KTypeParam::is_dominant() const { return weyl::is_so_dominant(mu); }

std::string KTypeParam::to_string() const { return "(" + std::to_string(mu0) + "; " + join(mu) + ")"; }

bool LKTypeParam::is_dominant() const { return weyl::is_gl_dominant(hw); }

std::string LKTypeParam::to_string() const { return "(" + std::to_string(charge) + "; " + join(hw) + ")"; }

namespace kostant {

std::vector<LKTypeParam> cohomology(int m, const KTypeParam& pi, int j)
{
    require_valid(m, pi);
    if (j < 0) throw std::invalid_argument("cohomology degree must be nonnegative");
    const auto rho = rho_c(m).to_ints();
    const auto shifted_mu = shifted(pi.mu, rho, +1);
    std::vector<LKTypeParam> out;
    for (const auto& rep : weyl::coset_reps(m)) {
        if (rep.length != j) continue;
        out.push_back({pi.mu0, shifted(weyl::act(rep.w, shifted_mu), rho, -1)});
    }
    return out;
}

std::vector<SignedLKType> euler_character(int m, const KTypeParam& pi, const std::vector<int>& rho)
{
    require_valid(m, pi);
    if (static_cast<int>(rho.size()) != m) throw std::invalid_argument("rho_c must have m entries");
    const auto shifted_mu = shifted(pi.mu, rho, +1);
    std::vector<SignedLKType> out;
    for (const auto& rep : weyl::coset_reps(m)) {
        out.push_back({{pi.mu0, shifted(weyl::act(rep.w, shifted_mu), rho, -1)},
                       rep.length,
                       rep.length % 2 == 0 ? 1 : -1});
    }
    return out;
}

std::vector<SignedLKType> euler_character(int m, const KTypeParam& pi)
{
    return euler_character(m, pi, rho_c(m).to_ints());
}

}  // namespace kostant
}  // namespace lieball
