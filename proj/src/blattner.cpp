#include "lieball/blattner.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "lieball/parallel.hpp"
#include "lieball/repdata.hpp"
#include "lieball/root_data.hpp"
#include "lieball/weyl.hpp"

namespace lieball::blattner {

namespace {

std::string vec_string(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// (l, 0, ..., 0)
std::vector<int> leading(int m, int l)
{
    std::vector<int> v(static_cast<std::size_t>(m), 0);
    v[0] = l;
    return v;
}

}  // namespace

MuLambda mu_lambda(int m, int lambda)
{
    if (m < 2) throw std::invalid_argument("mu_lambda: m must be at least 2");
    return {lambda, {lambda, std::vector<int>(static_cast<std::size_t>(m), lambda - m + 1)}};
}

LKTypeParam s_u_cap_p_component(int m, int l)
{
    if (m < 2) throw std::invalid_argument("s_u_cap_p_component: m must be at least 2");
    if (l < 0) throw std::invalid_argument("s_u_cap_p_component: degree must be nonnegative");
    return {l, leading(m, l)};
}

int multiplicity(int m, int lambda, const KTypeParam& pi, const std::vector<int>& rho)
{
    if (pi.mu0 < lambda) return 0;
    const int l = pi.mu0 - lambda;
    // S^l(u cap p) (x) C_{mu_lambda}
    const auto target_lk = s_u_cap_p_component(m, l);
    const auto twist = mu_lambda(m, lambda).as_lk;
    std::vector<int> target(target_lk.hw.size());
    for (std::size_t i = 0; i < target.size(); ++i) target[i] = target_lk.hw[i] + twist.hw[i];

    int sum = 0;
    for (const auto& term : kostant::euler_character(m, pi, rho))
        if (term.type.hw == target) sum += term.sign;
    return sum;
}

int multiplicity(int m, int lambda, const KTypeParam& pi)
{
    return multiplicity(m, lambda, pi, rho_c(m).to_ints());
}

std::vector<std::vector<int>> dominant_so_weights(int m, int max_mu1)
{
    if (m < 2) throw std::invalid_argument("dominant_so_weights: m must be at least 2");
    std::vector<std::vector<int>> out;
    if (max_mu1 < 0) return out;
    std::vector<int> mu(static_cast<std::size_t>(m));
    const auto last = static_cast<std::size_t>(m - 1);
    // Entries 0..m-2 are weakly decreasing and nonnegative; the last one ranges over
    // [-mu_{m-1}, mu_{m-1}]. Recursion visits them in lexicographic order.
    std::function<void(std::size_t, int)> fill = [&](std::size_t pos, int upper) {
        if (pos == last) {
            for (int v = -upper; v <= upper; ++v) {
                mu[pos] = v;
                out.push_back(mu);
            }
            return;
        }
        for (int v = 0; v <= upper; ++v) {
            mu[pos] = v;
            fill(pos + 1, v);
        }
    };
    fill(0, max_mu1);
    return out;
}

KTypeTable ktype_table(int m, int lambda, int max_mu0, int max_mu1, const std::vector<int>& rho)
{
    if (max_mu0 < 0 || max_mu1 < 0) throw std::invalid_argument("ktype_table: bounds must be nonnegative");
    KTypeTable table;
    table.m = m;
    table.lambda = lambda;
    table.max_mu0 = max_mu0;
    table.max_mu1 = max_mu1;
    table.kind = repdata::range_verdict(m, lambda).weakly_fair ? TableKind::multiplicity
                                                               : TableKind::euler_characteristic;

    const auto weights = dominant_so_weights(m, max_mu1);
    weyl::coset_reps(m);  // populate the cache before fanning out
    if (max_mu0 < lambda) return table;
    const auto charges = static_cast<std::size_t>(max_mu0 - lambda + 1);
    std::vector<std::vector<std::pair<KTypeParam, int>>> rows(charges);
    parallel_for(charges, [&](std::size_t idx) {
        const int mu0 = lambda + static_cast<int>(idx);
        for (const auto& mu : weights) {
            KTypeParam pi{mu0, mu};
            if (const int v = multiplicity(m, lambda, pi, rho); v != 0) rows[idx].emplace_back(std::move(pi), v);
        }
    });
    for (auto& row : rows)
        for (auto& [k, v] : row) table.entries.emplace(std::move(k), v);
    return table;
}

KTypeTable ktype_table(int m, int lambda, int max_mu0, int max_mu1)
{
    return ktype_table(m, lambda, max_mu0, max_mu1, rho_c(m).to_ints());
}

ScanBounds bounds_for_degree(int m, int lambda, int max_l)
{
    if (max_l < 0) throw std::invalid_argument("bounds_for_degree: max_l must be nonnegative");
    // A matching mu satisfies mu + rho_c = w^-1(nu + rho_c) with nu = (l + c, c, ..., c),
    // c = lambda - m + 1, so mu_1 <= max_i |nu_i + rho_c,i| - (m - 1) <= l + |c|.
    const int c = lambda - m + 1;
    return {std::max(0, lambda + max_l), max_l + std::abs(c)};
}

LemmaReport lemma_scan(int m, int grid_bound, LemmaForm form)
{
    if (grid_bound < 1) throw std::invalid_argument("lemma_scan: grid bound must be at least 1");
    const auto rho = rho_c(m).to_ints();
    const auto& reps = weyl::coset_reps(m);
    LemmaReport report;

    for (const auto& mu : dominant_so_weights(m, grid_bound)) {
        std::vector<int> shifted(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) shifted[i] = mu[i] + rho[i];
        for (int l = 0; l <= 2 * grid_bound; ++l) {
            const auto target = leading(m, l);
            const bool mu_is_target = mu == target;
            int matches = 0;
            for (const auto& rep : reps) {
                ++report.cases;
                auto image = weyl::act(rep.w, shifted);
                for (std::size_t i = 0; i < image.size(); ++i) image[i] -= rho[i];
                const bool cond_i = image == target;
                matches += cond_i ? 1 : 0;
                if (form == LemmaForm::as_stated && cond_i != (rep.w.is_identity() && mu_is_target)) {
                    report.holds = false;
                    report.counterexample = "mu=" + vec_string(mu) + " l=" + std::to_string(l) + " w=" + rep.w.to_string();
                    return report;
                }
            }
            if (form == LemmaForm::without_identity && ((matches > 0) != mu_is_target || matches > 1)) {
                report.holds = false;
                report.counterexample = "mu=" + vec_string(mu) + " l=" + std::to_string(l) + " matches=" +
                                        std::to_string(matches);
                return report;
            }
        }
    }
    return report;
}

bool lemma_check(int m, int grid_bound, LemmaForm form) { return lemma_scan(m, grid_bound, form).holds; }

}  // namespace lieball::blattner
