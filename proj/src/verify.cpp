#include "lieball/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "lieball/blattner.hpp"
#include "lieball/harmonic.hpp"
#include "lieball/repdata.hpp"
#include "lieball/root_data.hpp"

namespace lieball {

VerifyReport verify(const VerifyOptions& opt)
{
    if (opt.m < 2) throw std::invalid_argument("verify: m must be at least 2");
    if (opt.max_l < 0) throw std::invalid_argument("verify: max_l must be nonnegative");
    const int m = opt.m;
    const int lambda = m - 1;
    VerifyReport report;
    auto record = [&](std::string name, bool pass, std::string detail) {
        report.pass = report.pass && pass;
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    const auto rho = opt.rho_c_override.value_or(rho_c(m).to_ints());
    const auto bounds = blattner::bounds_for_degree(m, lambda, opt.max_l);
    report.blattner = blattner::ktype_table(m, lambda, bounds.max_mu0, bounds.max_mu1, rho);
    report.harmonic = harmonic::sol_ktype_table(m, opt.max_l).table;

    report.first_difference = first_difference(report.blattner, report.harmonic);
    if (report.first_difference) {
        const auto& d = *report.first_difference;
        record("ktype-tables", false,
               "first difference at " + d.ktype.to_string() + ": blattner " + std::to_string(d.left) + ", harmonic " +
                   std::to_string(d.right));
    } else {
        record("ktype-tables", true, std::to_string(report.harmonic.entries.size()) + " K-types agree");
    }

    const int bound = opt.lemma_bound > 0 ? opt.lemma_bound : std::min(std::max(opt.max_l, 1), 3);
    const auto lemma = blattner::lemma_scan(m, bound);
    record("lemma", lemma.holds,
           lemma.holds ? std::to_string(lemma.cases) + " cases, grid bound " + std::to_string(bound)
                       : "counterexample " + lemma.counterexample.value_or("?"));

    const auto verdict = repdata::range_verdict(m, lambda);
    std::string range_detail = verdict.weakly_fair ? "weakly fair" : "not weakly fair";
    range_detail += verdict.good ? ", good" : ", not good";
    if (!verdict.good_violations.empty())
        range_detail += " (witness " + verdict.good_violations.front().root.to_string() + " pairs to " +
                        verdict.good_violations.front().pairing.to_string() + ")";
    record("range", verdict.weakly_fair && !verdict.good, range_detail);

    const bool singular = !repdata::is_regular_d(repdata::inf_char(m, lambda));
    record("inf-char", singular, "inf_char " + repdata::inf_char(m, lambda).to_string() + (singular ? " singular" : " regular"));

    bool verma_ok = true;
    std::string verma_detail = "l = 0.." + std::to_string(opt.max_l);
    for (int l = 0; l <= opt.max_l && verma_ok; ++l) {
        const auto accepted = repdata::verma_hom_condition(m, m - l, m + l);
        const bool orbit = repdata::orbit_equal(repdata::verma_inf_char(m, m - l), repdata::verma_inf_char(m, m + l));
        if (accepted != l || !orbit) {
            verma_ok = false;
            verma_detail = "failed at l = " + std::to_string(l);
        }
    }
    record("verma-orbit", verma_ok, verma_detail);

    const bool invariant = harmonic::so_invariance_check(2 * m, opt.invariance_trials, opt.seed);
    record("laplacian-equivariance", invariant,
           std::to_string(opt.invariance_trials) + " random polynomials, seed " + std::to_string(opt.seed));

    return report;
}

}  // namespace lieball
