#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lieball/blattner.hpp"
#include "lieball/root_data.hpp"
#include "lieball/table.hpp"
#include "lieball/weyl.hpp"

using namespace lieball;
using blattner::LemmaForm;

namespace {

// Oracle: sum over the whole Weyl group, not just coset reps, of
// (-1)^{l(w)} [w(mu + rho_c) - rho_c = (mu0 - lambda) e_1 + (lambda - m + 1) 1_m].
int oracle_multiplicity(int m, int lambda, const KTypeParam& pi)
{
    if (pi.mu0 < lambda) return 0;
    std::vector<int> rho(static_cast<std::size_t>(m)), target(static_cast<std::size_t>(m), lambda - m + 1);
    for (int i = 0; i < m; ++i) rho[i] = m - 1 - i;
    target[0] += pi.mu0 - lambda;
    std::vector<int> shifted(pi.mu);
    for (int i = 0; i < m; ++i) shifted[i] += rho[i];
    int sum = 0;
    for (const auto& w : weyl::enumerate_all(m)) {
        auto image = weyl::act(w, shifted);
        for (int i = 0; i < m; ++i) image[i] -= rho[i];
        if (image == target) sum += weyl::length(w) % 2 ? -1 : 1;
    }
    return sum;
}

std::map<KTypeParam, int> expected_pattern(int m, int max_l)
{
    std::map<KTypeParam, int> out;
    for (int l = 0; l <= max_l; ++l) {
        std::vector<int> mu(static_cast<std::size_t>(m), 0);
        mu[0] = l;
        out[{l + m - 1, mu}] = 1;
    }
    return out;
}

}  // namespace

TEST_CASE("mu_lambda and S(u cap p) components")
{
    const auto ml = blattner::mu_lambda(3, 2);
    CHECK(ml.as_lk == LKTypeParam{2, {0, 0, 0}});
    CHECK(blattner::mu_lambda(3, 0).as_lk == LKTypeParam{0, {-2, -2, -2}});
    CHECK(blattner::s_u_cap_p_component(4, 0) == LKTypeParam{0, {0, 0, 0, 0}});
    CHECK(blattner::s_u_cap_p_component(4, 1) == LKTypeParam{1, {1, 0, 0, 0}});
    CHECK(blattner::s_u_cap_p_component(2, 3) == LKTypeParam{3, {3, 0}});
    CHECK_THROWS_AS(blattner::s_u_cap_p_component(2, -1), std::invalid_argument);
}

TEST_CASE("multiplicity examples")
{
    CHECK(blattner::multiplicity(2, 1, {1, {0, 0}}) == 1);
    CHECK(blattner::multiplicity(2, 1, {2, {1, 1}}) == 0);
    CHECK(blattner::multiplicity(2, 1, {0, {0, 0}}) == 0);
    for (int l = 0; l <= 8; ++l) CHECK(blattner::multiplicity(3, 2, {l + 2, {l, 0, 0}}) == 1);
}

TEST_CASE("multiplicity agrees with the full-group oracle")
{
    for (int m = 2; m <= 4; ++m)
        for (int lambda : {0, 1, m - 1, m, m + 2}) {
            const auto weights = blattner::dominant_so_weights(m, 4);
            for (int mu0 = lambda - 1; mu0 <= lambda + 4; ++mu0)
                for (const auto& mu : weights) {
                    const KTypeParam pi{mu0, mu};
                    CAPTURE(pi.to_string());
                    CAPTURE(lambda);
                    CHECK(blattner::multiplicity(m, lambda, pi) == oracle_multiplicity(m, lambda, pi));
                }
        }
}

TEST_CASE("dominant_so_weights: count, order, dominance")
{
    for (int m = 2; m <= 4; ++m)
        for (int b = 0; b <= 3; ++b) {
            // brute-force count over the box [-b, b]^m
            std::size_t count = 0;
            std::vector<int> v(static_cast<std::size_t>(m), -b);
            while (true) {
                if (weyl::is_so_dominant(v) && v[0] <= b) ++count;
                std::size_t i = 0;
                while (i < v.size() && v[i] == b) v[i++] = -b;
                if (i == v.size()) break;
                ++v[i];
            }
            const auto ws = blattner::dominant_so_weights(m, b);
            CHECK(ws.size() == count);
            CHECK(std::is_sorted(ws.begin(), ws.end()));
            for (const auto& w : ws) CHECK(weyl::is_so_dominant(w));
        }
    CHECK(blattner::dominant_so_weights(2, -1).empty());
}

TEST_CASE("ktype_table examples")
{
    const auto t2 = blattner::ktype_table(2, 1, 6, 6);
    CHECK(t2.entries == expected_pattern(2, 5));
    CHECK(t2.kind == TableKind::multiplicity);

    const auto t4 = blattner::ktype_table(4, 3, 5, 5);
    CHECK(t4.entries == expected_pattern(4, 2));

    CHECK(blattner::ktype_table(2, 1, 0, 6).entries.empty());

    const auto euler = blattner::ktype_table(3, 0, 3, 3);
    CHECK(euler.kind == TableKind::euler_characteristic);
    CHECK(to_string(euler.kind) == "Euler characteristic");
    CHECK(to_string(TableKind::multiplicity) == "multiplicity");
}

TEST_CASE("the table for lambda = m - 1 is the harmonic pattern")
{
    for (int m = 2; m <= 4; ++m) {
        const auto b = blattner::bounds_for_degree(m, m - 1, 5);
        CHECK(blattner::ktype_table(m, m - 1, b.max_mu0, b.max_mu1).entries == expected_pattern(m, 5));
    }
}

TEST_CASE("bounds_for_degree catches every K-type of degree <= max_l")
{
    for (int m = 2; m <= 3; ++m)
        for (int lambda : {0, 1, m - 1, m + 1}) {
            const int max_l = 3;
            const auto b = blattner::bounds_for_degree(m, lambda, max_l);
            const auto tight = blattner::ktype_table(m, lambda, b.max_mu0, b.max_mu1);
            const auto wide = blattner::ktype_table(m, lambda, b.max_mu0, b.max_mu1 + 4);
            CHECK(tight.entries == wide.entries);
            for (const auto& [k, v] : tight.entries) CHECK(k.mu0 - lambda <= max_l);
        }
    CHECK_THROWS_AS(blattner::bounds_for_degree(2, 1, -1), std::invalid_argument);
}

TEST_CASE("table entries agree with the oracle off the weakly fair range too")
{
    const auto t = blattner::ktype_table(3, 0, 3, 4);
    const auto weights = blattner::dominant_so_weights(3, 4);
    for (int mu0 = 0; mu0 <= 3; ++mu0)
        for (const auto& mu : weights) {
            const KTypeParam pi{mu0, mu};
            const auto it = t.entries.find(pi);
            CHECK((it == t.entries.end() ? 0 : it->second) == oracle_multiplicity(3, 0, pi));
        }
}

TEST_CASE("a wrong rho shift changes the table")
{
    std::vector<int> bad = rho_c(2).to_ints();
    for (auto& x : bad) x -= 1;
    const auto good_t = blattner::ktype_table(2, 1, 4, 4);
    const auto bad_t = blattner::ktype_table(2, 1, 4, 4, bad);
    const auto d = first_difference(bad_t, good_t);
    REQUIRE(d.has_value());
    CHECK(d->ktype == KTypeParam{1, {1, 1}});
    CHECK(d->left == -1);
    CHECK(d->right == 0);
    CHECK_FALSE(first_difference(good_t, good_t).has_value());
}

TEST_CASE("lemma scan")
{
    CHECK(blattner::lemma_check(2, 4));
    CHECK(blattner::lemma_check(3, 3));
    CHECK(blattner::lemma_check(2, 4, LemmaForm::without_identity));
    CHECK(blattner::lemma_check(3, 3, LemmaForm::without_identity));
    const auto r = blattner::lemma_scan(2, 2);
    CHECK(r.holds);
    // 2 coset reps x 5 l-values x (#dominant mu with mu_1 <= 2 = 9)
    CHECK(r.cases == 2 * 5 * 9);
    CHECK_THROWS_AS(blattner::lemma_scan(2, 0), std::invalid_argument);
}

TEST_CASE("table JSON round trip and CSV")
{
    auto t = blattner::ktype_table(2, 1, 3, 3);
    t.entries[{3, {1, -1}}] = -2;  // exercise a negative value
    const auto json = table_to_json(t);
    CHECK(table_from_json(json) == t);
    CHECK(json.find("\"kind\": \"multiplicity\"") != std::string::npos);

    auto e = blattner::ktype_table(3, 0, 2, 2);
    CHECK(table_from_json(table_to_json(e)) == e);

    const auto csv = table_to_csv(blattner::ktype_table(2, 1, 2, 2));
    CHECK(csv == "mu0,mu_1,mu_2,mult\n1,0,0,1\n2,1,0,1\n");

    CHECK_THROWS_AS(table_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(table_from_json(R"({"m":2})"), std::invalid_argument);
    CHECK_THROWS_AS(table_from_json(R"({"m":2,"lambda":1,"entries":[{"mu0":1,"mu":[0],"mult":1}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(table_from_json(R"({"m":2,"lambda":1,"kind":"x","entries":[]})"), std::invalid_argument);
    const auto minimal = table_from_json(R"({"m":2,"lambda":1,"entries":[{"mu0":1,"mu":[0,0],"mult":1}]})");
    CHECK(minimal.entries.size() == 1);
}
