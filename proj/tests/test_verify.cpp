#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lieball/root_data.hpp"
#include "lieball/verify.hpp"

using namespace lieball;

namespace {

const CheckResult& check_named(const VerifyReport& r, const std::string& name)
{
    const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const auto& c) { return c.name == name; });
    REQUIRE(it != r.checks.end());
    return *it;
}

}  // namespace

TEST_CASE("verify passes for m = 2, max_l = 6")
{
    VerifyOptions o;
    o.m = 2;
    o.max_l = 6;
    const auto r = verify(o);
    CHECK(r.pass);
    CHECK(r.blattner.entries == r.harmonic.entries);
    CHECK(r.harmonic.entries.size() == 7);
    CHECK_FALSE(r.first_difference.has_value());
    CHECK(r.checks.size() == 6);
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    CHECK(check_named(r, "range").detail.find("weakly fair, not good") != std::string::npos);
    CHECK(check_named(r, "inf-char").detail.find("singular") != std::string::npos);
}

TEST_CASE("verify passes for m = 4, max_l = 3")
{
    VerifyOptions o;
    o.m = 4;
    o.max_l = 3;
    o.seed = 17;
    const auto r = verify(o);
    CHECK(r.pass);
    CHECK(r.harmonic.entries.size() == 4);
}

TEST_CASE("an off-by-one rho_c is caught with the first differing K-type")
{
    VerifyOptions o;
    o.m = 2;
    o.max_l = 3;
    auto bad = rho_c(2).to_ints();
    for (auto& x : bad) x -= 1;
    o.rho_c_override = bad;
    const auto r = verify(o);
    CHECK_FALSE(r.pass);
    REQUIRE(r.first_difference.has_value());
    CHECK(r.first_difference->ktype == KTypeParam{1, {1, 1}});
    const auto& tables = check_named(r, "ktype-tables");
    CHECK_FALSE(tables.pass);
    CHECK(tables.detail.find("(1; 1,1)") != std::string::npos);
    // the other checks do not depend on the override
    CHECK(check_named(r, "lemma").pass);
}

TEST_CASE("the report is deterministic for a fixed seed")
{
    VerifyOptions o;
    o.m = 3;
    o.max_l = 2;
    o.seed = 5;
    const auto a = verify(o), b = verify(o);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].detail == b.checks[i].detail);
    CHECK(a.blattner == b.blattner);
}

TEST_CASE("invalid options")
{
    VerifyOptions o;
    o.m = 1;
    CHECK_THROWS_AS(verify(o), std::invalid_argument);
    o.m = 2;
    o.max_l = -1;
    CHECK_THROWS_AS(verify(o), std::invalid_argument);
}
