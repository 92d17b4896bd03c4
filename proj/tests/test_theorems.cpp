#include <doctest.h>

#include <algorithm>
#include <set>

#include "gswf/catalog.hpp"
#include "gswf/error.hpp"
#include "gswf/theorems.hpp"

using namespace gswf;
using namespace gswf::theorems;

namespace {
BoundReport make(double lhs, double rhs, bool strict, bool inverted, double tol = kExactTolerance) {
    BoundReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.strict = strict;
    r.inverted = inverted;
    r.tolerance = tol;
    return finalize(r);
}
}  // namespace

TEST_CASE("finalize") {
    CHECK(make(1.0, 1.0, false, false).pass);
    CHECK(make(1.0 + 1e-13, 1.0, false, false).pass);
    CHECK_FALSE(make(1.0 + 1e-9, 1.0, false, false).pass);
    CHECK_FALSE(make(1.0, 1.0, true, false).pass);
    CHECK(make(0.5, 1.0, true, false).pass);
    CHECK(make(2.0, 1.0, false, true).pass);
    CHECK_FALSE(make(0.5, 1.0, false, true).pass);
    CHECK(make(0.5, 1.0, false, false).margin == 0.5);

    BoundReport na;
    na.applicable = false;
    na.lhs = 5.0;
    CHECK(finalize(na).pass);
}

TEST_CASE("combine") {
    auto a = make(0.0, 1.0, false, false);
    auto b = make(0.0, 0.25, false, false);
    auto c = make(2.0, 1.0, false, false);
    const auto ok = combine("x", "claim", {a, b});
    CHECK(ok.pass);
    CHECK(ok.margin == 0.25);
    CHECK(ok.parts.size() == 2);
    const auto bad = combine("x", "claim", {a, c, b});
    CHECK_FALSE(bad.pass);
    CHECK(bad.lhs == 2.0);
    BoundReport na;
    na.applicable = false;
    CHECK(combine("x", "claim", {finalize(na), a}).pass);
}

TEST_CASE("registry") {
    const auto& reg = registry();
    CHECK(reg.size() == 26);
    CHECK(std::is_sorted(reg.begin(), reg.end(),
                         [](const CheckEntry& x, const CheckEntry& y) { return x.name < y.name; }));
    std::set<std::string> names;
    for (const auto& e : reg) names.insert(e.name);
    CHECK(names.size() == reg.size());
    CHECK_THROWS_AS(run_checks({"no_such_check"}, 0), ValidationError);
}

TEST_CASE("every registered check passes") {
    for (const auto& r : run_checks({}, 0)) {
        INFO(r.name);
        CHECK(r.pass);
        CHECK(r.applicable);
        const bool demo = r.name.find("demo") != std::string::npos;
        CHECK(r.inverted == demo);
    }
}

TEST_CASE("seeded checks are deterministic") {
    const std::vector<std::string> names{"balanced_bound_n4_random", "fkg_n4", "lower_bound_biased"};
    const auto a = run_checks(names, 5);
    const auto b = run_checks(names, 5);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lhs == b[i].lhs);
        CHECK(a[i].margin == b[i].margin);
    }
}

TEST_CASE("hypotheses") {
    CHECK_THROWS_AS(check_monotone_bound(3, even_product(0.5, 0.0, 0.0)), HypothesisError);
    CHECK(check_monotone_bound(3, even_product(0.25, 0.25, 0.0)).pass);

    const TripleDistribution skew({0.4, 0.1, 0.1, 0.2, 0.1, 0.1});
    const auto r = check_formula_vs_oracle_at(catalog::preset_gswf("condorcet", 3), skew);
    CHECK_FALSE(r.applicable);
    CHECK(r.pass);
    const auto u = check_formula_vs_oracle_at(catalog::preset_gswf("condorcet", 3),
                                              TripleDistribution::uniform());
    CHECK(u.applicable);
    CHECK(u.pass);
}

TEST_CASE("first-level bound on W'") {
    CHECK(w_prime_first_level_bound(3) > 0.0);
    CHECK(w_prime_first_level_bound(61) < 0.0);
    int sign_changes = 0;
    for (int n = 5; n <= 101; n += 2)
        sign_changes += (w_prime_first_level_bound(n) < 0.0) != (w_prime_first_level_bound(n - 2) < 0.0);
    CHECK(sign_changes == 1);
    const auto demo = check_w_prime_counterexample();
    CHECK(demo.inverted);
    CHECK(demo.pass);
}

TEST_CASE("expectation floor") {
    // literal floor is above 1/2 and fails; normalized floor holds once qn >= 1
    CHECK_FALSE(check_instability_expectation_floor({5, 7, 9}, 0.2, false).pass);
    CHECK(check_instability_expectation_floor({5, 7, 9, 11, 13, 15}, 0.2, true).pass);
    CHECK_FALSE(check_instability_expectation_floor({3}, 0.2, true).pass);
}

TEST_CASE("majority first-level weight") {
    CHECK(std::abs(majority_first_level_weight(3) - 3.0 / 16) < kExactTolerance);
    CHECK(std::abs(majority_first_level_weight(1) - 0.25) < kExactTolerance);
}
