#include <doctest.h>

#include <cmath>
#include <random>

#include "gswf/bfn.hpp"
#include "gswf/catalog.hpp"
#include "gswf/error.hpp"
#include "oracles.hpp"

using namespace gswf;

namespace {
constexpr double kTol = 1e-12;

BooleanFunction odd_weight(int n) {
    return BooleanFunction::from_predicate(n, [](Mask x) { return level(x) % 2 == 1; });
}
}  // namespace

TEST_CASE("evaluate") {
    const auto a = catalog::and_fn(3);
    CHECK(a.evaluate(0b111));
    CHECK_FALSE(a.evaluate(0b011));
    const auto one = catalog::constant(2, true);
    for (Mask x = 0; x < 4; ++x) CHECK(one.evaluate(x));
    CHECK_THROWS_AS(a.evaluate(8), ValidationError);
}

TEST_CASE("construction and hex") {
    CHECK_THROWS_AS(BooleanFunction(0), ValidationError);
    CHECK_THROWS_AS(BooleanFunction(kMaxArity + 1), Error);
    CHECK(catalog::majority(3).to_hex() == "e8");
    CHECK(BooleanFunction::from_hex(3, "e8") == catalog::majority(3));
    CHECK(BooleanFunction::from_hex(3, "00e8") == catalog::majority(3));
    CHECK_THROWS_AS(BooleanFunction::from_hex(3, "1e8"), ValidationError);
    CHECK_THROWS_AS(BooleanFunction::from_hex(3, "zz"), ValidationError);
    CHECK(BooleanFunction::from_hex(1, "2") == catalog::dictator(1));

    std::mt19937_64 rng(5);
    for (int n = 1; n <= 10; ++n) {
        const auto f = oracle::random_function(n, rng);
        CHECK(BooleanFunction::from_hex(n, f.to_hex()) == f);
    }
    CHECK(catalog::and_fn(3) < catalog::majority(3));
}

TEST_CASE("walsh transform examples") {
    const auto d = walsh_transform(catalog::dictator(1));
    CHECK(d[0] == 0.5);
    CHECK(d[1] == 0.5);

    const auto c = walsh_transform(catalog::constant(2, true));
    CHECK(c[0] == 1.0);
    for (Mask s = 1; s < 4; ++s) CHECK(c[s] == 0.0);

    const auto m = walsh_transform(catalog::majority(3));
    CHECK(std::abs(m[0] - 0.5) < kTol);
    for (Mask s : {1U, 2U, 4U}) CHECK(std::abs(m[s] - 0.25) < kTol);
    CHECK(std::abs(m[7] + 0.25) < kTol);
    for (Mask s : {3U, 5U, 6U}) CHECK(std::abs(m[s]) < kTol);
}

TEST_CASE("fast transform agrees with the naive double loop") {
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << (1U << n)); ++b) {
            const auto f = BooleanFunction::from_bits(n, b);
            const auto fast = walsh_transform(f);
            const auto slow = oracle::naive_transform(f);
            for (Mask s = 0; s < f.size(); ++s) REQUIRE(std::abs(fast[s] - slow[s]) < kTol);
        }
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int n = 1; n <= 10; ++n)
        for (int t = 0; t < 100; ++t, ++checked) {
            const auto f = oracle::random_function(n, rng);
            const auto fast = walsh_transform(f);
            const auto slow = oracle::naive_transform(f);
            double worst = 0.0;
            for (Mask s = 0; s < f.size(); ++s) worst = std::max(worst, std::abs(fast[s] - slow[s]));
            REQUIRE(worst < kTol);
        }
    CHECK(checked == 1000);
}

TEST_CASE("round trip and Parseval") {
    auto check = [](const BooleanFunction& f) {
        const auto s = walsh_transform(f);
        const auto back = inverse_walsh_transform(s);
        double sq = 0.0;
        for (double c : s.coeffs()) sq += c * c;
        REQUIRE(std::abs(sq - expectation(f)) < kTol);
        REQUIRE(std::abs(s[0] - expectation(f)) < kTol);
        for (Mask x = 0; x < f.size(); ++x) REQUIRE(std::abs(back[x] - (f[x] ? 1.0 : 0.0)) < kTol);
    };
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << (1U << n)); ++b)
            check(BooleanFunction::from_bits(n, b));
    std::mt19937_64 rng(12);
    for (int n = 4; n <= 12; ++n)
        for (int t = 0; t < 5; ++t) check(oracle::random_function(n, rng));
}

TEST_CASE("inverse transform examples") {
    std::vector<double> ones(8, 0.0);
    ones[0] = 1.0;
    for (double v : inverse_walsh_transform(PseudoSpectrum(3, ones))) CHECK(v == 1.0);

    const auto r12 = inverse_walsh_transform(PseudoSpectrum(2, {0.0, 0.0, 0.0, 1.0}));
    for (Mask x = 0; x < 4; ++x) CHECK(r12[x] == oracle::character(3, x));

    CHECK_THROWS_AS(PseudoSpectrum(2, {1.0, 0.0}), ValidationError);
}

TEST_CASE("expectation and level weights") {
    CHECK(expectation(catalog::and_fn(3)) == 0.125);
    CHECK(expectation(catalog::majority(3)) == 0.5);
    CHECK(std::abs(expectation(catalog::threshold(15, 12)) - oracle::binomial_tail(15, 12)) < kTol);

    const auto wd = level_weights(walsh_transform(catalog::dictator(3, 2)));
    REQUIRE(wd.size() == 4);
    CHECK(std::abs(wd[0] - 0.25) < kTol);
    CHECK(std::abs(wd[1] - 0.25) < kTol);
    CHECK(std::abs(wd[2]) < kTol);
    CHECK(std::abs(wd[3]) < kTol);

    const auto wm = level_weights(walsh_transform(catalog::majority(3)));
    CHECK(std::abs(wm[0] - 0.25) < kTol);
    CHECK(std::abs(wm[1] - 3.0 / 16) < kTol);
    CHECK(std::abs(wm[2]) < kTol);
    CHECK(std::abs(wm[3] - 1.0 / 16) < kTol);

    const auto wp = level_weights(walsh_transform(odd_weight(2)));
    CHECK(std::abs(wp[1]) < kTol);
    CHECK(std::abs(wp[2] - 0.25) < kTol);
}

TEST_CASE("structural predicates") {
    CHECK(is_balanced(catalog::majority(3)));
    CHECK_FALSE(is_balanced(catalog::and_fn(3)));
    for (int n = 1; n <= 6; ++n) CHECK(is_balanced(catalog::dictator(n, n)));

    CHECK(is_monotone(catalog::and_fn(3)));
    CHECK_FALSE(is_monotone(odd_weight(2)));
    for (int k = 0; k <= 6; ++k) CHECK(is_monotone(catalog::threshold(5, k)));

    CHECK(is_self_dual(catalog::majority(3)));
    CHECK_FALSE(is_self_dual(catalog::and_fn(3)));
    CHECK(is_self_dual(catalog::dictator(4, 3)));

    CHECK(is_cyclic_invariant(catalog::majority(3)));
    CHECK_FALSE(is_cyclic_invariant(catalog::dictator(2)));
    CHECK(is_cyclic_invariant(odd_weight(4)));

    // tribes of width 2 on 4 voters: block rotation and in-block swaps, not rotation by one
    const auto t = catalog::make({catalog::Family::tribes, 4, 2});
    CHECK_FALSE(is_cyclic_invariant(t));
    const std::vector<std::vector<int>> gens{{2, 3, 0, 1}, {1, 0, 2, 3}};
    CHECK(is_invariant_under(t, gens));

    CHECK(dictator_voter(catalog::dictator(4, 3)) == 2);
    CHECK(dictator_voter(catalog::majority(3)) == -1);
    const auto not_x2 = BooleanFunction::from_predicate(3, [](Mask x) { return !((x >> 1) & 1U); });
    CHECK(anti_dictator_voter(not_x2) == 1);
    CHECK(anti_dictator_voter(catalog::dictator(3, 2)) == -1);
}

TEST_CASE("dual") {
    CHECK(dual(catalog::and_fn(3)) == catalog::or_fn(3));
    for (int n : {1, 3, 5, 7}) CHECK(dual(catalog::majority(n)) == catalog::majority(n));
    CHECK(dual(catalog::dictator(4, 2)) == catalog::dictator(4, 2));

    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << (1U << n)); ++b) {
            const auto f = BooleanFunction::from_bits(n, b);
            const auto d = dual(f);
            REQUIRE(dual(d) == f);
            REQUIRE(is_monotone(d) == is_monotone(f));
            REQUIRE(std::abs(expectation(d) - (1.0 - expectation(f))) < kTol);
            const auto sf = walsh_transform(f);
            const auto sd = walsh_transform(d);
            for (Mask s = 1; s < f.size(); ++s) {
                const double sign = level(s) % 2 == 1 ? 1.0 : -1.0;
                REQUIRE(std::abs(sd[s] - sign * sf[s]) < kTol);
            }
        }
}
