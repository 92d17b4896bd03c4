#include <doctest.h>

#include <cmath>

#include "gswf/catalog.hpp"
#include "gswf/error.hpp"
#include "gswf/search.hpp"

using namespace gswf;
using namespace gswf::search;

TEST_CASE("class filters") {
    CHECK_THROWS_AS(ClassFilter(0), ValidationError);
    CHECK_THROWS_AS(ClassFilter::parse(""), ValidationError);
    CHECK_THROWS_AS(ClassFilter::parse("balanced,shiny"), ValidationError);
    const auto f = ClassFilter::parse("monotone,expectation_in:0.25:0.75");
    CHECK(f.accepts(catalog::majority(3)));
    CHECK_FALSE(f.accepts(catalog::and_fn(3)));
    CHECK_FALSE(f.accepts(catalog::parity(3)));
    CHECK(ClassFilter::parse(f.to_string()).to_string() == f.to_string());
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_class(2, ClassFilter(kBalanced)).size() == 6);
    CHECK(enumerate_class(3, ClassFilter(kMonotone)).size() == 20);
    const std::size_t dedekind[] = {3, 6, 20, 168, 7581};
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_monotone(n).size() == dedekind[n - 1]);

    const auto bm = enumerate_class(3, ClassFilter(kBalanced | kMonotone));
    for (int i = 1; i <= 3; ++i)
        CHECK(std::find(bm.begin(), bm.end(), catalog::dictator(3, i)) != bm.end());
    CHECK(std::is_sorted(bm.begin(), bm.end()));

    CHECK_THROWS_AS(enumerate_class(5, ClassFilter(kBalanced)), CapacityError);
    CHECK_NOTHROW(enumerate_class(5, ClassFilter(kBalanced | kMonotone)));

    // brute force agrees with the monotone recursion at n = 4
    std::size_t brute = 0;
    for (std::uint64_t b = 0; b < (1U << 16); ++b)
        brute += is_monotone(BooleanFunction::from_bits(4, b));
    CHECK(brute == 168);
}

TEST_CASE("extremal search") {
    const auto u = uniform_distribution();
    const ClassFilter bm(kBalanced | kMonotone);
    const auto r = extremal_w(3, bm, bm, bm, u, Objective::max_w);
    CHECK(std::abs(r.value - 0.25) < 1e-12);
    REQUIRE(r.witness);
    CHECK(bm.accepts(r.witness->f));
    CHECK(std::abs(w_formula(*r.witness, u).w - r.value) < 1e-12);
    CHECK(r.evaluated == 64);

    const ClassFilter bal(kBalanced);
    const auto b2 = extremal_w(2, bal, bal, bal, u, Objective::max_w);
    CHECK(b2.value <= 0.375 + 1e-12);
    CHECK(std::abs(b2.value - 1.0 / 3) < 1e-12);

    SearchOptions no_dict;
    no_dict.exclude_dictatorial = true;
    const ClassFilter nc(kNonConstant);
    const auto lo = extremal_w(3, nc, nc, nc, u, Objective::min_w, no_dict);
    CHECK(lo.value > 1e-12);
    REQUIRE(lo.witness);
    CHECK(std::abs(w_formula(*lo.witness, u).w - lo.value) < 1e-12);
    const auto with_dict = extremal_w(3, nc, nc, nc, u, Objective::min_w);
    CHECK(std::abs(with_dict.value) < 1e-12);
}

TEST_CASE("random search") {
    const auto u = uniform_distribution();
    const ClassFilter bal(kBalanced);
    const auto a = random_search(4, bal, bal, bal, u, Objective::max_w, 500, 42);
    const auto b = random_search(4, bal, bal, bal, u, Objective::max_w, 500, 42);
    CHECK(a.value == b.value);
    REQUIRE(a.witness);
    CHECK(a.witness->f == b.witness->f);
    CHECK(random_search(4, bal, bal, bal, u, Objective::max_w, 1, 1).evaluated == 1);
    const auto big = random_search(4, bal, bal, bal, u, Objective::max_w, 100000, 7);
    CHECK(big.value <= 0.375 + 1e-12);
    CHECK(is_balanced(big.witness->g));

    const ClassFilter bm(kBalanced | kMonotone);
    const auto m5 = random_search(5, bm, bm, bm, u, Objective::max_w, 2000, 3);
    CHECK(m5.value <= 0.25 + 1e-12);
    CHECK(is_monotone(m5.witness->h));
}

TEST_CASE("budget guard") {
    const ClassFilter nc(kNonConstant);
    CHECK_THROWS_AS(extremal_w(4, nc, nc, nc, uniform_distribution(), Objective::max_w),
                    CapacityError);
}
