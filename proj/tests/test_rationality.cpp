#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "gswf/catalog.hpp"
#include "gswf/error.hpp"
#include "gswf/rationality.hpp"
#include "oracles.hpp"

using namespace gswf;

namespace {
constexpr double kTol = 1e-12;

const std::vector<double> kEpsGrid{-1.0, -0.7, -0.4, -0.1, 0.0, 0.2, 0.5, 0.8, 1.0};

BooleanFunction complement(const BooleanFunction& f) {
    return BooleanFunction::from_predicate(f.arity(), [&](Mask x) { return !f[x]; });
}
}  // namespace

TEST_CASE("biased inner product") {
    const auto d = walsh_transform(catalog::dictator(3));
    for (double delta : {-1.0, -0.3, 0.0, 0.5, 1.0})
        CHECK(std::abs(biased_inner_product(d, d, delta) - delta / 4) < kTol);

    const auto m = walsh_transform(catalog::majority(3));
    CHECK(std::abs(biased_inner_product(m, m, -1.0 / 3) + 7.0 / 108) < kTol);

    std::mt19937_64 rng(1);
    const auto c = walsh_transform(catalog::constant(4, true));
    for (int t = 0; t < 20; ++t) {
        const auto f = walsh_transform(oracle::random_function(4, rng));
        CHECK(biased_inner_product(f, c, 0.3) == 0.0);
    }

    CHECK_THROWS_AS(biased_inner_product(d, m, 1.5), ValidationError);
    CHECK_THROWS_AS(biased_inner_product(d, walsh_transform(catalog::dictator(2)), 0.5),
                    ValidationError);
}

TEST_CASE("noise operator examples") {
    const auto f = catalog::majority(3);
    const auto s = walsh_transform(f);
    const auto id = noise_operator_spectral(s, 1.0);
    for (Mask m = 0; m < 8; ++m) CHECK(id[m] == s[m]);
    const auto zero = noise_operator_spectral(s, 0.0);
    CHECK(zero[0] == s[0]);
    for (Mask m = 1; m < 8; ++m) CHECK(zero[m] == 0.0);
    const auto flip = noise_operator_spectral(walsh_transform(catalog::dictator(2)), -1.0);
    CHECK(flip[1] == -0.5);

    const auto c1 = noise_operator_convolution(f, 1.0);
    for (Mask x = 0; x < 8; ++x) CHECK(c1[x] == (f[x] ? 1.0 : 0.0));
    for (double v : noise_operator_convolution(f, 0.0)) CHECK(std::abs(v - 0.5) < kTol);
    const auto a = catalog::and_fn(3);
    const auto cm = noise_operator_convolution(a, -1.0);
    for (Mask x = 0; x < 8; ++x) CHECK(cm[x] == (a[x ^ 7U] ? 1.0 : 0.0));

    CHECK_THROWS_AS(noise_operator_spectral(s, 1.2), ValidationError);
    CHECK_THROWS_AS(noise_operator_convolution(f, -1.2), ValidationError);
}

TEST_CASE("noise operator: spectral form equals convolution") {
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << (1U << n)); ++b) {
            const auto f = BooleanFunction::from_bits(n, b);
            const auto s = walsh_transform(f);
            for (double eps : kEpsGrid) {
                const auto conv = noise_operator_convolution(f, eps);
                const auto slow = oracle::naive_noise(f, eps);
                const auto back = inverse_walsh_transform(noise_operator_spectral(s, eps));
                for (Mask x = 0; x < f.size(); ++x) {
                    REQUIRE(std::abs(conv[x] - back[x]) < kTol);
                    REQUIRE(std::abs(conv[x] - slow[x]) < kTol);
                }
            }
        }
}

TEST_CASE("noise operator: monotonicity transfer") {
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << (1U << n)); ++b) {
            const auto f = BooleanFunction::from_bits(n, b);
            if (!is_monotone(f)) continue;
            for (double eps : kEpsGrid) {
                const auto t = noise_operator_convolution(f, eps);
                for (Mask x = 0; x < f.size(); ++x)
                    for (int i = 0; i < n; ++i) {
                        if ((x >> i) & 1U) continue;
                        const double step = t[x | (Mask{1} << i)] - t[x];
                        if (eps >= 0.0)
                            REQUIRE(step >= -kTol);
                        else
                            REQUIRE(step <= kTol);
                    }
            }
        }
}

TEST_CASE("w_formula examples") {
    const auto u = uniform_distribution();
    const auto d1 = catalog::dictator(3);
    CHECK(std::abs(w_formula(Gswf(d1, d1, d1), u).w) < kTol);
    CHECK(std::abs(w_formula(Gswf(d1, d1, complement(d1)), u).w - 1.0 / 3) < kTol);
    const auto d2 = catalog::dictator(3, 2);
    CHECK(std::abs(w_formula(Gswf(d1, d1, d2), even_product(0.5, 0.0, 0.0)).w - 0.5) < kTol);
    const auto m = catalog::majority(3);
    const auto r = w_formula(Gswf(m, m, m), u);
    CHECK(std::abs(r.w - 1.0 / 18) < kTol);
    CHECK(std::abs(r.w - (r.base + r.cross_terms[0] + r.cross_terms[1] + r.cross_terms[2])) < kTol);
    CHECK(r.method == Method::formula);
}

TEST_CASE("w_from_spectra") {
    const double c = 1.0 / (2.0 * std::sqrt(6.0));
    auto mk = [&](int big) {
        std::vector<double> v(8, 0.0);
        v[0] = 0.5;
        for (int i = 0; i < 3; ++i) v[1U << i] = i == big ? 2 * c : -c;
        return PseudoSpectrum(3, v);
    };
    const auto u = uniform_distribution();
    CHECK(std::abs(w_from_spectra(mk(0), mk(1), mk(2), u).w - 0.375) < kTol);

    std::vector<double> half(8, 0.0);
    half[0] = 0.5;
    const PseudoSpectrum h(3, half);
    CHECK(std::abs(w_from_spectra(h, h, h, u).w - 0.25) < kTol);

    std::mt19937_64 rng(2);
    const Gswf g(oracle::random_function(3, rng), oracle::random_function(3, rng),
                 oracle::random_function(3, rng));
    CHECK(w_from_spectra(walsh_transform(g.f), walsh_transform(g.g), walsh_transform(g.h), u).w ==
          w_formula(g, u).w);
}

TEST_CASE("oracle") {
    const auto m = catalog::majority(3);
    const auto u = TripleDistribution::uniform();
    CHECK(std::abs(w_oracle(Gswf(m, m, m), u).w - 1.0 / 18) < kTol);
    CHECK(std::abs(oracle::naive_w(Gswf(m, m, m), u.probabilities()) - 1.0 / 18) < kTol);

    std::mt19937_64 rng(7);
    const auto d = catalog::dictator(4, 2);
    for (int t = 0; t < 10; ++t)
        CHECK(w_oracle(Gswf(d, d, d), to_triple_distribution(oracle::random_even(rng))).w == 0.0);

    CHECK_THROWS_AS(w_oracle(catalog::preset_gswf("condorcet", 11), u), CapacityError);

    // general distributions against the independently written base-6 enumeration
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 4;
        std::array<double, 6> p{};
        double sum = 0.0;
        for (auto& v : p) sum += (v = unit(rng));
        for (auto& v : p) v /= sum;
        p[5] = 1.0 - (p[0] + p[1] + p[2] + p[3] + p[4]);
        const TripleDistribution td(p);
        const Gswf g(oracle::random_function(n, rng), oracle::random_function(n, rng),
                     oracle::random_function(n, rng));
        REQUIRE(std::abs(w_oracle(g, td).w - oracle::naive_w(g, p)) < kTol);
    }
}

TEST_CASE("formula agrees with the oracle for n <= 4") {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 200; ++t) {
            const Gswf g(oracle::random_function(n, rng), oracle::random_function(n, rng),
                         oracle::random_function(n, rng));
            for (int k = 0; k < 20; ++k) {
                const auto d = oracle::random_even(rng);
                worst = std::max(worst,
                                 std::abs(w_formula(g, d).w - w_oracle(g, to_triple_distribution(d)).w));
            }
        }
    CHECK(worst <= kTol);
}

TEST_CASE("cyclic relabelling symmetry and range") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 6;
        const Gswf g(oracle::random_function(n, rng), oracle::random_function(n, rng),
                     oracle::random_function(n, rng));
        const auto d = oracle::random_even(rng);
        const double w = w_formula(g, d).w;
        const double rotated = w_formula(Gswf(g.g, g.h, g.f), even_product(d.beta(), d.gamma(), d.alpha())).w;
        REQUIRE(std::abs(w - rotated) < kTol);
        REQUIRE(w >= -kTol);
        REQUIRE(w <= 1.0 + kTol);
    }
}

TEST_CASE("oracle result does not depend on the worker count") {
    std::mt19937_64 rng(13);
    const Gswf g(oracle::random_function(7, rng), oracle::random_function(7, rng),
                 oracle::random_function(7, rng));
    const auto t = to_triple_distribution(oracle::random_even(rng));
    setenv("GSWF_THREADS", "1", 1);
    const double one = w_oracle(g, t).w;
    setenv("GSWF_THREADS", "5", 1);
    const double five = w_oracle(g, t).w;
    unsetenv("GSWF_THREADS");
    CHECK(one == five);
}

TEST_CASE("monte carlo") {
    const auto u = TripleDistribution::uniform();
    const auto d = catalog::preset_gswf("dictator_triple", 5);
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) CHECK(w_monte_carlo(d, u, 1000, seed).w == 0.0);

    const auto m = catalog::preset_gswf("condorcet", 3);
    const auto r = w_monte_carlo(m, u, 1000000, 17);
    REQUIRE(r.std_error.has_value());
    CHECK(std::abs(r.w - 1.0 / 18) <= 4.0 * *r.std_error);
    CHECK(r.samples == 1000000U);
    CHECK(r.seed == 17U);
    CHECK(w_monte_carlo(m, u, 5000, 3).w == w_monte_carlo(m, u, 5000, 3).w);
    CHECK_THROWS_AS(w_monte_carlo(m, u, 0, 3), ValidationError);
}

TEST_CASE("w_prime") {
    const auto d = catalog::preset_gswf("dictator_triple", 3);
    CHECK(std::abs(w_prime(d)) < kTol);

    const auto adm = catalog::preset_gswf("and_dual_majority", 3);
    // 7/64 - 37/1728 - 2 * 7/216 by hand from the spectra
    CHECK(std::abs(w_prime(adm) - 5.0 / 216) < kTol);
    CHECK(w_prime(adm) > 0.0);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 500; ++t) {
        const int n = 1 + t % 5;
        const Gswf g(oracle::random_function(n, rng), oracle::random_function(n, rng),
                     oracle::random_function(n, rng));
        REQUIRE(w_prime(g) <= w_formula(g, uniform_distribution()).w + kTol);
    }
}
