#pragma once

// Slow reference implementations. Nothing here calls the fast paths under test.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "gswf/bfn.hpp"
#include "gswf/dist.hpp"
#include "gswf/rationality.hpp"

namespace oracle {

using gswf::BooleanFunction;
using gswf::Mask;

/// r_S(x) = prod_{i in S} (2 x_i - 1).
inline double character(Mask s, Mask x) {
    double r = 1.0;
    for (int i = 0; s >> i; ++i)
        if ((s >> i) & 1U) r *= ((x >> i) & 1U) ? 1.0 : -1.0;
    return r;
}

/// O(4^n) double loop.
inline std::vector<double> naive_transform(const BooleanFunction& f) {
    const std::size_t size = f.size();
    std::vector<double> c(size, 0.0);
    for (Mask s = 0; s < size; ++s) {
        double acc = 0.0;
        for (Mask x = 0; x < size; ++x)
            if (f[x]) acc += character(s, x);
        c[s] = acc / static_cast<double>(size);
    }
    return c;
}

/// E[f(x xor y)] by summing over every y with its product probability.
inline std::vector<double> naive_noise(const BooleanFunction& f, double eps) {
    const std::size_t size = f.size();
    const int n = f.arity();
    std::vector<double> out(size, 0.0);
    for (Mask x = 0; x < size; ++x)
        for (Mask y = 0; y < size; ++y) {
            double p = 1.0;
            for (int i = 0; i < n; ++i) p *= ((y >> i) & 1U) ? (1.0 - eps) / 2.0 : (1.0 + eps) / 2.0;
            if (f[x ^ y]) out[x] += p;
        }
    return out;
}

/// Profiles enumerated as base-6 counters, triple table typed out independently.
inline double naive_w(const gswf::Gswf& g, const std::array<double, 6>& p) {
    // 110, 011, 101, 001, 100, 010 as (x, y, z)
    static const int tx[6] = {1, 0, 1, 0, 1, 0};
    static const int ty[6] = {1, 1, 0, 0, 0, 1};
    static const int tz[6] = {0, 1, 1, 1, 0, 0};
    const int n = g.arity();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 6;
    double w = 0.0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        Mask x = 0, y = 0, z = 0;
        double pr = 1.0;
        for (int i = 0; i < n; ++i) {
            const int t = static_cast<int>(c % 6);
            c /= 6;
            pr *= p[t];
            x |= Mask(tx[t]) << i;
            y |= Mask(ty[t]) << i;
            z |= Mask(tz[t]) << i;
        }
        const bool a = g.f[x], b = g.g[y], d = g.h[z];
        if (a == b && b == d) w += pr;
    }
    return w;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

inline double binomial_tail(int n, int k) {
    std::uint64_t t = 0;
    for (int j = k < 0 ? 0 : k; j <= n; ++j) t += binomial(n, j);
    return static_cast<double>(t) / static_cast<double>(std::uint64_t{1} << n);
}

inline BooleanFunction random_function(int n, std::mt19937_64& rng) {
    return BooleanFunction::from_predicate(n, [&](Mask) { return (rng() & 1U) != 0; });
}

inline gswf::EvenProductDistribution random_even(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 0.5);
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    return gswf::even_product(a, b - a, 0.5 - b);
}

}  // namespace oracle
