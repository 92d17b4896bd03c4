#include "gswf/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gswf/error.hpp"

namespace gswf {

namespace {
constexpr double kSumTolerance = 1e-12;
constexpr double kRenormTolerance = 1e-9;
}  // namespace

TripleDistribution::TripleDistribution(const std::array<double, 6>& p) : p_(p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] >= 0.0) || !std::isfinite(p[i]))
            throw ValidationError(std::string("probability of triple ") + kTripleNames[i] +
                                  " must be a finite nonnegative number");
    }
    const double s = std::accumulate(p.begin(), p.end(), 0.0);
    if (std::abs(s - 1.0) > kSumTolerance)
        throw ValidationError("triple probabilities must sum to 1, got " + std::to_string(s));
}

TripleDistribution TripleDistribution::uniform() {
    std::array<double, 6> p;
    p.fill(1.0 / 6.0);
    return TripleDistribution(p);
}

double TripleDistribution::probability(VoterTriple t) const noexcept {
    for (std::size_t i = 0; i < kAdmissibleTriples.size(); ++i)
        if (kAdmissibleTriples[i] == t) return p_[i];
    return 0.0;
}

std::array<double, 3> EvenProductDistribution::deltas() const noexcept {
    return {4.0 * alpha_ - 1.0, 4.0 * beta_ - 1.0, 4.0 * gamma_ - 1.0};
}

bool EvenProductDistribution::is_uniform() const noexcept {
    constexpr double sixth = 1.0 / 6.0;
    return std::abs(alpha_ - sixth) <= kSumTolerance && std::abs(beta_ - sixth) <= kSumTolerance &&
           std::abs(gamma_ - sixth) <= kSumTolerance;
}

EvenProductDistribution even_product(double alpha, double beta, double gamma) {
    const char* names[] = {"alpha", "beta", "gamma"};
    const double v[] = {alpha, beta, gamma};
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(v[i]) || v[i] < 0.0)
            throw ValidationError(std::string(names[i]) + " must be nonnegative, got " +
                                  std::to_string(v[i]));
    }
    const double s = alpha + beta + gamma;
    if (std::abs(s - 0.5) > kRenormTolerance)
        throw ValidationError("alpha + beta + gamma must equal 1/2, got " + std::to_string(s));
    // Absorb the residual into gamma; this can push a tiny gamma below zero.
    gamma = std::max(0.0, 0.5 - alpha - beta);
    return EvenProductDistribution(alpha, beta, gamma);
}

EvenProductDistribution uniform_distribution() {
    return even_product(1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0);
}

TripleDistribution to_triple_distribution(const EvenProductDistribution& d) {
    const double a = d.alpha(), b = d.beta(), c = d.gamma();
    std::array<double, 6> p{a, b, c, a, b, c};
    // Renormalise so the six entries sum to 1 even after the gamma clamp.
    const double s = 2.0 * (a + b + c);
    for (auto& x : p) x /= s;
    return TripleDistribution(p);
}

std::array<double, 8> per_voter_spectrum(const TripleDistribution& t) {
    std::array<double, 8> c{};
    for (unsigned s = 0; s < 8; ++s) {
        double acc = 0.0;
        for (unsigned x = 0; x < 8; ++x) {
            const double px = t.probability({(x & 1U) != 0, (x & 2U) != 0, (x & 4U) != 0});
            const int neg = __builtin_popcount(s & ~x);
            acc += (neg & 1) ? -px : px;
        }
        c[s] = acc / 8.0;
    }
    return c;
}

bool is_even_product(const TripleDistribution& t) {
    return std::abs(t[0] - t[3]) <= kSumTolerance && std::abs(t[1] - t[4]) <= kSumTolerance &&
           std::abs(t[2] - t[5]) <= kSumTolerance;
}

double profile_probability(const TripleDistribution& t, std::span<const VoterTriple> profile) {
    double p = 1.0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (!profile[i].admissible())
            throw ValidationError("voter " + std::to_string(i + 1) +
                                  " has a cyclic triple (000 or 111), which is not an order");
        p *= t.probability(profile[i]);
    }
    return p;
}

}  // namespace gswf
