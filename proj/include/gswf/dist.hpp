#pragma once

// Per-voter preference distributions over the six linear orders of {A, B, C}.
//
// A voter's order is the triple (x, y, z) of pairwise preferences for (A,B),
// (B,C), (C,A). The triples 000 and 111 are cyclic and never occur. All
// six-vectors use the fixed order 110, 011, 101, 001, 100, 010.

#include <array>
#include <span>

namespace gswf {

struct VoterTriple {
    bool x;
    bool y;
    bool z;

    /// Coordinate mask on {0,1}^3: bit 0 = x, bit 1 = y, bit 2 = z.
    constexpr unsigned mask() const noexcept {
        return (x ? 1U : 0U) | (y ? 2U : 0U) | (z ? 4U : 0U);
    }
    constexpr bool admissible() const noexcept { return !(x == y && y == z); }
    constexpr bool operator==(const VoterTriple&) const = default;
};

inline constexpr std::array<VoterTriple, 6> kAdmissibleTriples{{
    {true, true, false},   // 110
    {false, true, true},   // 011
    {true, false, true},   // 101
    {false, false, true},  // 001
    {true, false, false},  // 100
    {false, true, false},  // 010
}};

inline constexpr std::array<const char*, 6> kTripleNames{"110", "011", "101",
                                                         "001", "100", "010"};

class TripleDistribution {
public:
    /// Throws ValidationError on a negative entry or a sum differing from 1 by > 1e-12.
    explicit TripleDistribution(const std::array<double, 6>& p);

    static TripleDistribution uniform();

    const std::array<double, 6>& probabilities() const noexcept { return p_; }
    double operator[](std::size_t i) const noexcept { return p_[i]; }
    /// Probability of an arbitrary triple; 0 for 000 and 111.
    double probability(VoterTriple t) const noexcept;

private:
    std::array<double, 6> p_;
};

class EvenProductDistribution {
public:
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return gamma_; }

    /// Noise parameters (4a-1, 4b-1, 4c-1) paired with (f,g), (g,h), (h,f).
    std::array<double, 3> deltas() const noexcept;
    bool is_uniform() const noexcept;

    friend EvenProductDistribution even_product(double alpha, double beta, double gamma);

private:
    EvenProductDistribution(double a, double b, double c) : alpha_(a), beta_(b), gamma_(c) {}
    double alpha_;
    double beta_;
    double gamma_;
};

/// Pr[110] = Pr[001] = alpha, Pr[011] = Pr[100] = beta, Pr[101] = Pr[010] = gamma.
/// Sums within 1e-9 of 1/2 are renormalised through gamma; anything else is rejected.
EvenProductDistribution even_product(double alpha, double beta, double gamma);
EvenProductDistribution uniform_distribution();

TripleDistribution to_triple_distribution(const EvenProductDistribution& d);

/// Fourier-Walsh coefficients of F4(x,y,z) = Pr[(x,y,z)] on {0,1}^3, indexed by
/// coordinate mask (bit 0 = x, bit 1 = y, bit 2 = z).
std::array<double, 8> per_voter_spectrum(const TripleDistribution& t);

/// Every order has the probability of its reverse (within 1e-12).
bool is_even_product(const TripleDistribution& t);

/// Product of the per-voter probabilities; ValidationError on a 000/111 triple.
double profile_probability(const TripleDistribution& t, std::span<const VoterTriple> profile);

}  // namespace gswf
