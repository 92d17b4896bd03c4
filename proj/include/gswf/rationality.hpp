#pragma once

// Probability W(f,g,h) that a three-alternative GSWF produces a cyclic (irrational)
// societal preference, computed three independent ways:
//
//   w_formula     closed form from spectra; even product distributions only
//   w_oracle      exact enumeration of all 6^n admissible profiles
//   w_monte_carlo seeded sampling of profiles
//
// The oracle and the sampler share no code with the spectral path.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gswf/bfn.hpp"
#include "gswf/dist.hpp"

namespace gswf {

inline constexpr int kOracleMaxArity = 9;

/// Choice functions for the pairs (A,B), (B,C), (C,A).
struct Gswf {
    BooleanFunction f;
    BooleanFunction g;
    BooleanFunction h;

    Gswf(BooleanFunction f_, BooleanFunction g_, BooleanFunction h_);
    int arity() const noexcept { return f.arity(); }
};

enum class Method { formula, oracle, monte_carlo };
std::string_view to_string(Method m);

struct WResult {
    double w = 0.0;
    /// p1 p2 p3 + (1-p1)(1-p2)(1-p3); NaN when the method does not produce it.
    double base = 0.0;
    /// <<f,g>>, <<g,h>>, <<h,f>> at their respective noise parameters.
    std::array<double, 3> cross_terms{};
    std::array<double, 3> deltas{};
    std::array<double, 3> expectations{};
    Method method = Method::formula;
    int n = 0;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> std_error;
};

/// sum over nonempty S of a[S] b[S] delta^|S|.
double biased_inner_product(const Spectrum& a, const Spectrum& b, double delta);

/// coeffs[S] * eps^|S|.
PseudoSpectrum noise_operator_spectral(const Spectrum& s, double eps);

/// E[f(x xor y)] with Pr[y_i = 0] = (1+eps)/2 independently, for every x.
std::vector<double> noise_operator_convolution(const BooleanFunction& f, double eps);
std::vector<double> noise_operator_convolution(std::vector<double> values, double eps);

WResult w_formula(const Gswf& gswf, const EvenProductDistribution& d);

/// Same closed form on arbitrary real spectra; p_i are the empty-set coefficients.
WResult w_from_spectra(const Spectrum& sf, const Spectrum& sg, const Spectrum& sh,
                       const EvenProductDistribution& d);

/// Exact enumeration of all 6^n admissible profiles; n <= kOracleMaxArity.
WResult w_oracle(const Gswf& gswf, const TripleDistribution& t);

WResult w_monte_carlo(const Gswf& gswf, const TripleDistribution& t, std::uint64_t samples,
                      std::uint64_t seed);

/// Sign-ignoring variant at delta = -1/3: every cross term replaced by
/// -sum_{S != 0} |a[S] b[S] (-1/3)^|S||.
double w_prime(const Gswf& gswf);

}  // namespace gswf
