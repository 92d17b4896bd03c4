#pragma once

// Boolean functions on the discrete cube {0,1}^n and their Fourier-Walsh spectra.
//
// Bit convention, used for inputs x and subset masks S alike: bit i (LSB = 0)
// corresponds to voter i+1. The spectrum is taken with respect to the signed
// characters r_S(x) = prod_{i in S} (2 x_i - 1), so coeffs[S] = E[f * r_S].

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gswf {

inline constexpr int kMaxArity = 24;

using Mask = std::uint32_t;

class BooleanFunction {
public:
    /// Constant-0 function on n voters.
    explicit BooleanFunction(int n);

    /// Builds the table by evaluating `pred` on every input mask.
    static BooleanFunction from_predicate(int n, const std::function<bool(Mask)>& pred);
    /// Parses a packed table written as a big-endian hex number (bit x = f(x)).
    static BooleanFunction from_hex(int n, std::string_view hex);
    /// Truth table given as the low 2^n bits of `bits` (n <= 6).
    static BooleanFunction from_bits(int n, std::uint64_t bits);

    int arity() const noexcept { return n_; }
    std::size_t size() const noexcept { return std::size_t{1} << n_; }

    /// Throws ValidationError when x is outside [0, 2^n).
    bool evaluate(Mask x) const;
    bool operator[](Mask x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
    void set(Mask x, bool value) noexcept;

    std::size_t popcount() const noexcept;
    std::string to_hex() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool operator==(const BooleanFunction&) const = default;
    /// Truth-table order: tables compared as unsigned integers (bit x has weight 2^x).
    std::strong_ordering operator<=>(const BooleanFunction& other) const;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

/// Real coefficient vector indexed by subset mask; no Booleanity implied.
class Spectrum {
public:
    int arity() const noexcept { return n_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double operator[](Mask s) const noexcept { return coeffs_[s]; }
    double mean() const noexcept { return coeffs_[0]; }

protected:
    Spectrum(int n, std::vector<double> coeffs);

private:
    int n_;
    std::vector<double> coeffs_;
};

/// Spectrum of an actual Boolean function; only walsh_transform creates one.
class WalshSpectrum : public Spectrum {
private:
    using Spectrum::Spectrum;
    friend WalshSpectrum walsh_transform(const BooleanFunction& f);
};

/// Arbitrary real coefficients of the same shape, e.g. "looks balanced" examples.
class PseudoSpectrum : public Spectrum {
public:
    /// Throws ValidationError unless coeffs.size() == 2^n with 1 <= n <= kMaxArity.
    PseudoSpectrum(int n, std::vector<double> coeffs);
    explicit PseudoSpectrum(const Spectrum& s);
};

WalshSpectrum walsh_transform(const BooleanFunction& f);

/// Pointwise values sum_S coeffs[S] r_S(x), for every x.
std::vector<double> inverse_walsh_transform(const Spectrum& s);

/// In-place signed-character butterfly on a length-2^n vector, without normalisation.
void walsh_butterfly(std::span<double> values);

double expectation(const BooleanFunction& f);

/// Entry k is the squared weight on level k; length n+1.
std::vector<double> level_weights(const Spectrum& s);

bool is_balanced(const BooleanFunction& f);
bool is_monotone(const BooleanFunction& f);
bool is_constant(const BooleanFunction& f);

/// f'(x) = 1 - f(not x).
BooleanFunction dual(const BooleanFunction& f);
bool is_self_dual(const BooleanFunction& f);

/// f(x) with voter i+1 moved to slot perm[i]; perm must be a permutation of 0..n-1.
BooleanFunction permute_voters(const BooleanFunction& f, std::span<const int> perm);

/// Invariance under every permutation in `generators` (hence under the group they generate).
bool is_invariant_under(const BooleanFunction& f, std::span<const std::vector<int>> generators);
/// Invariance under the cyclic shift voter i -> voter i+1 (mod n).
bool is_cyclic_invariant(const BooleanFunction& f);

/// Voter index i (0-based) such that f(x) = x_i, or -1.
int dictator_voter(const BooleanFunction& f);
/// Voter index i (0-based) such that f(x) = 1 - x_i, or -1.
int anti_dictator_voter(const BooleanFunction& f);

inline int level(Mask s) noexcept { return __builtin_popcount(s); }

}  // namespace gswf
