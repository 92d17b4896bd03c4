#pragma once

// Executable checks of the analytic statements about W(f,g,h). Each check evaluates
// the statement numerically and returns a BoundReport; nothing is taken on faith.
//
// Orientation: every claim is normalised to lhs <= rhs and margin = rhs - lhs.
//   ordinary check  pass <=> margin >= -tolerance
//   strict check    pass <=> margin >  tolerance
//   inverted check  (expected-failure demo) pass <=> the ordinary or strict test
//                   fails, i.e. the naive claim is violated, which is what the demo exhibits.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gswf/dist.hpp"
#include "gswf/rationality.hpp"

namespace gswf::theorems {

inline constexpr double kExactTolerance = 1e-12;
inline constexpr double kLargeSumTolerance = 1e-9;
inline constexpr double kAsymptoticTolerance = 0.01;

struct BoundReport {
    std::string name;
    std::string claim;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tolerance = kExactTolerance;
    bool pass = false;
    bool strict = false;
    bool inverted = false;
    /// False when the inputs fall outside the statement's hypothesis; pass is then
    /// vacuously true and nothing was asserted.
    bool applicable = true;
    nlohmann::json witness = nlohmann::json::object();
    nlohmann::json details = nlohmann::json::object();
    /// Sub-claims of a compound check; the report passes iff every part passes and
    /// mirrors the lhs/rhs/margin of its worst part.
    std::vector<BoundReport> parts;
};

/// Compound report from parts: first failing part, else the one with the smallest margin.
BoundReport combine(std::string name, std::string claim, std::vector<BoundReport> parts);

/// Fills margin and pass from lhs, rhs, tolerance and the strict/inverted flags.
BoundReport finalize(BoundReport r);

BoundReport check_formula_vs_oracle(int n_max, int trials, int distributions, std::uint64_t seed);
/// Single instance; not applicable (formula not asserted) for non-even distributions.
BoundReport check_formula_vs_oracle_at(const Gswf& gswf, const TripleDistribution& t);

/// Requires alpha, beta, gamma <= 1/4, else HypothesisError. trials == 0 means exhaustive.
BoundReport check_monotone_bound(int n, const EvenProductDistribution& d, std::uint64_t trials = 0,
                                 std::uint64_t seed = 0);
/// check_monotone_bound over the 5x5 grid alpha, beta in {1/8, 5/32, 3/16, 7/32, 1/4}.
BoundReport check_monotone_bound_grid(int n);
/// Max W over balanced monotone triples under the uniform distribution equals 1/4.
BoundReport check_monotone_balanced_max(int n);

BoundReport check_biased_product_sign(int n, const std::vector<double>& delta_grid);
/// Inverted: a non-monotone pair with (1/delta)<<f,g>>_delta < 0 exists.
BoundReport check_biased_product_sign_nonmonotone(int n, const std::vector<double>& delta_grid);

BoundReport check_fkg(int n, std::uint64_t trials, std::uint64_t seed);

/// trials == 0 means exhaustive over all balanced triples (n <= 2 sensible).
BoundReport check_balanced_bound(int n, std::uint64_t trials, std::uint64_t seed);
/// The non-Boolean "looks balanced" spectra reach W = 3/8 exactly.
BoundReport check_balanced_pseudo_spectrum();
/// The first-level example (x_i, x_i, 1 - x_i) and a second-level one reach W = 1/3.
BoundReport check_balanced_one_third_examples(int n);
/// The three coefficient vectors of the pseudo-spectrum example on n >= 3 voters.
std::array<PseudoSpectrum, 3> pseudo_spectrum_example(int n);

BoundReport check_lemma_power_sums(int k_max, int grid_steps);

BoundReport check_neutral_symmetric_bound(const std::vector<int>& n_list,
                                          const EvenProductDistribution& d);
/// (1/4 - 1/(2 pi)) (1 + sum delta^3) at the uniform distribution against 0.0808.
BoundReport check_neutral_symmetric_constant();
/// At n = 3 majority attains the neutral-symmetric lower bound with equality.
BoundReport check_neutral_symmetric_equality();

/// n (C(n-1, (n-1)/2) 2^{-n})^2, the first-level weight of majority.
double majority_first_level_weight(int n);

BoundReport check_majority_stability(const std::vector<int>& n_list,
                                     const std::vector<double>& rho_grid);
/// W(maj_n, maj_n, maj_n) under the uniform distribution against 1/4 - (3/2pi) arcsin(1/3).
BoundReport check_condorcet_limit(int n);

BoundReport check_dual_claim(int n_max);

BoundReport check_lower_bound_biased(int n, std::uint64_t trials, const std::vector<double>& delta_grid,
                                     std::uint64_t seed);
/// Inverted: at delta = +-1 the bound -p1 p2 is attained by non-constant pairs.
BoundReport check_lower_bound_biased_endpoint_equality(int n);

BoundReport check_arrow_sum_condition(int n);

/// Upper bound 2^{-n}(1-2^{-n}) - (1/3) n C(n-1,(n-1)/2) 2^{-2n} on W'(AND, OR, maj).
double w_prime_first_level_bound(int n);
/// Inverted: the first-level bound on W' goes negative (n = 61 by default).
BoundReport check_w_prime_counterexample(int n = 61);
/// Direct evaluation of W'(AND_3, OR_3, maj_3) is positive and never exceeds W.
BoundReport check_w_prime_small();

/// (i) 0 < W(and_dual_majority(n)) <= 0.471^n for n in and_n_list; (ii) W/eta strictly
/// decreasing for threshold_instability(n, q) along threshold_n_list; (iii) q - 1.08 <
/// H(q) - 1 on q in {0.05, 0.10, ..., 0.45}.
BoundReport check_instability_example(const std::vector<int>& and_n_list,
                                      const std::vector<int>& threshold_n_list, double q);
/// min(E[f], E[g], E[h]) >= eta for threshold_instability(n, q); `normalized` selects
/// 2^{n(H(q)-1)}/(n+1) instead of the printed 2^{nH(q)-1}/(n+1).
BoundReport check_instability_expectation_floor(const std::vector<int>& n_list, double q,
                                                bool normalized);

BoundReport check_alpha_half_ceiling(int n, std::uint64_t trials, std::uint64_t seed);
/// alpha_half_extremal under (1/2, 0, 0) gives exactly 1/2.
BoundReport check_alpha_half_extremal();

struct CheckEntry {
    std::string name;
    std::function<BoundReport(std::uint64_t seed)> run;
};

/// The default verification suite, sorted by name.
const std::vector<CheckEntry>& registry();

/// Runs the named checks (all when `names` is empty) and returns reports sorted by name.
std::vector<BoundReport> run_checks(const std::vector<std::string>& names, std::uint64_t seed);

}  // namespace gswf::theorems
