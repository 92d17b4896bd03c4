#pragma once

// Exhaustive and randomized extremal search for W over classes of choice functions.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gswf/bfn.hpp"
#include "gswf/dist.hpp"
#include "gswf/rationality.hpp"

namespace gswf::search {

inline constexpr int kExhaustiveMaxArity = 4;
inline constexpr int kMonotoneEnumerationMaxArity = 5;
inline constexpr double kTripleBudget = 1e9;
inline constexpr std::size_t kPairCacheBytes = std::size_t{1} << 30;

enum Predicate : unsigned {
    kBalanced = 1U << 0,
    kMonotone = 1U << 1,
    kSelfDual = 1U << 2,
    kCyclicInvariant = 1U << 3,
    kNonConstant = 1U << 4,
};

/// Conjunction of structural predicates, optionally with lo <= E[f] <= hi.
class ClassFilter {
public:
    ClassFilter(unsigned predicates, std::optional<std::pair<double, double>> expectation = {});

    /// Comma-separated: balanced,monotone,self_dual,cyclic_invariant,non_constant,
    /// expectation_in:LO:HI.
    static ClassFilter parse(std::string_view text);

    bool accepts(const BooleanFunction& f) const;
    unsigned predicates() const noexcept { return predicates_; }
    const std::optional<std::pair<double, double>>& expectation_range() const noexcept {
        return expectation_;
    }
    std::string to_string() const;

private:
    unsigned predicates_;
    std::optional<std::pair<double, double>> expectation_;
};

/// All monotone functions on n <= 5 voters in ascending truth-table order (constants included).
std::vector<BooleanFunction> enumerate_monotone(int n);

/// All functions passing the filter, ascending truth-table order. n <= 4, or n = 5
/// when the filter requires monotonicity.
std::vector<BooleanFunction> enumerate_class(int n, const ClassFilter& filter);

enum class Objective { min_w, max_w };
std::string_view to_string(Objective o);
Objective parse_objective(std::string_view text);

struct SearchOptions {
    /// Skip triples (d, d, d) where d is a dictator or an anti-dictator, the only
    /// always-rational triples of non-constant functions.
    bool exclude_dictatorial = false;
};

struct ExtremalResult {
    Objective objective = Objective::max_w;
    double value = 0.0;
    std::optional<Gswf> witness;
    EvenProductDistribution distribution = uniform_distribution();
    std::uint64_t evaluated = 0;
    std::string mode;  // "exhaustive" | "random"
    std::optional<std::uint64_t> seed;
    std::string tie_break;
    std::array<std::string, 3> classes;
};

ExtremalResult extremal_w(int n, const ClassFilter& ff, const ClassFilter& fg,
                          const ClassFilter& fh, const EvenProductDistribution& d,
                          Objective objective, const SearchOptions& options = {});

/// Exhaustive optimum over explicit candidate lists (each in ascending order).
ExtremalResult extremal_w_over(const std::vector<BooleanFunction>& F,
                               const std::vector<BooleanFunction>& G,
                               const std::vector<BooleanFunction>& H,
                               const EvenProductDistribution& d, Objective objective,
                               const SearchOptions& options = {});

ExtremalResult random_search(int n, const ClassFilter& ff, const ClassFilter& fg,
                             const ClassFilter& fh, const EvenProductDistribution& d,
                             Objective objective, std::uint64_t trials, std::uint64_t seed,
                             const SearchOptions& options = {});

/// Draws one function from the class: uniform over the enumeration when it is
/// available, a random balanced table for balanced-only filters, rejection otherwise.
class ClassSampler {
public:
    ClassSampler(int n, const ClassFilter& filter);
    BooleanFunction operator()(std::mt19937_64& rng) const;

private:
    int n_;
    ClassFilter filter_;
    std::vector<BooleanFunction> members_;
};

BooleanFunction random_balanced(int n, std::mt19937_64& rng);

}  // namespace gswf::search
