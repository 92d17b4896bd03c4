#pragma once

// Named function families and the preset GSWFs used throughout the harness.

#include <string>
#include <string_view>
#include <vector>

#include "gswf/bfn.hpp"
#include "gswf/rationality.hpp"

namespace gswf::catalog {

enum class Family { dictator, majority, and_, or_, threshold, parity, tribes, constant };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct FamilySpec {
    Family family;
    int n;
    /// dictator: voter (1-based); threshold: k; tribes: tribe size; constant: bit.
    int param = 0;
};

/// Throws ValidationError for even-n majority, k outside [0, n+1], voter outside [1, n], ...
BooleanFunction make(const FamilySpec& spec);

inline BooleanFunction dictator(int n, int voter = 1) { return make({Family::dictator, n, voter}); }
inline BooleanFunction majority(int n) { return make({Family::majority, n, 0}); }
inline BooleanFunction threshold(int n, int k) { return make({Family::threshold, n, k}); }
inline BooleanFunction and_fn(int n) { return make({Family::and_, n, 0}); }
inline BooleanFunction or_fn(int n) { return make({Family::or_, n, 0}); }
inline BooleanFunction parity(int n) { return make({Family::parity, n, 0}); }
inline BooleanFunction constant(int n, bool bit) { return make({Family::constant, n, bit ? 1 : 0}); }

struct PresetParams {
    int voter = 1;
    double q = 0.2;
};

inline constexpr std::string_view kPresetNames[] = {
    "alpha_half_extremal", "and_dual_majority",     "condorcet",
    "dictator_triple",     "split_dictators",       "threshold_instability",
};

Gswf preset_gswf(std::string_view name, int n, const PresetParams& params = {});

/// ceil((1-q) n), computed so that exact products such as 0.8 * 5 do not round up.
int instability_threshold(int n, double q);

/// H(q) = -q log2 q - (1-q) log2 (1-q).
double binary_entropy(double q);

/// 2^{n H(q) - 1} / (n + 1), the expectation floor exactly as printed next to the
/// binomial-entropy inequality. Requires 0 < q < 1/2 and n >= 1.
double eta(int n, double q);

/// 2^{n (H(q) - 1)} / (n + 1): the floor in the instability theorem statement, which is
/// what the binomial-entropy inequality actually yields for E[threshold] when qn >= 1.
double eta_normalized(int n, double q);

/// One-line parameter schema per family and per preset, for `catalog list`.
struct CatalogEntry {
    std::string kind;  // "family" | "preset"
    std::string name;
    std::string params;
    std::string description;
};
std::vector<CatalogEntry> list_entries();

}  // namespace gswf::catalog
