#pragma once

// JSON and text renderings shared by the CLI, the checks and the tests.

#include <string>

#include <json.hpp>

#include "gswf/bfn.hpp"
#include "gswf/dist.hpp"
#include "gswf/rationality.hpp"
#include "gswf/search.hpp"
#include "gswf/theorems.hpp"

namespace gswf {

inline constexpr const char* kSchemaVersion = "1";

/// {"n": n, "hex": packed table}.
nlohmann::json to_json(const BooleanFunction& f);
nlohmann::json to_json(const Gswf& g);
/// {"alpha", "beta", "gamma", "deltas", "triples": {"110": ..., ...}}.
nlohmann::json to_json(const EvenProductDistribution& d);
nlohmann::json to_json(const TripleDistribution& t);
/// Fields w, base, cross_terms, deltas, method, n, and samples/seed/stderr for Monte Carlo.
nlohmann::json to_json(const WResult& r);
nlohmann::json to_json(const theorems::BoundReport& r);
nlohmann::json to_json(const search::ExtremalResult& r);

/// Spectrum, level weights and structural predicates of one function.
nlohmann::json spectrum_json(const BooleanFunction& f);

/// Multi-line human-readable form including the base + cross-term decomposition.
std::string pretty(const WResult& r);
std::string pretty(const theorems::BoundReport& r);

}  // namespace gswf
