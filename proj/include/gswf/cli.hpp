#pragma once

// Command-line front end: spectrum, rationality, verify, search, simulate, catalog, curve.
//
// Exit status: 0 success, 1 a non-inverted check failed, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gswf/bfn.hpp"
#include "gswf/dist.hpp"

namespace gswf::cli {

int run(int argc, char** argv);
/// args excludes the program name; output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "maj:15", "thr:15:12", "dict:15:1", "and" (with default_n) or a hex table ("e8", "0xe8").
BooleanFunction parse_function(std::string_view spec, int default_n);

/// Decimal or rational literal such as "0.25" or "1/6".
double parse_real(std::string_view text);

/// CSV with header n,rho,value,reference,abs_err.
std::string majority_stability_curve(const std::vector<int>& n_list,
                                     const std::vector<double>& rho_grid);
/// CSV with header n,q,k,W,eta,ratio,eta_normalized.
std::string instability_curve(const std::vector<int>& n_list, double q);

}  // namespace gswf::cli
