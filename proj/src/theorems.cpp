#include "gswf/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "gswf/catalog.hpp"
#include "gswf/error.hpp"
#include "gswf/report.hpp"
#include "gswf/search.hpp"

namespace gswf::theorems {

using nlohmann::json;

BoundReport finalize(BoundReport r) {
    r.margin = r.rhs - r.lhs;
    const bool naive = r.strict ? r.margin > r.tolerance : r.margin >= -r.tolerance;
    if (!r.applicable)
        r.pass = true;
    else
        r.pass = r.inverted ? !naive : naive;
    return r;
}

BoundReport combine(std::string name, std::string claim, std::vector<BoundReport> parts) {
    BoundReport r;
    const BoundReport* worst = nullptr;
    bool all_pass = true;
    bool any_applicable = false;
    for (const auto& p : parts) {
        if (!p.applicable) continue;
        any_applicable = true;
        if (!p.pass) {
            if (all_pass) worst = &p;
            all_pass = false;
        } else if (all_pass && (worst == nullptr || p.margin < worst->margin)) {
            worst = &p;
        }
    }
    if (worst != nullptr) r = *worst;
    r.parts.clear();
    r.name = std::move(name);
    r.claim = std::move(claim);
    r.applicable = any_applicable;
    r.pass = all_pass;
    r.parts = std::move(parts);
    return r;
}

namespace {

BoundReport bound(std::string name, std::string claim, double lhs, double rhs,
                  double tolerance = kExactTolerance) {
    BoundReport r;
    r.name = std::move(name);
    r.claim = std::move(claim);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    return r;
}

BooleanFunction random_function(int n, std::mt19937_64& rng) {
    return BooleanFunction::from_predicate(n, [&](Mask) { return (rng() & 1U) != 0; });
}

std::vector<BooleanFunction> all_functions(int n) {
    if (n < 1 || n > 4) throw CapacityError("all-function enumeration needs 1 <= n <= 4");
    const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
    std::vector<BooleanFunction> out;
    out.reserve(count);
    for (std::uint64_t b = 0; b < count; ++b) out.push_back(BooleanFunction::from_bits(n, b));
    return out;
}

std::vector<WalshSpectrum> spectra_of(const std::vector<BooleanFunction>& fs) {
    std::vector<WalshSpectrum> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(walsh_transform(f));
    return out;
}

EvenProductDistribution random_even_product(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    return even_product(a / 2.0, (b - a) / 2.0, (1.0 - b) / 2.0);
}

std::vector<EvenProductDistribution> quarter_grid() {
    static const double v[] = {1.0 / 8, 5.0 / 32, 3.0 / 16, 7.0 / 32, 1.0 / 4};
    std::vector<EvenProductDistribution> out;
    for (double a : v)
        for (double b : v) out.push_back(even_product(a, b, 0.5 - a - b));
    return out;
}

std::vector<EvenProductDistribution> half_grid() {
    static const double v[] = {0.0, 1.0 / 8, 1.0 / 4, 3.0 / 8, 1.0 / 2};
    std::vector<EvenProductDistribution> out;
    for (double a : v)
        for (double b : v)
            if (a + b <= 0.5) out.push_back(even_product(a, b, 0.5 - a - b));
    return out;
}

json triple_json(const BooleanFunction& f, const BooleanFunction& g, const BooleanFunction& h) {
    return to_json(Gswf(f, g, h));
}

json pair_json(const BooleanFunction& f, const BooleanFunction& g) {
    return json{{"f", to_json(f)}, {"g", to_json(g)}};
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

/// E[threshold(n, k)] as an exact binomial tail.
double threshold_expectation(int n, int k) {
    std::uint64_t tail = 0;
    for (int j = std::max(k, 0); j <= n; ++j) tail += binomial(n, j);
    return std::ldexp(static_cast<double>(tail), -n);
}

void require_odd(int n, const char* what) {
    if (n < 1 || n % 2 == 0)
        throw ValidationError(std::string(what) + " needs odd n >= 1, got " + std::to_string(n));
}

}  // namespace

BoundReport check_formula_vs_oracle_at(const Gswf& gswf, const TripleDistribution& t) {
    auto r = bound("formula_vs_oracle", "|w_formula - w_oracle| <= 1e-12", 0.0, 0.0);
    r.witness = {{"gswf", to_json(gswf)}, {"distribution", to_json(t)}};
    if (!is_even_product(t)) {
        r.applicable = false;
        r.details["reason"] = "distribution is not an even product; formula not asserted";
        return finalize(r);
    }
    const auto& p = t.probabilities();
    const auto d = even_product(p[0], p[1], p[2]);
    const double wf = w_formula(gswf, d).w;
    const double wo = w_oracle(gswf, t).w;
    r.lhs = std::abs(wf - wo);
    r.details = {{"w_formula", wf}, {"w_oracle", wo}};
    return finalize(r);
}

BoundReport check_formula_vs_oracle(int n_max, int trials, int distributions, std::uint64_t seed) {
    if (n_max < 1 || n_max > kOracleMaxArity)
        throw CapacityError("formula_vs_oracle needs 1 <= n_max <= " +
                            std::to_string(kOracleMaxArity));
    std::mt19937_64 rng(seed);
    std::vector<BoundReport> parts;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<EvenProductDistribution> dists{uniform_distribution()};
        for (int i = 1; i < distributions; ++i) dists.push_back(random_even_product(rng));

        std::vector<std::array<BooleanFunction, 3>> triples;
        if (n <= 2) {
            const auto fs = all_functions(n);
            for (const auto& f : fs)
                for (const auto& g : fs)
                    for (const auto& h : fs) triples.push_back({f, g, h});
        } else {
            for (int i = 0; i < trials; ++i)
                triples.push_back(
                    {random_function(n, rng), random_function(n, rng), random_function(n, rng)});
        }

        double worst = -1.0;
        json witness;
        for (const auto& d : dists) {
            const auto t = to_triple_distribution(d);
            for (const auto& [f, g, h] : triples) {
                const Gswf gswf(f, g, h);
                const double diff = std::abs(w_formula(gswf, d).w - w_oracle(gswf, t).w);
                if (diff > worst) {
                    worst = diff;
                    witness = {{"gswf", to_json(gswf)}, {"distribution", to_json(d)}};
                }
            }
        }
        auto part = bound("formula_vs_oracle_n" + std::to_string(n),
                          "max |w_formula - w_oracle| <= 1e-12", worst, 0.0);
        part.witness = witness;
        part.details = {{"n", n},
                        {"mode", n <= 2 ? "exhaustive" : "random"},
                        {"triples", triples.size()},
                        {"distributions", dists.size()}};
        parts.push_back(finalize(part));
    }
    auto r = combine("formula_vs_oracle",
                     "closed form agrees with exhaustive enumeration under even product "
                     "distributions",
                     std::move(parts));
    r.details["seed"] = seed;
    return r;
}

BoundReport check_monotone_bound(int n, const EvenProductDistribution& d, std::uint64_t trials,
                                 std::uint64_t seed) {
    const double q = 0.25 + kExactTolerance;
    if (d.alpha() > q || d.beta() > q || d.gamma() > q)
        throw HypothesisError("monotone bound requires alpha, beta, gamma <= 1/4; got (" +
                              std::to_string(d.alpha()) + ", " + std::to_string(d.beta()) +
                              ", " + std::to_string(d.gamma()) + ")");
    const auto fs = search::enumerate_monotone(n);
    const auto sp = spectra_of(fs);
    double worst = -std::numeric_limits<double>::infinity();
    double w_at = 0.0;
    double base_at = 0.0;
    std::array<std::size_t, 3> at{};
    std::uint64_t evaluated = 0;
    auto visit = [&](std::size_t i, std::size_t j, std::size_t k) {
        const auto res = w_from_spectra(sp[i], sp[j], sp[k], d);
        ++evaluated;
        if (res.w - res.base > worst + kExactTolerance) {
            worst = res.w - res.base;
            w_at = res.w;
            base_at = res.base;
            at = {i, j, k};
        }
    };
    if (trials == 0) {
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j)
                for (std::size_t k = 0; k < fs.size(); ++k) visit(i, j, k);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const auto i = pick(rng);
            const auto j = pick(rng);
            visit(i, j, pick(rng));
        }
    }
    auto r = bound("monotone_bound", "W <= p1 p2 p3 + (1-p1)(1-p2)(1-p3) for monotone triples",
                   w_at, base_at);
    r.witness = {{"gswf", triple_json(fs[at[0]], fs[at[1]], fs[at[2]])},
                 {"distribution", to_json(d)}};
    r.details = {{"n", n},
                 {"evaluated", evaluated},
                 {"mode", trials == 0 ? "exhaustive" : "random"}};
    if (trials != 0) r.details["seed"] = seed;
    return finalize(r);
}

BoundReport check_monotone_bound_grid(int n) {
    std::vector<BoundReport> parts;
    for (const auto& d : quarter_grid()) {
        auto p = check_monotone_bound(n, d);
        p.name = "monotone_bound(" + std::to_string(d.alpha()) + "," + std::to_string(d.beta()) +
                 "," + std::to_string(d.gamma()) + ")";
        parts.push_back(std::move(p));
    }
    auto r = combine("monotone_bound_grid",
                     "W <= base for every monotone triple on a 5x5 grid with alpha, beta, gamma "
                     "<= 1/4",
                     std::move(parts));
    // The split dictators meet the bound with equality.
    if (n >= 3) {
        const auto s = catalog::preset_gswf("split_dictators", n);
        const auto res = w_formula(s, uniform_distribution());
        r.details["split_dictators_uniform"] = {{"w", res.w}, {"base", res.base}};
    }
    return r;
}

BoundReport check_monotone_balanced_max(int n) {
    std::vector<BooleanFunction> fs;
    for (auto& f : search::enumerate_monotone(n))
        if (is_balanced(f)) fs.push_back(std::move(f));
    const auto result =
        search::extremal_w_over(fs, fs, fs, uniform_distribution(), search::Objective::max_w);
    auto upper = bound("monotone_balanced_upper", "max W <= 1/4", result.value, 0.25);
    auto attained = bound("monotone_balanced_attained", "max W = 1/4",
                          std::abs(result.value - 0.25), 0.0);
    json witness;
    if (result.witness) witness = {{"gswf", to_json(*result.witness)}};
    upper.witness = attained.witness = witness;
    auto r = combine("monotone_balanced_max",
                     "balanced monotone triples under the uniform distribution: max W = 1/4",
                     {finalize(upper), finalize(attained)});
    r.details = {{"n", n}, {"max_w", result.value}, {"evaluated", result.evaluated},
                 {"functions", fs.size()}};
    return r;
}

namespace {

BoundReport sign_scan(const std::vector<BooleanFunction>& fs,
                      const std::vector<double>& delta_grid) {
    const auto sp = spectra_of(fs);
    double worst = std::numeric_limits<double>::infinity();
    json witness;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j)
            for (double delta : delta_grid) {
                if (delta == 0.0) continue;
                const double v = biased_inner_product(sp[i], sp[j], delta) / delta;
                if (v < worst - kExactTolerance) {
                    worst = v;
                    witness = pair_json(fs[i], fs[j]);
                    witness["delta"] = delta;
                }
            }
    auto r = bound("", "", 0.0, worst);
    r.witness = witness;
    return r;
}

}  // namespace

BoundReport check_biased_product_sign(int n, const std::vector<double>& delta_grid) {
    auto r = sign_scan(search::enumerate_monotone(n), delta_grid);
    r.name = "biased_product_sign";
    r.claim = "(1/delta) <<f,g>>_delta >= 0 for monotone f, g";
    r.details = {{"n", n}, {"delta_grid", delta_grid}};
    return finalize(r);
}

BoundReport check_biased_product_sign_nonmonotone(int n, const std::vector<double>& delta_grid) {
    auto r = sign_scan(all_functions(n), delta_grid);
    r.name = "biased_product_sign_nonmonotone_demo";
    r.claim = "without monotonicity (1/delta) <<f,g>>_delta can be negative";
    r.inverted = true;
    r.details = {{"n", n}, {"delta_grid", delta_grid}};
    return finalize(r);
}

namespace {

double covariance(const BooleanFunction& f, const BooleanFunction& g) {
    std::size_t both = 0;
    for (Mask x = 0; x < f.size(); ++x) both += (f[x] && g[x]) ? 1 : 0;
    const double size = static_cast<double>(f.size());
    return static_cast<double>(both) / size - expectation(f) * expectation(g);
}

BooleanFunction complement(const BooleanFunction& f) {
    return BooleanFunction::from_predicate(f.arity(), [&](Mask x) { return !f[x]; });
}

}  // namespace

BoundReport check_fkg(int n, std::uint64_t trials, std::uint64_t seed) {
    const auto fs = search::enumerate_monotone(n);
    double min_same = std::numeric_limits<double>::infinity();
    double max_mixed = -std::numeric_limits<double>::infinity();
    json w_same, w_mixed;
    std::uint64_t evaluated = 0;
    auto visit = [&](const BooleanFunction& f, const BooleanFunction& g) {
        ++evaluated;
        const double c = covariance(f, g);
        if (c < min_same) {
            min_same = c;
            w_same = pair_json(f, g);
        }
        const auto gd = complement(g);
        const double cm = covariance(f, gd);
        if (cm > max_mixed) {
            max_mixed = cm;
            w_mixed = pair_json(f, gd);
        }
    };
    const bool exhaustive = n <= 3 || trials == 0;
    if (exhaustive) {
        for (const auto& f : fs)
            for (const auto& g : fs) visit(f, g);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const auto i = pick(rng);
            visit(fs[i], fs[pick(rng)]);
        }
    }
    auto same = bound("fkg_increasing", "E[fg] - E[f]E[g] >= 0 for increasing f, g", 0.0,
                      min_same);
    same.witness = w_same;
    auto mixed = bound("fkg_mixed", "E[fg] - E[f]E[g] <= 0 for f increasing, g decreasing",
                       max_mixed, 0.0);
    mixed.witness = w_mixed;
    auto r = combine("fkg_n" + std::to_string(n), "FKG inequality on the uniform cube",
                     {finalize(same), finalize(mixed)});
    r.details = {{"n", n}, {"pairs", evaluated}, {"mode", exhaustive ? "exhaustive" : "random"}};
    if (!exhaustive) r.details["seed"] = seed;
    return r;
}

BoundReport check_balanced_bound(int n, std::uint64_t trials, std::uint64_t seed) {
    const auto d = uniform_distribution();
    double best = -1.0;
    json witness;
    std::uint64_t evaluated = 0;
    if (trials == 0) {
        const auto fs = search::enumerate_class(n, search::ClassFilter(search::kBalanced));
        const auto sp = spectra_of(fs);
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j)
                for (std::size_t k = 0; k < fs.size(); ++k) {
                    const double w = w_from_spectra(sp[i], sp[j], sp[k], d).w;
                    ++evaluated;
                    if (w > best + kExactTolerance) {
                        best = w;
                        witness = {{"gswf", triple_json(fs[i], fs[j], fs[k])}};
                    }
                }
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const Gswf g(search::random_balanced(n, rng), search::random_balanced(n, rng),
                         search::random_balanced(n, rng));
            const double w = w_formula(g, d).w;
            ++evaluated;
            if (w > best + kExactTolerance) {
                best = w;
                witness = {{"gswf", to_json(g)}};
            }
        }
    }
    auto r = bound(trials == 0 ? "balanced_bound_n" + std::to_string(n)
                               : "balanced_bound_n" + std::to_string(n) + "_random",
                   "W <= 3/8 for balanced triples under the uniform distribution", best, 0.375);
    r.witness = witness;
    r.details = {{"n", n}, {"evaluated", evaluated}, {"max_w", best},
                 {"mode", trials == 0 ? "exhaustive" : "random"}};
    if (trials != 0) r.details["seed"] = seed;
    return finalize(r);
}

std::array<PseudoSpectrum, 3> pseudo_spectrum_example(int n) {
    if (n < 3) throw ValidationError("the pseudo-spectrum example needs n >= 3");
    const double c = 1.0 / (2.0 * std::sqrt(6.0));
    auto make = [&](int big) {
        std::vector<double> coeffs(std::size_t{1} << n, 0.0);
        coeffs[0] = 0.5;
        for (int v = 0; v < 3; ++v) coeffs[Mask{1} << v] = v == big ? 2.0 * c : -c;
        return PseudoSpectrum(n, std::move(coeffs));
    };
    return {make(0), make(1), make(2)};
}

BoundReport check_balanced_pseudo_spectrum() {
    const auto [f, g, h] = pseudo_spectrum_example(3);
    const auto res = w_from_spectra(f, g, h, uniform_distribution());
    auto r = bound("balanced_pseudo_spectrum",
                   "non-Boolean spectra with balanced weights give W = 3/8 exactly",
                   std::abs(res.w - 0.375), 0.0);
    double weight = 0.0;
    for (Mask s = 1; s < f.coeffs().size(); ++s) weight += f[s] * f[s];
    r.details = {{"w", res.w}, {"nonempty_weight", weight}};
    r.witness = {{"coefficients", {f.coeffs()[1], f.coeffs()[2], f.coeffs()[4]}}};
    return finalize(r);
}

BoundReport check_balanced_one_third_examples(int n) {
    if (n < 2) throw ValidationError("the one-third examples need n >= 2");
    const auto d = uniform_distribution();
    std::vector<BoundReport> parts;
    for (int i = 1; i <= n; ++i) {
        const auto x = catalog::dictator(n, i);
        const Gswf g(x, x, complement(x));
        const double w = w_formula(g, d).w;
        auto p = bound("first_level_voter_" + std::to_string(i), "W(x_i, x_i, 1 - x_i) = 1/3",
                       std::abs(w - 1.0 / 3.0), 0.0);
        p.witness = {{"gswf", to_json(g)}};
        p.details = {{"w", w}};
        parts.push_back(finalize(p));
    }
    const auto xr = BooleanFunction::from_predicate(n, [](Mask x) { return ((x ^ (x >> 1)) & 1U) != 0; });
    const Gswf second(xr, xr, xr);
    const double w = w_formula(second, d).w;
    auto p = bound("second_level_parity", "W(x1 xor x2 three times) = 1/3",
                   std::abs(w - 1.0 / 3.0), 0.0);
    p.witness = {{"gswf", to_json(second)}};
    p.details = {{"w", w}};
    parts.push_back(finalize(p));
    return combine("balanced_one_third_examples",
                   "first-level and second-level balanced examples reach W = 1/3",
                   std::move(parts));
}

BoundReport check_lemma_power_sums(int k_max, int grid_steps) {
    if (k_max < 1) throw ValidationError("k_max must be >= 1");
    if (grid_steps < 1) throw ValidationError("grid_steps must be >= 1");
    const int m = grid_steps;
    double worst = std::numeric_limits<double>::infinity();
    double boundary_worst = 0.0;
    json w_in, w_bd;
    std::uint64_t points = 0;
    for (int X = -m; X <= m; ++X)
        for (int Y = -m; Y <= m; ++Y) {
            const int Z = m - X - Y;
            if (Z < -m || Z > m) continue;
            const double x = double(X) / m, y = double(Y) / m, z = double(Z) / m;
            const bool on_boundary = std::abs(X) == m || std::abs(Y) == m || std::abs(Z) == m;
            ++points;
            const double cubes = x * x * x + y * y * y + z * z * z;
            for (int k = 1; k <= k_max; ++k) {
                const int e = 2 * k + 1;
                const double v = cubes - (std::pow(x, e) + std::pow(y, e) + std::pow(z, e));
                if (v < worst) {
                    worst = v;
                    w_in = {{"x", x}, {"y", y}, {"z", z}, {"k", k}};
                }
                if (on_boundary && std::abs(v) > boundary_worst) {
                    boundary_worst = std::abs(v);
                    w_bd = {{"x", x}, {"y", y}, {"z", z}, {"k", k}};
                }
            }
        }
    auto grid = bound("lemma_power_sums_grid",
                      "x^3 + y^3 + z^3 >= x^(2k+1) + y^(2k+1) + z^(2k+1) on x + y + z = 1",
                      0.0, worst);
    grid.witness = w_in;
    auto edge = bound("lemma_power_sums_boundary", "difference vanishes on the boundary",
                      boundary_worst, 0.0);
    edge.witness = w_bd;
    auto r = combine("lemma_power_sums", "power-sum inequality on the simplex slice",
                     {finalize(grid), finalize(edge)});
    r.details = {{"k_max", k_max}, {"grid_steps", grid_steps}, {"points", points}};
    return r;
}

double majority_first_level_weight(int n) {
    require_odd(n, "majority_first_level_weight");
    const double log_coeff = log_binomial(n - 1, (n - 1) / 2) - n * std::numbers::ln2;
    return n * std::exp(2.0 * log_coeff);
}

namespace {

double neutral_rhs(double dm, const EvenProductDistribution& d) {
    double cubes = 1.0;
    for (double delta : d.deltas()) cubes += delta * delta * delta;
    return (0.25 - dm) * cubes;
}

}  // namespace

BoundReport check_neutral_symmetric_bound(const std::vector<int>& n_list,
                                          const EvenProductDistribution& d) {
    std::vector<BoundReport> parts;
    for (int n : n_list) {
        require_odd(n, "neutral_symmetric_bound");
        const auto m = catalog::majority(n);
        const double w = w_formula(Gswf(m, m, m), d).w;
        const double dm = majority_first_level_weight(n);
        auto p = bound("neutral_symmetric_n" + std::to_string(n),
                       "W(maj, maj, maj) >= (1/4 - d_m)(1 + sum delta^3)", neutral_rhs(dm, d), w,
                       n >= 16 ? kLargeSumTolerance : kExactTolerance);
        p.witness = {{"n", n}, {"distribution", to_json(d)}};
        p.details = {{"w", w}, {"d_m", dm}};
        parts.push_back(finalize(p));
    }
    auto r = combine("neutral_symmetric_bound",
                     "neutral symmetric lower bound for majority triples", std::move(parts));
    r.details["asymptotic_rhs"] = neutral_rhs(1.0 / (2.0 * std::numbers::pi), d);
    return r;
}

BoundReport check_neutral_symmetric_constant() {
    const double c = neutral_rhs(1.0 / (2.0 * std::numbers::pi), uniform_distribution());
    auto r = bound("neutral_symmetric_constant",
                   "(1/4 - 1/(2 pi)) (8/9) within 2e-4 of 0.0808", std::abs(c - 0.0808), 2e-4, 0.0);
    r.details = {{"value", c}, {"reference", 0.0808}};
    return finalize(r);
}

BoundReport check_neutral_symmetric_equality() {
    const auto m = catalog::majority(3);
    const auto d = uniform_distribution();
    const double w = w_formula(Gswf(m, m, m), d).w;
    const double rhs = neutral_rhs(majority_first_level_weight(3), d);
    auto r = bound("neutral_symmetric_equality", "at n = 3 majority attains the lower bound",
                   std::abs(w - rhs), 0.0);
    r.details = {{"w", w}, {"rhs", rhs}};
    r.witness = {{"gswf", to_json(Gswf(m, m, m))}, {"distribution", to_json(d)}};
    return finalize(r);
}

BoundReport check_majority_stability(const std::vector<int>& n_list,
                                     const std::vector<double>& rho_grid) {
    if (n_list.empty()) throw ValidationError("majority_stability needs a non-empty n list");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        require_odd(n_list[i], "majority_stability");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw ValidationError("majority_stability needs ascending n");
    }
    std::vector<std::vector<double>> weights;
    for (int n : n_list) weights.push_back(level_weights(walsh_transform(catalog::majority(n))));

    double worst_increase = -std::numeric_limits<double>::infinity();
    double worst_final = 0.0;
    json w_increase, w_final;
    json table = json::array();
    for (double rho : rho_grid) {
        if (rho < -1.0 || rho > 1.0) throw ValidationError("rho must lie in [-1, 1]");
        const double limit = std::asin(rho) / (2.0 * std::numbers::pi);
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n_list.size(); ++i) {
            double v = 0.0;
            for (std::size_t k = 1; k < weights[i].size(); ++k)
                v += weights[i][k] * std::pow(rho, static_cast<double>(k));
            const double err = std::abs(v - limit);
            table.push_back({{"n", n_list[i]}, {"rho", rho}, {"value", v}, {"reference", limit},
                             {"abs_err", err}});
            if (i > 0 && err - prev > worst_increase) {
                worst_increase = err - prev;
                w_increase = {{"rho", rho}, {"n", n_list[i]}};
            }
            if (i + 1 == n_list.size() && err >= worst_final) {
                worst_final = err;
                w_final = {{"rho", rho}, {"n", n_list[i]}};
            }
            prev = err;
        }
    }
    if (n_list.size() < 2) worst_increase = 0.0;
    auto dec = bound("majority_stability_decreasing", "|<<maj,maj>>_rho - arcsin(rho)/(2 pi)| "
                     "is non-increasing in n",
                     worst_increase, 0.0);
    dec.witness = w_increase;
    auto fin = bound("majority_stability_limit", "error <= 0.01 at the largest n", worst_final,
                     kAsymptoticTolerance, 0.0);
    fin.witness = w_final;
    auto r = combine("majority_stability", "noise stability of majority approaches its limit",
                     {finalize(dec), finalize(fin)});
    r.details = {{"n_list", n_list}, {"rho_grid", rho_grid}, {"table", table}};
    return r;
}

BoundReport check_condorcet_limit(int n) {
    require_odd(n, "condorcet_limit");
    const auto d = uniform_distribution();
    const auto t = to_triple_distribution(d);
    const auto m3 = catalog::preset_gswf("condorcet", 3);
    const double f3 = w_formula(m3, d).w;
    const double o3 = w_oracle(m3, t).w;
    auto pf = bound("condorcet_maj3_formula", "W(maj3) = 1/18 by formula",
                    std::abs(f3 - 1.0 / 18.0), 0.0);
    auto po = bound("condorcet_maj3_oracle", "W(maj3) = 1/18 by enumeration",
                    std::abs(o3 - 1.0 / 18.0), 0.0);
    const double wn = w_formula(catalog::preset_gswf("condorcet", n), d).w;
    const double limit = 0.25 - 1.5 / std::numbers::pi * std::asin(1.0 / 3.0);
    auto pl = bound("condorcet_limit_n" + std::to_string(n),
                    "W(maj_n) within 0.01 of 1/4 - (3/(2 pi)) arcsin(1/3)", std::abs(wn - limit),
                    kAsymptoticTolerance, 0.0);
    pl.details = {{"w", wn}, {"limit", limit}, {"n", n}};
    auto r = combine("condorcet_limit", "Condorcet paradox probability for majority",
                     {finalize(pf), finalize(po), finalize(pl)});
    r.details["maj3"] = {{"formula", f3}, {"oracle", o3}};
    return r;
}

BoundReport check_dual_claim(int n_max) {
    if (n_max < 1 || n_max > 3) throw CapacityError("dual_claim is exhaustive for n <= 3");
    double worst = 0.0;
    double worst_empty = 0.0;
    json witness, witness_empty;
    std::uint64_t functions = 0;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& f : all_functions(n)) {
            ++functions;
            const auto sf = walsh_transform(f);
            const auto fd = dual(f);
            const auto sd = walsh_transform(fd);
            for (Mask s = 1; s < f.size(); ++s) {
                const double sign = level(s) % 2 == 1 ? 1.0 : -1.0;
                const double err = std::abs(sd[s] - sign * sf[s]);
                if (err > worst) {
                    worst = err;
                    witness = {{"f", to_json(f)}, {"subset", s}};
                }
            }
            const double e0 = std::abs(sd[0] - (1.0 - sf[0]));
            if (e0 > worst_empty) {
                worst_empty = e0;
                witness_empty = {{"f", to_json(f)}};
            }
        }
    auto law = bound("dual_sign_law", "dual coefficient = (-1)^{|S|-1} f(S) for S nonempty",
                     worst, 0.0);
    law.witness = witness;
    auto mean = bound("dual_mean", "E[f'] = 1 - E[f]", worst_empty, 0.0);
    mean.witness = witness_empty;
    auto r = combine("dual_claim", "spectrum of the dual function",
                     {finalize(law), finalize(mean)});
    r.details = {{"n_max", n_max}, {"functions", functions}};
    return r;
}

namespace {

struct PairScan {
    double bound_margin = std::numeric_limits<double>::infinity();
    double strict_margin = std::numeric_limits<double>::infinity();
    double endpoint_margin = std::numeric_limits<double>::infinity();
    double constant_gap = 0.0;
    json w_bound, w_strict, w_endpoint, w_constant;
    std::uint64_t pairs = 0;
};

PairScan scan_lower_bound(const std::vector<std::pair<BooleanFunction, BooleanFunction>>& pairs,
                          const std::vector<double>& delta_grid) {
    PairScan s;
    for (const auto& [f, g] : pairs) {
        ++s.pairs;
        const auto sf = walsh_transform(f);
        const auto sg = walsh_transform(g);
        const double p1 = sf.mean(), p2 = sg.mean();
        const double floor = -std::min(p1 * p2, (1.0 - p1) * (1.0 - p2));
        const bool constant = is_constant(f) || is_constant(g);
        for (double delta : delta_grid) {
            const double v = biased_inner_product(sf, sg, delta);
            const double m = v - floor;
            auto w = pair_json(f, g);
            w["delta"] = delta;
            if (m < s.bound_margin) {
                s.bound_margin = m;
                s.w_bound = w;
            }
            if (constant) {
                if (std::abs(m) >= s.constant_gap) {
                    s.constant_gap = std::abs(m);
                    s.w_constant = w;
                }
            } else if (std::abs(delta) < 1.0) {
                if (m < s.strict_margin) {
                    s.strict_margin = m;
                    s.w_strict = w;
                }
            } else if (m < s.endpoint_margin) {
                s.endpoint_margin = m;
                s.w_endpoint = w;
            }
        }
    }
    return s;
}

std::vector<std::pair<BooleanFunction, BooleanFunction>> all_pairs(int n) {
    const auto fs = all_functions(n);
    std::vector<std::pair<BooleanFunction, BooleanFunction>> out;
    for (const auto& f : fs)
        for (const auto& g : fs) out.emplace_back(f, g);
    return out;
}

}  // namespace

BoundReport check_lower_bound_biased(int n, std::uint64_t trials,
                                     const std::vector<double>& delta_grid, std::uint64_t seed) {
    for (double delta : delta_grid)
        if (delta < -1.0 || delta > 1.0) throw ValidationError("delta must lie in [-1, 1]");
    std::vector<std::pair<BooleanFunction, BooleanFunction>> pairs;
    if (trials == 0) {
        pairs = all_pairs(n);
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            auto f = random_function(n, rng);
            pairs.emplace_back(std::move(f), random_function(n, rng));
        }
    }
    const auto s = scan_lower_bound(pairs, delta_grid);
    std::vector<BoundReport> parts;
    auto b = bound("lower_bound", "<<f,g>>_delta >= -min(p1 p2, (1-p1)(1-p2))", 0.0,
                   s.bound_margin);
    b.witness = s.w_bound;
    parts.push_back(finalize(b));
    if (std::isfinite(s.strict_margin)) {
        auto st = bound("lower_bound_strict", "strict for non-constant pairs when |delta| < 1", 0.0,
                        s.strict_margin);
        st.strict = true;
        st.witness = s.w_strict;
        parts.push_back(finalize(st));
    }
    auto eq = bound("lower_bound_constant_equality", "equality when f or g is constant",
                    s.constant_gap, 0.0);
    eq.witness = s.w_constant;
    parts.push_back(finalize(eq));
    auto r = combine("lower_bound_biased", "lower bound on the biased inner product",
                     std::move(parts));
    r.details = {{"n", n}, {"pairs", s.pairs}, {"delta_grid", delta_grid},
                 {"mode", trials == 0 ? "exhaustive" : "random"}};
    if (trials != 0) r.details["seed"] = seed;
    return r;
}

BoundReport check_lower_bound_biased_endpoint_equality(int n) {
    const auto s = scan_lower_bound(all_pairs(n), {-1.0, 1.0});
    auto r = bound("lower_bound_biased_endpoint_demo",
                   "at delta = +-1 some non-constant pair attains the lower bound", 0.0,
                   s.endpoint_margin);
    r.strict = true;
    r.inverted = true;
    r.witness = s.w_endpoint;
    r.details = {{"n", n}, {"pairs", s.pairs}};
    return finalize(r);
}

BoundReport check_arrow_sum_condition(int n) {
    const auto fs = search::enumerate_class(n, search::ClassFilter(search::kNonConstant));
    const auto t = TripleDistribution::uniform();
    double min_w = std::numeric_limits<double>::infinity();
    double min_gap = std::numeric_limits<double>::infinity();
    json w_min, w_gap;
    std::uint64_t triples = 0;
    for (const auto& f : fs)
        for (const auto& g : fs)
            for (const auto& h : fs) {
                const double sum = expectation(f) + expectation(g) + expectation(h);
                if (sum > 1.0 + kExactTolerance) continue;
                ++triples;
                const Gswf gs(f, g, h);
                const double w = w_oracle(gs, t).w;
                if (w < min_w) {
                    min_w = w;
                    w_min = {{"gswf", to_json(gs)}, {"sum_p", sum}};
                }
                if (w - (1.0 - sum) < min_gap) {
                    min_gap = w - (1.0 - sum);
                    w_gap = {{"gswf", to_json(gs)}, {"sum_p", sum}, {"w", w}};
                }
            }
    auto pos = bound("arrow_sum_positive", "W > 0 for non-constant triples with sum p <= 1", 0.0,
                     min_w);
    pos.strict = true;
    pos.witness = w_min;
    auto gap = bound("arrow_sum_gap", "W > 1 - p1 - p2 - p3", 0.0, min_gap);
    gap.strict = true;
    gap.witness = w_gap;
    auto r = combine("arrow_sum_condition", "irrational outcomes are unavoidable when sum p <= 1",
                     {finalize(pos), finalize(gap)});
    r.details = {{"n", n}, {"triples", triples}, {"distribution", "uniform"}};
    return r;
}

double w_prime_first_level_bound(int n) {
    require_odd(n, "w_prime_first_level_bound");
    const double p = std::ldexp(1.0, -n);
    const double log_term = std::log(n / 3.0) + log_binomial(n - 1, (n - 1) / 2) -
                            2.0 * n * std::numbers::ln2;
    return p * (1.0 - p) - std::exp(log_term);
}

BoundReport check_w_prime_counterexample(int n) {
    const double b = w_prime_first_level_bound(n);
    auto r = bound("w_prime_counterexample_demo",
                   "the sign-ignoring W' bound for (AND, OR, maj) stays nonnegative", 0.0, b, 0.0);
    r.inverted = true;
    r.witness = {{"n", n}};
    r.details = {{"bound", b}, {"bound_n3", w_prime_first_level_bound(3)}};
    return finalize(r);
}

BoundReport check_w_prime_small() {
    const auto g = catalog::preset_gswf("and_dual_majority", 3);
    const double wp = w_prime(g);
    const double w = w_formula(g, uniform_distribution()).w;
    auto pinned = bound("w_prime_value", "W'(AND3, OR3, maj3) = 5/216", std::abs(wp - 5.0 / 216.0),
                        0.0);
    auto positive = bound("w_prime_positive", "W'(AND3, OR3, maj3) > 0", 0.0, wp);
    positive.strict = true;
    auto below = bound("w_prime_below_w", "W' <= W", wp, w);
    auto r = combine("w_prime_small", "direct evaluation of W' at n = 3",
                     {finalize(pinned), finalize(positive), finalize(below)});
    r.witness = {{"gswf", to_json(g)}};
    r.details = {{"w_prime", wp}, {"w", w}, {"printed_approximation", 0.0228}};
    return r;
}

BoundReport check_instability_example(const std::vector<int>& and_n_list,
                                      const std::vector<int>& threshold_n_list, double q) {
    const auto d = uniform_distribution();
    std::vector<BoundReport> parts;
    json and_table = json::array();
    for (int n : and_n_list) {
        require_odd(n, "and_dual_majority");
        const auto g = catalog::preset_gswf("and_dual_majority", n);
        const double w = w_formula(g, d).w;
        const double cap = std::pow(0.471, n);
        auto pos = bound("and_dual_majority_positive_n" + std::to_string(n), "W > 0", 0.0, w, 0.0);
        pos.strict = true;
        auto up = bound("and_dual_majority_cap_n" + std::to_string(n), "W <= 0.471^n", w, cap);
        pos.witness = up.witness = {{"n", n}};
        parts.push_back(finalize(pos));
        parts.push_back(finalize(up));
        and_table.push_back({{"n", n}, {"w", w}, {"cap", cap}});
    }

    json thr_table = json::array();
    double prev_ratio = 0.0;
    for (std::size_t i = 0; i < threshold_n_list.size(); ++i) {
        const int n = threshold_n_list[i];
        require_odd(n, "threshold_instability");
        catalog::PresetParams params;
        params.q = q;
        const auto g = catalog::preset_gswf("threshold_instability", n, params);
        const double w = w_formula(g, d).w;
        const double eta = catalog::eta(n, q);
        const double ratio = w / eta;
        thr_table.push_back({{"n", n},
                             {"k", catalog::instability_threshold(n, q)},
                             {"w", w},
                             {"eta", eta},
                             {"ratio", ratio},
                             {"eta_normalized", catalog::eta_normalized(n, q)}});
        if (i > 0) {
            auto p = bound("ratio_decreasing_n" + std::to_string(n), "W/eta strictly decreases",
                           ratio, prev_ratio, 0.0);
            p.strict = true;
            p.witness = {{"n", n}, {"previous_n", threshold_n_list[i - 1]}, {"q", q}};
            parts.push_back(finalize(p));
        }
        prev_ratio = ratio;
    }

    double worst = std::numeric_limits<double>::infinity();
    json w_q;
    for (int i = 1; i <= 9; ++i) {
        const double qq = 0.05 * i;
        const double m = (catalog::binary_entropy(qq) - 1.0) - (qq - 1.08);
        if (m < worst) {
            worst = m;
            w_q = {{"q", qq}};
        }
    }
    auto ex = bound("entropy_exponent", "q - 1.08 < H(q) - 1 on q in {0.05, ..., 0.45}", 0.0, worst);
    ex.strict = true;
    ex.witness = w_q;
    parts.push_back(finalize(ex));

    auto r = combine("instability_example", "instability constructions and their exponents",
                     std::move(parts));
    r.details = {{"q", q}, {"and_dual_majority", and_table}, {"threshold_instability", thr_table}};
    return r;
}

BoundReport check_instability_expectation_floor(const std::vector<int>& n_list, double q,
                                                bool normalized) {
    std::vector<BoundReport> parts;
    for (int n : n_list) {
        require_odd(n, "threshold_instability");
        const int k = catalog::instability_threshold(n, q);
        const double e_f = threshold_expectation(n, k);
        const double e_g = threshold_expectation(n, n - k + 1);
        const double e_h = threshold_expectation(n, (n + 1) / 2);
        const double floor = normalized ? catalog::eta_normalized(n, q) : catalog::eta(n, q);
        auto p = bound("expectation_floor_n" + std::to_string(n), "min(E[f], E[g], E[h]) >= eta",
                       floor, std::min({e_f, e_g, e_h}));
        p.witness = {{"n", n}, {"k", k}, {"q", q}};
        p.details = {{"expectations", {e_f, e_g, e_h}}, {"eta", floor}};
        parts.push_back(finalize(p));
    }
    auto r = combine(normalized ? "instability_expectation_floor_normalized"
                                : "instability_expectation_floor",
                     normalized ? "component expectations stay above 2^{n(H(q)-1)}/(n+1)"
                                : "component expectations stay above 2^{nH(q)-1}/(n+1)",
                     std::move(parts));
    r.details["q"] = q;
    return r;
}

BoundReport check_alpha_half_ceiling(int n, std::uint64_t trials, std::uint64_t seed) {
    std::vector<BooleanFunction> fs;
    for (auto& f : search::enumerate_monotone(n))
        if (is_balanced(f)) fs.push_back(std::move(f));
    const auto sp = spectra_of(fs);
    const auto grid = half_grid();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
    double best = -1.0;
    json witness;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto i = pick(rng);
        const auto j = pick(rng);
        const auto k = pick(rng);
        for (const auto& d : grid) {
            const double w = w_from_spectra(sp[i], sp[j], sp[k], d).w;
            if (w > best + kExactTolerance) {
                best = w;
                witness = {{"gswf", triple_json(fs[i], fs[j], fs[k])},
                           {"distribution", to_json(d)}};
            }
        }
    }
    auto r = bound("alpha_half_ceiling",
                   "W <= 1/2 for balanced monotone triples under any even product distribution",
                   best, 0.5);
    r.witness = witness;
    r.details = {{"n", n}, {"trials", trials}, {"seed", seed}, {"grid_points", grid.size()},
                 {"max_w", best}};
    return finalize(r);
}

BoundReport check_alpha_half_extremal() {
    const auto g = catalog::preset_gswf("alpha_half_extremal", 3);
    const double w = w_formula(g, even_product(0.5, 0.0, 0.0)).w;
    const double wu = w_formula(g, uniform_distribution()).w;
    auto top = bound("alpha_half_extremal_value", "W = 1/2 under (1/2, 0, 0)", std::abs(w - 0.5),
                     0.0);
    auto uni = bound("alpha_half_extremal_uniform", "W = 1/6 under the uniform distribution",
                     std::abs(wu - 1.0 / 6.0), 0.0);
    auto r = combine("alpha_half_extremal", "the dictator triple (d1, d1, d2) reaches the ceiling",
                     {finalize(top), finalize(uni)});
    r.witness = {{"gswf", to_json(g)}};
    r.details = {{"w", w}, {"w_uniform", wu}};
    return r;
}

namespace {

std::vector<int> odd_range(int lo, int hi) {
    std::vector<int> out;
    for (int n = lo; n <= hi; n += 2) out.push_back(n);
    return out;
}

std::vector<CheckEntry> build_registry() {
    const std::vector<double> signs{-1.0, -2.0 / 3, -1.0 / 3, 1.0 / 3, 2.0 / 3, 1.0};
    std::vector<CheckEntry> r{
        {"alpha_half_ceiling", [](std::uint64_t s) { return check_alpha_half_ceiling(5, 10000, s); }},
        {"alpha_half_extremal", [](std::uint64_t) { return check_alpha_half_extremal(); }},
        {"arrow_sum_condition", [](std::uint64_t) { return check_arrow_sum_condition(2); }},
        {"balanced_bound_n2", [](std::uint64_t) { return check_balanced_bound(2, 0, 0); }},
        {"balanced_bound_n4_random",
         [](std::uint64_t s) { return check_balanced_bound(4, 10000, s); }},
        {"balanced_one_third_examples",
         [](std::uint64_t) { return check_balanced_one_third_examples(3); }},
        {"balanced_pseudo_spectrum", [](std::uint64_t) { return check_balanced_pseudo_spectrum(); }},
        {"biased_product_sign",
         [signs](std::uint64_t) { return check_biased_product_sign(4, signs); }},
        {"biased_product_sign_nonmonotone_demo",
         [signs](std::uint64_t) { return check_biased_product_sign_nonmonotone(2, signs); }},
        {"condorcet_limit", [](std::uint64_t) { return check_condorcet_limit(19); }},
        {"dual_claim", [](std::uint64_t) { return check_dual_claim(3); }},
        {"fkg_n3", [](std::uint64_t s) { return check_fkg(3, 0, s); }},
        {"fkg_n4", [](std::uint64_t s) { return check_fkg(4, 10000, s); }},
        {"formula_vs_oracle",
         [](std::uint64_t s) { return check_formula_vs_oracle(5, 200, 20, s); }},
        {"instability_example",
         [](std::uint64_t) {
             return check_instability_example(odd_range(3, 15), odd_range(5, 15), 0.2);
         }},
        {"lemma_power_sums", [](std::uint64_t) { return check_lemma_power_sums(6, 200); }},
        {"lower_bound_biased",
         [](std::uint64_t s) {
             return check_lower_bound_biased(2, 0, {-1.0, -1.0 / 3, 1.0 / 3, 1.0}, s);
         }},
        {"lower_bound_biased_endpoint_demo",
         [](std::uint64_t) { return check_lower_bound_biased_endpoint_equality(2); }},
        {"majority_stability",
         [](std::uint64_t) {
             return check_majority_stability(odd_range(3, 19),
                                             {0.0, 0.1, 0.2, 1.0 / 3, 0.5, 0.7, 1.0});
         }},
        {"monotone_balanced_max", [](std::uint64_t) { return check_monotone_balanced_max(3); }},
        {"monotone_bound_grid", [](std::uint64_t) { return check_monotone_bound_grid(3); }},
        {"neutral_symmetric_bound",
         [](std::uint64_t) {
             std::vector<BoundReport> parts;
             for (const auto& d : {uniform_distribution(), even_product(0.25, 0.25, 0.0),
                                   even_product(0.125, 0.1875, 0.1875)})
                 parts.push_back(check_neutral_symmetric_bound(odd_range(3, 19), d));
             return combine("neutral_symmetric_bound",
                            "neutral symmetric lower bound for majority triples",
                            std::move(parts));
         }},
        {"neutral_symmetric_constant", [](std::uint64_t) { return check_neutral_symmetric_constant(); }},
        {"neutral_symmetric_equality", [](std::uint64_t) { return check_neutral_symmetric_equality(); }},
        {"w_prime_counterexample_demo",
         [](std::uint64_t) { return check_w_prime_counterexample(61); }},
        {"w_prime_small", [](std::uint64_t) { return check_w_prime_small(); }},
    };
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return r;
}

}  // namespace

const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> entries = build_registry();
    return entries;
}

std::vector<BoundReport> run_checks(const std::vector<std::string>& names, std::uint64_t seed) {
    std::vector<const CheckEntry*> selected;
    for (const auto& e : registry())
        if (names.empty() || std::find(names.begin(), names.end(), e.name) != names.end())
            selected.push_back(&e);
    for (const auto& n : names)
        if (std::none_of(registry().begin(), registry().end(),
                         [&](const CheckEntry& e) { return e.name == n; }))
            throw ValidationError("unknown check '" + n + "'");
    std::vector<BoundReport> out;
    for (const auto* e : selected) {
        auto r = e->run(seed);
        r.name = e->name;
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
}

}  // namespace gswf::theorems
