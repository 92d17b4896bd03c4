#include "gswf/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gswf/catalog.hpp"
#include "gswf/error.hpp"
#include "gswf/rationality.hpp"
#include "gswf/report.hpp"
#include "gswf/search.hpp"
#include "gswf/theorems.hpp"

namespace gswf::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

int parse_int(std::string_view text, const char* what) {
    int v = 0;
    const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        throw ValidationError(std::string("bad ") + what + " '" + std::string(text) + "'");
    return v;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text.empty()) return out;
    for (const auto& t : split(text, ',')) {
        // a..b expands to the odd (or even) numbers between a and b in steps of 2
        if (const auto dots = t.find(".."); dots != std::string::npos) {
            const int a = parse_int(std::string_view(t).substr(0, dots), "n");
            const int b = parse_int(std::string_view(t).substr(dots + 2), "n");
            for (int n = a; n <= b; n += 2) out.push_back(n);
        } else {
            out.push_back(parse_int(t, "n"));
        }
    }
    return out;
}

std::string csv_number(double v) {
    if (std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

enum class Format { json, csv, pretty };

struct Common {
    std::string format = "json";
    std::string out;
};

struct DistOptions {
    bool uniform = false;
    std::string alpha, beta, gamma, triples;
};

void add_dist_options(CLI::App* app, DistOptions& d) {
    app->add_flag("--uniform", d.uniform, "uniform distribution over the six orders");
    app->add_option("--alpha", d.alpha, "even product: Pr[110] = Pr[001]");
    app->add_option("--beta", d.beta, "even product: Pr[011] = Pr[100]");
    app->add_option("--gamma", d.gamma, "even product: Pr[101] = Pr[010]");
    app->add_option("--triples", d.triples, "p110,p011,p101,p001,p100,p010 (general distribution)");
}

/// Even product distribution, or nullopt when a general --triples vector was given.
struct ParsedDist {
    std::optional<EvenProductDistribution> even;
    TripleDistribution triple = TripleDistribution::uniform();
};

ParsedDist parse_dist(const DistOptions& o) {
    const bool abc = !o.alpha.empty() || !o.beta.empty() || !o.gamma.empty();
    const int chosen = int(o.uniform) + int(abc) + int(!o.triples.empty());
    if (chosen > 1)
        throw ValidationError("choose one of --uniform, --alpha/--beta/--gamma, --triples");
    ParsedDist r;
    if (!o.triples.empty()) {
        const auto parts = split(o.triples, ',');
        if (parts.size() != 6)
            throw ValidationError("--triples needs six comma-separated probabilities");
        std::array<double, 6> p{};
        for (std::size_t i = 0; i < 6; ++i) p[i] = parse_real(parts[i]);
        r.triple = TripleDistribution(p);
        return r;
    }
    if (abc) {
        if (o.alpha.empty() || o.beta.empty() || o.gamma.empty())
            throw ValidationError("--alpha, --beta and --gamma must be given together");
        r.even = even_product(parse_real(o.alpha), parse_real(o.beta), parse_real(o.gamma));
    } else {
        r.even = uniform_distribution();
    }
    r.triple = to_triple_distribution(*r.even);
    return r;
}

Format parse_format(const std::string& f) {
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    if (f == "pretty") return Format::pretty;
    throw ValidationError("unknown format '" + f + "'; use json, csv or pretty");
}

void emit(const Common& c, const std::string& text, std::ostream& out, bool append = false) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out, append ? std::ios::app : std::ios::trunc);
    if (!file) throw ValidationError("cannot open output file '" + c.out + "'");
    file << text;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ',';
        const auto& c = cells[i];
        if (c.find_first_of(",\"\n") != std::string::npos) {
            s += '"';
            for (char ch : c) s += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            s += '"';
        } else {
            s += c;
        }
    }
    return s + "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct FunctionOptions {
    std::string preset, f, g, h;
    int n = 3;
    int voter = 1;
    double q = 0.2;
};

void add_function_options(CLI::App* app, FunctionOptions& o) {
    app->add_option("--preset", o.preset, "named triple; see `gswf catalog list`");
    app->add_option("--f", o.f, "choice function for (A,B): family spec or hex table");
    app->add_option("--g", o.g, "choice function for (B,C)");
    app->add_option("--h", o.h, "choice function for (C,A)");
    app->add_option("--n", o.n, "number of voters")->check(CLI::Range(1, kMaxArity));
    app->add_option("--voter", o.voter, "dictator voter for dictator_triple");
    app->add_option("--q", o.q, "q for threshold_instability");
}

Gswf parse_gswf(const FunctionOptions& o) {
    if (!o.preset.empty()) {
        if (!o.f.empty() || !o.g.empty() || !o.h.empty())
            throw ValidationError("--preset cannot be combined with --f/--g/--h");
        catalog::PresetParams p;
        p.voter = o.voter;
        p.q = o.q;
        return catalog::preset_gswf(o.preset, o.n, p);
    }
    if (o.f.empty() || o.g.empty() || o.h.empty())
        throw ValidationError("give --preset or all of --f, --g, --h");
    return Gswf(parse_function(o.f, o.n), parse_function(o.g, o.n), parse_function(o.h, o.n));
}

json references_for(const FunctionOptions& o, const Gswf& g) {
    json r = json::object();
    if (o.preset == "and_dual_majority") r["cap_0471_pow_n"] = std::pow(0.471, g.arity());
    if (o.preset == "condorcet")
        r["limit"] = 0.25 - 1.5 / std::numbers::pi * std::asin(1.0 / 3.0);
    if (o.preset == "threshold_instability") {
        r["eta"] = catalog::eta(g.arity(), o.q);
        r["eta_normalized"] = catalog::eta_normalized(g.arity(), o.q);
    }
    return r;
}

std::string render_results(Format fmt, const Gswf& g, const ParsedDist& d,
                           const std::vector<WResult>& results, const json& refs) {
    if (fmt == Format::json) {
        json j = {{"schema_version", kSchemaVersion},
                  {"gswf", to_json(g)},
                  {"distribution", d.even ? to_json(*d.even) : to_json(d.triple)},
                  {"results", json::array()},
                  {"references", refs}};
        for (const auto& r : results) j["results"].push_back(to_json(r));
        return dump(j);
    }
    if (fmt == Format::csv) {
        std::string s = csv_line({"method", "n", "w", "base", "cross_fg", "cross_gh", "cross_hf",
                                  "delta_1", "delta_2", "delta_3", "samples", "seed", "stderr"});
        for (const auto& r : results)
            s += csv_line({std::string(to_string(r.method)), std::to_string(r.n), csv_number(r.w),
                           csv_number(r.base), csv_number(r.cross_terms[0]),
                           csv_number(r.cross_terms[1]), csv_number(r.cross_terms[2]),
                           csv_number(r.deltas[0]), csv_number(r.deltas[1]),
                           csv_number(r.deltas[2]),
                           r.samples ? std::to_string(*r.samples) : "",
                           r.seed ? std::to_string(*r.seed) : "",
                           r.std_error ? csv_number(*r.std_error) : ""});
        return s;
    }
    auto brief = [](const BooleanFunction& f) {
        auto hex = f.to_hex();
        return hex.size() <= 32 ? hex : hex.substr(0, 16) + "... (" + std::to_string(hex.size()) +
                                            " hex digits)";
    };
    std::string s = "f = " + brief(g.f) + ", g = " + brief(g.g) + ", h = " + brief(g.h) + " on " +
                    std::to_string(g.arity()) + " voters\n";
    for (const auto& r : results) s += pretty(r);
    for (const auto& [k, v] : refs.items()) s += "  reference " + k + " = " + v.dump() + "\n";
    return s;
}

std::string render_checks(Format fmt, const std::vector<theorems::BoundReport>& reports) {
    if (fmt == Format::json) {
        json j = json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        return dump(j);
    }
    if (fmt == Format::csv) {
        std::string s = csv_line({"name", "pass", "lhs", "rhs", "margin", "tolerance", "strict",
                                  "inverted", "applicable"});
        for (const auto& r : reports)
            s += csv_line({r.name, r.pass ? "true" : "false", csv_number(r.lhs), csv_number(r.rhs),
                           csv_number(r.margin), csv_number(r.tolerance),
                           r.strict ? "true" : "false", r.inverted ? "true" : "false",
                           r.applicable ? "true" : "false"});
        return s;
    }
    std::string s;
    for (const auto& r : reports) s += pretty(r);
    return s;
}

}  // namespace

double parse_real(std::string_view text) {
    const auto slash = text.find('/');
    auto one = [&](std::string_view t) {
        double v = 0.0;
        const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || p != t.data() + t.size())
            throw ValidationError("bad number '" + std::string(text) + "'");
        return v;
    };
    if (slash == std::string_view::npos) return one(text);
    const double den = one(text.substr(slash + 1));
    if (den == 0.0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return one(text.substr(0, slash)) / den;
}

BooleanFunction parse_function(std::string_view spec, int default_n) {
    const auto parts = split(spec, ':');
    std::optional<catalog::Family> family;
    try {
        family = catalog::parse_family(parts[0]);
    } catch (const ValidationError&) {
    }
    if (family) {
        if (parts.size() > 3) throw ValidationError("family spec is name[:n[:param]]");
        const int n = parts.size() > 1 ? parse_int(parts[1], "n") : default_n;
        if (n < 1 || n > kMaxArity)
            throw ValidationError("n must be in [1, " + std::to_string(kMaxArity) + "]");
        int param = 0;
        if (parts.size() > 2) {
            param = parse_int(parts[2], "parameter");
        } else if (*family == catalog::Family::dictator) {
            param = 1;
        } else if (*family == catalog::Family::threshold || *family == catalog::Family::tribes) {
            throw ValidationError("'" + std::string(spec) + "' needs a parameter, e.g. thr:15:12");
        }
        return catalog::make({*family, n, param});
    }
    if (parts.size() != 1)
        throw ValidationError("unknown function family '" + parts[0] +
                              "'; run `gswf catalog list`");
    std::string_view hex = spec;
    if (hex.size() > 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    return BooleanFunction::from_hex(default_n, hex);
}

std::string majority_stability_curve(const std::vector<int>& n_list,
                                     const std::vector<double>& rho_grid) {
    if (n_list.empty()) throw ValidationError("curve needs a non-empty --n-list");
    if (rho_grid.empty()) throw ValidationError("curve needs a non-empty --rho list");
    const auto r = theorems::check_majority_stability(n_list, rho_grid);
    std::string s = csv_line({"n", "rho", "value", "reference", "abs_err"});
    // The check's table is ordered rho-major; emit n-major for plotting per rho.
    for (double rho : rho_grid)
        for (const auto& row : r.details["table"])
            if (row["rho"].get<double>() == rho)
                s += csv_line({std::to_string(row["n"].get<int>()), csv_number(rho),
                               csv_number(row["value"].get<double>()),
                               csv_number(row["reference"].get<double>()),
                               csv_number(row["abs_err"].get<double>())});
    return s;
}

std::string instability_curve(const std::vector<int>& n_list, double q) {
    if (n_list.empty()) throw ValidationError("curve needs a non-empty --n-list");
    std::string s = csv_line({"n", "q", "k", "W", "eta", "ratio", "eta_normalized"});
    catalog::PresetParams p;
    p.q = q;
    for (int n : n_list) {
        const auto g = catalog::preset_gswf("threshold_instability", n, p);
        const double w = w_formula(g, uniform_distribution()).w;
        const double eta = catalog::eta(n, q);
        s += csv_line({std::to_string(n), csv_number(q),
                       std::to_string(catalog::instability_threshold(n, q)), csv_number(w),
                       csv_number(eta), csv_number(w / eta),
                       csv_number(catalog::eta_normalized(n, q))});
    }
    return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gswf: irrational-choice probabilities of generalized social welfare functions"};
    app.name("gswf");
    // --h names a choice function, so help is long-form only.
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1, 1);
    Common common;
    app.add_option("--format", common.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", common.out, "write to this file instead of stdout");

    auto* spectrum = app.add_subcommand("spectrum", "Fourier-Walsh spectrum of one function");
    std::string spec_f;
    int spec_n = 3;
    spectrum->add_option("--f", spec_f, "family spec or hex table")->required();
    spectrum->add_option("--n", spec_n, "number of voters")->check(CLI::Range(1, kMaxArity));

    auto* rationality = app.add_subcommand("rationality", "probability of an irrational outcome");
    FunctionOptions fo;
    DistOptions dopt;
    std::string method = "formula";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    add_function_options(rationality, fo);
    add_dist_options(rationality, dopt);
    rationality->add_option("--method", method, "formula | oracle | mc | both | all")
        ->check(CLI::IsMember({"formula", "oracle", "mc", "both", "all"}));
    rationality->add_option("--samples", samples, "Monte Carlo samples");
    rationality->add_option("--seed", seed, "Monte Carlo seed");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of W");
    add_function_options(simulate, fo);
    add_dist_options(simulate, dopt);
    simulate->add_option("--samples", samples, "number of sampled profiles");
    simulate->add_option("--seed", seed, "random seed");

    auto* verify = app.add_subcommand("verify", "run the theorem checks");
    bool verify_all = false;
    std::vector<std::string> check_names;
    bool list_checks = false;
    verify->add_flag("--all", verify_all, "run every registered check");
    verify->add_option("--check", check_names, "run the named check (repeatable)");
    verify->add_flag("--list", list_checks, "list check names");
    verify->add_option("--seed", seed, "seed for randomized checks");

    auto* search = app.add_subcommand("search", "extremal W over function classes");
    int search_n = 3;
    std::string class_all, class_f, class_g, class_h;
    std::string objective = "max_w";
    bool random_mode = false;
    std::uint64_t trials = 10000;
    bool exclude_dict = false;
    search->add_option("--n", search_n, "number of voters")->check(CLI::Range(1, kMaxArity));
    search->add_option("--class", class_all, "filter for all three functions");
    search->add_option("--class-f", class_f, "filter for f, e.g. balanced,monotone");
    search->add_option("--class-g", class_g, "filter for g");
    search->add_option("--class-h", class_h, "filter for h");
    search->add_option("--objective", objective, "max_w | min_w")
        ->check(CLI::IsMember({"max_w", "min_w"}));
    search->add_flag("--random", random_mode, "sample triples instead of enumerating");
    search->add_option("--trials", trials, "sampled triples in random mode");
    search->add_option("--seed", seed, "seed for random mode");
    search->add_flag("--exclude-dictatorial", exclude_dict,
                     "skip (d,d,d) with d a dictator or anti-dictator");
    DistOptions sdopt;
    add_dist_options(search, sdopt);

    auto* cat = app.add_subcommand("catalog", "function families and presets");
    cat->require_subcommand(1, 1);
    cat->add_subcommand("list", "list families and presets");

    auto* curve = app.add_subcommand("curve", "CSV data for the asymptotic claims");
    std::string curve_check;
    std::string n_list_text;
    std::string rho_text = "1/3";
    double curve_q = 0.2;
    curve->add_option("--check", curve_check, "majority_stability | instability")
        ->required()
        ->check(CLI::IsMember({"majority_stability", "instability"}));
    curve->add_option("--n-list", n_list_text, "comma list or range such as 3..19")->required();
    curve->add_option("--rho", rho_text, "comma list of correlations");
    curve->add_option("--q", curve_q, "q for the instability curve");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    for (auto* sub : cat->get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Format fmt = parse_format(common.format);

        if (*spectrum) {
            const auto f = parse_function(spec_f, spec_n);
            const auto j = spectrum_json(f);
            std::string s;
            if (fmt == Format::csv) {
                s = csv_line({"subset", "level", "coefficient"});
                const auto& c = j["coefficients"];
                for (std::size_t m = 0; m < c.size(); ++m)
                    s += csv_line({std::to_string(m), std::to_string(level(static_cast<Mask>(m))),
                                   csv_number(c[m].get<double>())});
            } else if (fmt == Format::pretty) {
                s = "function " + f.to_hex() + " on " + std::to_string(f.arity()) + " voters\n";
                for (const char* k : {"expectation", "balanced", "monotone", "self_dual",
                                      "cyclic_invariant", "level_weights"})
                    s += "  " + std::string(k) + " " + j[k].dump() + "\n";
                const auto& c = j["coefficients"];
                for (std::size_t m = 0; m < c.size(); ++m)
                    if (c[m].get<double>() != 0.0)
                        s += "  S=" + std::to_string(m) + "  " + csv_number(c[m].get<double>()) + "\n";
            } else {
                s = dump(j);
            }
            emit(common, s, out);
            return 0;
        }

        if (*rationality || *simulate) {
            const auto g = parse_gswf(fo);
            const auto d = parse_dist(dopt);
            std::vector<WResult> results;
            const std::string m = *simulate ? "mc" : method;
            // General distributions never reach the closed form; both/all fall back to
            // the remaining methods.
            const bool want_formula = m == "formula" || (d.even && (m == "both" || m == "all"));
            const bool want_oracle = m == "oracle" || m == "both" || m == "all";
            const bool want_mc = m == "mc" || m == "all";
            if (want_formula) {
                if (!d.even)
                    throw ValidationError(
                        "the closed form needs an even product distribution; use --method oracle "
                        "or --method mc with --triples");
                results.push_back(w_formula(g, *d.even));
            }
            if (want_oracle) results.push_back(w_oracle(g, d.triple));
            if (want_mc) results.push_back(w_monte_carlo(g, d.triple, samples, seed));
            emit(common, render_results(fmt, g, d, results, references_for(fo, g)), out);
            return 0;
        }

        if (*verify) {
            if (list_checks) {
                std::string s;
                for (const auto& e : theorems::registry()) s += e.name + "\n";
                emit(common, s, out);
                return 0;
            }
            if (verify_all == !check_names.empty())
                throw ValidationError("verify needs exactly one of --all or --check NAME");
            const auto reports = theorems::run_checks(verify_all ? std::vector<std::string>{}
                                                                 : check_names,
                                                      seed);
            emit(common, render_checks(fmt, reports), out);
            for (const auto& r : reports)
                if (!r.inverted && !r.pass) return 1;
            return 0;
        }

        if (*search) {
            auto filter = [&](const std::string& own) {
                const std::string& text = own.empty() ? class_all : own;
                if (text.empty())
                    throw ValidationError("give --class or --class-f/--class-g/--class-h");
                return search::ClassFilter::parse(text);
            };
            const auto ff = filter(class_f), fg = filter(class_g), fh = filter(class_h);
            const auto d = parse_dist(sdopt);
            if (!d.even) throw ValidationError("search needs an even product distribution");
            const auto obj = search::parse_objective(objective);
            search::SearchOptions so;
            so.exclude_dictatorial = exclude_dict;
            const auto res = random_mode
                                 ? search::random_search(search_n, ff, fg, fh, *d.even, obj,
                                                         trials, seed, so)
                                 : search::extremal_w(search_n, ff, fg, fh, *d.even, obj, so);
            json j = to_json(res);
            j["n"] = search_n;
            j["schema_version"] = kSchemaVersion;
            std::string s;
            if (fmt == Format::csv) {
                s = csv_line({"n", "objective", "value", "f", "g", "h", "evaluated", "mode"}) +
                    csv_line({std::to_string(search_n), objective, csv_number(res.value),
                              res.witness ? res.witness->f.to_hex() : "",
                              res.witness ? res.witness->g.to_hex() : "",
                              res.witness ? res.witness->h.to_hex() : "",
                              std::to_string(res.evaluated), res.mode});
            } else if (fmt == Format::pretty) {
                s = j.dump(2) + "\n";
            } else {
                s = j.dump() + "\n";  // one JSON line per run, appended with --out
            }
            emit(common, s, out, fmt == Format::json);
            return 0;
        }

        if (*cat) {
            const auto entries = catalog::list_entries();
            std::string s;
            if (fmt == Format::json) {
                json j = json::array();
                for (const auto& e : entries)
                    j.push_back({{"kind", e.kind},
                                 {"name", e.name},
                                 {"params", e.params},
                                 {"description", e.description}});
                s = dump(j);
            } else if (fmt == Format::csv) {
                s = csv_line({"kind", "name", "params", "description"});
                for (const auto& e : entries)
                    s += csv_line({e.kind, e.name, e.params, e.description});
            } else {
                for (const auto& e : entries)
                    s += e.kind + "  " + e.name + "  (" + e.params + ")  " + e.description + "\n";
            }
            emit(common, s, out);
            return 0;
        }

        if (*curve) {
            const auto n_list = parse_int_list(n_list_text);
            std::string s;
            if (curve_check == "majority_stability") {
                std::vector<double> rho;
                for (const auto& t : split(rho_text, ',')) rho.push_back(parse_real(t));
                s = majority_stability_curve(n_list, rho);
            } else {
                s = instability_curve(n_list, curve_q);
            }
            emit(common, s, out);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace gswf::cli
