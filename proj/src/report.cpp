#include "gswf/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gswf {

using nlohmann::json;

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json numbers(const std::array<double, 3>& v) {
    return json::array({number(v[0]), number(v[1]), number(v[2])});
}

std::string fixed(double v) {
    if (std::isnan(v)) return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace

json to_json(const BooleanFunction& f) { return {{"n", f.arity()}, {"hex", f.to_hex()}}; }

json to_json(const Gswf& g) {
    return {{"n", g.arity()}, {"f", to_json(g.f)}, {"g", to_json(g.g)}, {"h", to_json(g.h)}};
}

json to_json(const TripleDistribution& t) {
    json triples = json::object();
    for (std::size_t i = 0; i < 6; ++i) triples[kTripleNames[i]] = t[i];
    return {{"triples", triples}, {"even_product", is_even_product(t)}};
}

json to_json(const EvenProductDistribution& d) {
    json j = to_json(to_triple_distribution(d));
    j["alpha"] = d.alpha();
    j["beta"] = d.beta();
    j["gamma"] = d.gamma();
    j["deltas"] = numbers(d.deltas());
    return j;
}

json to_json(const WResult& r) {
    json j = {{"w", number(r.w)},
              {"base", number(r.base)},
              {"cross_terms", numbers(r.cross_terms)},
              {"deltas", numbers(r.deltas)},
              {"expectations", numbers(r.expectations)},
              {"method", std::string(to_string(r.method))},
              {"n", r.n}};
    if (r.samples) j["samples"] = *r.samples;
    if (r.seed) j["seed"] = *r.seed;
    if (r.std_error) j["stderr"] = number(*r.std_error);
    return j;
}

json to_json(const theorems::BoundReport& r) {
    json j = {{"name", r.name},
              {"claim", r.claim},
              {"lhs", number(r.lhs)},
              {"rhs", number(r.rhs)},
              {"margin", number(r.margin)},
              {"tolerance", r.tolerance},
              {"pass", r.pass},
              {"strict", r.strict},
              {"inverted", r.inverted},
              {"applicable", r.applicable},
              {"witness", r.witness},
              {"details", r.details}};
    if (!r.parts.empty()) {
        json parts = json::array();
        for (const auto& p : r.parts) parts.push_back(to_json(p));
        j["parts"] = parts;
    }
    return j;
}

json to_json(const search::ExtremalResult& r) {
    json j = {{"objective", std::string(search::to_string(r.objective))},
              {"value", number(r.value)},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
              {"distribution", to_json(r.distribution)},
              {"evaluated", r.evaluated},
              {"mode", r.mode},
              {"tie_break", r.tie_break},
              {"classes", r.classes}};
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    return j;
}

json spectrum_json(const BooleanFunction& f) {
    const auto s = walsh_transform(f);
    json coeffs = json::array();
    for (double c : s.coeffs()) coeffs.push_back(c);
    return {{"function", to_json(f)},
            {"coefficients", coeffs},
            {"level_weights", level_weights(s)},
            {"expectation", expectation(f)},
            {"balanced", is_balanced(f)},
            {"monotone", is_monotone(f)},
            {"self_dual", is_self_dual(f)},
            {"cyclic_invariant", is_cyclic_invariant(f)}};
}

std::string pretty(const WResult& r) {
    std::ostringstream out;
    out << "method " << to_string(r.method) << ", n = " << r.n << "\n";
    out << "  W                 " << fixed(r.w) << "\n";
    if (!std::isnan(r.base)) {
        out << "  base p1p2p3+...   " << fixed(r.base) << "\n";
        static const char* names[] = {"<<f,g>>", "<<g,h>>", "<<h,f>>"};
        for (int i = 0; i < 3; ++i)
            out << "  " << names[i] << " at " << fixed(r.deltas[i]) << "  " << fixed(r.cross_terms[i])
                << "\n";
    }
    out << "  E[f], E[g], E[h]  " << fixed(r.expectations[0]) << ", " << fixed(r.expectations[1])
        << ", " << fixed(r.expectations[2]) << "\n";
    if (r.samples) out << "  samples           " << *r.samples << "\n";
    if (r.seed) out << "  seed              " << *r.seed << "\n";
    if (r.std_error) out << "  stderr            " << fixed(*r.std_error) << "\n";
    return out.str();
}

std::string pretty(const theorems::BoundReport& r) {
    std::ostringstream out;
    const char* status = !r.applicable ? "N/A " : r.pass ? "PASS" : "FAIL";
    out << status << "  " << r.name << (r.inverted ? " (expected-failure demo)" : "") << "\n";
    out << "      " << r.claim << "\n";
    out << "      lhs " << fixed(r.lhs) << "  rhs " << fixed(r.rhs) << "  margin " << fixed(r.margin)
        << "  tol " << fixed(r.tolerance) << "\n";
    for (const auto& p : r.parts) {
        const char* ps = !p.applicable ? "N/A " : p.pass ? "pass" : "FAIL";
        out << "      - " << ps << " " << p.name << ": margin " << fixed(p.margin) << "\n";
    }
    return out.str();
}

}  // namespace gswf
