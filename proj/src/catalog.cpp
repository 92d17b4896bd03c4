#include "gswf/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gswf/error.hpp"

namespace gswf::catalog {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::dictator: return "dictator";
        case Family::majority: return "majority";
        case Family::and_: return "and";
        case Family::or_: return "or";
        case Family::threshold: return "threshold";
        case Family::parity: return "parity";
        case Family::tribes: return "tribes";
        case Family::constant: return "constant";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    if (name == "dictator" || name == "dict") return Family::dictator;
    if (name == "majority" || name == "maj") return Family::majority;
    if (name == "and") return Family::and_;
    if (name == "or") return Family::or_;
    if (name == "threshold" || name == "thr") return Family::threshold;
    if (name == "parity" || name == "xor") return Family::parity;
    if (name == "tribes") return Family::tribes;
    if (name == "constant" || name == "const") return Family::constant;
    throw ValidationError("unknown function family '" + std::string(name) + "'");
}

BooleanFunction make(const FamilySpec& spec) {
    const int n = spec.n;
    const int p = spec.param;
    auto weight = [](Mask x) { return level(x); };
    switch (spec.family) {
        case Family::dictator:
            if (p < 1 || p > n)
                throw ValidationError("dictator voter must be in [1, " + std::to_string(n) +
                                      "], got " + std::to_string(p));
            return BooleanFunction::from_predicate(n, [p](Mask x) { return (x >> (p - 1)) & 1U; });
        case Family::majority:
            if (n % 2 == 0)
                throw ValidationError("majority needs an odd number of voters, got " +
                                      std::to_string(n));
            return make({Family::threshold, n, (n + 1) / 2});
        case Family::and_:
            return make({Family::threshold, n, n});
        case Family::or_:
            return make({Family::threshold, n, 1});
        case Family::threshold:
            if (p < 0 || p > n + 1)
                throw ValidationError("threshold k must be in [0, " + std::to_string(n + 1) +
                                      "], got " + std::to_string(p));
            return BooleanFunction::from_predicate(n, [&](Mask x) { return weight(x) >= p; });
        case Family::parity:
            return BooleanFunction::from_predicate(n, [&](Mask x) { return weight(x) & 1; });
        case Family::tribes: {
            if (p < 1 || p > n)
                throw ValidationError("tribe size must be in [1, " + std::to_string(n) + "]");
            // Consecutive blocks of p voters; the last block holds the remainder.
            return BooleanFunction::from_predicate(n, [&](Mask x) {
                for (int start = 0; start < n; start += p) {
                    const int len = std::min(p, n - start);
                    const Mask block = ((Mask{1} << len) - 1) << start;
                    if ((x & block) == block) return true;
                }
                return false;
            });
        }
        case Family::constant:
            if (p != 0 && p != 1) throw ValidationError("constant bit must be 0 or 1");
            return BooleanFunction::from_predicate(n, [p](Mask) { return p == 1; });
    }
    throw ValidationError("unknown family");
}

int instability_threshold(int n, double q) {
    return static_cast<int>(std::ceil((1.0 - q) * n - 1e-9));
}

Gswf preset_gswf(std::string_view name, int n, const PresetParams& params) {
    if (name == "condorcet") {
        auto m = majority(n);
        return Gswf(m, m, m);
    }
    if (name == "dictator_triple") {
        auto d = dictator(n, params.voter);
        return Gswf(d, d, d);
    }
    if (name == "split_dictators") {
        if (n < 3) throw ValidationError("split_dictators needs n >= 3");
        return Gswf(dictator(n, 1), dictator(n, 2), dictator(n, 3));
    }
    if (name == "and_dual_majority") {
        auto f = and_fn(n);
        auto g = dual(f);
        return Gswf(std::move(f), std::move(g), majority(n));
    }
    if (name == "threshold_instability") {
        if (!(params.q > 0.0 && params.q < 0.5))
            throw ValidationError("threshold_instability needs 0 < q < 1/2");
        auto f = threshold(n, instability_threshold(n, params.q));
        auto g = dual(f);
        return Gswf(std::move(f), std::move(g), majority(n));
    }
    if (name == "alpha_half_extremal") {
        if (n < 2) throw ValidationError("alpha_half_extremal needs n >= 2");
        auto d1 = dictator(n, 1);
        return Gswf(d1, d1, dictator(n, 2));
    }
    throw ValidationError("unknown preset '" + std::string(name) +
                          "'; run `gswf catalog list` for the available names");
}

double binary_entropy(double q) {
    if (q <= 0.0 || q >= 1.0) return 0.0;
    return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

namespace {
void check_eta_domain(int n, double q) {
    if (!(q > 0.0 && q < 0.5)) throw ValidationError("eta needs 0 < q < 1/2");
    if (n < 1) throw ValidationError("eta needs n >= 1");
}
}  // namespace

double eta(int n, double q) {
    check_eta_domain(n, q);
    return std::exp2(n * binary_entropy(q) - 1.0) / (n + 1);
}

double eta_normalized(int n, double q) {
    check_eta_domain(n, q);
    return std::exp2(n * (binary_entropy(q) - 1.0)) / (n + 1);
}

std::vector<CatalogEntry> list_entries() {
    return {
        {"family", "dictator", "n, voter in [1,n]", "f(x) = x_voter"},
        {"family", "majority", "n odd", "1 iff at least (n+1)/2 voters say 1"},
        {"family", "and", "n", "1 iff every voter says 1"},
        {"family", "or", "n", "1 iff some voter says 1"},
        {"family", "threshold", "n, k in [0,n+1]", "1 iff at least k voters say 1"},
        {"family", "parity", "n", "1 iff an odd number of voters say 1"},
        {"family", "tribes", "n, size in [1,n]", "OR of ANDs over consecutive blocks"},
        {"family", "constant", "n, bit in {0,1}", "constant function"},
        {"preset", "condorcet", "n odd", "(maj, maj, maj)"},
        {"preset", "dictator_triple", "n, voter", "(dict_i, dict_i, dict_i)"},
        {"preset", "split_dictators", "n >= 3", "(dict_1, dict_2, dict_3)"},
        {"preset", "and_dual_majority", "n odd", "(AND, OR, maj)"},
        {"preset", "threshold_instability", "n odd, 0<q<1/2",
         "(thr(n, ceil((1-q)n)), its dual, maj)"},
        {"preset", "alpha_half_extremal", "n >= 2", "(dict_1, dict_1, dict_2)"},
    };
}

}  // namespace gswf::catalog
