#include "gswf/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gswf/error.hpp"
#include "gswf/parallel.hpp"

namespace gswf::search {

namespace {

constexpr double kTieTolerance = 1e-12;

struct NamedPredicate {
    const char* name;
    Predicate bit;
};
constexpr NamedPredicate kPredicates[] = {
    {"balanced", kBalanced},
    {"monotone", kMonotone},
    {"self_dual", kSelfDual},
    {"cyclic_invariant", kCyclicInvariant},
    {"non_constant", kNonConstant},
};

}  // namespace

ClassFilter::ClassFilter(unsigned predicates,
                         std::optional<std::pair<double, double>> expectation)
    : predicates_(predicates), expectation_(expectation) {
    if (predicates_ == 0 && !expectation_)
        throw ValidationError("a class filter needs at least one predicate");
    if (expectation_ && expectation_->first > expectation_->second)
        throw ValidationError("expectation_in range is empty");
}

ClassFilter ClassFilter::parse(std::string_view text) {
    unsigned bits = 0;
    std::optional<std::pair<double, double>> range;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
        if (token.empty()) continue;
        if (token.starts_with("expectation_in:")) {
            std::string rest(token.substr(15));
            std::replace(rest.begin(), rest.end(), ':', ' ');
            std::istringstream in(rest);
            double lo, hi;
            if (!(in >> lo >> hi))
                throw ValidationError("expectation_in needs LO:HI, got '" + std::string(token) + "'");
            range = std::make_pair(lo, hi);
            continue;
        }
        bool found = false;
        for (const auto& p : kPredicates) {
            if (token == p.name) {
                bits |= p.bit;
                found = true;
            }
        }
        if (!found)
            throw ValidationError("unknown class predicate '" + std::string(token) +
                                  "' (expected balanced, monotone, self_dual, cyclic_invariant, "
                                  "non_constant or expectation_in:LO:HI)");
    }
    return ClassFilter(bits, range);
}

bool ClassFilter::accepts(const BooleanFunction& f) const {
    if ((predicates_ & kBalanced) && !is_balanced(f)) return false;
    if ((predicates_ & kNonConstant) && is_constant(f)) return false;
    if (expectation_) {
        const double e = expectation(f);
        if (e < expectation_->first || e > expectation_->second) return false;
    }
    if ((predicates_ & kMonotone) && !is_monotone(f)) return false;
    if ((predicates_ & kSelfDual) && !is_self_dual(f)) return false;
    if ((predicates_ & kCyclicInvariant) && !is_cyclic_invariant(f)) return false;
    return true;
}

std::string ClassFilter::to_string() const {
    std::string out;
    for (const auto& p : kPredicates) {
        if (predicates_ & p.bit) {
            if (!out.empty()) out += ',';
            out += p.name;
        }
    }
    if (expectation_) {
        if (!out.empty()) out += ',';
        std::ostringstream s;
        s << "expectation_in:" << expectation_->first << ':' << expectation_->second;
        out += s.str();
    }
    return out;
}

std::vector<BooleanFunction> enumerate_monotone(int n) {
    if (n < 1 || n > kMonotoneEnumerationMaxArity)
        throw CapacityError("monotone enumeration supports 1 <= n <= " +
                            std::to_string(kMonotoneEnumerationMaxArity));
    // A monotone table on m+1 voters is (low, high) with low <= high pointwise, both
    // monotone on m voters; the new voter is the top bit of the input.
    std::vector<std::uint64_t> tables{0, 1};
    for (int m = 0; m < n; ++m) {
        const unsigned half = 1U << m;
        std::vector<std::uint64_t> next;
        for (auto lo : tables)
            for (auto hi : tables)
                if ((lo & ~hi) == 0) next.push_back(lo | (hi << half));
        tables = std::move(next);
    }
    std::sort(tables.begin(), tables.end());
    std::vector<BooleanFunction> out;
    out.reserve(tables.size());
    for (auto t : tables) out.push_back(BooleanFunction::from_bits(n, t));
    return out;
}

std::vector<BooleanFunction> enumerate_class(int n, const ClassFilter& filter) {
    std::vector<BooleanFunction> out;
    if (filter.predicates() & kMonotone) {
        for (auto& f : enumerate_monotone(n))
            if (filter.accepts(f)) out.push_back(std::move(f));
        return out;
    }
    if (n < 1 || n > kExhaustiveMaxArity)
        throw CapacityError("exhaustive enumeration supports n <= " +
                            std::to_string(kExhaustiveMaxArity) +
                            " (n <= 5 for monotone classes); use random mode for n=" +
                            std::to_string(n));
    const std::uint64_t count = std::uint64_t{1} << (1U << n);
    for (std::uint64_t t = 0; t < count; ++t) {
        auto f = BooleanFunction::from_bits(n, t);
        if (filter.accepts(f)) out.push_back(std::move(f));
    }
    return out;
}

std::string_view to_string(Objective o) { return o == Objective::max_w ? "max_w" : "min_w"; }

Objective parse_objective(std::string_view text) {
    if (text == "max_w" || text == "max") return Objective::max_w;
    if (text == "min_w" || text == "min") return Objective::min_w;
    throw ValidationError("objective must be max_w or min_w, got '" + std::string(text) + "'");
}

namespace {

// +1 dictator of some voter, -1 anti-dictator, 0 otherwise.
int literal_kind(const BooleanFunction& f) {
    if (dictator_voter(f) >= 0) return 1;
    if (anti_dictator_voter(f) >= 0) return -1;
    return 0;
}

double base_term(double p1, double p2, double p3) {
    return p1 * p2 * p3 + (1.0 - p1) * (1.0 - p2) * (1.0 - p3);
}

struct Best {
    double value;
    std::size_t i, j, k;
    bool found = false;
};

bool better(Objective o, double cand, double cur) {
    return o == Objective::max_w ? cand > cur + kTieTolerance : cand < cur - kTieTolerance;
}

}  // namespace

ExtremalResult extremal_w_over(const std::vector<BooleanFunction>& F,
                               const std::vector<BooleanFunction>& G,
                               const std::vector<BooleanFunction>& H,
                               const EvenProductDistribution& d, Objective objective,
                               const SearchOptions& options) {
    if (F.empty() || G.empty() || H.empty())
        throw ValidationError("a function class is empty; nothing to search");
    const double triples =
        static_cast<double>(F.size()) * static_cast<double>(G.size()) * static_cast<double>(H.size());
    if (triples > kTripleBudget)
        throw CapacityError("exhaustive search over " + std::to_string(triples) +
                            " triples exceeds the 1e9 budget; use --random with --trials");
    const std::size_t cache_bytes =
        sizeof(double) * (F.size() * G.size() + G.size() * H.size() + H.size() * F.size());
    if (cache_bytes > kPairCacheBytes)
        throw CapacityError("pairwise cache would need more than 1 GiB; use --random");

    auto spectra = [](const std::vector<BooleanFunction>& fs) {
        std::vector<WalshSpectrum> out;
        out.reserve(fs.size());
        for (const auto& f : fs) out.push_back(walsh_transform(f));
        return out;
    };
    const auto SF = spectra(F), SG = spectra(G), SH = spectra(H);
    const auto deltas = d.deltas();
    auto pair_matrix = [](const std::vector<WalshSpectrum>& A, const std::vector<WalshSpectrum>& B,
                          double delta) {
        std::vector<double> m(A.size() * B.size());
        for (std::size_t a = 0; a < A.size(); ++a)
            for (std::size_t b = 0; b < B.size(); ++b)
                m[a * B.size() + b] = biased_inner_product(A[a], B[b], delta);
        return m;
    };
    const auto FG = pair_matrix(SF, SG, deltas[0]);
    const auto GH = pair_matrix(SG, SH, deltas[1]);
    const auto HF = pair_matrix(SH, SF, deltas[2]);

    std::vector<int> kindF(F.size()), kindG(G.size()), kindH(H.size());
    if (options.exclude_dictatorial) {
        for (std::size_t i = 0; i < F.size(); ++i) kindF[i] = literal_kind(F[i]);
        for (std::size_t i = 0; i < G.size(); ++i) kindG[i] = literal_kind(G[i]);
        for (std::size_t i = 0; i < H.size(); ++i) kindH[i] = literal_kind(H[i]);
    }

    std::vector<Best> partial(F.size());
    std::vector<std::uint64_t> counted(F.size(), 0);
    parallel_for(F.size(), [&](std::size_t i) {
        Best best{0.0, 0, 0, 0, false};
        const double p1 = SF[i].mean();
        for (std::size_t j = 0; j < G.size(); ++j) {
            const double p2 = SG[j].mean();
            const double fg = FG[i * G.size() + j];
            for (std::size_t k = 0; k < H.size(); ++k) {
                if (options.exclude_dictatorial && kindF[i] != 0 && kindF[i] == kindG[j] &&
                    kindG[j] == kindH[k] && F[i] == G[j] && G[j] == H[k])
                    continue;
                const double w = base_term(p1, p2, SH[k].mean()) + fg + GH[j * H.size() + k] +
                                 HF[k * F.size() + i];
                ++counted[i];
                if (!best.found || better(objective, w, best.value)) best = {w, i, j, k, true};
            }
        }
        partial[i] = best;
    });

    Best best{0.0, 0, 0, 0, false};
    std::uint64_t evaluated = 0;
    for (std::size_t i = 0; i < F.size(); ++i) {
        evaluated += counted[i];
        const auto& b = partial[i];
        if (!b.found) continue;
        // Chunks arrive in ascending i, so on a tie the earlier (lexicographically
        // smaller) witness is kept.
        if (!best.found || better(objective, b.value, best.value)) best = b;
    }
    if (!best.found) throw ValidationError("every triple was excluded; nothing to search");

    ExtremalResult r;
    r.objective = objective;
    r.value = best.value;
    r.witness.emplace(F[best.i], G[best.j], H[best.k]);
    r.distribution = d;
    r.evaluated = evaluated;
    r.mode = "exhaustive";
    r.tie_break = "values within 1e-12 tie; lexicographically least (f,g,h) truth tables win";
    return r;
}

ExtremalResult extremal_w(int n, const ClassFilter& ff, const ClassFilter& fg,
                          const ClassFilter& fh, const EvenProductDistribution& d,
                          Objective objective, const SearchOptions& options) {
    auto r = extremal_w_over(enumerate_class(n, ff), enumerate_class(n, fg),
                             enumerate_class(n, fh), d, objective, options);
    r.classes = {ff.to_string(), fg.to_string(), fh.to_string()};
    return r;
}

BooleanFunction random_balanced(int n, std::mt19937_64& rng) {
    BooleanFunction f(n);
    const auto N = static_cast<Mask>(f.size());
    std::vector<Mask> idx(N);
    std::iota(idx.begin(), idx.end(), Mask{0});
    // Partial Fisher-Yates: the first N/2 positions form a uniform random half.
    for (Mask i = 0; i < N / 2; ++i) {
        std::uniform_int_distribution<Mask> pick(i, N - 1);
        std::swap(idx[i], idx[pick(rng)]);
        f.set(idx[i], true);
    }
    return f;
}

ClassSampler::ClassSampler(int n, const ClassFilter& filter) : n_(n), filter_(filter) {
    const bool enumerable =
        n <= kExhaustiveMaxArity ||
        ((filter.predicates() & kMonotone) && n <= kMonotoneEnumerationMaxArity);
    if (enumerable) {
        members_ = enumerate_class(n, filter);
        if (members_.empty()) throw ValidationError("class " + filter.to_string() + " is empty");
    }
}

BooleanFunction ClassSampler::operator()(std::mt19937_64& rng) const {
    if (!members_.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, members_.size() - 1);
        return members_[pick(rng)];
    }
    const bool balanced_only = (filter_.predicates() & ~(kBalanced | kNonConstant)) == 0 &&
                               (filter_.predicates() & kBalanced) && !filter_.expectation_range();
    if (balanced_only) return random_balanced(n_, rng);
    constexpr int kAttempts = 100000;
    for (int a = 0; a < kAttempts; ++a) {
        BooleanFunction f(n_);
        const auto N = static_cast<Mask>(f.size());
        for (Mask x = 0; x < N; x += 64) {
            const auto w = rng();
            for (Mask b = 0; b < 64 && x + b < N; ++b) f.set(x + b, (w >> b) & 1U);
        }
        if (filter_.accepts(f)) return f;
    }
    throw CapacityError("could not sample class " + filter_.to_string() + " at n=" +
                        std::to_string(n_) + " by rejection; reduce n");
}

ExtremalResult random_search(int n, const ClassFilter& ff, const ClassFilter& fg,
                             const ClassFilter& fh, const EvenProductDistribution& d,
                             Objective objective, std::uint64_t trials, std::uint64_t seed,
                             const SearchOptions& options) {
    if (trials == 0) throw ValidationError("random search needs at least one trial");
    const ClassSampler sf(n, ff), sg(n, fg), sh(n, fh);
    std::mt19937_64 rng(seed);
    ExtremalResult r;
    r.objective = objective;
    r.distribution = d;
    r.mode = "random";
    r.seed = seed;
    r.classes = {ff.to_string(), fg.to_string(), fh.to_string()};
    r.tie_break = "first sampled triple wins among values within 1e-12";
    bool found = false;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Gswf g(sf(rng), sg(rng), sh(rng));
        if (options.exclude_dictatorial && g.f == g.g && g.g == g.h && literal_kind(g.f) != 0)
            continue;
        const double w = w_formula(g, d).w;
        ++r.evaluated;
        if (!found || better(objective, w, r.value)) {
            r.value = w;
            r.witness = std::move(g);
            found = true;
        }
    }
    if (!found) throw ValidationError("every sampled triple was excluded");
    return r;
}

}  // namespace gswf::search
