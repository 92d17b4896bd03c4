#include "gswf/rationality.hpp"

#include <cmath>
#include <random>
#include <string>

#include "gswf/error.hpp"
#include "gswf/parallel.hpp"

namespace gswf {

namespace {

void check_delta(double delta, const char* what) {
    if (!(std::abs(delta) <= 1.0))
        throw ValidationError(std::string(what) + " must lie in [-1, 1], got " +
                              std::to_string(delta));
}

std::vector<double> level_powers(int n, double delta) {
    std::vector<double> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1.0;
    for (std::size_t k = 1; k < p.size(); ++k) p[k] = p[k - 1] * delta;
    return p;
}

double base_term(double p1, double p2, double p3) {
    return p1 * p2 * p3 + (1.0 - p1) * (1.0 - p2) * (1.0 - p3);
}

}  // namespace

Gswf::Gswf(BooleanFunction f_, BooleanFunction g_, BooleanFunction h_)
    : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)) {
    if (f.arity() != g.arity() || g.arity() != h.arity())
        throw ValidationError("f, g, h must have the same number of voters (got " +
                              std::to_string(f.arity()) + ", " + std::to_string(g.arity()) +
                              ", " + std::to_string(h.arity()) + ")");
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::formula: return "formula";
        case Method::oracle: return "oracle";
        case Method::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

double biased_inner_product(const Spectrum& a, const Spectrum& b, double delta) {
    if (a.arity() != b.arity()) throw ValidationError("biased inner product: arity mismatch");
    check_delta(delta, "delta");
    const auto pw = level_powers(a.arity(), delta);
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    double acc = 0.0;
    for (std::size_t s = 1; s < ca.size(); ++s)
        acc += ca[s] * cb[s] * pw[static_cast<std::size_t>(level(static_cast<Mask>(s)))];
    return acc;
}

PseudoSpectrum noise_operator_spectral(const Spectrum& s, double eps) {
    check_delta(eps, "noise parameter");
    const auto pw = level_powers(s.arity(), eps);
    std::vector<double> c(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t m = 0; m < c.size(); ++m)
        c[m] *= pw[static_cast<std::size_t>(level(static_cast<Mask>(m)))];
    return PseudoSpectrum(s.arity(), std::move(c));
}

std::vector<double> noise_operator_convolution(std::vector<double> v, double eps) {
    check_delta(eps, "noise parameter");
    const std::size_t N = v.size();
    if (N == 0 || (N & (N - 1)) != 0) throw ValidationError("value vector length must be 2^n");
    const double keep = (1.0 + eps) / 2.0;
    const double flip = (1.0 - eps) / 2.0;
    // One averaging pass per coordinate: v(x) <- keep v(x) + flip v(x ^ e_i).
    for (std::size_t bit = 1; bit < N; bit <<= 1) {
        for (std::size_t x = 0; x < N; ++x) {
            if (x & bit) continue;
            const double lo = v[x];
            const double hi = v[x | bit];
            v[x] = keep * lo + flip * hi;
            v[x | bit] = keep * hi + flip * lo;
        }
    }
    return v;
}

std::vector<double> noise_operator_convolution(const BooleanFunction& f, double eps) {
    std::vector<double> v(f.size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = f[static_cast<Mask>(x)] ? 1.0 : 0.0;
    return noise_operator_convolution(std::move(v), eps);
}

WResult w_from_spectra(const Spectrum& sf, const Spectrum& sg, const Spectrum& sh,
                       const EvenProductDistribution& d) {
    if (sf.arity() != sg.arity() || sg.arity() != sh.arity())
        throw ValidationError("spectra must have the same arity");
    WResult r;
    r.method = Method::formula;
    r.n = sf.arity();
    r.deltas = d.deltas();
    r.expectations = {sf.mean(), sg.mean(), sh.mean()};
    r.base = base_term(sf.mean(), sg.mean(), sh.mean());
    r.cross_terms = {biased_inner_product(sf, sg, r.deltas[0]),
                     biased_inner_product(sg, sh, r.deltas[1]),
                     biased_inner_product(sh, sf, r.deltas[2])};
    r.w = r.base + r.cross_terms[0] + r.cross_terms[1] + r.cross_terms[2];
    return r;
}

WResult w_formula(const Gswf& gswf, const EvenProductDistribution& d) {
    return w_from_spectra(walsh_transform(gswf.f), walsh_transform(gswf.g),
                          walsh_transform(gswf.h), d);
}

namespace {

struct ProfileWalker {
    const Gswf& gswf;
    std::array<double, 6> prob;
    std::array<Mask, 6> xbit, ybit, zbit;  // triple component as a 0/1 multiplier
    int n;

    void walk(int voter, Mask x, Mask y, Mask z, double p, CompensatedSum& acc) const {
        if (voter == n) {
            const bool fx = gswf.f[x];
            if (fx == gswf.g[y] && fx == gswf.h[z]) acc.add(p);
            return;
        }
        for (std::size_t t = 0; t < 6; ++t) {
            if (prob[t] == 0.0) continue;
            walk(voter + 1, x | (xbit[t] << voter), y | (ybit[t] << voter),
                 z | (zbit[t] << voter), p * prob[t], acc);
        }
    }
};

}  // namespace

WResult w_oracle(const Gswf& gswf, const TripleDistribution& t) {
    const int n = gswf.arity();
    if (n > kOracleMaxArity)
        throw CapacityError("exhaustive oracle supports n <= " + std::to_string(kOracleMaxArity) +
                            " (6^n profiles); use --method mc for n=" + std::to_string(n));
    ProfileWalker walker{gswf, t.probabilities(), {}, {}, {}, n};
    for (std::size_t i = 0; i < 6; ++i) {
        walker.xbit[i] = kAdmissibleTriples[i].x ? 1 : 0;
        walker.ybit[i] = kAdmissibleTriples[i].y ? 1 : 0;
        walker.zbit[i] = kAdmissibleTriples[i].z ? 1 : 0;
    }
    // Fixed partition over the first one or two voters; chunk sums are combined in
    // chunk order so the result is bit-identical for any worker count.
    const int prefix = n >= 2 ? 2 : 1;
    const std::size_t chunks = prefix == 2 ? 36 : 6;
    std::vector<double> partial(chunks, 0.0);
    auto chunk = [&](std::size_t c) {
        const std::size_t t0 = c % 6;
        double p = walker.prob[t0];
        Mask x = walker.xbit[t0], y = walker.ybit[t0], z = walker.zbit[t0];
        if (prefix == 2) {
            const std::size_t t1 = c / 6;
            p *= walker.prob[t1];
            x |= walker.xbit[t1] << 1;
            y |= walker.ybit[t1] << 1;
            z |= walker.zbit[t1] << 1;
        }
        if (p == 0.0) return;
        CompensatedSum acc;
        walker.walk(prefix, x, y, z, p, acc);
        partial[c] = acc.value();
    };
    // Below 6 voters a chunk is too small to amortise thread start-up.
    if (n >= 6)
        parallel_for(chunks, chunk);
    else
        for (std::size_t c = 0; c < chunks; ++c) chunk(c);
    CompensatedSum total;
    for (double v : partial) total.add(v);

    WResult r;
    r.method = Method::oracle;
    r.n = n;
    r.w = total.value();
    r.expectations = {expectation(gswf.f), expectation(gswf.g), expectation(gswf.h)};
    r.base = std::nan("");
    r.cross_terms = {std::nan(""), std::nan(""), std::nan("")};
    r.deltas = {std::nan(""), std::nan(""), std::nan("")};
    if (is_even_product(t)) {
        const auto& p = t.probabilities();
        r.deltas = {4.0 * p[0] - 1.0, 4.0 * p[1] - 1.0, 4.0 * p[2] - 1.0};
    }
    return r;
}

WResult w_monte_carlo(const Gswf& gswf, const TripleDistribution& t, std::uint64_t samples,
                      std::uint64_t seed) {
    if (samples == 0) throw ValidationError("Monte Carlo needs at least one sample");
    const int n = gswf.arity();
    const auto& p = t.probabilities();
    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> pick(p.begin(), p.end());
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        Mask x = 0, y = 0, z = 0;
        for (int i = 0; i < n; ++i) {
            const auto& tr = kAdmissibleTriples[static_cast<std::size_t>(pick(rng))];
            x |= Mask{tr.x} << i;
            y |= Mask{tr.y} << i;
            z |= Mask{tr.z} << i;
        }
        const bool fx = gswf.f[x];
        if (fx == gswf.g[y] && fx == gswf.h[z]) ++hits;
    }
    WResult r;
    r.method = Method::monte_carlo;
    r.n = n;
    r.w = static_cast<double>(hits) / static_cast<double>(samples);
    r.expectations = {expectation(gswf.f), expectation(gswf.g), expectation(gswf.h)};
    r.base = std::nan("");
    r.cross_terms = {std::nan(""), std::nan(""), std::nan("")};
    r.deltas = {std::nan(""), std::nan(""), std::nan("")};
    if (is_even_product(t))
        r.deltas = {4.0 * p[0] - 1.0, 4.0 * p[1] - 1.0, 4.0 * p[2] - 1.0};
    r.samples = samples;
    r.seed = seed;
    r.std_error = std::sqrt(r.w * (1.0 - r.w) / static_cast<double>(samples));
    return r;
}

double w_prime(const Gswf& gswf) {
    const auto sf = walsh_transform(gswf.f);
    const auto sg = walsh_transform(gswf.g);
    const auto sh = walsh_transform(gswf.h);
    const auto pw = level_powers(gswf.arity(), -1.0 / 3.0);
    auto primed = [&](const Spectrum& a, const Spectrum& b) {
        double acc = 0.0;
        for (std::size_t s = 1; s < a.coeffs().size(); ++s)
            acc -= std::abs(a[static_cast<Mask>(s)] * b[static_cast<Mask>(s)] *
                            pw[static_cast<std::size_t>(level(static_cast<Mask>(s)))]);
        return acc;
    };
    return base_term(sf.mean(), sg.mean(), sh.mean()) + primed(sf, sg) + primed(sg, sh) +
           primed(sh, sf);
}

}  // namespace gswf
