#include "gswf/bfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "gswf/error.hpp"

namespace gswf {

namespace {

void check_arity(int n) {
    if (n < 1) throw ValidationError("arity must be at least 1, got " + std::to_string(n));
    if (n > kMaxArity)
        throw CapacityError("arity " + std::to_string(n) + " exceeds N_MAX=" +
                            std::to_string(kMaxArity));
}

std::size_t word_count(int n) { return ((std::size_t{1} << n) + 63) / 64; }

std::uint64_t tail_mask(int n) {
    return n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1U << n)) - 1);
}

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
    check_arity(n);
    words_.assign(word_count(n), 0);
}

BooleanFunction BooleanFunction::from_predicate(int n, const std::function<bool(Mask)>& pred) {
    BooleanFunction f(n);
    const auto N = static_cast<Mask>(f.size());
    for (Mask x = 0; x < N; ++x) f.set(x, pred(x));
    return f;
}

BooleanFunction BooleanFunction::from_bits(int n, std::uint64_t bits) {
    if (n > 6) throw ValidationError("from_bits supports n <= 6");
    BooleanFunction f(n);
    f.words_[0] = bits & tail_mask(n);
    return f;
}

BooleanFunction BooleanFunction::from_hex(int n, std::string_view hex) {
    BooleanFunction f(n);
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty()) throw ValidationError("empty hex truth table");
    const std::size_t max_digits = std::max<std::size_t>(1, f.size() / 4);
    // Leading zeros are tolerated; anything beyond 2^n bits must be zero.
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
        unsigned v;
        if (c >= '0' && c <= '9')
            v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v = static_cast<unsigned>(c - 'a' + 10);
        else
            throw ValidationError(std::string("invalid hex digit '") + *it + "' in truth table");
        for (unsigned b = 0; b < 4; ++b) {
            if (!((v >> b) & 1U)) continue;
            if (bit + b >= f.size())
                throw ValidationError("hex truth table has bits beyond 2^n for n=" +
                                      std::to_string(n) + " (expected at most " +
                                      std::to_string(max_digits) + " hex digits)");
            f.set(static_cast<Mask>(bit + b), true);
        }
    }
    return f;
}

bool BooleanFunction::evaluate(Mask x) const {
    if (x >= size())
        throw ValidationError("input " + std::to_string(x) + " out of range for n=" +
                              std::to_string(n_));
    return (*this)[x];
}

void BooleanFunction::set(Mask x, bool value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (value)
        words_[x >> 6] |= bit;
    else
        words_[x >> 6] &= ~bit;
}

std::size_t BooleanFunction::popcount() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string BooleanFunction::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t digits = std::max<std::size_t>(1, size() / 4);
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b) {
            const std::size_t x = d * 4 + b;
            if (x < size() && (*this)[static_cast<Mask>(x)]) v |= 1U << b;
        }
        out[digits - 1 - d] = kDigits[v];
    }
    return out;
}

std::strong_ordering BooleanFunction::operator<=>(const BooleanFunction& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Spectrum::Spectrum(int n, std::vector<double> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}

PseudoSpectrum::PseudoSpectrum(int n, std::vector<double> coeffs)
    : Spectrum((check_arity(n), n), std::move(coeffs)) {
    if (this->coeffs().size() != (std::size_t{1} << n))
        throw ValidationError("pseudo-spectrum needs 2^n coefficients");
}

PseudoSpectrum::PseudoSpectrum(const Spectrum& s)
    : Spectrum(s.arity(), std::vector<double>(s.coeffs().begin(), s.coeffs().end())) {}

void walsh_butterfly(std::span<double> a) {
    // Pair (lo, hi) differs in one coordinate: lo has x_i = 0, hi has x_i = 1.
    // Sum feeds the subset without i, and hi - lo (the sign of r_i) the subset with i.
    const std::size_t N = a.size();
    for (std::size_t h = 1; h < N; h <<= 1) {
        for (std::size_t i = 0; i < N; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double lo = a[j];
                const double hi = a[j + h];
                a[j] = lo + hi;
                a[j + h] = hi - lo;
            }
        }
    }
}

WalshSpectrum walsh_transform(const BooleanFunction& f) {
    const std::size_t N = f.size();
    std::vector<double> a(N);
    for (std::size_t x = 0; x < N; ++x) a[x] = f[static_cast<Mask>(x)] ? 1.0 : 0.0;
    walsh_butterfly(a);
    const double scale = 1.0 / static_cast<double>(N);
    for (auto& v : a) v *= scale;
    return WalshSpectrum(f.arity(), std::move(a));
}

std::vector<double> inverse_walsh_transform(const Spectrum& s) {
    std::vector<double> a(s.coeffs().begin(), s.coeffs().end());
    const std::size_t N = a.size();
    // value(x_i = 0) = without - with, value(x_i = 1) = without + with.
    for (std::size_t h = 1; h < N; h <<= 1) {
        for (std::size_t i = 0; i < N; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double without = a[j];
                const double with = a[j + h];
                a[j] = without - with;
                a[j + h] = without + with;
            }
        }
    }
    return a;
}

double expectation(const BooleanFunction& f) {
    return static_cast<double>(f.popcount()) / static_cast<double>(f.size());
}

std::vector<double> level_weights(const Spectrum& s) {
    std::vector<double> w(static_cast<std::size_t>(s.arity()) + 1, 0.0);
    const auto c = s.coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) w[level(static_cast<Mask>(m))] += c[m] * c[m];
    return w;
}

bool is_balanced(const BooleanFunction& f) { return 2 * f.popcount() == f.size(); }

bool is_constant(const BooleanFunction& f) {
    const auto pc = f.popcount();
    return pc == 0 || pc == f.size();
}

bool is_monotone(const BooleanFunction& f) {
    const auto N = static_cast<Mask>(f.size());
    for (int i = 0; i < f.arity(); ++i) {
        const Mask bit = Mask{1} << i;
        for (Mask x = 0; x < N; ++x) {
            if ((x & bit) == 0 && f[x] && !f[x | bit]) return false;
        }
    }
    return true;
}

BooleanFunction dual(const BooleanFunction& f) {
    const auto N = static_cast<Mask>(f.size());
    const Mask all = N - 1;
    BooleanFunction g(f.arity());
    for (Mask x = 0; x < N; ++x) g.set(x, !f[all ^ x]);
    return g;
}

bool is_self_dual(const BooleanFunction& f) { return dual(f) == f; }

BooleanFunction permute_voters(const BooleanFunction& f, std::span<const int> perm) {
    const int n = f.arity();
    if (static_cast<int>(perm.size()) != n)
        throw ValidationError("permutation length must equal the arity");
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]++)
            throw ValidationError("not a permutation of the voters");
    }
    const auto N = static_cast<Mask>(f.size());
    BooleanFunction g(n);
    for (Mask x = 0; x < N; ++x) {
        Mask y = 0;
        for (int i = 0; i < n; ++i)
            if ((x >> i) & 1U) y |= Mask{1} << perm[static_cast<std::size_t>(i)];
        g.set(y, f[x]);
    }
    return g;
}

bool is_invariant_under(const BooleanFunction& f, std::span<const std::vector<int>> generators) {
    return std::all_of(generators.begin(), generators.end(),
                       [&](const std::vector<int>& p) { return permute_voters(f, p) == f; });
}

bool is_cyclic_invariant(const BooleanFunction& f) {
    std::vector<std::vector<int>> gen(1, std::vector<int>(static_cast<std::size_t>(f.arity())));
    std::iota(gen[0].begin(), gen[0].end(), 1);
    gen[0].back() = 0;
    return is_invariant_under(f, gen);
}

namespace {

int literal_voter(const BooleanFunction& f, bool negated) {
    const auto N = static_cast<Mask>(f.size());
    for (int i = 0; i < f.arity(); ++i) {
        bool match = true;
        for (Mask x = 0; x < N && match; ++x) match = f[x] == (((x >> i) & 1U) != negated);
        if (match) return i;
    }
    return -1;
}

}  // namespace

int dictator_voter(const BooleanFunction& f) { return literal_voter(f, false); }
int anti_dictator_voter(const BooleanFunction& f) { return literal_voter(f, true); }

}  // namespace gswf
