#include "aer/order.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace aer {
namespace {

// Full 64 KiB product table; the cycle walkers spend nearly all their time
// in the step function, so the two-lookup log/antilog path is too slow here.
struct MulTable {
    std::array<std::array<std::uint8_t, 256>, 256> t{};
    MulTable() {
        for (int a = 0; a < 256; ++a)
            for (int b = 0; b < 256; ++b)
                t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    gf256::mul(static_cast<gf256::Elem>(a), static_cast<gf256::Elem>(b));
    }
};

const MulTable& mul_table() {
    static const MulTable m;
    return m;
}

// dst = a * b, row-major n x n raw bytes; dst must not alias a or b
void mul_into(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b, int n,
              const MulTable& m) {
    for (int i = 0; i < n; ++i) {
        const std::uint8_t* arow = a + static_cast<std::ptrdiff_t>(i) * n;
        std::uint8_t* drow = dst + static_cast<std::ptrdiff_t>(i) * n;
        for (int j = 0; j < n; ++j) {
            std::uint8_t acc = 0;
            for (int k = 0; k < n; ++k) acc ^= m.t[arow[k]][b[static_cast<std::ptrdiff_t>(k) * n + j]];
            drow[j] = acc;
        }
    }
}

struct TailPeriod {
    std::uint64_t tail;
    std::uint64_t period;
};

// Walks the power sequence X, X^2, ... in fixed-size buffers. The base is
// constant along the walk, so each of its rows collapses into a 256-entry
// table of packed products: one step is N lookups and XORs per row instead
// of N^2 hits into the 64 KiB product table. N <= 4.
template <int N>
struct FixedWalker {
    using Buf = std::array<std::uint8_t, static_cast<std::size_t>(N) * N>;
    Buf base;
    // rowtab[k][v] = packed row (v * base[k][0], ..., v * base[k][N-1])
    std::array<std::array<std::uint32_t, 256>, static_cast<std::size_t>(N)> rowtab;

    explicit FixedWalker(const Matrix& x) {
        std::memcpy(base.data(), x.entries().data(), base.size());
        const MulTable& m = mul_table();
        for (int k = 0; k < N; ++k)
            for (int v = 0; v < 256; ++v) {
                std::uint32_t packed = 0;
                for (int j = 0; j < N; ++j)
                    packed |= static_cast<std::uint32_t>(
                                  m.t[static_cast<std::size_t>(v)]
                                     [base[static_cast<std::size_t>(k) * N + static_cast<std::size_t>(j)]])
                              << (8 * j);
                rowtab[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] = packed;
            }
    }
    // state rows stay packed along the walk
    using Packed = std::array<std::uint32_t, static_cast<std::size_t>(N)>;

    Packed start() const {
        Packed p{};
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                p[static_cast<std::size_t>(i)] |=
                    static_cast<std::uint32_t>(
                        base[static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j)])
                    << (8 * j);
        return p;
    }
    void step(Packed& cur) const {
        Packed next;
        for (int i = 0; i < N; ++i) {
            std::uint32_t acc = 0;
            for (int k = 0; k < N; ++k)
                acc ^= rowtab[static_cast<std::size_t>(k)][(cur[static_cast<std::size_t>(i)] >> (8 * k)) & 0xFF];
            next[static_cast<std::size_t>(i)] = acc;
        }
        cur = next;
    }
};

struct DynWalker {
    using Buf = std::vector<std::uint8_t>;
    int n;
    Buf base;
    const MulTable& m = mul_table();

    explicit DynWalker(const Matrix& x) : n(x.dim()), base(x.entries()) {}
    Buf start() const { return base; }
    void step(Buf& cur) const {
        Buf next(cur.size());
        mul_into(next.data(), cur.data(), base.data(), n, m);
        cur.swap(next);
    }
};

template <class Walker>
TailPeriod floyd_tail_period_impl(const Walker& w) {
    auto tortoise = w.start();
    auto hare = w.start();
    w.step(tortoise);
    w.step(hare);
    w.step(hare);
    while (tortoise != hare) {
        w.step(tortoise);
        w.step(hare);
        w.step(hare);
    }
    std::uint64_t tail = 0;
    tortoise = w.start();
    while (tortoise != hare) {
        w.step(tortoise);
        w.step(hare);
        ++tail;
    }
    std::uint64_t period = 1;
    hare = tortoise;
    w.step(hare);
    while (tortoise != hare) {
        w.step(hare);
        ++period;
    }
    return {tail, period};
}

template <class Walker>
TailPeriod brent_tail_period_impl(const Walker& w) {
    std::uint64_t power = 1, period = 1;
    auto tortoise = w.start();
    auto hare = w.start();
    w.step(hare);
    while (tortoise != hare) {
        if (power == period) {
            tortoise = hare;
            power *= 2;
            period = 0;
        }
        w.step(hare);
        ++period;
    }
    tortoise = w.start();
    hare = w.start();
    for (std::uint64_t i = 0; i < period; ++i) w.step(hare);
    std::uint64_t tail = 0;
    while (tortoise != hare) {
        w.step(tortoise);
        w.step(hare);
        ++tail;
    }
    return {tail, period};
}

TailPeriod floyd_tail_period(const Matrix& x) {
    switch (x.dim()) {
        case 2: return floyd_tail_period_impl(FixedWalker<2>(x));
        case 3: return floyd_tail_period_impl(FixedWalker<3>(x));
        default: return floyd_tail_period_impl(DynWalker(x));
    }
}

TailPeriod brent_tail_period(const Matrix& x) {
    switch (x.dim()) {
        case 2: return brent_tail_period_impl(FixedWalker<2>(x));
        case 3: return brent_tail_period_impl(FixedWalker<3>(x));
        default: return brent_tail_period_impl(DynWalker(x));
    }
}

// Smallest e with X^e idempotent: e = 0 mod period and e >= tail + 1.
std::uint64_t idempotent_exponent(const TailPeriod& tp) {
    return tp.period * ((tp.tail + tp.period) / tp.period);
}

Classification classify_terminal(const Matrix& terminal) {
    if (terminal.is_identity()) return Classification::TrueIdentity;
    if (terminal.is_zero()) return Classification::ZeroAbsorbing;
    return Classification::SpuriousIdentity;
}

CycleInfo cycle_info_from(const Matrix& x, const TailPeriod& tp) {
    Matrix terminal = mat_pow(x, idempotent_exponent(tp));
    Classification c = classify_terminal(terminal);
    return CycleInfo{tp.tail, tp.period, std::move(terminal), c};
}

std::vector<std::uint64_t> sorted_divisors(std::uint64_t v) {
    std::vector<std::pair<std::uint64_t, int>> factors;
    std::uint64_t rem = v;
    for (std::uint64_t p = 2; p * p <= rem; ++p) {
        if (rem % p) continue;
        int e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (rem > 1) factors.emplace_back(rem, 1);
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : factors) {
        std::size_t old = divs.size();
        std::uint64_t pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

CycleInfo floyd_cycle(const Matrix& x) { return cycle_info_from(x, floyd_tail_period(x)); }

CycleInfo brent_cycle(const Matrix& x) { return cycle_info_from(x, brent_tail_period(x)); }

std::optional<std::uint64_t> default_order_candidate(int n) {
    // Exponent of the invertible group: 2^ceil(lg n) * lcm(256^i - 1, i <= n).
    switch (n) {
        case 1: return 255;
        case 2: return 131070;            // 2 * 3 * 5 * 17 * 257
        case 3: return 17246977020ULL;    // 4 * 3^2 * 5 * 7 * 13 * 17 * 241 * 257
        default: return std::nullopt;     // no factorization shipped past n = 3
    }
}

BigExponent terminal_exponent(int n) {
    if (n < 1) throw BadDimension(n);
    // 2^ceil(lg n) * prod_{i=1..n} (256^i - 1): a common multiple of every
    // cycle period at dimension n, and far beyond any tail.
    int two_exp = 0;
    while ((1 << two_exp) < n) ++two_exp;
    // little-endian schoolbook product over bytes
    std::vector<std::uint32_t> acc{1u << two_exp};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint32_t> factor(static_cast<std::size_t>(i), 0xFF); // 256^i - 1
        std::vector<std::uint32_t> prod(acc.size() + factor.size(), 0);
        for (std::size_t a = 0; a < acc.size(); ++a) {
            std::uint32_t carry = 0;
            for (std::size_t b = 0; b < factor.size(); ++b) {
                std::uint32_t cur = prod[a + b] + acc[a] * factor[b] + carry;
                prod[a + b] = cur & 0xFF;
                carry = cur >> 8;
            }
            std::size_t pos = a + factor.size();
            while (carry) {
                std::uint32_t cur = prod[pos] + carry;
                prod[pos] = cur & 0xFF;
                carry = cur >> 8;
                ++pos;
            }
        }
        acc = std::move(prod);
    }
    std::vector<std::uint8_t> be;
    be.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) be.push_back(static_cast<std::uint8_t>(*it));
    return BigExponent::from_bytes_be(std::move(be));
}

Classification classify(const Matrix& x) {
    static thread_local int cached_dim = 0;
    static thread_local BigExponent cached_exp;
    if (cached_dim != x.dim()) {
        cached_exp = terminal_exponent(x.dim());
        cached_dim = x.dim();
    }
    return classify_terminal(mat_pow(x, cached_exp));
}

std::optional<std::uint64_t> order_by_divisors(const Matrix& x, std::uint64_t candidate_multiple) {
    if (candidate_multiple < 1) throw BadCandidate(static_cast<long long>(candidate_multiple));
    const Matrix id = Matrix::identity(x.dim());
    for (std::uint64_t d : sorted_divisors(candidate_multiple))
        if (mat_pow(x, d) == id) return d;
    return std::nullopt;
}

std::optional<std::uint64_t> multiplicative_order(const Matrix& x) {
    if (classify(x) != Classification::TrueIdentity) return std::nullopt;
    if (auto cand = default_order_candidate(x.dim())) return order_by_divisors(x, *cand);
    return brent_cycle(x).period; // invertible, so tail = 0 and period = order
}

Matrix inverse_shortcut(const Matrix& x) {
    return mat_pow(x, BigExponent::limit_for_dim(x.dim()));
}

namespace {
bool is_two_sided_inverse(const Matrix& cand, const Matrix& x, const Matrix& id) {
    return mat_mul(cand, x) == id && mat_mul(x, cand) == id;
}
} // namespace

InverseResult verified_inverse(const Matrix& x) {
    const Matrix id = Matrix::identity(x.dim());
    Matrix cand = inverse_shortcut(x);
    if (is_two_sided_inverse(cand, x, id)) return {InverseResult::Kind::Verified, std::move(cand)};

    if (tensor_det(x) != 0) {
        std::uint64_t order;
        if (auto c = default_order_candidate(x.dim())) {
            auto d = order_by_divisors(x, *c);
            order = d ? *d : brent_cycle(x).period;
        } else {
            order = brent_cycle(x).period;
        }
        Matrix inv = order == 1 ? id : mat_pow(x, order - 1);
        return {InverseResult::Kind::Verified, std::move(inv)};
    }

    CycleInfo ci = brent_cycle(x);
    if (ci.classification == Classification::ZeroAbsorbing)
        return {InverseResult::Kind::NotInvertible, std::nullopt};
    // penultimate element of the cycle: S with S * X = terminal idempotent
    std::uint64_t e = ci.period * ((ci.tail + ci.period) / ci.period);
    return {InverseResult::Kind::Spurious, mat_pow(x, e + ci.period - 1)};
}

CensusResult generator_census(int n, long long samples, SeededRng& rng) {
    if (n < 1) throw BadDimension(n);
    if (samples < 1) throw BadSampleCount{};
    const Matrix id = Matrix::identity(n);
    const BigExponent term = terminal_exponent(n);
    const BigExponent limit = BigExponent::limit_for_dim(n);
    CensusResult r;
    r.samples = samples;
    for (long long i = 0; i < samples; ++i) {
        Matrix x = Matrix::random(n, rng);
        if (classify_terminal(mat_pow(x, term)) != Classification::TrueIdentity) continue;
        ++r.invertible;
        Matrix cand = mat_pow(x, limit);
        if (!is_two_sided_inverse(cand, x, id)) ++r.shortcut_failures;
    }
    return r;
}

} // namespace aer
