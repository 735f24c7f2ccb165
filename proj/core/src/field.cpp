#include "aer/field.hpp"

#include <array>

namespace aer::gf256 {
namespace {

// log/antilog tables over the generator 0x03. antilog has 510 entries so
// mul can skip the mod-255 reduction.
struct Tables {
    std::array<Elem, 510> antilog{};
    std::array<int, 256> log{};

    Tables() {
        Elem p = 1;
        for (int i = 0; i < 255; ++i) {
            antilog[i] = p;
            antilog[i + 255] = p;
            log[p] = i;
            // multiply by 0x03 = x + 1: p*x + p, reduced by 0x11B
            Elem px = static_cast<Elem>(p << 1);
            if (p & 0x80) px ^= 0x1B;
            p = static_cast<Elem>(px ^ p);
        }
        log[0] = -1;
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

} // namespace

Elem mul(Elem a, Elem b) {
    if (a == 0 || b == 0) return 0;
    const Tables& t = tables();
    return t.antilog[static_cast<std::size_t>(t.log[a] + t.log[b])];
}

Elem pow(Elem a, std::uint64_t e) {
    Elem result = one;
    Elem base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem inv(Elem a) {
    if (a == 0) throw ZeroInverse{};
    return pow(a, 254);
}

int element_order(Elem a) {
    if (a == 0) throw ZeroInverse{};
    // group order is 255 = 3*5*17; the element order is its smallest divisor d
    // with a^d = 1
    static constexpr int divisors[] = {1, 3, 5, 15, 17, 51, 85, 255};
    for (int d : divisors)
        if (pow(a, static_cast<std::uint64_t>(d)) == one) return d;
    return 255; // unreachable: a^255 = 1 for every nonzero a
}

} // namespace aer::gf256
