#ifndef AER_ORDER_HPP
#define AER_ORDER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "aer/matrix.hpp"
#include "aer/rng.hpp"

namespace aer {

enum class Classification { TrueIdentity, SpuriousIdentity, ZeroAbsorbing };

// Shape of the eventually periodic power sequence X, X^2, X^3, ...
// The cycle always contains exactly one idempotent (the terminal); it is the
// identity exactly when X is invertible.
struct CycleInfo {
    std::uint64_t tail;    // aperiodic prefix length; 0 for invertible X
    std::uint64_t period;
    Matrix terminal;
    Classification classification;

    bool operator==(const CycleInfo&) const = default;
};

struct InverseResult {
    enum class Kind { Verified, Spurious, NotInvertible };
    Kind kind;
    std::optional<Matrix> value;
};

// Tortoise-and-hare over the power sequence.
CycleInfo floyd_cycle(const Matrix& x);

// Brent's power-of-two variant; returns the same CycleInfo as floyd_cycle.
CycleInfo brent_cycle(const Matrix& x);

// Smallest d >= 1 with X^d = identity, or nullopt when the power cycle never
// reaches the identity.
std::optional<std::uint64_t> multiplicative_order(const Matrix& x);

// Tries divisors of candidate_multiple in increasing order, returning the
// first d with X^d = identity. Correct when the order divides the candidate.
std::optional<std::uint64_t> order_by_divisors(const Matrix& x, std::uint64_t candidate_multiple);

// A u64 multiple of every invertible element order at dimension n (exponent
// of the invertible group); available for n <= 3.
std::optional<std::uint64_t> default_order_candidate(int n);

// A multiple of every power-cycle period at dimension n, large enough to land
// past any tail. X^this is always the terminal idempotent.
BigExponent terminal_exponent(int n);

// The limit-power one-shot inverse candidate X^(256^(n^2) - 2). Correct only
// when the order of X divides 256^(n^2) - 1; callers must verify.
Matrix inverse_shortcut(const Matrix& x);

// Shortcut first, verified by multiplication; falls back to the cycle when
// the shortcut misses (even-order elements). Singular inputs yield the
// spurious inverse, or NotInvertible for zero-absorbing ones.
InverseResult verified_inverse(const Matrix& x);

Classification classify(const Matrix& x);

struct CensusResult {
    long long samples = 0;
    long long invertible = 0;          // classified TrueIdentity
    long long shortcut_failures = 0;   // invertible but shortcut missed

    double invertible_fraction() const {
        return static_cast<double>(invertible) / static_cast<double>(samples);
    }
    double shortcut_failure_fraction() const {
        return invertible == 0 ? 0.0
                               : static_cast<double>(shortcut_failures) / static_cast<double>(invertible);
    }
};

// Monte Carlo estimate of the invertible (cyclic-subgroup-generator)
// fraction, plus how often the limit-power shortcut fails on invertible
// draws.
CensusResult generator_census(int n, long long samples, SeededRng& rng);

} // namespace aer

#endif
