#ifndef AER_BIG_EXPONENT_HPP
#define AER_BIG_EXPONENT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace aer {

// Nonnegative integer wide enough to hold 256^(n^2) - 2 for any dimension.
// Stored as big-endian bytes with no leading zero byte (zero is an empty
// vector). Deliberately not a general bignum: construction, subtraction of
// a small constant, MSB-first bit iteration and decimal rendering are all
// the exponent machinery needs.
class BigExponent {
public:
    BigExponent() = default;

    static BigExponent from_u64(std::uint64_t v);

    // 256^k
    static BigExponent pow_of_256(int k);

    // 256^(n*n) - 2, the limit-power inverse exponent for dimension n
    static BigExponent limit_for_dim(int n);

    static BigExponent from_bytes_be(std::vector<std::uint8_t> be);

    bool is_zero() const { return bytes_.empty(); }
    int bit_length() const;
    // bit i counted from the most significant bit (i = 0)
    bool bit_from_msb(int i) const;

    // this - d; d must not exceed the stored value
    BigExponent minus(std::uint8_t d) const;

    std::string to_decimal() const;

    bool operator==(const BigExponent&) const = default;

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

private:
    explicit BigExponent(std::vector<std::uint8_t> be) : bytes_(std::move(be)) {}
    void trim();

    std::vector<std::uint8_t> bytes_; // big-endian
};

} // namespace aer

#endif
