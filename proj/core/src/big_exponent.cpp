#include "aer/big_exponent.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace aer {

void BigExponent::trim() {
    std::size_t i = 0;
    while (i < bytes_.size() && bytes_[i] == 0) ++i;
    bytes_.erase(bytes_.begin(), bytes_.begin() + static_cast<std::ptrdiff_t>(i));
}

BigExponent BigExponent::from_u64(std::uint64_t v) {
    std::vector<std::uint8_t> be;
    while (v != 0) {
        be.push_back(static_cast<std::uint8_t>(v & 0xFF));
        v >>= 8;
    }
    std::reverse(be.begin(), be.end());
    return BigExponent(std::move(be));
}

BigExponent BigExponent::pow_of_256(int k) {
    if (k < 0) throw std::invalid_argument("negative power of 256");
    std::vector<std::uint8_t> be(static_cast<std::size_t>(k) + 1, 0);
    be[0] = 1;
    return BigExponent(std::move(be));
}

BigExponent BigExponent::limit_for_dim(int n) {
    // 256^(n*n) - 2 is n*n bytes: 0xFF ... 0xFF 0xFE
    std::vector<std::uint8_t> be(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0xFF);
    be.back() = 0xFE;
    return BigExponent(std::move(be));
}

BigExponent BigExponent::from_bytes_be(std::vector<std::uint8_t> be) {
    BigExponent r(std::move(be));
    r.trim();
    return r;
}

int BigExponent::bit_length() const {
    if (bytes_.empty()) return 0;
    int lead = 7;
    while (lead > 0 && !((bytes_[0] >> lead) & 1)) --lead;
    return static_cast<int>(bytes_.size() - 1) * 8 + lead + 1;
}

bool BigExponent::bit_from_msb(int i) const {
    int len = bit_length();
    assert(i >= 0 && i < len);
    int pos = len - 1 - i; // bit index counted from the LSB
    std::size_t byte = bytes_.size() - 1 - static_cast<std::size_t>(pos / 8);
    return (bytes_[byte] >> (pos % 8)) & 1;
}

BigExponent BigExponent::minus(std::uint8_t d) const {
    std::vector<std::uint8_t> be = bytes_;
    int borrow = d;
    for (std::size_t i = be.size(); i-- > 0 && borrow != 0;) {
        int v = be[i] - borrow;
        borrow = 0;
        while (v < 0) {
            v += 256;
            ++borrow;
        }
        be[i] = static_cast<std::uint8_t>(v);
    }
    if (borrow != 0) throw std::underflow_error("BigExponent::minus underflow");
    BigExponent r(std::move(be));
    r.trim();
    return r;
}

std::string BigExponent::to_decimal() const {
    if (bytes_.empty()) return "0";
    std::vector<std::uint8_t> work = bytes_;
    std::string digits;
    while (!work.empty()) {
        // divide the big-endian byte string by 10, collecting the remainder
        int rem = 0;
        std::vector<std::uint8_t> quot;
        quot.reserve(work.size());
        for (std::uint8_t b : work) {
            int cur = rem * 256 + b;
            quot.push_back(static_cast<std::uint8_t>(cur / 10));
            rem = cur % 10;
        }
        digits.push_back(static_cast<char>('0' + rem));
        std::size_t i = 0;
        while (i < quot.size() && quot[i] == 0) ++i;
        quot.erase(quot.begin(), quot.begin() + static_cast<std::ptrdiff_t>(i));
        work = std::move(quot);
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace aer
