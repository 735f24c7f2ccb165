#include <doctest.h>

#include "aer/big_exponent.hpp"

using namespace aer;

TEST_CASE("construction and canonical form") {
    CHECK(BigExponent{}.is_zero());
    CHECK(BigExponent::from_u64(0).is_zero());
    CHECK(BigExponent::from_u64(0).bit_length() == 0);
    CHECK(BigExponent::from_u64(1).bit_length() == 1);
    CHECK(BigExponent::from_u64(256).bit_length() == 9);
    CHECK(BigExponent::from_bytes_be({0, 0, 5}) == BigExponent::from_u64(5));
}

TEST_CASE("limit_for_dim") {
    // 256^4 - 2 = 4294967294
    CHECK(BigExponent::limit_for_dim(2) == BigExponent::from_u64(4294967294ULL));
    CHECK(BigExponent::limit_for_dim(2).to_decimal() == "4294967294");
    CHECK(BigExponent::limit_for_dim(1) == BigExponent::from_u64(254));
    // n = 3: 256^9 - 2 needs 72 bits
    CHECK(BigExponent::limit_for_dim(3).bit_length() == 72);
    CHECK(BigExponent::pow_of_256(9).minus(2) == BigExponent::limit_for_dim(3));
}

TEST_CASE("decimal rendering") {
    CHECK(BigExponent::from_u64(0).to_decimal() == "0");
    CHECK(BigExponent::pow_of_256(1).to_decimal() == "256");
    CHECK(BigExponent::pow_of_256(4).to_decimal() == "4294967296");
    CHECK(BigExponent::from_u64(18446744073709551615ULL).to_decimal() == "18446744073709551615");
}

TEST_CASE("minus") {
    CHECK(BigExponent::from_u64(256).minus(1) == BigExponent::from_u64(255));
    CHECK(BigExponent::from_u64(1).minus(1).is_zero());
    CHECK(BigExponent::pow_of_256(4).minus(2).to_decimal() == "4294967294");
}

TEST_CASE("MSB-first bit iteration") {
    BigExponent e = BigExponent::from_u64(0b101100);
    CHECK(e.bit_length() == 6);
    std::string bits;
    for (int i = 0; i < e.bit_length(); ++i) bits += e.bit_from_msb(i) ? '1' : '0';
    CHECK(bits == "101100");
}
