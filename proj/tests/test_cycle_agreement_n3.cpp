// Floyd/Brent agreement on 3x3 samples. Cycles reach length 16,777,215, so
// this runs for a few minutes; it lives in its own binary with a long ctest
// timeout rather than padding the regular order suite.

#include <doctest.h>

#include "aer/matrix.hpp"
#include "aer/order.hpp"

using namespace aer;

TEST_CASE("floyd and brent agree on 1000 random 3x3 matrices") {
    SeededRng rng(333);
    for (int t = 0; t < 1000; ++t) {
        Matrix x = Matrix::random(3, rng);
        CycleInfo f = floyd_cycle(x);
        CycleInfo b = brent_cycle(x);
        CAPTURE(t);
        REQUIRE(f == b);
        if (tensor_det(x) != 0)
            REQUIRE(f.tail == 0);
        else
            REQUIRE(f.classification != Classification::TrueIdentity);
    }
}
