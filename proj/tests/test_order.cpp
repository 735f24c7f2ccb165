#include <doctest.h>

#include "aer/order.hpp"

using namespace aer;

namespace {

Matrix m2(int a, int b, int c, int d) {
    return Matrix(2, {static_cast<gf256::Elem>(a), static_cast<gf256::Elem>(b),
                      static_cast<gf256::Elem>(c), static_cast<gf256::Elem>(d)});
}

const Matrix cyc17 = m2(165, 182, 199, 138);        // singular, 17-cycle
const Matrix nilpotent = m2(0, 1, 0, 0);             // N^2 = 0
const Matrix involution = m2(1, 1, 0, 1);            // U^2 = I, even order
const Matrix demo_x = m2(244, 199, 161, 106);

Matrix random_singular(int n, SeededRng& rng) {
    for (;;) {
        Matrix x = Matrix::random(n, rng);
        if (tensor_det(x) == 0) return x;
    }
}

} // namespace

TEST_CASE("floyd_cycle on the canonical shapes") {
    CycleInfo id = floyd_cycle(Matrix::identity(2));
    CHECK(id.tail == 0);
    CHECK(id.period == 1);
    CHECK(id.terminal == Matrix::identity(2));
    CHECK(id.classification == Classification::TrueIdentity);

    CycleInfo t2 = floyd_cycle(cyc17);
    CHECK(t2.tail == 0);
    CHECK(t2.period == 17);
    CHECK(t2.terminal == m2(24, 209, 210, 25));
    CHECK(t2.classification == Classification::SpuriousIdentity);

    CycleInfo nil = floyd_cycle(nilpotent);
    CHECK(nil.tail == 1);
    CHECK(nil.period == 1);
    CHECK(nil.terminal == Matrix::zero(2));
    CHECK(nil.classification == Classification::ZeroAbsorbing);
}

TEST_CASE("brent_cycle returns the same CycleInfo") {
    for (const Matrix& x : {Matrix::identity(2), cyc17, nilpotent, involution, demo_x})
        CHECK(brent_cycle(x) == floyd_cycle(x));

    SeededRng rng(17);
    for (int i = 0; i < 1000; ++i) {
        Matrix x = Matrix::random(2, rng);
        REQUIRE(brent_cycle(x) == floyd_cycle(x));
    }
}

TEST_CASE("power sequence repeats with the reported tail and period") {
    SeededRng rng(19);
    std::vector<Matrix> cases{cyc17, nilpotent, involution};
    for (int i = 0; i < 30; ++i) cases.push_back(Matrix::random(2, rng));
    for (int i = 0; i < 5; ++i) cases.push_back(random_singular(2, rng));
    for (const Matrix& x : cases) {
        CycleInfo ci = brent_cycle(x);
        CHECK(mat_mul(ci.terminal, ci.terminal) == ci.terminal);
        for (std::uint64_t i = 1; i <= 3; ++i)
            REQUIRE(mat_pow(x, ci.tail + ci.period + i) == mat_pow(x, ci.tail + i));
        if (tensor_det(x) != 0) CHECK(ci.tail == 0);
    }
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(Matrix::identity(2)) == 1);
    CHECK(!multiplicative_order(cyc17).has_value());
    CHECK(!multiplicative_order(nilpotent).has_value());

    auto d = multiplicative_order(demo_x);
    REQUIRE(d.has_value());
    CHECK((65535 % *d == 0 || 131070 % *d == 0));
    CHECK(mat_pow(demo_x, *d) == Matrix::identity(2));
    // no proper divisor reaches the identity
    for (std::uint64_t p = 1; p < *d; ++p)
        if (*d % p == 0) REQUIRE(!(mat_pow(demo_x, p) == Matrix::identity(2)));
}

TEST_CASE("order_by_divisors") {
    CHECK(order_by_divisors(Matrix::identity(2), 255) == 1);
    CHECK(order_by_divisors(involution, 131070) == 2);
    CHECK(order_by_divisors(demo_x, 131070) == multiplicative_order(demo_x));
    CHECK(!order_by_divisors(cyc17, 131070).has_value());
    CHECK_THROWS_AS(order_by_divisors(involution, 0), BadCandidate);
}

TEST_CASE("inverse_shortcut reproduces the worked-example limit powers") {
    CHECK(inverse_shortcut(demo_x) == m2(207, 42, 35, 163));
    CHECK(inverse_shortcut(m2(54, 252, 233, 201)) == m2(167, 247, 222, 209));
    CHECK(inverse_shortcut(Matrix::identity(2)) == Matrix::identity(2));
}

TEST_CASE("verified_inverse") {
    InverseResult x = verified_inverse(demo_x);
    CHECK(x.kind == InverseResult::Kind::Verified);
    CHECK(*x.value == m2(207, 42, 35, 163));

    // even order: the shortcut lands on the identity, which is not U's
    // inverse, so the cycle fallback must hand back U itself
    CHECK(mat_pow(involution, BigExponent::limit_for_dim(2)) == Matrix::identity(2));
    InverseResult u = verified_inverse(involution);
    CHECK(u.kind == InverseResult::Kind::Verified);
    CHECK(*u.value == involution);

    InverseResult sp = verified_inverse(cyc17);
    CHECK(sp.kind == InverseResult::Kind::Spurious);
    CHECK(*sp.value == m2(222, 252, 161, 28));
    CHECK(mat_mul(*sp.value, cyc17) == m2(24, 209, 210, 25));

    InverseResult nil = verified_inverse(nilpotent);
    CHECK(nil.kind == InverseResult::Kind::NotInvertible);
    CHECK(!nil.value.has_value());
}

TEST_CASE("spurious identities behave like local units") {
    SeededRng rng(29);
    for (int i = 0; i < 25; ++i) {
        Matrix x = random_singular(2, rng);
        CycleInfo ci = brent_cycle(x);
        if (ci.classification != Classification::SpuriousIdentity) continue;
        const Matrix& e = ci.terminal;
        CHECK(mat_mul(e, e) == e);
        CHECK(!(e == Matrix::identity(2)));
        CHECK(mat_mul(e, x) == x);   // cycle re-entry
        InverseResult s = verified_inverse(x);
        REQUIRE(s.kind == InverseResult::Kind::Spurious);
        CHECK(mat_mul(*s.value, x) == e);
        CHECK(mat_mul(x, *s.value) == e);
    }
}

TEST_CASE("classify") {
    CHECK(classify(Matrix::identity(2)) == Classification::TrueIdentity);
    CHECK(classify(cyc17) == Classification::SpuriousIdentity);
    CHECK(classify(nilpotent) == Classification::ZeroAbsorbing);
    CHECK(classify(involution) == Classification::TrueIdentity);

    SeededRng rng(37);
    for (int n : {2, 3})
        for (int i = 0; i < 500; ++i) {
            Matrix x = Matrix::random(n, rng);
            REQUIRE((classify(x) == Classification::TrueIdentity) == (tensor_det(x) != 0));
            REQUIRE(classify(x) == brent_cycle(x).classification);
        }
}

TEST_CASE("generator_census") {
    SeededRng a(55), b(55);
    CensusResult ra = generator_census(2, 2000, a);
    CensusResult rb = generator_census(2, 2000, b);
    CHECK(ra.samples == 2000);
    CHECK(ra.invertible == rb.invertible);
    CHECK(ra.shortcut_failures == rb.shortcut_failures);
    CHECK(ra.invertible_fraction() > 0.98);

    SeededRng c(55);
    CHECK_THROWS_AS(generator_census(2, 0, c), BadSampleCount);
    CHECK_THROWS_AS(generator_census(0, 10, c), BadDimension);
}
