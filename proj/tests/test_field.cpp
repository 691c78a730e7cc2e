#include "doctest.h"

#include "cyccov/field.hpp"

using namespace cyccov;

TEST_CASE("make_field constructs verified fields") {
    const PrimeField F = make_field(7, 3);
    CHECK(F.q() == 7);
    CHECK(F.r() == 3);
    // brute-force order check of the chosen generator
    FieldElem v = 1;
    int order = 0;
    do {
        v = F.mul(v, F.generator());
        ++order;
    } while (v != 1);
    CHECK(order == 6);
    // smallest candidate wins: 2 is not a generator mod 7, 3 is
    CHECK(F.generator() == 3);
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(make_field(5, 3), CongruenceViolation);
    CHECK_THROWS_AS(make_field(9, 2), NonPrimeModulus);
    CHECK_THROWS_AS(make_field(7, 1), DegenerateOrder);
    CHECK_THROWS_AS(PrimeField(5, 2, 4), DomainError);  // table cap
}

TEST_CASE("modular arithmetic basics") {
    const PrimeField F = make_field(5, 2);
    CHECK(F.mul(2, 3) == 1);
    CHECK(F.inv(2) == 3);
    CHECK(F.add(4, 3) == 2);
    CHECK(F.sub(1, 3) == 3);
    CHECK(F.neg(2) == 3);
    CHECK_THROWS_AS(F.inv(0), DivisionByZero);

    const PrimeField F7 = make_field(7, 3);
    CHECK(F7.pow(3, 6) == 1);
    CHECK(F7.pow(3, -1) == F7.inv(3));
    CHECK(F7.pow(0, 0) == 1);
    CHECK(F7.pow(0, 5) == 0);
    CHECK_THROWS_AS(F7.pow(0, -2), DivisionByZero);
}

TEST_CASE("discrete logs invert the generator map") {
    for (std::uint64_t q : {13ull, 31ull, 1009ull}) {
        const PrimeField F = make_field(q, 2);
        for (FieldElem a = 1; a < F.q(); ++a)
            CHECK(F.generator_power(F.dlog(a)) == a);
        for (FieldElem a = 1; a < F.q(); ++a)
            CHECK(F.pow(a, static_cast<std::int64_t>(q) - 1) == 1);
    }
}

TEST_CASE("is_dth_power via dlog") {
    const PrimeField F5 = make_field(5, 2);
    CHECK(F5.is_dth_power(4, 2));
    CHECK_FALSE(F5.is_dth_power(2, 2));
    const PrimeField F7 = make_field(7, 3);
    CHECK(F7.is_dth_power(6, 3));  // 3^3 = 27 = 6 mod 7
    CHECK_THROWS_AS(F5.is_dth_power(0, 2), DomainError);
    CHECK_THROWS_AS(F5.is_dth_power(3, 3), DomainError);  // 3 does not divide 4
}

TEST_CASE("d-th power counts are (q-1)/d") {
    const PrimeField F = make_field(13, 4);
    for (std::uint32_t d : {1u, 2u, 3u, 4u, 6u, 12u}) {
        int count = 0;
        for (FieldElem a = 1; a < F.q(); ++a)
            if (F.is_dth_power(a, d)) ++count;
        CHECK(count == static_cast<int>((F.q() - 1) / d));
    }
}
