#include "doctest.h"

#include <set>

#include "cyccov/cyclotomic.hpp"

using namespace cyccov;

namespace {
std::vector<BigInt> ZV(std::vector<long> v) {
    return std::vector<BigInt>(v.begin(), v.end());
}
}

TEST_CASE("cyclotomic polynomials by exact division") {
    CHECK(cyclotomic_polynomial(1) == ZV({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ZV({1, 1}));
    CHECK(cyclotomic_polynomial(4) == ZV({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == ZV({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == ZV({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(9) == ZV({1, 0, 0, 1, 0, 0, 1}));
}

TEST_CASE("roots of unity and canonical coefficients") {
    CHECK(root_of_unity(2, 1).coeffs() == ZV({-1}));
    CHECK(root_of_unity(4, 1) * root_of_unity(4, 1) ==
          CycInt::from_integer(4, -1));
    CHECK(root_of_unity(6, 3) == CycInt::from_integer(6, -1));
    CHECK(root_of_unity(5, 7) == root_of_unity(5, 2));
    CHECK(root_of_unity(3, -1) == root_of_unity(3, 2));
}

TEST_CASE("full root sums vanish") {
    for (unsigned m = 1; m <= 12; ++m) {
        CycInt sum = CycInt::zero(m);
        for (unsigned k = 0; k < m; ++k) sum += root_of_unity(m, k);
        if (m == 1)
            CHECK(sum == CycInt::from_integer(1, 1));
        else
            CHECK(sum.is_zero());
    }
}

TEST_CASE("orders of roots of unity") {
    for (unsigned m = 2; m <= 12; ++m) {
        for (unsigned k = 0; k < m; ++k) {
            const CycInt z = root_of_unity(m, k);
            unsigned order = 1;
            CycInt acc = z;
            while (!(acc == CycInt::from_integer(m, 1))) {
                acc = acc * z;
                ++order;
            }
            unsigned g = std::gcd(m, k);
            CHECK(order == m / (g == 0 ? m : g));
        }
    }
}

TEST_CASE("ring axioms on small coefficient boxes") {
    // commutativity and distributivity over exhaustive small vectors,
    // associativity over the [-1, 1] box
    for (unsigned m : {3u, 4u, 6u}) {
        const unsigned phi = euler_phi(m);
        std::vector<CycInt> box;
        std::vector<long> c(phi, -1);
        for (;;) {
            box.push_back(CycInt::from_coeffs(m, ZV(c)));
            std::size_t i = 0;
            while (i < phi && ++c[i] > 1) c[i++] = -1;
            if (i == phi) break;
        }
        for (const CycInt& a : box) {
            for (const CycInt& b : box) {
                CHECK(a * b == b * a);
                CHECK(a + b == b + a);
            }
        }
        const CycInt t = root_of_unity(m, 1) + CycInt::from_integer(m, 2);
        for (const CycInt& a : box) {
            for (const CycInt& b : box) {
                CHECK((a + b) * t == a * t + b * t);
                CHECK((a * b) * t == a * (b * t));
            }
        }
    }
}

TEST_CASE("conductor mismatch is rejected") {
    CHECK_THROWS_AS(root_of_unity(3, 1) + root_of_unity(4, 1),
                    ConductorMismatch);
    CHECK_THROWS_AS(root_of_unity(3, 1) * root_of_unity(6, 1),
                    ConductorMismatch);
}

TEST_CASE("embedding into a larger conductor") {
    CHECK(embed(root_of_unity(2, 1), 4) == root_of_unity(4, 2));
    CHECK(embed(root_of_unity(3, 1), 6) == root_of_unity(6, 2));
    const CycInt a = root_of_unity(6, 5);
    CHECK(embed(a, 6) == a);
    CHECK_THROWS_AS(embed(root_of_unity(4, 1), 6), NotADivisor);

    // embed is a ring homomorphism on mu_d, exhaustively for d | r <= 12
    for (unsigned r = 2; r <= 12; ++r) {
        for (unsigned d : divisors_of(r)) {
            for (unsigned i = 0; i < d; ++i) {
                for (unsigned j = 0; j < d; ++j) {
                    const CycInt x = root_of_unity(d, i);
                    const CycInt y = root_of_unity(d, j);
                    CHECK(embed(x * y, r) == embed(x, r) * embed(y, r));
                    CHECK(embed(x + y, r) == embed(x, r) + embed(y, r));
                }
            }
        }
    }
    // injective on mu_d and 0
    for (unsigned d : {2u, 3u, 4u, 6u}) {
        std::set<CycInt> images;
        images.insert(embed(CycInt::zero(d), 12));
        for (unsigned k = 0; k < d; ++k)
            images.insert(embed(root_of_unity(d, k), 12));
        CHECK(images.size() == d + 1);
    }
}

TEST_CASE("galois action permutes roots") {
    const CycInt z = root_of_unity(12, 1);
    CHECK(galois(z, 5) == root_of_unity(12, 5));
    CHECK(galois(z + root_of_unity(12, 2), 7) ==
          root_of_unity(12, 7) + root_of_unity(12, 2));
    CHECK_THROWS_AS(galois(z, 4), DomainError);
}

TEST_CASE("integer detection") {
    CHECK(CycInt::from_integer(6, 42).as_integer().value() == 42);
    CHECK_FALSE(root_of_unity(6, 1).as_integer().has_value());
    const CycInt sum = root_of_unity(4, 1) + root_of_unity(4, 3);
    CHECK(sum.as_integer().value() == 0);  // i + (-i)
}

TEST_CASE("pow and add_scaled") {
    CHECK(root_of_unity(12, 1).pow(12) == CycInt::from_integer(12, 1));
    CHECK(root_of_unity(12, 1).pow(0) == CycInt::from_integer(12, 1));
    CycInt acc = CycInt::zero(6);
    acc.add_scaled(root_of_unity(6, 1), 3);
    acc.add_scaled(root_of_unity(6, 4), -2);
    CHECK(acc == root_of_unity(6, 1) + root_of_unity(6, 1) +
                     root_of_unity(6, 1) - root_of_unity(6, 4) -
                     root_of_unity(6, 4));
}
