#include "doctest.h"

#include <set>

#include "cyccov/poly.hpp"

using namespace cyccov;

namespace {
Poly P(std::vector<FieldElem> c) { return Poly(std::move(c)); }
}

TEST_CASE("normalization and degree sentinel") {
    CHECK(Poly::zero().degree() == -1);
    CHECK(P({0, 0}).is_zero());
    CHECK(P({3, 0, 0}).degree() == 0);
    CHECK(Poly::x().degree() == 1);
    CHECK(P({1, 0, 2}).to_string() == "[1,0,2]");
}

TEST_CASE("arithmetic basics") {
    const PrimeField F = make_field(5, 2);
    const Poly f = P({1, 0, 1});  // x^2 + 1
    CHECK(eval(F, f, 2) == 0);
    CHECK(eval(F, f, 1) == 2);
    CHECK(eval(F, Poly::zero(), 3) == 0);

    const Poly g = sub(F, mul(F, Poly::x(), Poly::x()), Poly::one());  // x^2-1
    CHECK(gcd(F, g, P({4, 1})) == P({4, 1}));  // gcd(x^2-1, x-1) = x-1, monic
    CHECK_THROWS_AS(gcd(F, Poly::zero(), Poly::zero()), ZeroPolynomial);
    CHECK_THROWS_AS(divmod(F, f, Poly::zero()), DivisionByZero);

    auto [q1, r1] = divmod(F, P({2, 3, 1, 4}), P({1, 1}));
    CHECK(add(F, mul(F, q1, P({1, 1})), r1) == P({2, 3, 1, 4}));
}

TEST_CASE("derivative in characteristic p") {
    const PrimeField F3 = make_field(3, 2);
    CHECK(derivative(F3, P({0, 1, 0, 1})) == Poly::one());  // (x^3+x)' = 1
    CHECK(derivative(F3, P({1, 0, 0, 1})).is_zero());       // (x^3+1)' = 0
}

TEST_CASE("squarefree predicate") {
    const PrimeField F5 = make_field(5, 2);
    CHECK(is_squarefree(F5, P({1, 0, 1})));           // (x+2)(x+3) mod 5
    CHECK_FALSE(is_squarefree(F5, P({1, 2, 1})));     // (x+1)^2
    const PrimeField F3 = make_field(3, 2);
    CHECK(is_squarefree(F3, P({0, 2, 0, 1})));        // x^3 - x splits simply
    CHECK_FALSE(is_squarefree(F3, P({1, 0, 0, 1})));  // (x+1)^3, derivative 0
    CHECK(is_squarefree(F3, Poly::one()));
    CHECK_THROWS_AS(is_squarefree(F3, Poly::zero()), ZeroPolynomial);
}

TEST_CASE("monic enumeration is lexicographic and indexable") {
    const auto deg1 = enumerate_monic(3, 1);
    REQUIRE(deg1.size() == 3);
    CHECK(deg1[0] == P({0, 1}));
    CHECK(deg1[1] == P({1, 1}));
    CHECK(deg1[2] == P({2, 1}));

    CHECK(enumerate_monic(5, 0) == std::vector<Poly>{Poly::one()});
    CHECK(monic_count(3, 4) == 81);

    // index round trip and lexicographic adjacency of coefficient vectors
    for (std::uint64_t i = 0; i < monic_count(3, 3); ++i) {
        const Poly f = monic_by_index(3, 3, i);
        CHECK(monic_index_of(3, f) == i);
        if (i > 0) CHECK(monic_by_index(3, 3, i - 1).coeffs() < f.coeffs());
    }
}

TEST_CASE("squarefree counts match q^d - q^{d-1}") {
    const PrimeField F3 = make_field(3, 2);
    CHECK(enumerate_monic_squarefree(F3, 2).size() == 6);
    for (std::uint64_t q : {3ull, 5ull, 7ull}) {
        const PrimeField F = make_field(q, 2);
        for (int d = 2; d <= 5; ++d) {
            const auto sf = enumerate_monic_squarefree(F, d);
            CHECK(sf.size() == monic_count(q, d) - monic_count(q, d - 1));
        }
    }
}

TEST_CASE("irreducible enumeration matches the necklace count") {
    // enumerated counts for fields we can build
    for (std::uint64_t q : {3ull, 5ull}) {
        const PrimeField F = make_field(q, 2);
        const int maxdeg = q == 5 ? 4 : 6;
        const auto irr = irreducibles_up_to(F, maxdeg);
        std::vector<std::int64_t> got(maxdeg + 1, 0);
        for (const Poly& p : irr) ++got[p.degree()];
        for (int n = 1; n <= maxdeg; ++n)
            CHECK(got[n] == irreducible_count(static_cast<unsigned>(q), n));
    }
    // formula values, including the q = 2 column
    const std::int64_t q2[] = {0, 2, 1, 2, 3, 6, 9};
    for (int n = 1; n <= 6; ++n) CHECK(irreducible_count(2, n) == q2[n]);
    CHECK(irreducible_count(3, 1) == 3);
    CHECK(irreducible_count(3, 2) == 3);
    CHECK(irreducible_count(5, 2) == 10);
    CHECK(irreducible_count(3, 6) == 116);
}

TEST_CASE("irreducibles divide nothing smaller and multiply out") {
    const PrimeField F = make_field(3, 2);
    const auto irr = irreducibles_up_to(F, 3);
    REQUIRE(irr.size() == 3 + 3 + 8);
    // every irreducible is squarefree and coprime to the others
    for (std::size_t i = 0; i < irr.size(); ++i) {
        CHECK(is_squarefree(F, irr[i]));
        for (std::size_t j = i + 1; j < irr.size(); ++j)
            CHECK(coprime(F, irr[i], irr[j]));
    }
}

TEST_CASE("gcd divides both inputs and is monic") {
    const PrimeField F = make_field(5, 2);
    for (std::uint64_t i = 0; i < monic_count(5, 2); ++i) {
        for (std::uint64_t j = 0; j < monic_count(5, 2); j += 7) {
            const Poly a = monic_by_index(5, 2, i);
            const Poly b = scale(F, monic_by_index(5, 2, j), 3);
            const Poly g = gcd(F, a, b);
            CHECK(g.is_monic());
            CHECK(poly_mod(F, a, g).is_zero());
            CHECK(poly_mod(F, b, g).is_zero());
        }
    }
}
