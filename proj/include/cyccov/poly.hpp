#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyccov/field.hpp"

namespace cyccov {

/// Dense univariate polynomial over F_q, coefficients stored lowest degree
/// first with trailing zeros stripped. The zero polynomial has an empty
/// coefficient list and degree() == -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({1}); }
    static Poly x() { return Poly({0, 1}); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    FieldElem coeff(std::size_t i) const noexcept {
        return i < c_.size() ? c_[i] : 0;
    }
    FieldElem leading_coeff() const noexcept {
        return c_.empty() ? 0 : c_.back();
    }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }

    friend bool operator==(const Poly&, const Poly&) = default;
    // Deterministic total order for containers: degree, then coefficients.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
        if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    // Text form used by the CLI and JSON files: "[c0,c1,...]", low to high.
    std::string to_string() const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<FieldElem> c_;
};

Poly add(const PrimeField& F, const Poly& a, const Poly& b);
Poly sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly mul(const PrimeField& F, const Poly& a, const Poly& b);
Poly scale(const PrimeField& F, const Poly& a, FieldElem c);
std::pair<Poly, Poly> divmod(const PrimeField& F, const Poly& a,
                             const Poly& b);
Poly poly_mod(const PrimeField& F, const Poly& a, const Poly& b);
Poly make_monic(const PrimeField& F, const Poly& a);
Poly derivative(const PrimeField& F, const Poly& a);
FieldElem eval(const PrimeField& F, const Poly& a, FieldElem x);

// Monic gcd; inputs must not both be zero.
Poly gcd(const PrimeField& F, const Poly& a, const Poly& b);
bool coprime(const PrimeField& F, const Poly& a, const Poly& b);

// gcd(f, f') = 1 test with the char-p caveat: f' == 0 means a p-th power
// for deg f >= 1. Throws ZeroPolynomial on f == 0.
bool is_squarefree(const PrimeField& F, const Poly& f);

// --- enumeration ---------------------------------------------------------
//
// Monic polynomials of a fixed degree are indexed by [0, q^d) in
// lexicographic order of the coefficient vector (c_0, ..., c_{d-1}), so
// streams can be partitioned and resumed deterministically.

std::uint64_t monic_count(std::uint32_t q, int degree);
Poly monic_by_index(std::uint32_t q, int degree, std::uint64_t index);
std::uint64_t monic_index_of(std::uint32_t q, const Poly& f);

template <class Fn>
void for_each_monic(std::uint32_t q, int degree, Fn&& fn) {
    const std::uint64_t n = monic_count(q, degree);
    for (std::uint64_t i = 0; i < n; ++i) fn(monic_by_index(q, degree, i));
}

std::vector<Poly> enumerate_monic(std::uint32_t q, int degree);
std::vector<Poly> enumerate_monic_squarefree(const PrimeField& F, int degree);

// All monic irreducibles of degree <= max_degree, grouped by increasing
// degree, lexicographic within a degree.
std::vector<Poly> irreducibles_up_to(const PrimeField& F, int max_degree);

// Count of monic irreducibles of degree n: (1/n) sum_{m|n} mu(m) q^{n/m}.
std::int64_t irreducible_count(std::uint32_t q, int n);

}  // namespace cyccov
