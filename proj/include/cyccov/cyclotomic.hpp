#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyccov/errors.hpp"
#include "cyccov/rational.hpp"

namespace cyccov {

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first,
/// computed by iterated exact division of x^m - 1 by the Phi_e, e | m, e < m.
std::vector<BigInt> cyclotomic_polynomial(unsigned m);

/// An element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^{phi(m)-1}
/// reduced modulo Phi_m. The representation is canonical: two values are
/// equal iff conductor and coefficient vector are equal, so CycInt works as
/// an exact map key. Coefficients are arbitrary precision.
class CycInt {
  public:
    CycInt() : CycInt(zero(1)) {}

    static CycInt zero(unsigned m);
    static CycInt from_integer(unsigned m, const BigInt& n);
    // coeffs must already be reduced: length phi(m)
    static CycInt from_coeffs(unsigned m, std::vector<BigInt> coeffs);

    unsigned conductor() const noexcept { return m_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    // The value as a rational integer, if all higher basis coordinates vanish.
    std::optional<BigInt> as_integer() const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt operator-() const;
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);

    // this += other * factor, without temporaries; conductors must match.
    CycInt& add_scaled(const CycInt& o, long factor);

    CycInt pow(std::uint64_t e) const;

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator<(const CycInt& a, const CycInt& b);

  private:
    CycInt(unsigned m, std::vector<BigInt> coeffs)
        : m_(m), coeffs_(std::move(coeffs)) {}
    void check_conductor(const CycInt& o) const;

    unsigned m_;
    std::vector<BigInt> coeffs_;

    friend CycInt root_of_unity(unsigned m, long long k);
    friend CycInt embed(const CycInt& a, unsigned target);
    friend CycInt galois(const CycInt& a, unsigned j);
};

/// zeta_m^k (k taken mod m).
CycInt root_of_unity(unsigned m, long long k);

/// Ring embedding Z[zeta_d] -> Z[zeta_target] via zeta_d -> zeta_target^{target/d}.
/// Requires conductor(a) | target.
CycInt embed(const CycInt& a, unsigned target);

/// Galois action zeta_m -> zeta_m^j for gcd(j, m) = 1.
CycInt galois(const CycInt& a, unsigned j);

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors_of(unsigned n);
std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n);  // (p, exponent)

}  // namespace cyccov
