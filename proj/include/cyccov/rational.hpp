#pragma once

#include <gmpxx.h>

#include <string>

#include "cyccov/errors.hpp"

namespace cyccov {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational denominator");
    Rational x(num, den);
    x.canonicalize();
    return x;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    // base is canonical, so num^e and den^e are already coprime
    return out;
}

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline std::string to_fraction_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_fraction(const std::string& text);

}  // namespace cyccov
