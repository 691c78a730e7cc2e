#include "cyccov/field.hpp"

#include <algorithm>

namespace cyccov {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) acc = (acc * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return acc;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t q, std::uint64_t r,
                       std::uint64_t table_cap) {
    if (r < 2) throw DegenerateOrder("r must be at least 2");
    if (q > table_cap)
        throw DomainError("modulus exceeds discrete-log table cap");
    if (!is_prime_u64(q)) throw NonPrimeModulus("q = " + std::to_string(q));
    if (q % r != 1)
        throw CongruenceViolation(std::to_string(q) + " != 1 mod " +
                                  std::to_string(r));
    q_ = static_cast<std::uint32_t>(q);
    r_ = static_cast<std::uint32_t>(r);

    const std::uint64_t order = q - 1;
    const auto factors = prime_factors(order);
    for (std::uint64_t a = 2; a < q; ++a) {
        bool generates = true;
        for (std::uint64_t p : factors) {
            if (pow_mod_u64(a, order / p, q) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) {
            g_ = static_cast<FieldElem>(a);
            break;
        }
    }

    gpow_.resize(order);
    dlog_.assign(q_, 0);
    std::uint64_t value = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
        gpow_[k] = static_cast<FieldElem>(value);
        dlog_[value] = static_cast<std::uint32_t>(k);
        value = (value * g_) % q;
    }
}

FieldElem PrimeField::inv(FieldElem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    const std::uint32_t order = q_ - 1;
    return gpow_[(order - dlog_[a]) % order];
}

FieldElem PrimeField::pow(FieldElem a, std::int64_t n) const {
    if (n < 0) {
        a = inv(a);  // throws on a == 0
        n = -n;
    }
    if (a == 0) return n == 0 ? 1 : 0;
    // reduce the exponent by the element's order via the dlog table
    const std::uint64_t order = q_ - 1;
    std::uint64_t k = (static_cast<std::uint64_t>(dlog_[a]) *
                       (static_cast<std::uint64_t>(n) % order)) % order;
    return gpow_[k];
}

bool PrimeField::is_dth_power(FieldElem a, std::uint32_t d) const {
    if (a == 0) throw DomainError("is_dth_power requires a != 0");
    if (d == 0 || (q_ - 1) % d != 0)
        throw DomainError("d does not divide q-1");
    return dlog_[a] % d == 0;
}

PrimeField make_field(std::uint64_t q, std::uint64_t r) {
    return PrimeField(q, r);
}

}  // namespace cyccov
