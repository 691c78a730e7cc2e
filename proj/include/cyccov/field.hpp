#pragma once

#include <cstdint>
#include <vector>

#include "cyccov/errors.hpp"

namespace cyccov {

// A residue in [0, q). All arithmetic goes through PrimeField.
using FieldElem = std::uint32_t;

/// Prime field F_q with q = 1 (mod r), a fixed multiplicative generator and a
/// full discrete-log table. The generator is the smallest element of [2, q)
/// with order q-1, so character values are reproducible across runs.
/// Immutable after construction; all operations are pure.
class PrimeField {
  public:
    // Full-table discrete logs; the cap keeps q at desk scale.
    static constexpr std::uint64_t default_table_cap = 1u << 20;

    PrimeField(std::uint64_t q, std::uint64_t r,
               std::uint64_t table_cap = default_table_cap);

    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t r() const noexcept { return r_; }
    FieldElem generator() const noexcept { return g_; }

    FieldElem reduce(std::int64_t v) const noexcept {
        std::int64_t m = v % static_cast<std::int64_t>(q_);
        return static_cast<FieldElem>(m < 0 ? m + q_ : m);
    }

    FieldElem add(FieldElem a, FieldElem b) const noexcept {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    FieldElem sub(FieldElem a, FieldElem b) const noexcept {
        return a >= b ? a - b : a + q_ - b;
    }
    FieldElem neg(FieldElem a) const noexcept { return a == 0 ? 0 : q_ - a; }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        return static_cast<FieldElem>(
            (static_cast<std::uint64_t>(a) * b) % q_);
    }

    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, std::int64_t n) const;

    // g^k, reduced mod the group order q-1.
    FieldElem generator_power(std::uint64_t k) const noexcept {
        return gpow_[k % (q_ - 1)];
    }

    // Exponent of a with respect to the fixed generator; requires a != 0.
    std::uint32_t dlog(FieldElem a) const {
        if (a == 0) throw DivisionByZero("dlog of zero");
        return dlog_[a];
    }

    // True iff a is a d-th power in F_q*; requires d | q-1 and a != 0.
    bool is_dth_power(FieldElem a, std::uint32_t d) const;

  private:
    std::uint32_t q_ = 0;
    std::uint32_t r_ = 0;
    FieldElem g_ = 0;
    std::vector<std::uint32_t> dlog_;
    std::vector<FieldElem> gpow_;
};

PrimeField make_field(std::uint64_t q, std::uint64_t r);

bool is_prime_u64(std::uint64_t n);

}  // namespace cyccov
