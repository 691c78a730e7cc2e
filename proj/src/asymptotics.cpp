#include "cyccov/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "cyccov/cyclotomic.hpp"

namespace cyccov {

EulerConstants euler_constants(unsigned q, unsigned n_max, unsigned truncation) {
    if (truncation < 1) throw DomainError("truncation must be >= 1");
    EulerConstants C;
    C.q = q;
    C.n_max = n_max;
    C.truncation = truncation;
    C.zeta_q2 = rational(q, static_cast<long>(q) - 1);
    C.K.assign(n_max + 1, Rational(1));
    C.L.assign(n_max + 1, Rational(1));

    // The factor at P depends only on |P| = q^{deg P}, so the product over
    // irreducibles of one degree is a single factor raised to their count.
    for (unsigned j = 1; j <= n_max; ++j) {
        Rational kj(1);
        for (unsigned n = 1; n <= truncation; ++n) {
            const BigInt size = bigint_pow(BigInt(q), n);
            const BigInt den = (size + 1) * (size + j);
            Rational factor(den - j, den);
            factor.canonicalize();
            const std::int64_t count = irreducible_count(q, static_cast<int>(n));
            kj *= rational_pow(factor, static_cast<unsigned long>(count));
        }
        C.K[j] = kj;
    }
    for (unsigned n = 1; n <= n_max; ++n) C.L[n] = C.L[n - 1] * C.K[n];
    C.tail_lower_bound =
        std::exp(-4.0 * n_max * std::pow(static_cast<double>(q),
                                         -static_cast<double>(truncation)));
    return C;
}

double error_scale(unsigned q, int min_degree) {
    return std::pow(static_cast<double>(q), -min_degree / 2.0);
}

namespace {

// prod over distinct monic irreducible divisors P of U of |P|/(|P| + pool)
Rational u_divisor_factor(const PrimeField& F, const Poly& U, unsigned pool) {
    Rational out(1);
    if (U.degree() < 1) return out;
    for (const Poly& P : irreducibles_up_to(F, U.degree())) {
        if (!poly_mod(F, U, P).is_zero()) continue;
        const BigInt size = bigint_pow(BigInt(F.q()), P.degree());
        Rational factor(size, size + pool);
        factor.canonicalize();
        out *= factor;
    }
    return out;
}

Rational leading_term(const EulerConstants& C, unsigned pool,
                      long long degree_sum, unsigned n_factors, unsigned ell,
                      unsigned site_numerator_extra) {
    if (pool < 1) throw ShapeMismatch("empty polynomial pool");
    if (pool - 1 > C.n_max)
        throw ShapeMismatch("euler constants truncated below L_" +
                            std::to_string(pool - 1));
    const unsigned q = C.q;
    Rational out = C.L[pool - 1];
    out *= Rational(bigint_pow(BigInt(q), static_cast<unsigned long>(degree_sum)));
    out /= rational_pow(C.zeta_q2, pool);
    // per-point factor (q * extra) / ((q-1)^n (q + pool))
    Rational site(static_cast<long>(q) * site_numerator_extra, 1);
    site /= rational_pow(rational(static_cast<long>(q) - 1), n_factors);
    site /= rational(static_cast<long>(q) + pool);
    out *= rational_pow(site, ell);
    return out;
}

}  // namespace

Rational predict_R(const PrimeField& F, const EulerConstants& C,
                   const std::vector<int>& degrees, unsigned ell,
                   const Poly& U) {
    if (degrees.empty()) throw ShapeMismatch("predict_R needs n >= 1");
    long long sum = 0;
    for (int d : degrees) sum += d;
    const unsigned n = static_cast<unsigned>(degrees.size());
    Rational out = leading_term(C, n, sum, n, ell, 1);
    out *= u_divisor_factor(F, U, n);
    return out;
}

Rational predict_T(const PrimeField& F, const EulerConstants& C,
                   const std::vector<std::vector<int>>& shapes, unsigned ell,
                   const Poly& U) {
    if (shapes.empty()) throw ShapeMismatch("predict_T needs n >= 1");
    unsigned pool = 0;
    long long sum = 0;
    for (const auto& shape : shapes) {
        if (shape.empty()) throw ShapeMismatch("factor with empty shape");
        pool += static_cast<unsigned>(shape.size());  // r_j - 1 slots
        for (int d : shape) sum += d;
    }
    Rational out = leading_term(C, pool, sum,
                                static_cast<unsigned>(shapes.size()), ell, 1);
    out *= u_divisor_factor(F, U, pool);
    return out;
}

Rational predict_S(const EulerConstants& C, const std::vector<unsigned>& orders,
                   const std::vector<int>& slot_degrees, unsigned ell) {
    if (orders.empty()) throw ShapeMismatch("predict_S needs n >= 1");
    std::uint64_t product = 1;
    for (unsigned r : orders) {
        if (r < 2) throw ShapeMismatch("factor order must be >= 2");
        product *= r;
    }
    if (slot_degrees.size() != product - 1)
        throw ShapeMismatch("slot count must be prod r_j - 1");
    long long sum = 0;
    for (int d : slot_degrees) sum += d;
    return leading_term(C, static_cast<unsigned>(product - 1), sum,
                        static_cast<unsigned>(orders.size()), ell, 1);
}

Rational predict_general_leading(const EulerConstants& C, unsigned r,
                                 const std::vector<int>& slot_degrees,
                                 unsigned ell) {
    if (slot_degrees.size() != r - 1)
        throw ShapeMismatch("slot count must be r - 1");
    long long sum = 0;
    for (int d : slot_degrees) sum += d;
    unsigned digit_total = 0;
    unsigned extra = 1;  // prod_j p_j^{t_j (t_j - 1)/2}
    for (auto [p, t] : factorize(r)) {
        digit_total += t;
        for (unsigned i = 0; i < t * (t - 1) / 2; ++i) extra *= p;
    }
    return leading_term(C, r - 1, sum, digit_total, ell, extra);
}

Rational profile_site_weight(unsigned q, unsigned r, unsigned d) {
    if (d == 0 || r % d != 0)
        throw NotADivisor(std::to_string(d) + " does not divide " +
                          std::to_string(r));
    const long denom = static_cast<long>(q) + r - 1;
    if (d == r) return rational(static_cast<long>(q), static_cast<long>(r) * denom);
    return rational(static_cast<long>(euler_phi(r / d)),
                    static_cast<long>(d) * denom);
}

Rational predict_joint_profile(
    unsigned q, unsigned r,
    const std::vector<std::pair<unsigned, unsigned>>& profile,
    unsigned n_sites) {
    Rational out(1);
    std::uint64_t used = 0;
    for (auto [d, m] : profile) {
        out *= rational_pow(profile_site_weight(q, r, d), m);
        used += m;
    }
    if (used > n_sites) throw ShapeMismatch("profile exceeds site count");
    out *= rational_pow(profile_site_weight(q, r, r),
                        static_cast<unsigned long>(n_sites - used));
    return out;
}

std::uint64_t brute_count(const PrimeField& F, const BruteCountSpec& spec) {
    for (const auto& c : spec.constraints) {
        if (c.exponents.size() != spec.slot_degrees.size())
            throw ShapeMismatch("constraint exponent vector length");
    }
    std::uint64_t space = 1;
    for (int d : spec.slot_degrees) {
        const std::uint64_t size = monic_count(F.q(), d);
        if (space > spec.budget / size + 1)
            throw BudgetExceeded("enumeration space");
        space *= size;
    }
    if (space > spec.budget) throw BudgetExceeded("enumeration space");

    const bool has_u = spec.coprime_to.degree() >= 1;
    std::uint64_t count = 0;
    TupleEnumerator en(F, spec.slot_degrees);
    en.visit(0, en.index_space(), [&](const std::vector<Poly>& polys,
                                      std::size_t) {
        if (has_u) {
            for (const Poly& f : polys) {
                if (f.degree() >= 1 && !coprime(F, f, spec.coprime_to)) return;
            }
        }
        for (const auto& c : spec.constraints) {
            FieldElem v = 1;
            for (std::size_t i = 0; i < polys.size(); ++i) {
                if (c.exponents[i] == 0) continue;
                v = F.mul(v, F.pow(eval(F, polys[i], c.point),
                                   static_cast<std::int64_t>(c.exponents[i])));
            }
            if (v != c.value) return;
        }
        ++count;
    });
    return count;
}

long long heuristic_local_count(unsigned q, unsigned n) {
    // residues c0 + c1*(X - t); divisibility by (X - t) means c0 == 0
    std::vector<std::pair<FieldElem, FieldElem>> residues;
    for (FieldElem c0 = 0; c0 < q; ++c0)
        for (FieldElem c1 = 0; c1 < q; ++c1)
            if (c0 != 0 || c1 != 0) residues.emplace_back(c0, c1);

    long long count = 0;
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        unsigned divisible = 0;
        for (unsigned i = 0; i < n; ++i)
            if (residues[pick[i]].first == 0) ++divisible;
        if (divisible <= 1) ++count;
        std::size_t j = 0;
        while (j < n) {
            if (++pick[j] < residues.size()) break;
            pick[j] = 0;
            ++j;
        }
        if (j == n) break;
    }
    return count;
}

long long heuristic_closed_form(unsigned q, unsigned n) {
    long long out = 1;
    for (unsigned i = 0; i + 1 < n; ++i) out *= q;
    for (unsigned i = 0; i < n; ++i) out *= q - 1;
    out *= q + n;
    return out;
}

}  // namespace cyccov
