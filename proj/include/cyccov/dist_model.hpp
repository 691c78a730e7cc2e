#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cyccov/cyclotomic.hpp"
#include "cyccov/rational.hpp"

namespace cyccov {

/// One joint outcome of the per-site variables (X_d)_{d|r}: the largest
/// divisor d with nonzero support, together with a chosen root of unity at
/// the top level of each prime of d. Values at every other divisor are
/// forced (power chains downward, zero above the support).
struct SiteAtom {
    unsigned r = 2;
    unsigned d = 1;  // support divisor, d | r

    struct RootChoice {
        unsigned p;         // prime of d
        unsigned level;     // v_p(d)
        unsigned exponent;  // epsilon = zeta_{p^level}^exponent
        CycInt value;       // embedded at conductor r
    };
    std::vector<RootChoice> roots;

    Rational prob;
};

struct SiteDistribution {
    unsigned q = 0, r = 0;
    std::vector<SiteAtom> atoms;
};

/// All atoms for one site: probability phi(r/d)/(d(q+r-1)) per root choice
/// when d != r and q/(r(q+r-1)) when d = r. Verifies exact normalization.
SiteDistribution site_distribution(unsigned q, unsigned r);

/// The value X_d realized by an atom: zero unless v_p(d) <= v_p(atom.d) for
/// every prime p | d; otherwise the product over p | d of
/// (epsilon_p^{p^{v_p(atom.d)-v_p(d)}})^{sigma_p} with
/// sigma_p = (d/p^{v_p(d)})^{-1} mod p^{v_p(d)}, the Chinese-remainder
/// composition of the prime-power components.
CycInt value_at_divisor(const SiteAtom& atom, unsigned d);

struct MarginalLaw {
    Rational zero_prob;  // (r - r/d)/(q + r - 1)
    Rational root_prob;  // (q + r/d - 1)/(d(q + r - 1))
};

/// Sums atoms through value_at_divisor and asserts both closed forms; throws
/// MarginalMismatch otherwise.
MarginalLaw marginal_check(unsigned q, unsigned r, unsigned d);

/// Exact joint law of (sum over sites of X_d)_{d in divisors}.
struct JointSumDistribution {
    unsigned q = 0, r = 0;
    unsigned n_sites = 0;
    std::vector<unsigned> divisors;
    std::map<std::vector<CycInt>, Rational> table;
};

struct ConvolveOptions {
    std::size_t max_keys = 50'000'000;
};

/// n_sites-fold convolution of the per-site joint value tuple; sites are
/// independent. Keys are canonical CycInt tuples aligned with `divisors`.
JointSumDistribution convolve(const SiteDistribution& site, unsigned n_sites,
                              std::vector<unsigned> divisors,
                              const ConvolveOptions& opt = {});

struct ConditionalReport {
    std::size_t zero_propagation_checks = 0;
    std::size_t power_chain_checks = 0;
    std::size_t block_probability_checks = 0;
};

/// Verifies, by exact summation over atoms, the zero-propagation and forced
/// power-chain conditionals and both block-probability displays; throws
/// ConditionalMismatch on any failure.
ConditionalReport conditional_checks(const SiteDistribution& site);

}  // namespace cyccov
