#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyccov/family.hpp"
#include "cyccov/rational.hpp"

namespace cyccov {

/// Truncated Euler-product constants over monic irreducibles P of degree at
/// most `truncation`, with |P| = q^{deg P}:
///   K_j = prod_P (1 - j/((|P|+1)(|P|+j))),   L_n = prod_{j<=n} K_j,
/// and the rational zeta value zeta_q(2) = q/(q-1). Every value is the exact
/// rational of the truncated product; the omitted tail multiplies the true
/// constant by a factor in [tail_lower_bound, 1].
struct EulerConstants {
    unsigned q = 0;
    unsigned n_max = 0;
    unsigned truncation = 8;
    std::vector<Rational> K;  // K[0] = 1
    std::vector<Rational> L;  // L[n] = prod_{j<=n} K[j]
    Rational zeta_q2;
    double tail_lower_bound = 1.0;  // >= exp(-4 n_max q^{-truncation})
};

EulerConstants euler_constants(unsigned q, unsigned n_max, unsigned truncation);

/// Reported error scale q^{-min degree / 2}; never folded into predictions.
double error_scale(unsigned q, int min_degree);

/// Leading term for the count of n-tuples of monic squarefree pairwise
/// coprime polynomials of the given degrees, coprime to U, with prescribed
/// nonzero values at ell points:
///   L_{n-1} q^{sum d} / zeta_q(2)^n * (q/((q-1)^n (q+n)))^ell
///   * prod_{P|U} |P|/(|P|+n).
Rational predict_R(const PrimeField& F, const EulerConstants& C,
                   const std::vector<int>& degrees, unsigned ell,
                   const Poly& U);

/// Same for n-tuples of power-weighted products F_j = prod_k f_{j,k}^k with
/// shapes[j] = (d_{1,j}, ..., d_{r_j-1,j}); the pool size becomes
/// R = sum_j (r_j - 1).
Rational predict_T(const PrimeField& F, const EulerConstants& C,
                   const std::vector<std::vector<int>>& shapes, unsigned ell,
                   const Poly& U);

/// Coprime-slot refinement: slots indexed by the nonzero exponent vectors of
/// [0,r_1) x ... x [0,r_n), so slot_degrees.size() must be prod r_j - 1.
Rational predict_S(const EulerConstants& C, const std::vector<unsigned>& orders,
                   const std::vector<int>& slot_degrees, unsigned ell);

/// Leading term for one full family of order r = prod p_j^{t_j} with value
/// constraints at ell points on every prime-power subcover polynomial:
///   L_{r-2} q^{sum d} / zeta_q(2)^{r-1}
///   * (q prod_j p_j^{t_j(t_j-1)/2} / ((q-1)^{sum t_j} (q+r-1)))^ell.
Rational predict_general_leading(const EulerConstants& C, unsigned r,
                                 const std::vector<int>& slot_degrees,
                                 unsigned ell);

/// Per-site probability weight of the zero-profile d | r: the value vector is
/// supported exactly on the divisors of d, with weight phi(r/d)/(d(q+r-1))
/// for d != r and q/(r(q+r-1)) for d = r.
Rational profile_site_weight(unsigned q, unsigned r, unsigned d);

/// Product of site weights for a full assignment: profile lists (d, m_d) for
/// the partially-zero sites, the remaining n_sites - sum m_d sites are fully
/// nonzero.
Rational predict_joint_profile(
    unsigned q, unsigned r,
    const std::vector<std::pair<unsigned, unsigned>>& profile,
    unsigned n_sites);

/// Constraint F(x) = value where F = prod_i slot_i^{exponents[i]}.
struct ValueConstraint {
    std::vector<unsigned> exponents;
    FieldElem point = 0;
    FieldElem value = 0;
};

struct BruteCountSpec {
    std::vector<int> slot_degrees;
    Poly coprime_to = Poly::one();  // U
    std::vector<ValueConstraint> constraints;
    std::uint64_t budget = 100'000'000;  // enumeration size cap
};

/// Exact cardinality by exhaustive enumeration of tuples of monic squarefree
/// pairwise-coprime polynomials subject to the spec'd constraints.
std::uint64_t brute_count(const PrimeField& F, const BruteCountSpec& spec);

/// Number of n-tuples of nonzero residues modulo (X-t)^2 such that (X-t)
/// divides at most one of them, by direct enumeration.
long long heuristic_local_count(unsigned q, unsigned n);
/// q^{n-1} (q-1)^n (q+n).
long long heuristic_closed_form(unsigned q, unsigned n);

}  // namespace cyccov
