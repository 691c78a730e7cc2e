#pragma once

#include <cstdint>
#include <vector>

#include "cyccov/cyclotomic.hpp"
#include "cyccov/family.hpp"

namespace cyccov {

/// Multiplicative character of exact order d on F_q, with values embedded in
/// Z[zeta_r]: chi(g^k) = zeta_d^k for the field's fixed generator g, and
/// chi(0) = 0. Completely multiplicative on F_q*.
class Character {
  public:
    Character(const PrimeField& F, unsigned d);

    unsigned order() const noexcept { return d_; }
    const CycInt& operator()(FieldElem a) const {
        return a == 0 ? zero_ : values_[field_->dlog(a) % d_];
    }

  private:
    const PrimeField* field_;
    unsigned d_;
    std::vector<CycInt> values_;  // zeta_d^k at conductor r, k in [0, d)
    CycInt zero_;
};

Character char_of_order(const PrimeField& F, unsigned d);

/// Cached zeta_r^0 .. zeta_r^{r-1}.
const std::vector<CycInt>& conductor_roots(unsigned r);

/// Site data of one member over P^1(F_q), sufficient to assemble every
/// character sum: for each requested divisor d, the tally over sites of
/// dlog(F_(d)(x)) mod d where F_(d)(x) != 0, plus the zero-site count.
/// The hat scalar alpha enters later as a dlog shift, so one profile serves
/// all scalars of a monic tuple.
struct SiteProfile {
    std::vector<unsigned> divisors;
    std::vector<std::vector<std::int64_t>> residue_count;  // [divisor][residue]
    std::vector<std::int64_t> zero_count;                  // [divisor]
    // sites where F_(d) vanishes but F_(d') does not, for d | d' in divisors
    std::uint64_t zero_propagation_violations = 0;
};

/// evals[i][x] = f_{i+1}(x) for x in [0, q); weighted_degree = deg F.
SiteProfile site_profile_from_evals(
    const PrimeField& F, const std::vector<std::vector<FieldElem>>& evals,
    int weighted_degree, const std::vector<unsigned>& divisors);

SiteProfile site_profile(const PrimeField& F, const FamilyMember& mem,
                         const std::vector<unsigned>& divisors);

/// S_d assembled from a profile for the scalar alpha.
CycInt char_sum_from_profile(const PrimeField& F, const SiteProfile& prof,
                             std::size_t which, FieldElem alpha);

/// S_d(F_(d)) = sum over P^1(F_q) of chi_d(alpha F_(d)(x)), exact in Z[zeta_r].
CycInt char_sum(const PrimeField& F, const FamilyMember& mem, unsigned d);

/// q + 1 + sum over divisors d>1 of r, exponents i coprime to d, of the
/// chi_d^i sums. The total is a rational integer; NonIntegralCount reports an
/// internal inconsistency and must never fire.
long long point_count_from_profile(const PrimeField& F,
                                   const SiteProfile& prof, FieldElem alpha);
long long point_count_formula(const PrimeField& F, const FamilyMember& mem);

/// Brute solution counts of y^e = v over F_q, one table per divisor e | r.
class RootCountTable {
  public:
    explicit RootCountTable(const PrimeField& F);
    std::uint32_t count(unsigned e, FieldElem v) const {
        return table_[e][v];
    }

  private:
    std::vector<std::vector<std::uint16_t>> table_;  // indexed by divisor
};

/// Per-site ramification data for the solution-count route: no character
/// machinery, only value products and brute root counting.
struct OracleSites {
    std::vector<unsigned> e;   // ramification order per affine site
    std::vector<FieldElem> w;  // monic-part value F_(e)(x)
    unsigned e_infinity;       // gcd(r, deg F)
};

OracleSites oracle_sites(const PrimeField& F,
                         const std::vector<std::vector<FieldElem>>& evals,
                         int weighted_degree);

long long oracle_count(const PrimeField& F, const RootCountTable& table,
                       const OracleSites& sites, FieldElem alpha);

/// Independent point count: for each x, the number of y with y^e = alpha
/// F_(e)(x), where e is r at unramified x and gcd(i, r) when f_i(x) = 0; at
/// infinity e = gcd(r, deg F) and the value is alpha.
long long point_count_oracle(const PrimeField& F, const FamilyMember& mem);
long long point_count_oracle_with(const PrimeField& F,
                                  const RootCountTable& table,
                                  const FamilyMember& mem);

/// Evaluation table helper: evals[i][x] = f_{i+1}(x).
std::vector<std::vector<FieldElem>> member_evals(const PrimeField& F,
                                                 const FamilyMember& mem);

}  // namespace cyccov
