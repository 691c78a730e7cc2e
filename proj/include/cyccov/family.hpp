#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cyccov/poly.hpp"
#include "cyccov/rng.hpp"

namespace cyccov {

/// Degree data (d_1, ..., d_{r-1}) for a cover of order r. The total weight
/// sum_i i*d_i is the degree of f_1 f_2^2 ... f_{r-1}^{r-1}.
struct DegreeTuple {
    unsigned r = 2;
    std::vector<int> degrees;  // degrees[i-1] = d_i, each >= 0

    DegreeTuple() = default;
    DegreeTuple(unsigned r_, std::vector<int> degrees_);

    int total_weight() const;
    // Genus is constant across the whole bracket family iff this holds.
    bool genus_admissible() const { return total_weight() % static_cast<int>(r) == 0; }
};

/// g from 2g + 2r - 2 = sum_i (r - gcd(r,i)) d_i + (r - gcd(r,d)), d = sum i*d_i.
/// Throws NonIntegralGenus on parity failure and NegativeGenus when the data
/// does not describe an irreducible cover of this order.
long long genus(const DegreeTuple& t);

/// One member alpha * f_1 f_2^2 ... f_{r-1}^{r-1}. decremented == 0 marks the
/// base sub-family; decremented == j means deg f_j was lowered by one.
struct FamilyMember {
    FieldElem alpha = 1;
    std::vector<Poly> polys;  // f_1 .. f_{r-1}, all monic
    unsigned decremented = 0;

    unsigned r() const { return static_cast<unsigned>(polys.size()) + 1; }
    // Degree of the member's polynomial F = prod f_i^i.
    int weighted_degree() const;

    friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
    friend bool operator<(const FamilyMember& a, const FamilyMember& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.decremented != b.decremented) return a.decremented < b.decremented;
        return a.polys < b.polys;
    }
};

// monic, squarefree, pairwise coprime
bool is_valid_member(const PrimeField& F, const FamilyMember& mem);

/// prod_i f_i^{i mod d} for d | r: the polynomial of the order-d subcover.
/// The scalar alpha is handled by callers.
Poly subfield_model(const PrimeField& F, const FamilyMember& mem, unsigned d);

/// The relabeled model alpha^j * prod f_i^{ij mod r} for gcd(j, r) = 1;
/// describes the same curve.
FamilyMember twist(const PrimeField& F, const FamilyMember& mem, unsigned j);

/// Value of the order-d subcover polynomial at the infinite place: alpha when
/// d divides the weighted degree of the member's F (the place is unramified
/// in the order-d subcover and the leading coefficient is alpha), 0 otherwise.
FieldElem eval_at_infinity(const FamilyMember& mem, unsigned d);

// --- enumeration ----------------------------------------------------------

/// Deterministic stream over tuples (f_1, ..., f_k) of monic polynomials of
/// prescribed degrees that are squarefree and pairwise coprime. Tuples are
/// indexed by the mixed-radix product of the per-slot lexicographic indices,
/// so streams can be partitioned by index range and resumed.
class TupleEnumerator {
  public:
    TupleEnumerator(const PrimeField& F, std::vector<int> degrees);

    std::uint64_t index_space() const { return space_; }

    /// Visit valid tuples with global index in [begin, end).
    /// fn(polys, first_changed): slots >= first_changed differ from the
    /// previously visited tuple (first_changed == 0 on the first call).
    void visit(std::uint64_t begin, std::uint64_t end,
               const std::function<void(const std::vector<Poly>&,
                                        std::size_t)>& fn) const;

    /// Number of valid tuples in the full index space (cached per degree set).
    std::uint64_t count() const;

  private:
    const PrimeField* field_;
    std::vector<int> degrees_;
    std::vector<std::uint64_t> slot_size_;
    std::vector<std::uint64_t> stride_;
    std::uint64_t space_ = 1;
};

/// Sub-families of the bracket family, in enumeration order: the base tuple
/// first, then each decrement j = 1..r-1 that leaves all degrees >= 0 and
/// total weight >= 1.
struct Subfamily {
    unsigned decremented;      // 0 for base
    std::vector<int> degrees;  // actual slot degrees
};
std::vector<Subfamily> bracket_subfamilies(const DegreeTuple& t);

/// Enumerate the bracket family (scalars == false) or the hat family
/// (scalars == true, crossing with all alpha in F_q*). Members arrive in a
/// fixed order: sub-family, then tuple index, then alpha.
void enumerate_bracket(const PrimeField& F, const DegreeTuple& t, bool scalars,
                       const std::function<void(const FamilyMember&)>& fn);

/// Exact number of valid tuples with the given slot degrees (exhaustive,
/// cached across calls).
std::uint64_t subfamily_cardinality(const PrimeField& F,
                                    const std::vector<int>& degrees);
std::uint64_t bracket_cardinality(const PrimeField& F, const DegreeTuple& t,
                                  bool scalars);

struct SampleOptions {
    std::uint64_t max_rejections = 1'000'000;
};

/// Uniform draw from the hat bracket family: sub-family chosen by exact
/// cardinality, polynomials by rejection, alpha uniform in F_q*.
FamilyMember sample_member(const PrimeField& F, const DegreeTuple& t,
                           SplitMix64& rng, const SampleOptions& opt = {});
/// Stream-independent form: sample i of a seeded experiment.
FamilyMember sample_member_indexed(const PrimeField& F, const DegreeTuple& t,
                                   std::uint64_t seed, std::uint64_t index,
                                   const SampleOptions& opt = {});

// --- index relabelings ----------------------------------------------------

/// The two index bijections used to relabel f-indices when r factors as
/// prod p_j^{t_j}: residue vectors mod p_j^{t_j} <-> [0, r-1] (Chinese
/// remainder), and base-p_j digit strings <-> residue vectors.
class CrtRelabel {
  public:
    explicit CrtRelabel(unsigned r);

    struct Factor {
        unsigned p, t, pt;  // pt = p^t
    };
    const std::vector<Factor>& factors() const { return factors_; }
    unsigned r() const { return r_; }
    unsigned digit_count() const { return digit_count_; }  // sum of t_j

    // residues[j] in [0, p_j^{t_j}) <-> index in [0, r)
    unsigned phi(const std::vector<unsigned>& residues) const;
    std::vector<unsigned> phi_inv(unsigned index) const;

    // digits: block j holds t_j base-p_j digits, least significant first
    std::vector<unsigned> psi(const std::vector<unsigned>& digits) const;
    std::vector<unsigned> psi_inv(const std::vector<unsigned>& residues) const;

  private:
    unsigned r_;
    unsigned digit_count_ = 0;
    std::vector<Factor> factors_;
};

}  // namespace cyccov
