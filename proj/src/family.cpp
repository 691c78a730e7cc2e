#include "cyccov/family.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "cyccov/cyclotomic.hpp"

namespace cyccov {

DegreeTuple::DegreeTuple(unsigned r_, std::vector<int> degrees_)
    : r(r_), degrees(std::move(degrees_)) {
    if (r < 2) throw DegenerateOrder("cover order must be at least 2");
    if (degrees.size() != r - 1)
        throw DomainError("degree tuple must have r-1 entries");
    for (int d : degrees)
        if (d < 0) throw DomainError("negative degree");
    if (total_weight() < 1) throw DomainError("total weight must be >= 1");
}

int DegreeTuple::total_weight() const {
    int w = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        w += static_cast<int>(i + 1) * degrees[i];
    return w;
}

long long genus(const DegreeTuple& t) {
    const long long r = t.r;
    const long long d = t.total_weight();
    long long rhs = r - std::gcd(r, d);
    for (std::size_t i = 0; i < t.degrees.size(); ++i)
        rhs += (r - std::gcd(r, static_cast<long long>(i + 1))) * t.degrees[i];
    const long long twice_g = rhs - 2 * r + 2;
    if (twice_g % 2 != 0) throw NonIntegralGenus();
    const long long g = twice_g / 2;
    if (g < 0) throw NegativeGenus("g = " + std::to_string(g));
    return g;
}

int FamilyMember::weighted_degree() const {
    int w = 0;
    for (std::size_t i = 0; i < polys.size(); ++i)
        w += static_cast<int>(i + 1) * polys[i].degree();
    return w;
}

bool is_valid_member(const PrimeField& F, const FamilyMember& mem) {
    if (mem.alpha == 0) return false;
    for (const Poly& f : mem.polys) {
        if (f.is_zero() || !f.is_monic()) return false;
        if (f.degree() >= 1 && !is_squarefree(F, f)) return false;
    }
    for (std::size_t i = 0; i < mem.polys.size(); ++i) {
        for (std::size_t j = i + 1; j < mem.polys.size(); ++j) {
            if (mem.polys[i].degree() >= 1 && mem.polys[j].degree() >= 1 &&
                !coprime(F, mem.polys[i], mem.polys[j]))
                return false;
        }
    }
    return true;
}

Poly subfield_model(const PrimeField& F, const FamilyMember& mem, unsigned d) {
    const unsigned r = mem.r();
    if (d == 0 || r % d != 0)
        throw NotADivisor(std::to_string(d) + " does not divide " +
                          std::to_string(r));
    Poly out = Poly::one();
    for (std::size_t i = 0; i < mem.polys.size(); ++i) {
        const unsigned e = static_cast<unsigned>(i + 1) % d;
        for (unsigned k = 0; k < e; ++k) out = mul(F, out, mem.polys[i]);
    }
    return out;
}

FamilyMember twist(const PrimeField& F, const FamilyMember& mem, unsigned j) {
    const unsigned r = mem.r();
    if (std::gcd(j % r, r) != 1)
        throw NotCoprime("twist exponent shares a factor with r");
    FamilyMember out;
    out.alpha = F.pow(mem.alpha, static_cast<std::int64_t>(j % r));
    out.polys.assign(r - 1, Poly::one());
    for (std::size_t i = 0; i < mem.polys.size(); ++i) {
        const unsigned slot = (static_cast<unsigned>(i + 1) * j) % r;
        out.polys[slot - 1] = mem.polys[i];
    }
    out.decremented =
        mem.decremented == 0 ? 0 : (mem.decremented * j) % r;
    return out;
}

FieldElem eval_at_infinity(const FamilyMember& mem, unsigned d) {
    const unsigned r = mem.r();
    if (d == 0 || r % d != 0)
        throw NotADivisor(std::to_string(d) + " does not divide " +
                          std::to_string(r));
    // The infinite place is unramified in the order-d subcover exactly when
    // d divides deg F; the subcover polynomial then takes the scalar value.
    return mem.weighted_degree() % static_cast<int>(d) == 0 ? mem.alpha : 0;
}

TupleEnumerator::TupleEnumerator(const PrimeField& F, std::vector<int> degrees)
    : field_(&F), degrees_(std::move(degrees)) {
    const std::size_t k = degrees_.size();
    slot_size_.resize(k);
    stride_.assign(k, 1);
    for (std::size_t i = 0; i < k; ++i)
        slot_size_[i] = monic_count(F.q(), degrees_[i]);
    for (std::size_t i = k; i-- > 0;) {
        stride_[i] = (i + 1 < k) ? stride_[i + 1] * slot_size_[i + 1] : 1;
    }
    space_ = 1;
    for (std::size_t i = 0; i < k; ++i) space_ *= slot_size_[i];
}

void TupleEnumerator::visit(
    std::uint64_t begin, std::uint64_t end,
    const std::function<void(const std::vector<Poly>&, std::size_t)>& fn)
    const {
    const PrimeField& F = *field_;
    const std::size_t k = degrees_.size();
    end = std::min(end, space_);
    if (begin >= end || k == 0) {
        if (k == 0 && begin == 0 && end >= 1) {
            // no slots: the single empty tuple
            static const std::vector<Poly> empty;
            fn(empty, 0);
        }
        return;
    }

    std::vector<std::uint64_t> digit(k, ~0ull);
    std::vector<std::uint64_t> visited_digit(k, ~0ull);
    std::vector<Poly> polys(k);
    std::uint64_t idx = begin;
    bool first = true;

    while (idx < end) {
        // decode, recomputing polynomials from the shallowest changed slot
        std::size_t changed = 0;
        while (changed < k &&
               (idx / stride_[changed]) % slot_size_[changed] == digit[changed])
            ++changed;
        for (std::size_t t = changed; t < k; ++t) {
            digit[t] = (idx / stride_[t]) % slot_size_[t];
            polys[t] = monic_by_index(F.q(), degrees_[t], digit[t]);
        }

        // validate slots from the changed one inward; skip whole subtrees
        std::size_t bad = k;
        for (std::size_t s = changed; s < k; ++s) {
            bool ok = polys[s].degree() < 1 || is_squarefree(F, polys[s]);
            for (std::size_t t = 0; ok && t < s; ++t) {
                if (polys[s].degree() >= 1 && polys[t].degree() >= 1 &&
                    !coprime(F, polys[s], polys[t]))
                    ok = false;
            }
            if (!ok) {
                bad = s;
                break;
            }
        }
        if (bad < k) {
            // advance to the next value of slot `bad`
            std::uint64_t block = stride_[bad];
            idx = (idx / block + 1) * block;
            continue;
        }

        // report the change relative to the previously *visited* tuple, since
        // skipped decodes must not disturb the caller's per-slot caches
        std::size_t report = 0;
        if (!first) {
            while (report < k && visited_digit[report] == digit[report])
                ++report;
        }
        visited_digit = digit;
        fn(polys, report);
        first = false;
        ++idx;
    }
}

std::uint64_t TupleEnumerator::count() const {
    std::uint64_t n = 0;
    visit(0, space_, [&](const std::vector<Poly>&, std::size_t) { ++n; });
    return n;
}

std::vector<Subfamily> bracket_subfamilies(const DegreeTuple& t) {
    std::vector<Subfamily> out;
    auto weight = [](const std::vector<int>& deg) {
        int w = 0;
        for (std::size_t i = 0; i < deg.size(); ++i)
            w += static_cast<int>(i + 1) * deg[i];
        return w;
    };
    if (weight(t.degrees) >= 1) out.push_back({0, t.degrees});
    for (unsigned j = 1; j < t.r; ++j) {
        std::vector<int> deg = t.degrees;
        deg[j - 1] -= 1;
        if (deg[j - 1] < 0) continue;
        if (weight(deg) < 1) continue;  // constant F: no cover
        out.push_back({j, deg});
    }
    return out;
}

void enumerate_bracket(const PrimeField& F, const DegreeTuple& t, bool scalars,
                       const std::function<void(const FamilyMember&)>& fn) {
    for (const Subfamily& sub : bracket_subfamilies(t)) {
        TupleEnumerator en(F, sub.degrees);
        en.visit(0, en.index_space(),
                 [&](const std::vector<Poly>& polys, std::size_t) {
                     FamilyMember mem;
                     mem.polys = polys;
                     mem.decremented = sub.decremented;
                     if (scalars) {
                         for (FieldElem a = 1; a < F.q(); ++a) {
                             mem.alpha = a;
                             fn(mem);
                         }
                     } else {
                         mem.alpha = 1;
                         fn(mem);
                     }
                 });
    }
}

namespace {
std::map<std::pair<std::uint32_t, std::vector<int>>, std::uint64_t>&
cardinality_cache() {
    static std::map<std::pair<std::uint32_t, std::vector<int>>, std::uint64_t>
        cache;
    return cache;
}
std::mutex cardinality_mutex;
}  // namespace

std::uint64_t subfamily_cardinality(const PrimeField& F,
                                    const std::vector<int>& degrees) {
    const auto key = std::make_pair(F.q(), degrees);
    {
        std::lock_guard<std::mutex> lock(cardinality_mutex);
        auto it = cardinality_cache().find(key);
        if (it != cardinality_cache().end()) return it->second;
    }
    const std::uint64_t n = TupleEnumerator(F, degrees).count();
    std::lock_guard<std::mutex> lock(cardinality_mutex);
    cardinality_cache().emplace(key, n);
    return n;
}

std::uint64_t bracket_cardinality(const PrimeField& F, const DegreeTuple& t,
                                  bool scalars) {
    std::uint64_t total = 0;
    for (const Subfamily& sub : bracket_subfamilies(t))
        total += subfamily_cardinality(F, sub.degrees);
    return scalars ? total * (F.q() - 1) : total;
}

FamilyMember sample_member(const PrimeField& F, const DegreeTuple& t,
                           SplitMix64& rng, const SampleOptions& opt) {
    const auto subs = bracket_subfamilies(t);
    std::vector<std::uint64_t> cum;
    std::uint64_t total = 0;
    for (const Subfamily& sub : subs) {
        total += subfamily_cardinality(F, sub.degrees);
        cum.push_back(total);
    }
    if (total == 0) throw EmptyFamily();

    const std::uint64_t pick = rng.below(total);
    std::size_t si = 0;
    while (cum[si] <= pick) ++si;
    const Subfamily& sub = subs[si];

    FamilyMember mem;
    mem.decremented = sub.decremented;
    mem.alpha = static_cast<FieldElem>(1 + rng.below(F.q() - 1));
    for (std::uint64_t attempt = 0; attempt < opt.max_rejections; ++attempt) {
        mem.polys.clear();
        for (int d : sub.degrees) {
            mem.polys.push_back(
                monic_by_index(F.q(), d, rng.below(monic_count(F.q(), d))));
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < mem.polys.size(); ++i) {
            if (mem.polys[i].degree() >= 1 && !is_squarefree(F, mem.polys[i]))
                ok = false;
            for (std::size_t j = 0; ok && j < i; ++j) {
                if (mem.polys[i].degree() >= 1 && mem.polys[j].degree() >= 1 &&
                    !coprime(F, mem.polys[i], mem.polys[j]))
                    ok = false;
            }
        }
        if (ok) return mem;
    }
    throw RejectionBudgetExceeded();
}

FamilyMember sample_member_indexed(const PrimeField& F, const DegreeTuple& t,
                                   std::uint64_t seed, std::uint64_t index,
                                   const SampleOptions& opt) {
    SplitMix64 rng(mix_seed(seed, index));
    return sample_member(F, t, rng, opt);
}

CrtRelabel::CrtRelabel(unsigned r) : r_(r) {
    if (r < 2) throw DegenerateOrder("relabeling needs r >= 2");
    for (auto [p, t] : factorize(r)) {
        unsigned pt = 1;
        for (unsigned i = 0; i < t; ++i) pt *= p;
        factors_.push_back({p, t, pt});
        digit_count_ += t;
    }
}

unsigned CrtRelabel::phi(const std::vector<unsigned>& residues) const {
    if (residues.size() != factors_.size())
        throw DomainError("residue vector has wrong length");
    // Chinese remainder: x = residues[j] mod p_j^{t_j}
    unsigned x = 0;
    unsigned modulus = 1;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        const unsigned pj = factors_[j].pt;
        if (residues[j] >= pj) throw DomainError("residue out of range");
        // solve x + modulus * k = residues[j] (mod pj)
        unsigned inv = 1;
        for (unsigned c = 1; c < pj; ++c) {
            if ((modulus % pj) * c % pj == 1) {
                inv = c;
                break;
            }
        }
        const unsigned diff = (residues[j] + pj - x % pj) % pj;
        x += modulus * ((diff * inv) % pj);
        modulus *= pj;
    }
    return x;
}

std::vector<unsigned> CrtRelabel::phi_inv(unsigned index) const {
    std::vector<unsigned> out;
    out.reserve(factors_.size());
    for (const Factor& f : factors_) out.push_back(index % f.pt);
    return out;
}

std::vector<unsigned> CrtRelabel::psi(const std::vector<unsigned>& digits) const {
    if (digits.size() != digit_count_)
        throw DomainError("digit vector has wrong length");
    std::vector<unsigned> residues;
    std::size_t pos = 0;
    for (const Factor& f : factors_) {
        unsigned value = 0;
        unsigned base = 1;
        for (unsigned k = 0; k < f.t; ++k) {
            if (digits[pos] >= f.p) throw DomainError("digit out of range");
            value += digits[pos++] * base;
            base *= f.p;
        }
        residues.push_back(value);
    }
    return residues;
}

std::vector<unsigned> CrtRelabel::psi_inv(
    const std::vector<unsigned>& residues) const {
    if (residues.size() != factors_.size())
        throw DomainError("residue vector has wrong length");
    std::vector<unsigned> digits;
    digits.reserve(digit_count_);
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        unsigned v = residues[j];
        for (unsigned k = 0; k < factors_[j].t; ++k) {
            digits.push_back(v % factors_[j].p);
            v /= factors_[j].p;
        }
    }
    return digits;
}

}  // namespace cyccov
