#include "cyccov/charsum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace cyccov {

Character::Character(const PrimeField& F, unsigned d)
    : field_(&F), d_(d), zero_(CycInt::zero(F.r())) {
    if (d == 0 || (F.q() - 1) % d != 0)
        throw OrderNotDividing("character order must divide q-1");
    if (F.r() % d != 0)
        throw NotADivisor("character order must divide r for embedding");
    const unsigned r = F.r();
    values_.reserve(d);
    for (unsigned k = 0; k < d; ++k)
        values_.push_back(root_of_unity(r, static_cast<long long>(k) * (r / d)));
}

Character char_of_order(const PrimeField& F, unsigned d) {
    return Character(F, d);
}

const std::vector<CycInt>& conductor_roots(unsigned r) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<CycInt>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it == cache.end()) {
        std::vector<CycInt> roots;
        roots.reserve(r);
        for (unsigned k = 0; k < r; ++k) roots.push_back(root_of_unity(r, k));
        it = cache.emplace(r, std::move(roots)).first;
    }
    return it->second;
}

std::vector<std::vector<FieldElem>> member_evals(const PrimeField& F,
                                                 const FamilyMember& mem) {
    std::vector<std::vector<FieldElem>> evals(mem.polys.size());
    for (std::size_t i = 0; i < mem.polys.size(); ++i) {
        evals[i].resize(F.q());
        for (FieldElem x = 0; x < F.q(); ++x)
            evals[i][x] = eval(F, mem.polys[i], x);
    }
    return evals;
}

SiteProfile site_profile_from_evals(
    const PrimeField& F, const std::vector<std::vector<FieldElem>>& evals,
    int weighted_degree, const std::vector<unsigned>& divisors) {
    const unsigned q = F.q();
    const std::size_t k = evals.size();
    const std::size_t nd = divisors.size();
    for (unsigned d : divisors) {
        if (d == 0 || F.r() % d != 0)
            throw NotADivisor("profile divisor " + std::to_string(d));
    }

    SiteProfile prof;
    prof.divisors = divisors;
    prof.residue_count.resize(nd);
    for (std::size_t di = 0; di < nd; ++di)
        prof.residue_count[di].assign(divisors[di], 0);
    prof.zero_count.assign(nd, 0);

    std::vector<std::uint32_t> dl(k);
    std::vector<bool> vanishes(k);
    std::vector<bool> site_zero(nd);

    for (FieldElem x = 0; x < q; ++x) {
        for (std::size_t i = 0; i < k; ++i) {
            const FieldElem v = evals[i][x];
            vanishes[i] = v == 0;
            dl[i] = v == 0 ? 0 : F.dlog(v);
        }
        for (std::size_t di = 0; di < nd; ++di) {
            const unsigned d = divisors[di];
            bool zero = false;
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < k; ++i) {
                const unsigned e = static_cast<unsigned>(i + 1) % d;
                if (e == 0) continue;
                if (vanishes[i]) {
                    zero = true;
                    break;
                }
                acc += static_cast<std::uint64_t>(e) * dl[i];
            }
            site_zero[di] = zero;
            if (zero)
                ++prof.zero_count[di];
            else
                ++prof.residue_count[di][acc % d];
        }
        for (std::size_t a = 0; a < nd; ++a) {
            for (std::size_t b = 0; b < nd; ++b) {
                if (a == b || divisors[b] % divisors[a] != 0) continue;
                if (site_zero[a] && !site_zero[b])
                    ++prof.zero_propagation_violations;
            }
        }
    }

    // the infinite place: value alpha iff d | deg F, zero otherwise
    for (std::size_t di = 0; di < nd; ++di) {
        const bool zero = weighted_degree % static_cast<int>(divisors[di]) != 0;
        site_zero[di] = zero;
        if (zero)
            ++prof.zero_count[di];
        else
            ++prof.residue_count[di][0];
    }
    for (std::size_t a = 0; a < nd; ++a) {
        for (std::size_t b = 0; b < nd; ++b) {
            if (a == b || divisors[b] % divisors[a] != 0) continue;
            if (site_zero[a] && !site_zero[b])
                ++prof.zero_propagation_violations;
        }
    }
    return prof;
}

SiteProfile site_profile(const PrimeField& F, const FamilyMember& mem,
                         const std::vector<unsigned>& divisors) {
    return site_profile_from_evals(F, member_evals(F, mem),
                                   mem.weighted_degree(), divisors);
}

CycInt char_sum_from_profile(const PrimeField& F, const SiteProfile& prof,
                             std::size_t which, FieldElem alpha) {
    const unsigned r = F.r();
    const unsigned d = prof.divisors[which];
    const auto& roots = conductor_roots(r);
    const unsigned shift = F.dlog(alpha) % d;
    CycInt s = CycInt::zero(r);
    for (unsigned m = 0; m < d; ++m) {
        const std::int64_t c = prof.residue_count[which][m];
        if (c == 0) continue;
        s.add_scaled(roots[((m + shift) % d) * (r / d)], static_cast<long>(c));
    }
    return s;
}

CycInt char_sum(const PrimeField& F, const FamilyMember& mem, unsigned d) {
    if (d == 0 || F.r() % d != 0)
        throw NotADivisor("char_sum divisor " + std::to_string(d));
    SiteProfile prof = site_profile(F, mem, {d});
    return char_sum_from_profile(F, prof, 0, mem.alpha);
}

long long point_count_from_profile(const PrimeField& F,
                                   const SiteProfile& prof, FieldElem alpha) {
    const unsigned r = F.r();
    const auto& roots = conductor_roots(r);
    CycInt total = CycInt::from_integer(r, static_cast<long>(F.q()) + 1);
    for (std::size_t which = 0; which < prof.divisors.size(); ++which) {
        const unsigned d = prof.divisors[which];
        if (d == 1) continue;  // empty exponent range
        const unsigned shift = F.dlog(alpha) % d;
        for (unsigned i = 1; i < d; ++i) {
            if (std::gcd(i, d) != 1) continue;
            for (unsigned m = 0; m < d; ++m) {
                const std::int64_t c = prof.residue_count[which][m];
                if (c == 0) continue;
                const unsigned k = (i * ((m + shift) % d)) % d;
                total.add_scaled(roots[k * (r / d)], static_cast<long>(c));
            }
        }
    }
    auto n = total.as_integer();
    if (!n) throw NonIntegralCount();
    if (!n->fits_slong_p()) throw DomainError("point count overflow");
    return n->get_si();
}

long long point_count_formula(const PrimeField& F, const FamilyMember& mem) {
    std::vector<unsigned> divisors;
    for (unsigned d : divisors_of(F.r()))
        if (d > 1) divisors.push_back(d);
    SiteProfile prof = site_profile(F, mem, divisors);
    return point_count_from_profile(F, prof, mem.alpha);
}

RootCountTable::RootCountTable(const PrimeField& F) {
    table_.resize(F.r() + 1);
    for (unsigned e : divisors_of(F.r())) {
        auto& tbl = table_[e];
        tbl.assign(F.q(), 0);
        for (FieldElem y = 0; y < F.q(); ++y)
            ++tbl[F.pow(y, static_cast<std::int64_t>(e))];
    }
}

OracleSites oracle_sites(const PrimeField& F,
                         const std::vector<std::vector<FieldElem>>& evals,
                         int weighted_degree) {
    const unsigned q = F.q();
    const unsigned r = F.r();
    const std::size_t k = evals.size();
    OracleSites out;
    out.e.resize(q);
    out.w.resize(q);
    for (FieldElem x = 0; x < q; ++x) {
        int vanish = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (evals[i][x] == 0) {
                if (vanish != 0)
                    throw InvalidMember("two factors vanish at x = " +
                                        std::to_string(x));
                vanish = static_cast<int>(i + 1);
            }
        }
        const unsigned e =
            vanish == 0 ? r : std::gcd(static_cast<unsigned>(vanish), r);
        FieldElem w = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const unsigned exp = static_cast<unsigned>(i + 1) % e;
            if (exp == 0) continue;
            w = F.mul(w, F.pow(evals[i][x], exp));
        }
        out.e[x] = e;
        out.w[x] = w;
    }
    const int wmod = ((weighted_degree % static_cast<int>(r)) + r) % r;
    out.e_infinity = std::gcd(r, static_cast<unsigned>(wmod));
    return out;
}

long long oracle_count(const PrimeField& F, const RootCountTable& table,
                       const OracleSites& sites, FieldElem alpha) {
    long long total = 0;
    for (FieldElem x = 0; x < F.q(); ++x)
        total += table.count(sites.e[x], F.mul(alpha, sites.w[x]));
    total += table.count(sites.e_infinity, alpha);
    return total;
}

long long point_count_oracle_with(const PrimeField& F,
                                  const RootCountTable& table,
                                  const FamilyMember& mem) {
    OracleSites sites =
        oracle_sites(F, member_evals(F, mem), mem.weighted_degree());
    return oracle_count(F, table, sites, mem.alpha);
}

long long point_count_oracle(const PrimeField& F, const FamilyMember& mem) {
    RootCountTable table(F);
    return point_count_oracle_with(F, table, mem);
}

}  // namespace cyccov
