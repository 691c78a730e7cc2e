#include "cyccov/dist_model.hpp"

#include <algorithm>
#include <numeric>

namespace cyccov {

namespace {

unsigned pow_u(unsigned b, unsigned e) {
    unsigned out = 1;
    while (e--) out *= b;
    return out;
}

unsigned valuation(unsigned n, unsigned p) {
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

unsigned mod_inverse(unsigned a, unsigned m) {
    a %= m;
    for (unsigned x = 1; x < m; ++x)
        if ((a * x) % m == 1) return x;
    throw DomainError("not invertible");
}

Rational atom_probability(unsigned q, unsigned r, unsigned d) {
    const long denom_base = static_cast<long>(q) + r - 1;
    if (d == r) return rational(static_cast<long>(q), static_cast<long>(r) * denom_base);
    return rational(static_cast<long>(euler_phi(r / d)),
                    static_cast<long>(d) * denom_base);
}

}  // namespace

SiteDistribution site_distribution(unsigned q, unsigned r) {
    if (r < 2) throw DegenerateOrder("site distribution needs r >= 2");
    if (q % r != 1)
        throw CongruenceViolation(std::to_string(q) + " != 1 mod " +
                                  std::to_string(r));
    SiteDistribution dist;
    dist.q = q;
    dist.r = r;

    for (unsigned d : divisors_of(r)) {
        const auto primes = factorize(d);
        const Rational prob = atom_probability(q, r, d);
        // one atom per choice of top-level root for each prime of d
        std::vector<unsigned> exps(primes.size(), 0);
        for (;;) {
            SiteAtom atom;
            atom.r = r;
            atom.d = d;
            atom.prob = prob;
            for (std::size_t j = 0; j < primes.size(); ++j) {
                const auto [p, t] = primes[j];
                const unsigned pt = pow_u(p, t);
                SiteAtom::RootChoice rc;
                rc.p = p;
                rc.level = t;
                rc.exponent = exps[j];
                rc.value = root_of_unity(
                    r, static_cast<long long>(exps[j]) * (r / pt));
                atom.roots.push_back(std::move(rc));
            }
            dist.atoms.push_back(std::move(atom));
            // odometer over root exponents
            std::size_t j = 0;
            while (j < primes.size()) {
                const unsigned pt = pow_u(primes[j].first, primes[j].second);
                if (++exps[j] < pt) break;
                exps[j] = 0;
                ++j;
            }
            if (j == primes.size()) break;
        }
    }

    Rational total(0);
    for (const SiteAtom& a : dist.atoms) total += a.prob;
    if (total != 1) throw NormalizationFailure(to_fraction_string(total));
    return dist;
}

CycInt value_at_divisor(const SiteAtom& atom, unsigned d) {
    const unsigned r = atom.r;
    if (d == 0 || r % d != 0)
        throw NotADivisor(std::to_string(d) + " does not divide " +
                          std::to_string(r));
    std::uint64_t exponent = 0;  // of zeta_r
    for (auto [p, tp] : factorize(d)) {
        const unsigned vd = tp;  // v_p(d)
        const unsigned va = valuation(atom.d, p);
        if (vd > va) return CycInt::zero(r);
        const SiteAtom::RootChoice* rc = nullptr;
        for (const auto& cand : atom.roots)
            if (cand.p == p) rc = &cand;
        if (rc == nullptr) throw DomainError("atom misses a root choice");
        const unsigned pvd = pow_u(p, vd);
        const unsigned sigma = mod_inverse(d / pvd, pvd);
        // (epsilon_p lowered to level vd)^sigma as a power of zeta_r
        exponent +=
            static_cast<std::uint64_t>(rc->exponent % pvd) * (r / pvd) * sigma;
    }
    return root_of_unity(r, static_cast<long long>(exponent % r));
}

MarginalLaw marginal_check(unsigned q, unsigned r, unsigned d) {
    if (d == 0 || r % d != 0)
        throw NotADivisor(std::to_string(d) + " does not divide " +
                          std::to_string(r));
    const SiteDistribution dist = site_distribution(q, r);

    std::map<CycInt, Rational> law;
    for (const SiteAtom& atom : dist.atoms) law[value_at_divisor(atom, d)] += atom.prob;

    MarginalLaw expected;
    const long denom = static_cast<long>(q) + r - 1;
    expected.zero_prob =
        rational(static_cast<long>(r - r / d), denom);
    expected.root_prob = rational(static_cast<long>(q + r / d - 1),
                                  static_cast<long>(d) * denom);

    const CycInt zero = CycInt::zero(r);
    Rational got_zero = law.count(zero) ? law[zero] : Rational(0);
    if (got_zero != expected.zero_prob)
        throw MarginalMismatch("zero marginal at d = " + std::to_string(d));
    for (unsigned k = 0; k < d; ++k) {
        const CycInt eps = root_of_unity(r, static_cast<long long>(k) * (r / d));
        Rational got = law.count(eps) ? law[eps] : Rational(0);
        if (got != expected.root_prob)
            throw MarginalMismatch("root marginal at d = " + std::to_string(d) +
                                   ", k = " + std::to_string(k));
    }
    // nothing else may carry mass: the named outcomes already sum to 1
    Rational total = got_zero;
    for (unsigned k = 0; k < d; ++k)
        total += expected.root_prob;
    if (total != 1)
        throw MarginalMismatch("marginal support at d = " + std::to_string(d));
    return expected;
}

JointSumDistribution convolve(const SiteDistribution& site, unsigned n_sites,
                              std::vector<unsigned> divisors,
                              const ConvolveOptions& opt) {
    if (n_sites < 1) throw DomainError("n_sites must be >= 1");
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(std::unique(divisors.begin(), divisors.end()),
                   divisors.end());
    for (unsigned d : divisors) {
        if (d == 0 || site.r % d != 0)
            throw NotADivisor("convolve divisor " + std::to_string(d));
    }

    JointSumDistribution joint;
    joint.q = site.q;
    joint.r = site.r;
    joint.n_sites = n_sites;
    joint.divisors = divisors;

    // per-atom value tuples
    std::vector<std::vector<CycInt>> atom_values;
    atom_values.reserve(site.atoms.size());
    for (const SiteAtom& atom : site.atoms) {
        std::vector<CycInt> vals;
        vals.reserve(divisors.size());
        for (unsigned d : divisors) vals.push_back(value_at_divisor(atom, d));
        atom_values.push_back(std::move(vals));
    }

    std::map<std::vector<CycInt>, Rational> acc;
    acc.emplace(std::vector<CycInt>(divisors.size(), CycInt::zero(site.r)),
                Rational(1));
    for (unsigned s = 0; s < n_sites; ++s) {
        std::map<std::vector<CycInt>, Rational> next;
        for (const auto& [key, p] : acc) {
            for (std::size_t a = 0; a < site.atoms.size(); ++a) {
                std::vector<CycInt> nk = key;
                for (std::size_t i = 0; i < nk.size(); ++i)
                    nk[i] += atom_values[a][i];
                next[std::move(nk)] += p * site.atoms[a].prob;
            }
            if (next.size() > opt.max_keys)
                throw BudgetExceeded("convolution key budget");
        }
        acc = std::move(next);
    }
    joint.table = std::move(acc);
    return joint;
}

ConditionalReport conditional_checks(const SiteDistribution& site) {
    ConditionalReport report;
    const unsigned r = site.r;
    const unsigned q = site.q;
    const auto primes = factorize(r);

    // zero propagation and forced power chains within prime-power towers
    for (auto [p, t] : primes) {
        for (unsigned s = 2; s <= t; ++s) {
            const unsigned lo = pow_u(p, s - 1);
            const unsigned hi = pow_u(p, s);
            for (const SiteAtom& atom : site.atoms) {
                const CycInt vlo = value_at_divisor(atom, lo);
                const CycInt vhi = value_at_divisor(atom, hi);
                if (vlo.is_zero() && !vhi.is_zero())
                    throw ConditionalMismatch("zero propagation at p^s = " +
                                              std::to_string(hi));
                ++report.zero_propagation_checks;
                if (!vhi.is_zero() && !(vhi.pow(p) == vlo))
                    throw ConditionalMismatch("power chain at p^s = " +
                                              std::to_string(hi));
                ++report.power_chain_checks;
            }
        }
    }

    // block probabilities: enumerate every full chain of root values per
    // divisor d and compare the exact event probability with the display
    for (unsigned d : divisors_of(r)) {
        // chain = value of X_{p^s} for every p | r, 1 <= s <= v_p(d), as an
        // exponent of zeta_{p^s}
        struct Level {
            unsigned p, s, ps;  // ps = p^s
        };
        std::vector<Level> levels;
        for (auto [p, t] : primes) {
            const unsigned vd = valuation(d, p);
            for (unsigned s = 1; s <= vd; ++s) levels.push_back({p, s, pow_u(p, s)});
        }
        std::vector<unsigned> exps(levels.size(), 0);
        for (;;) {
            // consistency: eps_{p^{s-1}} = eps_{p^s}^p for s >= 2
            bool consistent = true;
            for (std::size_t a = 0; a < levels.size(); ++a) {
                if (levels[a].s < 2) continue;
                for (std::size_t b = 0; b < levels.size(); ++b) {
                    if (levels[b].p == levels[a].p &&
                        levels[b].s == levels[a].s - 1) {
                        if (exps[b] != (exps[a] * levels[a].p) % levels[b].ps)
                            consistent = false;
                    }
                }
            }
            // exact probability of the block event under the atoms
            Rational prob(0);
            for (const SiteAtom& atom : site.atoms) {
                bool match = true;
                for (auto [p, t] : primes) {
                    const unsigned vd = valuation(d, p);
                    for (unsigned s = 1; s <= t && match; ++s) {
                        const unsigned ps = pow_u(p, s);
                        const CycInt got = value_at_divisor(atom, ps);
                        if (s <= vd) {
                            std::size_t li = 0;
                            while (levels[li].p != p || levels[li].s != s) ++li;
                            const CycInt want = root_of_unity(
                                r, static_cast<long long>(exps[li]) * (r / ps));
                            if (!(got == want)) match = false;
                        } else if (!got.is_zero()) {
                            match = false;
                        }
                    }
                    if (!match) break;
                }
                if (match) prob += atom.prob;
            }
            const Rational expected =
                consistent ? atom_probability(q, r, d) : Rational(0);
            if (prob != expected)
                throw ConditionalMismatch("block display at d = " +
                                          std::to_string(d));
            ++report.block_probability_checks;

            // odometer over chain exponents
            std::size_t j = 0;
            while (j < levels.size()) {
                if (++exps[j] < levels[j].ps) break;
                exps[j] = 0;
                ++j;
            }
            if (j == levels.size()) break;
        }
    }
    return report;
}

}  // namespace cyccov
