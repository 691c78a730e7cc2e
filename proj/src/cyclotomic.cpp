#include "cyccov/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace cyccov {

unsigned euler_phi(unsigned n) {
    unsigned out = 1;
    for (auto [p, t] : factorize(n)) {
        unsigned pk = 1;
        for (unsigned i = 0; i + 1 < t; ++i) pk *= p;
        out *= (p - 1) * pk;
    }
    return out;
}

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned t = 0;
            while (n % p == 0) {
                n /= p;
                ++t;
            }
            out.emplace_back(p, t);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

// Exact division of integer polynomials, divisor monic.
std::vector<BigInt> exact_div(std::vector<BigInt> num,
                              const std::vector<BigInt>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<BigInt> quo(dn - dd + 1);
    for (int k = dn; k >= dd; --k) {
        BigInt c = num[k];
        quo[k - dd] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    return quo;
}

struct CycRing {
    unsigned m = 1;
    unsigned phi = 1;
    std::vector<BigInt> modulus;                  // Phi_m, monic
    std::vector<std::vector<BigInt>> unit_power;  // x^k mod Phi_m, k in [0, m)
};

// Reduce an integer polynomial (low-to-high) modulo the monic Phi_m in place,
// then truncate to length phi.
void reduce_mod(std::vector<BigInt>& v, const CycRing& ring) {
    const unsigned phi = ring.phi;
    for (std::size_t k = v.size(); k-- > phi;) {
        if (v[k] == 0) continue;
        BigInt c = std::move(v[k]);
        v[k] = 0;
        for (unsigned i = 0; i < phi; ++i) {
            v[k - phi + i] -= c * ring.modulus[i];
        }
    }
    v.resize(phi);
}

const CycRing& ring_for(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycRing>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;

    auto ring = std::make_unique<CycRing>();
    ring->m = m;
    ring->modulus = cyclotomic_polynomial(m);
    ring->phi = static_cast<unsigned>(ring->modulus.size()) - 1;
    ring->unit_power.resize(m);
    for (unsigned k = 0; k < m; ++k) {
        std::vector<BigInt> v(k + 1);
        v[k] = 1;
        reduce_mod(v, *ring);
        ring->unit_power[k] = std::move(v);
    }
    const CycRing& out = *ring;
    cache.emplace(m, std::move(ring));
    return out;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw DomainError("cyclotomic_polynomial(0)");
    // x^m - 1
    std::vector<BigInt> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (unsigned e : divisors_of(m)) {
        if (e == m) continue;
        num = exact_div(std::move(num), cyclotomic_polynomial(e));
    }
    return num;
}

CycInt CycInt::zero(unsigned m) {
    const auto& ring = ring_for(m);
    return CycInt(m, std::vector<BigInt>(ring.phi));
}

CycInt CycInt::from_integer(unsigned m, const BigInt& n) {
    // the basis starts with zeta^0 = 1 for every m (for m = 1, x = 1 mod Phi_1)
    CycInt out = zero(m);
    out.coeffs_[0] = n;
    return out;
}

CycInt CycInt::from_coeffs(unsigned m, std::vector<BigInt> coeffs) {
    const auto& ring = ring_for(m);
    if (coeffs.size() != ring.phi)
        throw DomainError("coefficient vector length must be phi(m)");
    return CycInt(m, std::move(coeffs));
}

bool CycInt::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<BigInt> CycInt::as_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    // conductor 1: the single basis vector is zeta_1 = 1
    return coeffs_[0];
}

void CycInt::check_conductor(const CycInt& o) const {
    if (m_ != o.m_)
        throw ConductorMismatch(std::to_string(m_) + " vs " +
                                std::to_string(o.m_));
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check_conductor(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    check_conductor(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycInt& CycInt::add_scaled(const CycInt& o, long factor) {
    check_conductor(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (factor >= 0) {
            mpz_addmul_ui(coeffs_[i].get_mpz_t(), o.coeffs_[i].get_mpz_t(),
                          static_cast<unsigned long>(factor));
        } else {
            mpz_submul_ui(coeffs_[i].get_mpz_t(), o.coeffs_[i].get_mpz_t(),
                          static_cast<unsigned long>(-factor));
        }
    }
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check_conductor(b);
    const auto& ring = ring_for(a.m_);
    std::vector<BigInt> prod(2 * ring.phi - 1);
    for (unsigned i = 0; i < ring.phi; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < ring.phi; ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    reduce_mod(prod, ring);
    return CycInt(a.m_, std::move(prod));
}

CycInt CycInt::pow(std::uint64_t e) const {
    CycInt acc = from_integer(m_, 1);
    CycInt base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator<(const CycInt& a, const CycInt& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

CycInt root_of_unity(unsigned m, long long k) {
    if (m == 0) throw DomainError("root_of_unity conductor 0");
    const auto& ring = ring_for(m);
    long long e = k % static_cast<long long>(m);
    if (e < 0) e += m;
    CycInt out = CycInt::zero(m);
    out.coeffs_ = ring.unit_power[static_cast<unsigned>(e)];
    return out;
}

CycInt embed(const CycInt& a, unsigned target) {
    const unsigned d = a.conductor();
    if (target == 0 || target % d != 0)
        throw NotADivisor(std::to_string(d) + " does not divide " +
                          std::to_string(target));
    if (target == d) return a;
    const auto& ring = ring_for(target);
    const unsigned step = target / d;
    CycInt out = CycInt::zero(target);
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
        if (a.coeffs_[j] == 0) continue;
        const auto& basis = ring.unit_power[(j * step) % target];
        for (std::size_t i = 0; i < basis.size(); ++i)
            out.coeffs_[i] += a.coeffs_[j] * basis[i];
    }
    return out;
}

CycInt galois(const CycInt& a, unsigned j) {
    const unsigned m = a.conductor();
    if (std::gcd(j % m, m) != 1)
        throw DomainError("galois exponent not coprime to conductor");
    const auto& ring = ring_for(m);
    CycInt out = CycInt::zero(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        const auto& basis = ring.unit_power[(i * static_cast<std::size_t>(j)) % m];
        for (std::size_t k = 0; k < basis.size(); ++k)
            out.coeffs_[k] += a.coeffs_[i] * basis[k];
    }
    return out;
}

}  // namespace cyccov
