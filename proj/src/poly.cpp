#include "cyccov/poly.hpp"

#include <algorithm>

namespace cyccov {

std::string Poly::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c_[i]);
    }
    out += ']';
    return out;
}

Poly add(const PrimeField& F, const Poly& a, const Poly& b) {
    std::vector<FieldElem> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(c));
}

Poly sub(const PrimeField& F, const Poly& a, const Poly& b) {
    std::vector<FieldElem> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(c));
}

Poly mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<FieldElem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] = F.add(c[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
        }
    }
    return Poly(std::move(c));
}

Poly scale(const PrimeField& F, const Poly& a, FieldElem s) {
    std::vector<FieldElem> c(a.coeffs());
    for (auto& v : c) v = F.mul(v, s);
    return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const PrimeField& F, const Poly& a,
                             const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly::zero(), a};
    std::vector<FieldElem> rem(a.coeffs());
    std::vector<FieldElem> quo(a.degree() - b.degree() + 1, 0);
    const FieldElem lead_inv = F.inv(b.leading_coeff());
    for (int k = a.degree(); k >= b.degree(); --k) {
        FieldElem c = F.mul(rem[k], lead_inv);
        if (c == 0) continue;
        quo[k - b.degree()] = c;
        for (int i = 0; i <= b.degree(); ++i) {
            rem[k - b.degree() + i] =
                F.sub(rem[k - b.degree() + i], F.mul(c, b.coeffs()[i]));
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_mod(const PrimeField& F, const Poly& a, const Poly& b) {
    return divmod(F, a, b).second;
}

Poly make_monic(const PrimeField& F, const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(F, a, F.inv(a.leading_coeff()));
}

Poly derivative(const PrimeField& F, const Poly& a) {
    if (a.degree() < 1) return Poly::zero();
    std::vector<FieldElem> c(a.degree());
    for (int i = 1; i <= a.degree(); ++i)
        c[i - 1] = F.mul(a.coeffs()[i], F.reduce(i));
    return Poly(std::move(c));
}

FieldElem eval(const PrimeField& F, const Poly& a, FieldElem x) {
    FieldElem v = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        v = F.add(F.mul(v, x), a.coeffs()[i]);
    return v;
}

Poly gcd(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw ZeroPolynomial("gcd of two zero polynomials");
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = poly_mod(F, u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return make_monic(F, u);
}

bool coprime(const PrimeField& F, const Poly& a, const Poly& b) {
    return gcd(F, a, b).degree() == 0;
}

bool is_squarefree(const PrimeField& F, const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("is_squarefree of zero");
    if (f.degree() == 0) return true;
    Poly df = derivative(F, f);
    if (df.is_zero()) return false;  // p-th power in char p
    return coprime(F, f, df);
}

std::uint64_t monic_count(std::uint32_t q, int degree) {
    std::uint64_t n = 1;
    for (int i = 0; i < degree; ++i) n *= q;
    return n;
}

Poly monic_by_index(std::uint32_t q, int degree, std::uint64_t index) {
    // c_0 is the most significant digit, so c_{d-1} varies fastest
    std::vector<FieldElem> c(degree + 1, 0);
    c[degree] = 1;
    for (int pos = degree - 1; pos >= 0; --pos) {
        c[pos] = static_cast<FieldElem>(index % q);
        index /= q;
    }
    return Poly(std::move(c));
}

std::uint64_t monic_index_of(std::uint32_t q, const Poly& f) {
    std::uint64_t idx = 0;
    for (int i = 0; i < f.degree(); ++i) idx = idx * q + f.coeff(i);
    return idx;
}

std::vector<Poly> enumerate_monic(std::uint32_t q, int degree) {
    std::vector<Poly> out;
    out.reserve(monic_count(q, degree));
    for_each_monic(q, degree, [&](Poly f) { out.push_back(std::move(f)); });
    return out;
}

std::vector<Poly> enumerate_monic_squarefree(const PrimeField& F,
                                             int degree) {
    std::vector<Poly> out;
    for_each_monic(F.q(), degree, [&](Poly f) {
        if (is_squarefree(F, f)) out.push_back(std::move(f));
    });
    return out;
}

std::vector<Poly> irreducibles_up_to(const PrimeField& F, int max_degree) {
    // trial division by the irreducibles of degree <= n/2 found so far
    std::vector<Poly> out;
    for (int n = 1; n <= max_degree; ++n) {
        for_each_monic(F.q(), n, [&](const Poly& f) {
            for (const Poly& p : out) {
                if (2 * p.degree() > n) break;  // out is sorted by degree
                if (poly_mod(F, f, p).is_zero()) return;
            }
            out.push_back(f);
        });
    }
    return out;
}

std::int64_t irreducible_count(std::uint32_t q, int n) {
    auto mobius = [](int m) {
        int mu = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                mu = -mu;
            }
        }
        if (m > 1) mu = -mu;
        return mu;
    };
    std::int64_t total = 0;
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        int mu = mobius(m);
        if (mu == 0) continue;
        std::int64_t p = 1;
        for (int i = 0; i < n / m; ++i) p *= q;
        total += mu * p;
    }
    return total / n;
}

}  // namespace cyccov
