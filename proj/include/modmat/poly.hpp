#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "modmat/bigint.hpp"

namespace modmat {

// ---- ring plumbing -------------------------------------------------------
//
// The verification chain works in Z[d][s]/(s^2-3) [U] [V]. Everything is
// built from one dense univariate Poly<R> template plus a quadratic
// extension SqrtExt<R>, with exact division (needed by fraction-free
// elimination) threaded through the tower.

inline Int ring_zero(const Int*) { return Int(0); }
inline bool ring_is_zero(const Int& a) { return a == 0; }
inline Int ring_exact_div(const Int& a, const Int& b) {
    return iexact_div(a, b);
}

template <class R>
class Poly {
  public:
    Poly() = default;
    Poly(const R& c) {
        if (!ring_is_zero(c)) c_.push_back(c);
    }
    Poly(long v) : Poly(R(Int(v))) {}

    static Poly monomial(const R& c, std::size_t deg) {
        Poly p;
        if (ring_is_zero(c)) return p;
        p.c_.assign(deg + 1, ring_zero(static_cast<const R*>(nullptr)));
        p.c_[deg] = c;
        return p;
    }
    static Poly variable() {
        return monomial(R(Int(1)), 1);
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const R& coeff(std::size_t k) const {
        static const R zero = ring_zero(static_cast<const R*>(nullptr));
        return k < c_.size() ? c_[k] : zero;
    }
    const R& lead() const {
        if (is_zero()) throw std::logic_error("Poly: lead of zero");
        return c_.back();
    }

    void set_coeff(std::size_t k, const R& v) {
        if (k >= c_.size())
            c_.resize(k + 1, ring_zero(static_cast<const R*>(nullptr)));
        c_[k] = v;
        trim();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()),
                    ring_zero(static_cast<const R*>(nullptr)));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1,
                    ring_zero(static_cast<const R*>(nullptr)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative() const {
        Poly r;
        for (std::size_t k = 1; k < c_.size(); ++k)
            r.set_coeff(k - 1, c_[k] * R(Int(static_cast<long>(k))));
        return r;
    }

    // Horner evaluation into any compatible ring.
    template <class S>
    S evaluate(const S& x, const S& zero) const {
        S acc = zero;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + S(c_[k]);
        return acc;
    }

    const std::vector<R>& coeffs() const { return c_; }

  private:
    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

// Exact quotient a / b; throws when the division leaves a remainder.
// Valid in any integral domain whose coefficient division is exact.
template <class R>
Poly<R> ring_exact_div(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::invalid_argument("Poly: divide by zero");
    Poly<R> rem = a, quot;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift =
            static_cast<std::size_t>(rem.degree() - b.degree());
        R qc = ring_exact_div(rem.lead(), b.lead());
        Poly<R> term = Poly<R>::monomial(qc, shift);
        quot = quot + term;
        rem = rem - term * b;
        if (!rem.is_zero() &&
            rem.degree() >= b.degree() + static_cast<int>(shift))
            throw std::invalid_argument("Poly: exact division failed");
    }
    if (!rem.is_zero())
        throw std::invalid_argument("Poly: exact division left remainder");
    return quot;
}

template <class R>
Poly<R> ring_zero(const Poly<R>*) {
    return {};
}
template <class R>
bool ring_is_zero(const Poly<R>& p) {
    return p.is_zero();
}

// Quadratic extension a + b s with s^2 = 3.
template <class R>
struct SqrtExt {
    R a{ring_zero(static_cast<const R*>(nullptr))};
    R b{ring_zero(static_cast<const R*>(nullptr))};

    SqrtExt() = default;
    SqrtExt(const R& a_) : a(a_) {}
    SqrtExt(const R& a_, const R& b_) : a(a_), b(b_) {}
    SqrtExt(const Int& v) : a(R(v)) {}

    friend SqrtExt operator+(const SqrtExt& x, const SqrtExt& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend SqrtExt operator-(const SqrtExt& x, const SqrtExt& y) {
        return {x.a - y.a, x.b - y.b};
    }
    SqrtExt operator-() const { return {-a, -b}; }
    friend SqrtExt operator*(const SqrtExt& x, const SqrtExt& y) {
        R three = R(Int(3));
        return {x.a * y.a + three * (x.b * y.b), x.a * y.b + x.b * y.a};
    }
    bool operator==(const SqrtExt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const SqrtExt& o) const { return !(*this == o); }

    SqrtExt conj() const { return {a, -b}; }
};

template <class R>
SqrtExt<R> ring_zero(const SqrtExt<R>*) {
    return {};
}
template <class R>
bool ring_is_zero(const SqrtExt<R>& x) {
    return ring_is_zero(x.a) && ring_is_zero(x.b);
}
template <class R>
SqrtExt<R> ring_exact_div(const SqrtExt<R>& x, const SqrtExt<R>& y) {
    // multiply by the conjugate: denominator a^2 - 3 b^2 is never zero
    // for y != 0 since 3 is not a square in the base field
    R three = R(Int(3));
    R den = y.a * y.a - three * (y.b * y.b);
    SqrtExt<R> num = x * y.conj();
    return {ring_exact_div(num.a, den), ring_exact_div(num.b, den)};
}

// ---- concrete tower ------------------------------------------------------

using Zd = Poly<Int>;        // Z[d]
using Rs = SqrtExt<Zd>;      // Z[d][s] / (s^2 - 3)
using RsU = Poly<Rs>;        // (Z[d][sqrt 3])[U]
using PolyVU = Poly<RsU>;    // ...[V]

inline Rs rs_int(long v) { return Rs(Zd(Int(v))); }
inline Rs rs_d() { return Rs(Zd::variable()); }
inline Rs rs_s() { return Rs(Zd(Int(0)), Zd(Int(1))); }

// ---- determinants --------------------------------------------------------

// Fraction-free (Bareiss) determinant; the divisions are exact in any
// integral domain, which is what keeps intermediate growth polynomial.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("bareiss_determinant: not square");
    const R* tag = nullptr;
    R prev = R(Int(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(m[k][k])) {
            std::size_t l = k + 1;
            while (l < n && ring_is_zero(m[l][k])) ++l;
            if (l == n) return ring_zero(tag);
            std::swap(m[k], m[l]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = ring_exact_div(
                    m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = ring_zero(tag);
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return (sign < 0) ? -det : det;
}

// Sylvester matrix of two polynomials in the same variable (degrees da,
// db taken from the inputs), coefficients in R.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Poly<R>& f,
                                             const Poly<R>& g) {
    int da = f.degree(), db = g.degree();
    if (da < 0 || db < 0)
        throw std::invalid_argument("sylvester_matrix: zero polynomial");
    std::size_t n = static_cast<std::size_t>(da + db);
    const R* tag = nullptr;
    std::vector<std::vector<R>> m(n, std::vector<R>(n, ring_zero(tag)));
    for (int row = 0; row < db; ++row)
        for (int k = 0; k <= da; ++k)
            m[static_cast<std::size_t>(row)]
             [static_cast<std::size_t>(row + k)] =
                 f.coeff(static_cast<std::size_t>(da - k));
    for (int row = 0; row < da; ++row)
        for (int k = 0; k <= db; ++k)
            m[static_cast<std::size_t>(db + row)]
             [static_cast<std::size_t>(row + k)] =
                 g.coeff(static_cast<std::size_t>(db - k));
    return m;
}

template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
    return bareiss_determinant(sylvester_matrix(f, g));
}

// ---- integer-coefficient utilities (Sturm chains) ------------------------

using ZPoly = Poly<Int>;

inline Int zpoly_content(const ZPoly& p) {
    Int g = 0;
    for (const Int& c : p.coeffs()) g = igcd(g, c);
    return g;
}

inline ZPoly zpoly_scale_down(const ZPoly& p, const Int& g) {
    ZPoly r;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        r.set_coeff(k, iexact_div(p.coeff(k), g));
    return r;
}

inline ZPoly zpoly_primitive(const ZPoly& p) {
    if (p.is_zero()) return p;
    Int g = zpoly_content(p);
    if (isign(p.lead()) < 0) g = -g;
    return zpoly_scale_down(p, g);
}

// Pseudo-remainder scaled by a positive power so the result is sign-true:
// returns rem( lc(b)^{2k} * a, b ) for the least even 2k >= deg a - deg b + 1.
inline ZPoly zpoly_signed_prem(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("prem: zero divisor");
    ZPoly rem = a;
    const Int lc = b.lead();
    int steps = rem.degree() - b.degree() + 1;
    if (steps < 0) return rem;
    unsigned long e = static_cast<unsigned long>(steps);
    if (e % 2 == 1) ++e;  // even power keeps the sign of the remainder
    Int scale = ipow(lc, e);
    ZPoly scaled;
    for (std::size_t k = 0; k < rem.coeffs().size(); ++k)
        scaled.set_coeff(k, rem.coeff(k) * scale);
    rem = scaled;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift =
            static_cast<std::size_t>(rem.degree() - b.degree());
        // lc divides the scaled leading coefficient by construction
        Int qc = iexact_div(rem.lead(), lc);
        rem = rem - ZPoly::monomial(qc, shift) * b;
    }
    return rem;
}

inline ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    a = zpoly_primitive(a);
    b = zpoly_primitive(b);
    while (!b.is_zero()) {
        ZPoly r = zpoly_signed_prem(a, b);
        a = b;
        b = zpoly_primitive(r);
    }
    return zpoly_primitive(a);
}

inline int sign_at_pos_inf(const ZPoly& p) {
    return p.is_zero() ? 0 : isign(p.lead());
}
inline int sign_at_neg_inf(const ZPoly& p) {
    if (p.is_zero()) return 0;
    int s = isign(p.lead());
    return (p.degree() % 2 == 0) ? s : -s;
}

// Number of distinct real roots, by a Sturm chain on the squarefree part.
inline int count_real_roots(const ZPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    ZPoly g = zpoly_gcd(p, p.derivative());
    ZPoly sf = (g.degree() > 0) ? ring_exact_div(p, g) : p;
    std::vector<ZPoly> chain{sf, sf.derivative()};
    while (!chain.back().is_zero()) {
        ZPoly r = zpoly_signed_prem(chain[chain.size() - 2], chain.back());
        r = -r;
        if (!r.is_zero()) r = zpoly_scale_down(r, zpoly_content(r));
        chain.push_back(r);
    }
    chain.pop_back();
    auto variations = [&](auto sign_of) {
        int v = 0, prev = 0;
        for (const ZPoly& q : chain) {
            int s = sign_of(q);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(sign_at_neg_inf) - variations(sign_at_pos_inf);
}

inline Rat zpoly_eval(const ZPoly& p, const Rat& x) {
    Rat acc = 0;
    for (std::size_t k = p.coeffs().size(); k-- > 0;)
        acc = acc * x + Rat(p.coeff(k));
    return acc;
}

}  // namespace modmat
