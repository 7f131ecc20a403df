#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "modmat/bigint.hpp"

namespace modmat {

// Exact real quadratic surd (p + q*sqrt(d)) / r.
//
// Normal form: d squarefree >= 1, r > 0, gcd(p, q, r) = 1, and q = 0
// implies d = 1. Every fixed point of an integer Moebius map is of this
// shape, so equality is decidable field-by-field.
class Quad {
  public:
    Quad() : p_(0), q_(0), d_(1), r_(1) {}
    Quad(const Int& integer) : p_(integer), q_(0), d_(1), r_(1) {}
    Quad(long integer) : p_(integer), q_(0), d_(1), r_(1) {}
    template <class E>  // unevaluated gmp integer expressions
    Quad(const __gmp_expr<mpz_t, E>& e) : p_(e), q_(0), d_(1), r_(1) {}
    explicit Quad(const Rat& x)
        : p_(x.get_num()), q_(0), d_(1), r_(x.get_den()) {}

    static Quad make(Int p, Int q, Int d, Int r) {
        Quad s;
        s.p_ = std::move(p);
        s.q_ = std::move(q);
        s.d_ = std::move(d);
        s.r_ = std::move(r);
        s.normalize();
        return s;
    }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }
    const Int& r() const { return r_; }

    bool is_rational() const { return q_ == 0; }

    Rat rational() const {
        if (!is_rational()) throw std::logic_error("Quad: not rational");
        return Rat(p_) / Rat(r_);
    }

    int sign() const {
        if (q_ == 0) return isign(p_);
        if (p_ == 0) return isign(q_);
        if (isign(p_) == isign(q_)) return isign(p_);
        // p and q pull in opposite directions: compare p^2 with q^2 d.
        Int lhs = p_ * p_, rhs = q_ * q_ * d_;
        if (lhs == rhs) return 0;  // cannot happen for d squarefree > 1
        return (lhs > rhs) ? isign(p_) : isign(q_);
    }

    Quad operator-() const { return make(-p_, -q_, d_, r_); }

    friend Quad operator+(const Quad& a, const Quad& b) {
        Int d = merge_d(a, b);
        return make(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, d,
                    a.r_ * b.r_);
    }
    friend Quad operator-(const Quad& a, const Quad& b) { return a + (-b); }

    friend Quad operator*(const Quad& a, const Quad& b) {
        Int d = merge_d(a, b);
        return make(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_,
                    d, a.r_ * b.r_);
    }

    Quad inverse() const {
        Int n = p_ * p_ - q_ * q_ * d_;
        if (n == 0) throw std::domain_error("Quad: inverse of zero");
        // 1/x = r (p - q sqrt(d)) / (p^2 - q^2 d)
        return make(r_ * p_, -r_ * q_, d_, n);
    }

    friend Quad operator/(const Quad& a, const Quad& b) {
        return a * b.inverse();
    }

    bool operator==(const Quad& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_;
    }
    bool operator!=(const Quad& o) const { return !(*this == o); }

    // Exact three-way comparison; unlike the field operations this also
    // works across different radicands (compare a + b sqrt(m) with
    // c sqrt(n) by signs, then by squares).
    static int cmp(const Quad& x, const Quad& y) {
        if (x.q_ == 0 || y.q_ == 0 || x.d_ == y.d_) return (x - y).sign();
        Int a = x.p_ * y.r_ - y.p_ * x.r_;
        Int b = x.q_ * y.r_;
        Int c = y.q_ * x.r_;
        Quad u = Quad::make(a, b, x.d_, 1);  // u - c sqrt(D2) decides
        int su = u.sign(), sv = isign(c);
        if (su != sv) {
            if (su == 0) return -sv;
            if (sv == 0) return su;
            return su;
        }
        if (su == 0) return 0;
        Quad diff = u * u - Quad(c * c * y.d_);
        return su * diff.sign();
    }

    bool operator<(const Quad& o) const { return cmp(*this, o) < 0; }
    bool operator>(const Quad& o) const { return cmp(*this, o) > 0; }
    bool operator<=(const Quad& o) const { return cmp(*this, o) <= 0; }
    bool operator>=(const Quad& o) const { return cmp(*this, o) >= 0; }

    double value() const {
        double num = to_double(p_) + to_double(q_) * std::sqrt(to_double(d_));
        return num / to_double(r_);
    }

    // Exact rendering, e.g. "(1-1*sqrt(3))/1"; plain "p/r" when rational.
    std::string exact_string() const {
        if (q_ == 0) return to_string(p_) + "/" + to_string(r_);
        std::string s = "(" + to_string(p_);
        s += (q_ < 0) ? "-" : "+";
        Int aq = abs(q_);
        s += to_string(aq) + "*sqrt(" + to_string(d_) + "))/" + to_string(r_);
        return s;
    }

    std::string decimal_string() const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", value());
        return buf;
    }

  private:
    static Int merge_d(const Quad& a, const Quad& b) {
        if (a.q_ == 0) return b.d_;
        if (b.q_ == 0) return a.d_;
        if (a.d_ != b.d_)
            throw std::invalid_argument("Quad: incompatible radicands");
        return a.d_;
    }

    void normalize() {
        if (r_ == 0) throw std::invalid_argument("Quad: zero denominator");
        if (d_ <= 0) throw std::invalid_argument("Quad: radicand must be >= 1");
        if (q_ != 0) {
            auto [s, f] = square_part(d_);
            q_ *= s;
            d_ = f;
            if (d_ == 1) {
                p_ += q_;
                q_ = 0;
            }
        }
        if (q_ == 0) d_ = 1;
        if (r_ < 0) {
            r_ = -r_;
            p_ = -p_;
            q_ = -q_;
        }
        Int g = igcd(igcd(p_, q_), r_);
        if (g > 1) {
            p_ = iexact_div(p_, g);
            q_ = iexact_div(q_, g);
            r_ = iexact_div(r_, g);
        }
    }

    Int p_, q_, d_, r_;
};

// Real projective line value: a surd, +infinity or -infinity.
class ExtQuad {
  public:
    enum class Kind { Finite, PosInf, NegInf };

    ExtQuad() : kind_(Kind::Finite) {}
    ExtQuad(Quad v) : kind_(Kind::Finite), v_(std::move(v)) {}
    static ExtQuad pos_inf() { return ExtQuad(Kind::PosInf); }
    static ExtQuad neg_inf() { return ExtQuad(Kind::NegInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    const Quad& finite() const {
        if (!is_finite()) throw std::logic_error("ExtQuad: infinite");
        return v_;
    }

    bool operator==(const ExtQuad& o) const {
        if (kind_ != o.kind_) return false;
        return kind_ != Kind::Finite || v_ == o.v_;
    }
    bool operator!=(const ExtQuad& o) const { return !(*this == o); }

    // Equality on the projective circle (both infinities identified).
    bool projectively_equal(const ExtQuad& o) const {
        if (!is_finite() && !o.is_finite()) return true;
        return *this == o;
    }

    double value() const {
        if (is_pos_inf()) return std::numeric_limits<double>::infinity();
        if (is_neg_inf()) return -std::numeric_limits<double>::infinity();
        return v_.value();
    }

    std::string exact_string() const {
        if (is_pos_inf()) return "inf";
        if (is_neg_inf()) return "-inf";
        return v_.exact_string();
    }

  private:
    explicit ExtQuad(Kind k) : kind_(k) {}
    Kind kind_;
    Quad v_;
};

// (a x + b) / (c x + d) applied exactly; poles land on the appropriate
// signed infinity, infinities map to a/c.
inline ExtQuad mobius_apply(const Int& a, const Int& b, const Int& c,
                            const Int& d, const ExtQuad& x) {
    if (!x.is_finite()) {
        if (c != 0) return ExtQuad(Quad::make(a, 0, 1, c));
        // c = 0: a/d * x, sign of the infinity follows sign of a*d
        int s = isign(a) * isign(d);
        if (s == 0) throw std::domain_error("mobius_apply: degenerate map");
        bool pos = x.is_pos_inf() ? (s > 0) : (s < 0);
        return pos ? ExtQuad::pos_inf() : ExtQuad::neg_inf();
    }
    const Quad& v = x.finite();
    Quad num = Quad(a) * v + Quad(b);
    Quad den = Quad(c) * v + Quad(d);
    if (den.sign() == 0) {
        int s = num.sign();
        if (s == 0) throw std::domain_error("mobius_apply: 0/0");
        return s > 0 ? ExtQuad::pos_inf() : ExtQuad::neg_inf();
    }
    return ExtQuad(num / den);
}

}  // namespace modmat
