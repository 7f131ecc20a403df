#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modmat {

// Arbitrary-precision integers and rationals. Matrix traces, surd
// normalisation and the resultant chain all overflow fixed width fast,
// so everything exact routes through these.
using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int igcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact quotient; throws if b does not divide a.
inline Int iexact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("iexact_div: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::invalid_argument("iexact_div: not divisible");
    return q;
}

inline bool idivisible(const Int& a, const Int& b) {
    if (b == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline int isign(const Int& a) { return sgn(a); }

// Splits n >= 1 as s^2 * f with f squarefree; returns {s, f}.
// Trial division only: every D we meet is trace^2-4 of a word matrix,
// well inside 64-bit range, so this is cheap.
inline std::pair<Int, Int> square_part(const Int& n) {
    if (n <= 0) throw std::invalid_argument("square_part: need n >= 1");
    Int f = n, s = 1;
    for (Int p = 2; p * p <= f; ++p) {
        while (idivisible(f, p * p)) {
            f = iexact_div(f, p * p);
            s *= p;
        }
        // skip even candidates after 2
        if (p > 2) ++p;
    }
    return {s, f};
}

inline double to_double(const Int& a) { return a.get_d(); }
inline double to_double(const Rat& a) { return a.get_d(); }

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace modmat
