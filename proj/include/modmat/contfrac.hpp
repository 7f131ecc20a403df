#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "modmat/bigint.hpp"
#include "modmat/surd.hpp"
#include "modmat/word.hpp"

namespace modmat {

// Continued fraction [a0; a1, a2, ...], finitely many terms plus an
// optional repeating block. Finite <=> rational, periodic <=> quadratic
// irrational. Finite expansions are normalised so the last entry is
// >= 2, except for the single-term [1].
struct ContinuedFraction {
    std::vector<std::int64_t> pre;     // a0, a1, ..., ak
    std::vector<std::int64_t> period;  // empty for rationals
    bool truncated_at_infinity = false;  // an interior run was infinite

    bool finite() const { return period.empty(); }

    void validate() const {
        if (pre.empty() && period.empty())
            throw std::invalid_argument("ContinuedFraction: empty");
        if (!pre.empty() && pre[0] < 0)
            throw std::invalid_argument("ContinuedFraction: a0 < 0");
        for (std::size_t i = 1; i < pre.size(); ++i)
            if (pre[i] < 1)
                throw std::invalid_argument("ContinuedFraction: a_i < 1");
        for (auto v : period)
            if (v < 1)
                throw std::invalid_argument("ContinuedFraction: period < 1");
    }

    void normalize_tail() {
        if (!finite()) return;
        if (pre.size() >= 2 && pre.back() == 1) {
            pre.pop_back();
            pre.back() += 1;
        }
    }

    void reduce_period() {
        for (std::size_t len = 1; len <= period.size() / 2; ++len) {
            if (period.size() % len) continue;
            bool rep = true;
            for (std::size_t i = len; i < period.size() && rep; ++i)
                rep = (period[i] == period[i % len]);
            if (rep) {
                period.resize(len);
                return;
            }
        }
    }

    static ContinuedFraction of_rational(Rat x) {
        if (x <= 0)
            throw std::invalid_argument("of_rational: need x > 0");
        ContinuedFraction cf;
        Int n = x.get_num(), d = x.get_den();
        while (d != 0) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(),
                        d.get_mpz_t());
            cf.pre.push_back(q.get_si());
            n = d;
            d = r;
        }
        cf.normalize_tail();
        return cf;
    }

    // e.g. "1;2,3", "0;1,(2,1)", "(1,2)" for a purely periodic expansion
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < pre.size(); ++i) {
            s += std::to_string(pre[i]);
            s += (i == 0) ? ";" : ",";
        }
        if (!period.empty()) {
            s += "(";
            for (std::size_t i = 0; i < period.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(period[i]);
            }
            s += ")";
        } else if (!s.empty() && (s.back() == ';' || s.back() == ',')) {
            s.pop_back();
        }
        return s;
    }
};

inline Mat2 cf_step_matrix(std::int64_t a) {
    return Mat2{Int(a), 1, 1, 0};
}

// Exact value of a continued fraction: rational for finite expansions,
// the attracting fixed point of the period's Moebius matrix otherwise.
inline Quad eval_cf(const ContinuedFraction& cf) {
    cf.validate();
    if (cf.finite()) {
        Mat2 m = Mat2::identity();
        for (auto a : cf.pre) m = m * cf_step_matrix(a);
        // value = m(infinity) = m.a / m.c
        return Quad::make(m.a, 0, 1, m.c);
    }
    Mat2 per = Mat2::identity();
    for (auto a : cf.period) per = per * cf_step_matrix(a);
    // positive root of c y^2 + (d - a) y - b = 0. Step matrices have
    // determinant -1, so the discriminant is t^2 - 4 det(M); b, c > 0
    // makes the roots straddle zero and the CF converges to the + one.
    Int t = per.trace();
    Quad y = Quad::make(per.a - per.d, 1, t * t - 4 * per.det(), 2 * per.c);
    ExtQuad v(y);
    for (std::size_t i = cf.pre.size(); i-- > 0;)
        v = cf_step_matrix(cf.pre[i]).apply(v);
    return v.finite();
}

// Binary angle in (0, 1): an exact rational together with its canonical
// binary digit decomposition (terminating form for dyadics, primitive
// period otherwise).
class BinaryAngle {
  public:
    explicit BinaryAngle(Rat value) : value_(std::move(value)) {
        if (value_ <= 0 || value_ >= 1)
            throw std::invalid_argument("BinaryAngle: need 0 < x < 1");
        value_.canonicalize();
        decompose();
    }

    static BinaryAngle from_bits(const std::vector<int>& pre,
                                 const std::vector<int>& period) {
        // value = (P (2^L - 1) + R) / (2^k (2^L - 1)), L = |period|
        Int P = 0, R = 0;
        for (int b : pre) P = 2 * P + b;
        for (int b : period) R = 2 * R + b;
        Int twoL = ipow(2, static_cast<unsigned long>(period.size()));
        Int twoK = ipow(2, static_cast<unsigned long>(pre.size()));
        Rat v;
        if (period.empty())
            v = Rat(P) / Rat(twoK);
        else
            v = Rat(P * (twoL - 1) + R) / Rat(twoK * (twoL - 1));
        return BinaryAngle(v);
    }

    const Rat& value() const { return value_; }
    const std::vector<int>& pre_bits() const { return pre_; }
    const std::vector<int>& period_bits() const { return period_; }
    bool dyadic() const { return period_.empty(); }

    // e.g. "0.1", "0.(011)", "0.01(10)"
    std::string str() const {
        std::string s = "0.";
        for (int b : pre_) s += char('0' + b);
        if (!period_.empty()) {
            s += "(";
            for (int b : period_) s += char('0' + b);
            s += ")";
        }
        return s;
    }

  private:
    void decompose() {
        pre_.clear();
        period_.clear();
        Int den = value_.get_den();
        unsigned long k = 0;
        while (idivisible(den, 2)) {
            den = iexact_div(den, 2);
            ++k;
        }
        // digits: x * 2^k has odd denominator `den`; preperiod length k
        Rat x = value_;
        for (unsigned long i = 0; i < k; ++i) {
            x *= 2;
            int bit = (x >= 1) ? 1 : 0;
            pre_.push_back(bit);
            if (bit) x -= 1;
        }
        if (den == 1) {
            // dyadic: terminating form (x is now 0)
            return;
        }
        // period length = multiplicative order of 2 mod den
        unsigned long L = 1;
        Int pw = 2 % den;
        while (pw != 1) {
            pw = (pw * 2) % den;
            ++L;
        }
        for (unsigned long i = 0; i < L; ++i) {
            x *= 2;
            int bit = (x >= 1) ? 1 : 0;
            period_.push_back(bit);
            if (bit) x -= 1;
        }
    }

    Rat value_;
    std::vector<int> pre_;
    std::vector<int> period_;
};

// Minkowski question mark (the (0,infinity) -> (0,1) variant): a0 ones,
// then a1 zeros, then a2 ones, ... For finite expansions the value is
// the common limit of the two one-sided digit codings, a dyadic.
inline BinaryAngle question_mark(const ContinuedFraction& input) {
    input.validate();
    ContinuedFraction cf = input;
    if (cf.pre.empty())  // purely periodic: [(P)] = [P; (P)]
        cf.pre.assign(cf.period.begin(), cf.period.end());
    if (cf.finite()) {
        Rat v(0);
        Rat place(1);  // 2^{-position}
        int digit = 1;
        std::size_t total = 0;
        for (std::size_t i = 0; i < cf.pre.size(); ++i) {
            for (std::int64_t k = 0; k < cf.pre[i]; ++k) {
                place /= 2;
                ++total;
                if (digit) v += place;
            }
            digit ^= 1;
        }
        // trailing run of the opposite digit: zeros contribute nothing,
        // ones round the value up by one ulp at the last position
        if (digit == 1) v += place;
        return BinaryAngle(v);
    }
    // eventually periodic: expand preperiod runs, then one or two passes
    // of the period depending on digit parity
    std::vector<int> pre_bits, per_bits;
    int digit = 1;
    for (std::size_t i = 0; i < cf.pre.size(); ++i) {
        for (std::int64_t k = 0; k < cf.pre[i]; ++k) pre_bits.push_back(digit);
        digit ^= 1;
    }
    int passes = (cf.period.size() % 2 == 0) ? 1 : 2;
    for (int p = 0; p < passes; ++p)
        for (std::size_t i = 0; i < cf.period.size(); ++i) {
            for (std::int64_t k = 0; k < cf.period[i]; ++k)
                per_bits.push_back(digit);
            digit ^= 1;
        }
    return BinaryAngle::from_bits(pre_bits, per_bits);
}

// Inverse question mark: run-length decode the binary expansion back to
// a continued fraction. Dyadic angles give finite expansions, all other
// rationals give eventually periodic ones.
inline ContinuedFraction question_mark_inverse(const BinaryAngle& angle) {
    ContinuedFraction cf;
    const auto& pre = angle.pre_bits();
    const auto& per = angle.period_bits();
    if (angle.dyadic()) {
        std::size_t i = 0;
        while (i < pre.size()) {
            std::size_t j = i;
            while (j < pre.size() && pre[j] == pre[i]) ++j;
            cf.pre.push_back(static_cast<std::int64_t>(j - i));
            i = j;
        }
        if (!pre.empty() && pre[0] == 0) {
            // leading run of zeros means a0 = 0
            cf.pre.insert(cf.pre.begin(), 0);
        }
        cf.normalize_tail();
        cf.validate();
        return cf;
    }
    // Lazy digit stream: pre bits then per bits cyclically. Runs that
    // start at the same period offset repeat forever, which splits the
    // run sequence into preperiod + period.
    auto digit_at = [&](std::size_t pos) -> int {
        if (pos < pre.size()) return pre[pos];
        return per[(pos - pre.size()) % per.size()];
    };
    std::vector<std::int64_t> runs;
    std::map<std::size_t, std::size_t> seen;  // period offset -> run index
    std::size_t pos = 0;
    std::size_t cycle_start = 0;
    if (digit_at(0) == 0) runs.push_back(0);  // a0 = 0 when x < 1/2 region
    while (true) {
        if (pos >= pre.size()) {
            std::size_t off = (pos - pre.size()) % per.size();
            auto it = seen.find(off);
            if (it != seen.end()) {
                cycle_start = it->second;
                break;
            }
            seen.emplace(off, runs.size());
        }
        int d = digit_at(pos);
        std::size_t j = pos;
        while (digit_at(j) == d) ++j;  // period has both digits, terminates
        runs.push_back(static_cast<std::int64_t>(j - pos));
        pos = j;
    }
    cf.pre.assign(runs.begin(), runs.begin() + static_cast<long>(cycle_start));
    cf.period.assign(runs.begin() + static_cast<long>(cycle_start),
                     runs.end());
    cf.reduce_period();
    cf.validate();
    return cf;
}

}  // namespace modmat
