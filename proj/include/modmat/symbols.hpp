#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "modmat/contfrac.hpp"
#include "modmat/surd.hpp"
#include "modmat/word.hpp"

namespace modmat {

// Eventually periodic bi-infinite sequence ... g2 g1 g0 . g-1 g-2 ...
// in the letters alpha/beta. Both halves are stored reading OUTWARD
// from the marker: the left half is left_pre then left_period repeated
// (so left_pre[0] is g0), the right half right_pre then right_period.
struct SymbolSequence {
    std::vector<Letter> left_period, left_pre, right_pre, right_period;

    void validate() const {
        if (left_period.empty() || right_period.empty())
            throw std::invalid_argument(
                "SymbolSequence: periods must be nonempty");
    }

    Letter left_at(std::size_t pos) const {
        if (pos < left_pre.size()) return left_pre[pos];
        return left_period[(pos - left_pre.size()) % left_period.size()];
    }
    Letter right_at(std::size_t pos) const {
        if (pos < right_pre.size()) return right_pre[pos];
        return right_period[(pos - right_pre.size()) % right_period.size()];
    }

    // ... W W W . W W W ...
    static SymbolSequence from_word(const Word& w) {
        SymbolSequence s;
        s.right_period = w.letters();
        s.left_period.assign(w.letters().rbegin(), w.letters().rend());
        return s;
    }

    // Absorb pre letters that already agree with the adjacent period
    // phase, so structurally distinct spellings of one sequence collapse.
    void normalize() {
        auto absorb = [](std::vector<Letter>& pre, std::vector<Letter>& per) {
            while (!pre.empty() && pre.back() == per.back()) {
                per.insert(per.begin(), per.back());
                per.pop_back();
                pre.pop_back();
            }
        };
        absorb(right_pre, right_period);
        absorb(left_pre, left_period);
    }

    // Marker moved one place to the left, past g0.
    SymbolSequence shifted() const {
        validate();
        SymbolSequence s = *this;
        Letter g0 = s.left_at(0);
        if (!s.left_pre.empty()) {
            s.left_pre.erase(s.left_pre.begin());
        } else {
            std::vector<Letter>& p = s.left_period;
            p.push_back(p.front());
            p.erase(p.begin());
        }
        s.right_pre.insert(s.right_pre.begin(), g0);
        s.normalize();
        return s;
    }

    Letter g0() const { return left_at(0); }

    bool operator==(const SymbolSequence& o) const = default;
};

struct HalfRuns {
    ContinuedFraction cf;      // run lengths [m0; m1, m2, ...]
    bool all_alpha = false;    // m0 infinite
    bool all_beta = false;     // m0 = 0, m1 infinite
    bool truncated = false;    // interior infinite run, cf cut there
};

namespace detail {

inline bool constant_letters(const std::vector<Letter>& v, Letter l) {
    for (Letter x : v)
        if (x != l) return false;
    return true;
}

// Run-length decomposition of pre + period^infinity, alternating
// alpha-run, beta-run, ... starting with the (possibly empty) alpha run.
inline HalfRuns half_runs(const std::vector<Letter>& pre,
                          const std::vector<Letter>& period) {
    HalfRuns out;
    Letter tail = period.front();
    if (constant_letters(period, tail)) {
        // eventually constant stream
        std::size_t cut = pre.size();
        while (cut > 0 && pre[cut - 1] == tail) --cut;
        std::vector<Letter> head(pre.begin(),
                                 pre.begin() + static_cast<long>(cut));
        if (head.empty()) {
            if (tail == Letter::Alpha)
                out.all_alpha = true;
            else
                out.all_beta = true;
            return out;
        }
        // finite runs of head, then an infinite run of `tail` which the
        // expansion is truncated at
        Letter expect = Letter::Alpha;
        std::size_t i = 0;
        while (i < head.size()) {
            std::size_t j = i;
            while (j < head.size() && head[j] == head[i]) ++j;
            if (head[i] != expect) out.cf.pre.push_back(0);
            out.cf.pre.push_back(static_cast<std::int64_t>(j - i));
            expect = (head[j - 1] == Letter::Alpha) ? Letter::Beta
                                                    : Letter::Alpha;
            i = j;
        }
        out.truncated = true;
        out.cf.truncated_at_infinity = true;
        out.cf.normalize_tail();
        return out;
    }
    // genuinely mixed period: lazy stream with cycle detection on the
    // period offset of each run start
    auto at = [&](std::size_t pos) -> Letter {
        if (pos < pre.size()) return pre[pos];
        return period[(pos - pre.size()) % period.size()];
    };
    std::vector<std::int64_t> runs;
    if (at(0) == Letter::Beta) runs.push_back(0);  // empty leading alpha run
    std::map<std::size_t, std::size_t> seen;
    std::size_t pos = 0, cycle_start = 0;
    while (true) {
        if (pos >= pre.size()) {
            std::size_t off = (pos - pre.size()) % period.size();
            auto it = seen.find(off);
            if (it != seen.end()) {
                cycle_start = it->second;
                break;
            }
            seen.emplace(off, runs.size());
        }
        Letter d = at(pos);
        std::size_t j = pos;
        while (at(j) == d) ++j;
        runs.push_back(static_cast<std::int64_t>(j - pos));
        pos = j;
    }
    out.cf.pre.assign(runs.begin(),
                      runs.begin() + static_cast<long>(cycle_start));
    out.cf.period.assign(runs.begin() + static_cast<long>(cycle_start),
                         runs.end());
    return out;
}

}  // namespace detail

struct Endpoints {
    ExtQuad x_minus, x_plus;
    bool truncated_minus = false, truncated_plus = false;
};

// x-(S) = -[m0; m1, ...] and x+(S) = [n0; n1, ...] with the degenerate
// conventions: an all-alpha half gives the infinity on its side, an
// all-beta half gives 0.
inline Endpoints endpoints(const SymbolSequence& s) {
    s.validate();
    Endpoints e;
    HalfRuns left = detail::half_runs(s.left_pre, s.left_period);
    HalfRuns right = detail::half_runs(s.right_pre, s.right_period);
    if (left.all_alpha)
        e.x_minus = ExtQuad::neg_inf();
    else if (left.all_beta)
        e.x_minus = ExtQuad(Quad(0));
    else {
        e.x_minus = ExtQuad(-eval_cf(left.cf));
        e.truncated_minus = left.truncated;
    }
    if (right.all_alpha)
        e.x_plus = ExtQuad::pos_inf();
    else if (right.all_beta)
        e.x_plus = ExtQuad(Quad(0));
    else {
        e.x_plus = ExtQuad(eval_cf(right.cf));
        e.truncated_plus = right.truncated;
    }
    return e;
}

using Cx = std::complex<double>;

inline Cx apply_letter_inverse(Letter l, Cx z) {
    if (l == Letter::Alpha) return z - 1.0;  // alpha^-1
    return z / (1.0 - z);                    // beta^-1
}

inline Cx apply_letter(Letter l, Cx z) {
    if (l == Letter::Alpha) return z + 1.0;
    return z / (z + 1.0);
}

// G_n(z0) = g0^-1 g1^-1 ... gn^-1 (z0); converges to x-(S) as n grows.
inline Cx ifs_limit(const SymbolSequence& s, std::size_t n, Cx z0) {
    s.validate();
    Cx z = z0;
    for (std::size_t k = n + 1; k-- > 0;)
        z = apply_letter_inverse(s.left_at(k), z);
    return z;
}

// G_{-n}(z0) = g_{-1} g_{-2} ... g_{-n} (z0); converges to x+(S).
inline Cx ifs_limit_plus(const SymbolSequence& s, std::size_t n, Cx z0) {
    s.validate();
    Cx z = z0;
    for (std::size_t k = n; k-- > 0;) z = apply_letter(s.right_at(k), z);
    return z;
}

}  // namespace modmat
