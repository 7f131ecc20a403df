#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modmat/bigint.hpp"
#include "modmat/symbols.hpp"
#include "modmat/word.hpp"

namespace modmat {

// Rotation number p/q in lowest terms, 0 < p/q < 1. Combinatorially the
// frequency of alpha in the associated mechanical words.
struct RotationNumber {
    std::int64_t p, q;

    RotationNumber(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
        if (p <= 0 || q <= 0 || p >= q)
            throw std::invalid_argument("RotationNumber: need 0 < p/q < 1");
        if (std::gcd(p, q) != 1)
            throw std::invalid_argument("RotationNumber: p, q not coprime");
    }

    RotationNumber complement() const { return {q - p, q}; }
};

struct SturmianBlock {
    Word word;
    RotationNumber rotation;
};

namespace detail {

// Staircase coding of the line of slope p/q: letter k is alpha exactly
// when the line crosses an integer height over [k, k+1]. This phase is
// the lower Christoffel word (starts beta, ends alpha).
inline std::vector<Letter> staircase(const RotationNumber& rot) {
    std::vector<Letter> ls;
    ls.reserve(static_cast<std::size_t>(rot.q));
    for (std::int64_t k = 0; k < rot.q; ++k) {
        bool alpha = ((k + 1) * rot.p) / rot.q > (k * rot.p) / rot.q;
        ls.push_back(alpha ? Letter::Alpha : Letter::Beta);
    }
    return ls;
}

// Ceiling-staircase phase: the lattice-point crossings resolved to the
// other side (starts alpha, ends beta).
inline std::vector<Letter> staircase_upper_phase(const RotationNumber& rot) {
    std::vector<Letter> ls;
    ls.reserve(static_cast<std::size_t>(rot.q));
    auto ceil_div = [](std::int64_t a, std::int64_t b) {
        return (a + b - 1) / b;
    };
    for (std::int64_t k = 0; k < rot.q; ++k) {
        bool alpha =
            ceil_div((k + 1) * rot.p, rot.q) > ceil_div(k * rot.p, rot.q);
        ls.push_back(alpha ? Letter::Alpha : Letter::Beta);
    }
    return ls;
}

}  // namespace detail

// The unique (up to rotation) balanced word of length q with p alphas,
// returned as the lexicographically least rotation with alpha < beta.
inline SturmianBlock t_word(const RotationNumber& rot) {
    Word w(detail::staircase(rot));
    return {w.canonical_rotation(), rot};
}

// Balanced-word test: alpha counts over equal-length cyclic windows may
// differ by at most 1.
inline bool is_sturmian(const Word& w) {
    const auto& ls = w.letters();
    std::size_t q = ls.size();
    for (std::size_t n = 1; n < q; ++n) {
        std::size_t mn = n + 1, mx = 0;
        for (std::size_t start = 0; start < q; ++start) {
            std::size_t cnt = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (ls[(start + j) % q] == Letter::Alpha) ++cnt;
            mn = std::min(mn, cnt);
            mx = std::max(mx, cnt);
        }
        if (mx - mn > 1) return false;
    }
    return true;
}

// The two non-periodic bi-infinite Sturmian sequences of rotation p/q.
// They code the line of slope p/q through a lattice point, cut there
// and translated infinitesimally to opposite sides: the two splicings
// of the ceiling phase with the floor phase, one cell at the junction
// losing or gaining the lattice crossing. Both halves are repeated
// T_{p/q} blocks; only the junction breaks the period.
inline std::pair<SymbolSequence, SymbolSequence> non_periodic_pair(
    const RotationNumber& rot) {
    std::size_t q = static_cast<std::size_t>(rot.q);
    // floor phase = lattice crossings resolved rightwards, ceil phase =
    // resolved leftwards; cell k of either phase is periodic mod q
    std::vector<Letter> floor_phase = detail::staircase(rot);
    std::vector<Letter> ceil_phase = detail::staircase_upper_phase(rot);

    // the marker sits between mechanical cells -1 and 0; left halves
    // read outward as cells -1, -2, ...
    SymbolSequence shorter;  // junction cell -1 gains the crossing
    shorter.left_pre.push_back(Letter::Alpha);
    for (std::size_t k = q - 1; k-- > 0;)
        shorter.left_pre.push_back(ceil_phase[k]);  // cells -2 .. -q
    shorter.left_period.assign(ceil_phase.rbegin(), ceil_phase.rend());
    shorter.right_period = floor_phase;

    SymbolSequence longer;  // junction cell 0 loses the crossing
    longer.left_period.assign(floor_phase.rbegin(), floor_phase.rend());
    longer.right_pre.push_back(Letter::Beta);
    for (std::size_t k = 1; k < q; ++k)
        longer.right_pre.push_back(ceil_phase[k]);
    longer.right_period = ceil_phase;

    shorter.normalize();
    longer.normalize();
    return {shorter, longer};
}

// Combinatorial rotation number of a balanced block: the frequency of
// alpha, reduced. This is the quantity attached to a repelling fixed
// point through the itinerary of a geodesic landing there.
inline RotationNumber rotation_number_of(const Word& w) {
    if (!w.mixed() || !is_sturmian(w))
        throw std::invalid_argument(
            "rotation_number_of: word is not a balanced block");
    std::int64_t p = static_cast<std::int64_t>(w.alpha_count());
    std::int64_t q = static_cast<std::int64_t>(w.size());
    std::int64_t g = std::gcd(p, q);
    return {p / g, q / g};
}

// Multiplier bounds for T_{p/q}: both are exact integer powers, so they
// are returned as big integers.
inline std::pair<Int, Int> multiplier_bounds(const RotationNumber& rot) {
    std::int64_t p = rot.p, q = rot.q;
    if (2 * p > q) p = q - p;
    std::int64_t lo = q / p;                  // floor
    std::int64_t hi = (q + p - 1) / p;        // ceil
    unsigned long e = 2 * static_cast<unsigned long>(p);
    return {ipow(Int(lo), e), ipow(Int(hi + 1), e)};
}

struct BlockStructure {
    std::int64_t r = 0;            // floor(q / minority count)
    std::int64_t s = 0;            // number of blocks
    std::vector<std::int64_t> kinds;  // majority-run length per block
    Letter majority = Letter::Beta;
};

// Decomposition of a Sturmian block into s blocks of the form
// M^{r-1} m / M^r m (majority runs split by single minority letters).
inline BlockStructure block_structure(const SturmianBlock& blk) {
    const Word& w = blk.word;
    if (!w.mixed() || !is_sturmian(w))
        throw std::invalid_argument("block_structure: not a Sturmian block");
    std::int64_t q = static_cast<std::int64_t>(w.size());
    std::int64_t na = static_cast<std::int64_t>(w.alpha_count());
    Letter minority = (2 * na <= q) ? Letter::Alpha : Letter::Beta;
    std::int64_t nmin = (minority == Letter::Alpha) ? na : q - na;

    BlockStructure out;
    out.majority = (minority == Letter::Alpha) ? Letter::Beta : Letter::Alpha;
    out.r = q / nmin;
    out.s = nmin;

    // rotate so the word ends with a minority letter, then cut after each
    const auto& ls = w.letters();
    std::size_t last = 0;
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i] == minority) last = i;
    std::vector<Letter> rot;
    for (std::size_t i = 1; i <= ls.size(); ++i)
        rot.push_back(ls[(last + i) % ls.size()]);

    std::int64_t run = 0;
    for (Letter l : rot) {
        if (l == minority) {
            if (run != out.r && run != out.r - 1)
                throw std::invalid_argument(
                    "block_structure: decomposition failure");
            out.kinds.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    return out;
}

}  // namespace modmat
