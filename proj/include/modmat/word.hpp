#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "modmat/bigint.hpp"
#include "modmat/surd.hpp"

namespace modmat {

// Generators of the modular group action used throughout:
//   alpha: z -> z + 1        matrix [[1,1],[0,1]]
//   beta : z -> z / (z + 1)  matrix [[1,0],[1,1]]
enum class Letter : unsigned char { Alpha, Beta };

inline char letter_char(Letter l) { return l == Letter::Alpha ? 'a' : 'b'; }

struct Mat2 {
    Int a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {}; }
    static Mat2 generator(Letter l) {
        return l == Letter::Alpha ? Mat2{1, 1, 0, 1} : Mat2{1, 0, 1, 1};
    }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
    }
    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }
    bool operator==(const Mat2& o) const = default;

    ExtQuad apply(const ExtQuad& x) const { return mobius_apply(a, b, c, d, x); }
    double apply(double x) const {
        return (to_double(a) * x + to_double(b)) /
               (to_double(c) * x + to_double(d));
    }
};

enum class WordClass { Hyperbolic, Parabolic, Elliptic };

struct FixedPointPair {
    Quad x_minus;  // repelling end, < 0
    Quad x_plus;   // attracting end, > 0
};

// A nonempty word in {alpha, beta} together with its exact matrix.
// The rightmost letter acts first, so the matrix is the left-to-right
// product of generator matrices.
class Word {
  public:
    explicit Word(std::vector<Letter> letters)
        : letters_(std::move(letters)) {
        if (letters_.empty())
            throw std::invalid_argument("Word: empty letter sequence");
        mat_ = Mat2::identity();
        for (Letter l : letters_) mat_ = mat_ * Mat2::generator(l);
    }

    static Word parse(const std::string& s) {
        std::vector<Letter> ls;
        ls.reserve(s.size());
        for (char ch : s) {
            if (ch == 'a' || ch == 'A')
                ls.push_back(Letter::Alpha);
            else if (ch == 'b' || ch == 'B')
                ls.push_back(Letter::Beta);
            else
                throw std::invalid_argument("Word: letters must be a/b");
        }
        return Word(std::move(ls));
    }

    const std::vector<Letter>& letters() const { return letters_; }
    const Mat2& matrix() const { return mat_; }
    std::size_t size() const { return letters_.size(); }

    std::string str() const {
        std::string s;
        s.reserve(letters_.size());
        for (Letter l : letters_) s.push_back(letter_char(l));
        return s;
    }

    std::size_t alpha_count() const {
        return static_cast<std::size_t>(std::count(
            letters_.begin(), letters_.end(), Letter::Alpha));
    }

    bool mixed() const {
        std::size_t na = alpha_count();
        return na > 0 && na < letters_.size();
    }

    Int trace() const { return mat_.trace(); }

    WordClass classify() const {
        Int t = trace();
        if (t > 2) return WordClass::Hyperbolic;
        if (t == 2) return WordClass::Parabolic;
        return WordClass::Elliptic;
    }

    // Fixed points of the hyperbolic action: roots of c x^2 + (d-a) x - b.
    FixedPointPair fixed_points() const {
        if (!mixed())
            throw std::invalid_argument(
                "fixed_points: word must contain both letters");
        Int t = trace();
        Int disc = t * t - 4;
        Quad half_tr = Quad::make(mat_.a - mat_.d, 0, 1, 2 * mat_.c);
        Quad spread = Quad::make(0, 1, disc, 2 * mat_.c);
        return {half_tr - spread, half_tr + spread};
    }

    // Derivative at the repelling fixed point: lambda^2 for the larger
    // eigenvalue lambda = (t + sqrt(t^2-4))/2.
    Quad multiplier() const {
        if (classify() != WordClass::Hyperbolic)
            throw std::invalid_argument("multiplier: word not hyperbolic");
        Int t = trace();
        // lambda^2 = (t^2 - 2 + t sqrt(t^2-4)) / 2
        return Quad::make(t * t - 2, t, t * t - 4, 2);
    }

    Word rotated(std::size_t k) const {
        std::vector<Letter> ls(letters_.begin() + static_cast<long>(k),
                               letters_.end());
        ls.insert(ls.end(), letters_.begin(),
                  letters_.begin() + static_cast<long>(k));
        return Word(std::move(ls));
    }

    // Lexicographically least rotation with alpha < beta.
    Word canonical_rotation() const {
        std::string best = str();
        for (std::size_t k = 1; k < letters_.size(); ++k) {
            std::string cand = rotated(k).str();
            if (cand < best) best = cand;
        }
        return parse(best);
    }

    bool cyclically_equal(const Word& o) const {
        if (size() != o.size()) return false;
        return canonical_rotation().str() == o.canonical_rotation().str();
    }

    bool operator==(const Word& o) const { return letters_ == o.letters_; }

  private:
    std::vector<Letter> letters_;
    Mat2 mat_;
};

enum class CycleEnd { Minus, Plus };

// The length-q cycle of the chosen fixed point under the letters of w,
// rightmost letter applied first. The last application closes the cycle.
inline std::vector<ExtQuad> orbit_cycle(const Word& w, CycleEnd which) {
    if (!w.mixed())
        throw std::invalid_argument("orbit_cycle: word must be mixed");
    FixedPointPair fp = w.fixed_points();
    ExtQuad x((which == CycleEnd::Minus) ? fp.x_minus : fp.x_plus);
    std::vector<ExtQuad> cycle;
    cycle.reserve(w.size());
    cycle.push_back(x);
    const auto& ls = w.letters();
    for (std::size_t i = ls.size(); i-- > 1;) {
        x = Mat2::generator(ls[i]).apply(x);
        cycle.push_back(x);
    }
    return cycle;
}

inline Word swap_reverse(const Word& w) {
    std::vector<Letter> ls(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : ls)
        l = (l == Letter::Alpha) ? Letter::Beta : Letter::Alpha;
    return Word(std::move(ls));
}

}  // namespace modmat
