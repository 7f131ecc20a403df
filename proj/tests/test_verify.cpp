#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>

#include "modmat/verify.hpp"

using namespace modmat;

namespace {

std::uint64_t test_seed() {
    if (const char* s = std::getenv("MM_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 88;
}

// Numeric 8x8 determinant for the floating cross-check.
double det8(std::array<std::array<double, 8>, 8> m) {
    double det = 1.0;
    for (int k = 0; k < 8; ++k) {
        int piv = k;
        for (int i = k + 1; i < 8; ++i)
            if (std::abs(m[i][k]) > std::abs(m[piv][k])) piv = i;
        if (m[piv][k] == 0.0) return 0.0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int i = k + 1; i < 8; ++i) {
            double f = m[i][k] / m[k][k];
            for (int j = k; j < 8; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

double rs_eval(const Rs& c, double d) {
    auto horner = [&](const Zd& z) {
        double acc = 0.0;
        for (int k = z.degree(); k >= 0; --k)
            acc = acc * d + to_double(z.coeff(static_cast<std::size_t>(k)));
        return acc;
    };
    return horner(c.a) + horner(c.b) * std::sqrt(3.0);
}

double rsu_eval(const RsU& p, double u, double d) {
    double acc = 0.0;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * u + rs_eval(p.coeff(static_cast<std::size_t>(k)), d);
    return acc;
}

}  // namespace

TEST_CASE("lifted circle matches its closed form") {
    CHECK(lifted_circle() == lifted_circle_closed_form());
}

TEST_CASE("conjugating d mirrors the curve in V") {
    // Eq with d -> -d equals Eq with V -> -V
    PolyVU eq = lifted_circle();
    PolyVU mirrored;  // V -> -V
    for (int k = 0; k <= eq.degree(); ++k) {
        RsU c = eq.coeff(static_cast<std::size_t>(k));
        if (k % 2 == 1) c = -c;
        mirrored = mirrored + PolyVU::monomial(c, static_cast<std::size_t>(k));
    }
    // d -> -d: negate odd d-coefficients everywhere
    PolyVU negd;
    for (int k = 0; k <= eq.degree(); ++k) {
        const RsU& c = eq.coeff(static_cast<std::size_t>(k));
        RsU out;
        for (int u = 0; u <= c.degree(); ++u) {
            Rs r = c.coeff(static_cast<std::size_t>(u));
            auto flip = [](const Zd& z) {
                Zd res;
                for (int j = 0; j <= z.degree(); ++j) {
                    Int v = z.coeff(static_cast<std::size_t>(j));
                    res.set_coeff(static_cast<std::size_t>(j),
                                  (j % 2 == 1) ? Int(-v) : v);
                }
                return res;
            };
            out.set_coeff(static_cast<std::size_t>(u),
                          Rs(flip(r.a), flip(r.b)));
        }
        negd = negd + PolyVU::monomial(out, static_cast<std::size_t>(k));
    }
    CHECK(negd == mirrored);
}

TEST_CASE("rotated curves reproduce the closed-form coefficient lists") {
    PolyVU eq = lifted_circle();
    QuarticInV plus = rotate_curve(eq, RotationDirection::Plus);
    QuarticInV expect = rotated_curve_closed_form(RotationDirection::Plus);
    for (int k = 0; k < 5; ++k) CHECK(plus.a[static_cast<std::size_t>(k)] ==
                                      expect.a[static_cast<std::size_t>(k)]);
    CHECK(rotate_curve(eq, RotationDirection::Minus) ==
          rotated_curve_closed_form(RotationDirection::Minus));
}

TEST_CASE("resultant factorisation and specialisations") {
    PolyVU eq = lifted_circle();
    QuarticInV plus = rotate_curve(eq, RotationDirection::Plus);
    QuarticInV minus = rotate_curve(eq, RotationDirection::Minus);
    RsU P = sylvester_resultant(plus, minus);
    CHECK(P == p_factored());

    // resultant of a polynomial with itself vanishes
    CHECK(ring_is_zero(sylvester_resultant(plus, plus)));

    // Q at d^2 = 3 factors with a double root at U = -1
    ZPoly q3 = q_specialize(q_polynomial(), Rat(3));
    CHECK(count_real_roots(q3) == 1);
    CHECK(zpoly_eval(q3, Rat(-1)) == 0);

    // Q at rational d^2 samples has no real root
    for (const Rat& v : {Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(5, 2),
                         Rat(14, 5)})
        CHECK(count_real_roots(q_specialize(q_polynomial(), v)) == 0);
}

TEST_CASE("discriminant of Q") {
    Zd disc = q_discriminant();
    CHECK(disc == q_discriminant_closed_form());
    CHECK(Int(143327232) == ipow(2, 16) * ipow(3, 7));
    // evaluation spot-check at d = 1 in both forms
    Rat at1 = 0;
    {
        Rat acc = 0;
        for (int k = disc.degree(); k >= 0; --k)
            acc = acc * Rat(1) + Rat(disc.coeff(static_cast<std::size_t>(k)));
        at1 = acc;
    }
    CHECK(at1 == Rat(Int(-143327232)) * Rat(26) * Rat(-2) * Rat(625));
}

TEST_CASE("numeric cross-check of the exact resultant") {
    std::mt19937_64 rng(test_seed());
    PolyVU eq = lifted_circle();
    QuarticInV plus = rotate_curve(eq, RotationDirection::Plus);
    QuarticInV minus = rotate_curve(eq, RotationDirection::Minus);
    RsU P = sylvester_resultant(plus, minus);

    for (int trial = 0; trial < 20; ++trial) {
        double d = -2.0 + 4.0 * static_cast<double>(rng() % 1000) / 999.0;
        for (int j = 0; j < 10; ++j) {
            double u = -3.0 + 6.0 * static_cast<double>(rng() % 1000) / 999.0;
            std::array<std::array<double, 8>, 8> m{};
            for (int row = 0; row < 4; ++row)
                for (int k = 0; k < 5; ++k) {
                    m[row][row + k] =
                        rsu_eval(plus.a[static_cast<std::size_t>(4 - k)], u, d);
                    m[4 + row][row + k] = rsu_eval(
                        minus.a[static_cast<std::size_t>(4 - k)], u, d);
                }
            double numeric = det8(m);
            double exact = rsu_eval(P, u, d);
            double scale = std::max(std::abs(numeric), std::abs(exact));
            if (scale < 10.0) continue;  // near a root: no meaningful ratio
            CHECK(std::abs(numeric - exact) <= 1e-8 * scale);
        }
    }
}

namespace {

// Independent exact determinant: Laplace expansion with memoisation over
// column subsets, no divisions at all. Slower than the elimination the
// library uses, which is the point of checking against it.
RsU laplace_determinant(const std::vector<std::vector<RsU>>& m) {
    std::size_t n = m.size();
    std::vector<RsU> memo(1u << n);
    std::vector<bool> known(1u << n, false);
    std::function<RsU(unsigned)> det_of = [&](unsigned cols) -> RsU {
        if (cols == 0) return RsU(rs_int(1));
        if (known[cols]) return memo[cols];
        std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols));
        RsU acc;
        int sign = 1;  // parity of the column's position among set bits
        for (std::size_t j = 0; j < n; ++j) {
            unsigned bit = 1u << j;
            if (!(cols & bit)) continue;
            if (!ring_is_zero(m[row][j])) {
                RsU term = m[row][j] * det_of(cols & ~bit);
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        known[cols] = true;
        memo[cols] = acc;
        return acc;
    };
    return det_of((1u << n) - 1);
}

}  // namespace

TEST_CASE("two exact determinant routes agree on the resultant") {
    PolyVU eq = lifted_circle();
    QuarticInV plus = rotate_curve(eq, RotationDirection::Plus);
    QuarticInV minus = rotate_curve(eq, RotationDirection::Minus);

    Poly<RsU> f, g;
    for (std::size_t k = 0; k < 5; ++k) {
        f.set_coeff(k, plus.a[k]);
        g.set_coeff(k, minus.a[k]);
    }
    auto matrix = sylvester_matrix(f, g);
    RsU via_elimination = bareiss_determinant(matrix);
    RsU via_laplace = laplace_determinant(matrix);
    CHECK(via_elimination == via_laplace);
    CHECK(via_laplace == p_factored());
}

TEST_CASE("certificate passes and is fast enough") {
    auto start = std::chrono::steady_clock::now();
    CertificateReport rep = intersection_certificate();
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    CHECK(rep.pass);
    for (const auto& step : rep.steps) CHECK(step.pass);
    CHECK(elapsed < 10.0);
    // canonical string rendering present in the report
    bool found = false;
    for (const auto& step : rep.steps)
        if (step.name == "lifted-circle") found = true;
    CHECK(found);
}

TEST_CASE("certificate mutation fails at the factorisation step") {
    CertificateReport rep = intersection_certificate(/*mutate=*/true);
    CHECK(!rep.pass);
    for (const auto& step : rep.steps) {
        if (step.name == "rotation-plus") CHECK(step.pass);
        if (step.name == "resultant-factorisation") CHECK(!step.pass);
    }
}

TEST_CASE("canonical polynomial strings") {
    RsU q = q_polynomial();
    CHECK(rsu_to_string(q) ==
          "U^4*d^2 + 25*U^4 - 12*U^2*d^2 + 40*U^3 + 16*U*d^2 + 96*U^2 + "
          "64*U + 64");
    CHECK(rsu_to_string(RsU()) == "0");
    CHECK(rsu_to_string(RsU(rs_s())) == "s");
}
