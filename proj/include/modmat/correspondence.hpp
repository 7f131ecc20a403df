#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace modmat {

using Cx = std::complex<double>;

// Complex square root with the principal branch, computed from real
// operations only so that csqrt_sym(conj(z)) == conj(csqrt_sym(z))
// bit-for-bit. Pixel-exact conjugation symmetry of the renders depends
// on this.
inline Cx csqrt_sym(Cx z) {
    double x = z.real(), y = z.imag();
    if (x == 0.0 && y == 0.0) return {0.0, 0.0};
    double r = std::hypot(x, y);
    if (x >= 0.0) {
        double u = std::sqrt(0.5 * (r + x));
        return {u, y / (2.0 * u)};
    }
    double t = std::sqrt(0.5 * (r - x));
    double u = std::abs(y) / (2.0 * t);
    return {u, std::copysign(t, y)};
}

// Point on the Riemann sphere.
struct SpherePoint {
    Cx value{0.0, 0.0};
    bool at_infinity = false;

    SpherePoint() = default;
    SpherePoint(Cx v) : value(v) {}
    SpherePoint(double re, double im) : value(re, im) {}
    static SpherePoint infinity() {
        SpherePoint p;
        p.at_infinity = true;
        return p;
    }
};

// Parameter a of the correspondence family; a = 1 is the puncture where
// the family degenerates.
struct Parameter {
    Cx a;
    explicit Parameter(Cx a_) : a(a_) {
        if (a == Cx(1.0, 0.0))
            throw std::invalid_argument("Parameter: a = 1 is excluded");
    }
    Cx b() const { return (a - 7.0) / (a - 1.0); }
};

// The two solutions W of W^2 + Z W + Z^2 = 3 (the deleted covering
// correspondence of Q(z) = z^3 - 3z).
inline std::pair<SpherePoint, SpherePoint> cov_branches(const SpherePoint& Z) {
    if (Z.at_infinity || std::abs(Z.value) > 1e100)
        return {SpherePoint::infinity(), SpherePoint::infinity()};
    Cx z = Z.value;
    Cx root = csqrt_sym(3.0 * (1.0 - 0.25 * z * z));
    return {SpherePoint(-0.5 * z + root), SpherePoint(-0.5 * z - root)};
}

// The Moebius involution fixing 1 and a:
//   J_a(Z) = ((1+a) Z - 2a) / (2Z - (1+a)).
inline SpherePoint j_involution(const Parameter& par, const SpherePoint& Z) {
    Cx a = par.a;
    if (Z.at_infinity) return SpherePoint(0.5 * (1.0 + a));
    Cx num = (1.0 + a) * Z.value - 2.0 * a;
    Cx den = 2.0 * Z.value - (1.0 + a);
    if (den == Cx(0.0, 0.0)) return SpherePoint::infinity();
    return SpherePoint(num / den);
}

// Lift of Z to the W-plane (Z = w + 1/w) with |w| >= 1. The two roots
// have product 1, so the larger-modulus one qualifies.
inline Cx half_plane_lift(Cx z) {
    Cx root = csqrt_sym(0.25 * z * z - 1.0);
    Cx w1 = 0.5 * z + root, w2 = 0.5 * z - root;
    return (std::abs(w1) >= std::abs(w2)) ? w1 : w2;
}

// Membership in the standard fundamental domain of the covering
// correspondence: in the lift coordinate this is the open sector
// |arg w| < pi/3, tested trig-free as 2 Re(w) > |w|. Boundary points
// (including the parabolic Z = 1) are OUT, and so is infinity. The
// relative slack keeps exact boundary points out under rounding.
inline bool in_delta_cov(const SpherePoint& Z) {
    if (Z.at_infinity) return false;
    Cx z = Z.value;
    if (std::abs(z) > 1e100) return 2.0 * z.real() > std::abs(z) * (1.0 + 1e-12);
    Cx w = half_plane_lift(z);
    return 2.0 * w.real() > std::abs(w) * (1.0 + 1e-12);
}

struct FMapResult {
    SpherePoint value;
    bool escaped = false;     // input was already in Delta_Cov
    bool tie_broken = false;  // neither branch tested inside (boundary)
};

// One step of the 2-to-1 restriction f_a: escape if Z is in Delta_Cov,
// otherwise follow the cov branch that lands in Delta_Cov and apply J_a.
// Exactly on the boundary both branches can fail numerically; ties go to
// the branch whose lift has the larger real part.
inline FMapResult f_map(const Parameter& par, const SpherePoint& Z) {
    if (in_delta_cov(Z)) return {Z, true, false};
    auto [w1, w2] = cov_branches(Z);
    bool in1 = in_delta_cov(w1);
    bool in2 = in_delta_cov(w2);
    if (in1 != in2) return {j_involution(par, in1 ? w1 : w2), false, false};
    // tie: prefer larger Re of the half-plane lift
    auto key = [](const SpherePoint& p) {
        if (p.at_infinity) return -std::numeric_limits<double>::infinity();
        return half_plane_lift(p.value).real();
    };
    const SpherePoint& pick = (key(w1) >= key(w2)) ? w1 : w2;
    return {j_involution(par, pick), false, true};
}

struct FixedPointData {
    Cx z0;    // alpha fixed point in the z-coordinate
    Cx Z0;    // same point in the Z-coordinate
    Cx zeta;  // multiplier dw/dz at z0
    Cx E;     // zeta = (1+E)/(1-E)
};

// z0 = -sqrt((7-a)/(3(a+1))), the branch negative on real a in (-1,7)
// and continuous off the real complement of that interval.
inline Cx alpha_fixed_z0(const Parameter& par) {
    Cx a = par.a;
    if (a == Cx(-1.0, 0.0))
        throw std::invalid_argument("alpha_fixed_z0: a = -1 is singular");
    return -csqrt_sym((7.0 - a) / (3.0 * (a + 1.0)));
}

inline Cx multiplier_zeta(const Parameter& par) {
    Cx a = par.a;
    Cx z0 = alpha_fixed_z0(par);
    Cx head = a * a - 2.0 * a - 11.0;
    Cx tail = (a + 1.0) * (7.0 - a) * z0;
    return (head + tail) / (head - tail);
}

// E in the parameter b = (a-7)/(a-1), with the square root matched to
// the z0 branch via z0 = -sqrt(b/(b-4)).
inline Cx e_value(const Parameter& par) {
    Cx b = par.b();
    Cx denom = 2.0 + 2.0 * b - b * b;
    if (denom == Cx(0.0, 0.0))
        throw std::domain_error("e_value: pole of the rational prefactor");
    Cx sqrt_term = -alpha_fixed_z0(par);  // sqrt(b/(b-4))
    return b * (4.0 - b) / denom * sqrt_term;
}

inline FixedPointData alpha_fixed_point(const Parameter& par) {
    FixedPointData fp;
    fp.z0 = alpha_fixed_z0(par);
    fp.Z0 = (par.a * fp.z0 + 1.0) / (fp.z0 + 1.0);
    fp.zeta = multiplier_zeta(par);
    fp.E = e_value(par);
    return fp;
}

// chi(z) = (1/2) log |(z+i)/(z-i)| on the upper half-plane; the Green's
// function of the limit set is chi composed with the uniformising map.
inline double green_chi(Cx z) {
    if (z.imag() <= 0.0)
        throw std::invalid_argument("green_chi: need Im z > 0");
    if (z == Cx(0.0, 1.0))
        throw std::domain_error("green_chi: infinite at z = i");
    const Cx i(0.0, 1.0);
    return 0.5 * std::log(std::abs((z + i) / (z - i)));
}

struct OrbitResult {
    std::vector<SpherePoint> points;            // iterates, starting at Z
    std::optional<std::size_t> escape_index;    // first n inside Delta_Cov
    std::size_t tie_breaks = 0;
};

// Iterates of f_a from Z. escape_index = n means the n-th iterate
// (0 = the start point) lies in Delta_Cov.
inline OrbitResult orbit(const Parameter& par, const SpherePoint& Z,
                         std::size_t n_max, bool keep_points = true) {
    OrbitResult out;
    SpherePoint cur = Z;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (keep_points) out.points.push_back(cur);
        if (in_delta_cov(cur)) {
            out.escape_index = n;
            return out;
        }
        if (n == n_max) break;
        FMapResult step = f_map(par, cur);
        if (step.tie_broken) ++out.tie_breaks;
        cur = step.value;
    }
    return out;
}

}  // namespace modmat
