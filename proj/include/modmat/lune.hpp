#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "modmat/correspondence.hpp"
#include "modmat/yoccoz.hpp"

namespace modmat {

// Parameter-plane lune L_theta: the region between the two circular
// arcs through a = 1 and a = 7 meeting the real axis at angles
// +-theta. With d = 3 cot(theta) it is the intersection of the discs
// of radius sqrt(9 + d^2) centred at 4 -+ d i.
inline bool param_lune_contains(double theta, Cx a) {
    if (!(theta >= std::numbers::pi / 12.0 &&
          theta <= std::numbers::pi / 2.0 + 1e-15))
        throw std::invalid_argument(
            "param_lune_contains: theta outside [pi/12, pi/2]");
    double d = 3.0 / std::tan(theta);
    double rad = std::sqrt(9.0 + d * d);
    return std::abs(a - Cx(4.0, -d)) <= rad && std::abs(a - Cx(4.0, d)) <= rad;
}

// Circle through P and Q whose tangent at P makes angle `ang` with the
// real axis. Returns centre and radius.
struct Circle {
    Cx center;
    double radius;
    bool contains(Cx z, double slack = 0.0) const {
        return std::abs(z - center) <= radius + slack;
    }
};

inline Circle circle_through_with_tangent(Cx p, Cx q, double ang) {
    // centre = p + s * i e^{i ang}; solve |centre - q| = |s|
    Cx dir(std::cos(ang), std::sin(ang));
    Cx normal = Cx(0.0, 1.0) * dir;
    Cx pq = p - q;
    double denom = 2.0 * (pq * std::conj(normal)).real();
    if (denom == 0.0)
        throw std::domain_error("circle_through_with_tangent: degenerate");
    double s = -std::norm(pq) / denom;
    return {p + s * normal, std::abs(s)};
}

struct LuneViolation {
    Cx sample;   // point of the closed lune
    Cx image;    // offending branch image
    double margin;  // distance outside the closed lune
};

struct DynLuneReport {
    std::size_t samples = 0;
    std::vector<LuneViolation> violations;
    double worst_margin = 0.0;
    std::size_t sector_violations = 0;  // z-coordinate sector form
};

namespace detail {

// Sampling of the closed dynamical lune between the two arcs from 1 to
// a: boundary-heavy (the containment statement lives on the boundary),
// with extra density near the vertex Z = 1 where failures bifurcate.
inline std::vector<Cx> sample_dyn_lune(Cx a, double alpha,
                                       std::size_t n_samples,
                                       std::uint64_t seed) {
    Circle up = circle_through_with_tangent(Cx(1.0, 0.0), a, alpha);
    Circle dn = circle_through_with_tangent(Cx(1.0, 0.0), a, -alpha);
    std::vector<Cx> pts;
    pts.reserve(n_samples);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto arc_point = [](const Circle& c, Cx from, Cx to, double t) {
        double a0 = std::arg(from - c.center);
        double a1 = std::arg(to - c.center);
        double delta = a1 - a0;
        while (delta > std::numbers::pi) delta -= 2.0 * std::numbers::pi;
        while (delta < -std::numbers::pi) delta += 2.0 * std::numbers::pi;
        return c.center + std::polar(c.radius, a0 + t * delta);
    };

    std::size_t n_boundary = n_samples / 2;
    for (std::size_t i = 0; i < n_boundary; ++i) {
        double u = unit(rng);
        double t = u * u * u;  // cluster toward the vertex Z = 1
        const Circle& c = (i % 2 == 0) ? up : dn;
        pts.push_back(arc_point(c, Cx(1.0, 0.0), a, t));
    }
    // interior: rejection sampling in the bounding box of the two discs
    double lo_x = std::min(up.center.real() - up.radius,
                           dn.center.real() - dn.radius);
    double hi_x = std::max(up.center.real() + up.radius,
                           dn.center.real() + dn.radius);
    double lo_y = std::min(up.center.imag() - up.radius,
                           dn.center.imag() - dn.radius);
    double hi_y = std::max(up.center.imag() + up.radius,
                           dn.center.imag() + dn.radius);
    while (pts.size() < n_samples) {
        Cx z(lo_x + (hi_x - lo_x) * unit(rng),
             lo_y + (hi_y - lo_y) * unit(rng));
        if (up.contains(z) && dn.contains(z)) pts.push_back(z);
    }
    return pts;
}

}  // namespace detail

// Checks F_a(closed L_alpha) inside L_alpha union {1} by sampling, plus
// the sector form of the same statement in the z-coordinate.
inline DynLuneReport dyn_lune_check(double alpha, Cx a,
                                    std::size_t n_samples,
                                    std::uint64_t seed = 12345) {
    if (!(alpha >= std::numbers::pi / 3.0 - 0.2 &&
          alpha <= std::numbers::pi / 2.0 + 1e-15))
        throw std::invalid_argument("dyn_lune_check: alpha out of range");
    if (a != Cx(7.0, 0.0) && !param_lune_contains(alpha, a))
        throw std::invalid_argument("dyn_lune_check: a outside the lune");

    Circle up = circle_through_with_tangent(Cx(1.0, 0.0), a, alpha);
    Circle dn = circle_through_with_tangent(Cx(1.0, 0.0), a, -alpha);
    const double slack = 1e-9;

    DynLuneReport rep;
    Parameter par(a);
    auto pts = detail::sample_dyn_lune(a, alpha, n_samples, seed);
    rep.samples = pts.size();
    for (Cx z : pts) {
        auto [w1, w2] = cov_branches(SpherePoint(z));
        for (const SpherePoint& w : {w1, w2}) {
            SpherePoint img = j_involution(par, w);
            if (img.at_infinity) {
                rep.violations.push_back({z, Cx(0, 0), 1e300});
                continue;
            }
            Cx v = img.value;
            if (std::abs(v - Cx(1.0, 0.0)) < 1e-12) continue;  // vertex
            double m1 = std::abs(v - up.center) - up.radius;
            double m2 = std::abs(v - dn.center) - dn.radius;
            double margin = std::max(m1, m2);
            if (margin > slack) {
                rep.violations.push_back({z, v, margin});
                rep.worst_margin = std::max(rep.worst_margin, margin);
            }
        }
        // sector form: z-coordinate zc = (a-1)(Z-1)/(a-Z), lune becomes
        // |arg zc| < alpha and the vertex becomes 0
        Cx zc_den = a - z;
        if (std::abs(zc_den) > 1e-15) {
            for (const SpherePoint& w : {w1, w2}) {
                SpherePoint img = j_involution(par, w);
                if (img.at_infinity) continue;
                Cx img_den = a - img.value;
                if (std::abs(img_den) < 1e-15) continue;  // maps to sector inf
                Cx zc_img = (a - 1.0) * (img.value - 1.0) / img_den;
                if (std::abs(zc_img) < 1e-12) continue;    // vertex
                if (std::abs(std::arg(zc_img)) > alpha + 1e-7)
                    ++rep.sector_violations;
            }
        }
    }
    return rep;
}

struct ArcSample {
    double t;
    Cx a;
    Cx zeta;
    Cx E;
    bool abs_violated;
    bool excluded;
};

// Scan of the parameter arc b = i t: every sample should violate the
// absolute bound or the disc-union criterion.
inline std::vector<ArcSample> arc_exclusion_scan(double t_min, double t_max,
                                                 std::size_t n) {
    if (!(t_min > 0.0 && t_max > t_min))
        throw std::invalid_argument("arc_exclusion_scan: bad range");
    std::vector<ArcSample> out;
    out.reserve(n);
    double lr = std::log(t_max / t_min);
    for (std::size_t i = 0; i < n; ++i) {
        double t = t_min * std::exp(lr * static_cast<double>(i) /
                                    static_cast<double>(n - 1));
        Cx b(0.0, t);
        Cx a = (7.0 - b) / (1.0 - b);
        Parameter par(a);
        ArcSample s;
        s.t = t;
        s.a = a;
        s.zeta = multiplier_zeta(par);
        s.E = e_value(par);
        s.abs_violated = !abs_bound_ok(s.zeta);
        s.excluded = yoccoz_excluded(s.zeta);
        out.push_back(s);
    }
    return out;
}

}  // namespace modmat
