#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace modmat {

// Disc in the log-multiplier plane tangent to the imaginary axis at
// 2 pi i p/q, with the (log q)/q^2-scale radius of the inequality.
struct YoccozDisc {
    std::int64_t p, q;
    double tangency;  // 2 pi p / q
    double radius;
    bool sharpened;   // 1/q disc drawn with the exact multiplier radius
};

// r_{p/q} = 2 p log(ceil(q/p)+1) / q^2 for p/q <= 1/2, and the mirror
// formula with q-p above 1/2.
inline double disc_radius(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0 || p >= q || std::gcd(p, q) != 1)
        throw std::invalid_argument("disc_radius: need coprime 0 < p/q < 1");
    std::int64_t k = (2 * p <= q) ? p : q - p;
    double ceil_ratio = static_cast<double>((q + k - 1) / k);
    return 2.0 * static_cast<double>(k) * std::log(ceil_ratio + 1.0) /
           (static_cast<double>(q) * static_cast<double>(q));
}

// Same disc for rotation number 1/q, but with the exact multiplier of
// the q-letter single-alpha block instead of the generic bound:
// r = 2 log( ((q+1) + sqrt(q^2+2q-3)) / 2 ) / q^2.
inline double sharpened_radius(std::int64_t q) {
    if (q < 2) throw std::invalid_argument("sharpened_radius: need q >= 2");
    double qq = static_cast<double>(q);
    double lambda = 0.5 * ((qq + 1.0) + std::sqrt(qq * qq + 2.0 * qq - 3.0));
    return 2.0 * std::log(lambda) / (qq * qq);
}

// tau lies in the disc tangent at 2 pi i p/q with radius r iff
// Re(tau) >= |tau - 2 pi i p/q|^2 / (2r).
inline bool in_disc(std::complex<double> tau, std::int64_t p, std::int64_t q) {
    double r = disc_radius(p, q);
    std::complex<double> rel =
        tau - std::complex<double>(0.0, 2.0 * std::numbers::pi *
                                            static_cast<double>(p) /
                                            static_cast<double>(q));
    return tau.real() >= std::norm(rel) / (2.0 * r);
}

// Practical admissibility: with tau = log|zeta| + i Arg zeta and
// nu = Arg zeta / 2pi, membership in the union of discs requires
// Re(tau) < scale * nu^2 log(1/nu + 1). The default scale 5 majorises
// every disc; 4 works with the sharpened 1/q radii.
inline bool cor2_admissible(std::complex<double> zeta, double scale = 5.0) {
    double arg = std::arg(zeta);
    if (!(arg > 0.0 && arg < std::numbers::pi))
        throw std::domain_error(
            "cor2_admissible: need 0 < Arg zeta < pi (conjugate first)");
    double re_tau = std::log(std::abs(zeta));
    double nu = arg / (2.0 * std::numbers::pi);
    return re_tau < scale * nu * nu * std::log(1.0 / nu + 1.0);
}

// Absolute multiplier bound |zeta| <= (3+sqrt(5))/2. The bound is sharp
// and attained, so equality must survive rounding of both sides.
inline bool abs_bound_ok(std::complex<double> zeta) {
    double bound = 0.5 * (3.0 + std::sqrt(5.0));
    return std::abs(zeta) <= bound * (1.0 + 1e-12);
}

// Combined exclusion verdict on a multiplier value: true = zeta cannot
// belong to a parameter of the connectedness locus with a repelling
// alpha point. Purely a necessary-condition test.
inline bool yoccoz_excluded(std::complex<double> zeta, double scale = 5.0) {
    if (!abs_bound_ok(zeta)) return true;
    double arg = std::abs(std::arg(zeta));
    if (arg == 0.0) return std::abs(zeta) > 1.0;  // no disc touches the axis
    // the curve extends continuously to arg = pi (the 1/2 tangency)
    double re_tau = std::log(std::abs(zeta));
    double nu = arg / (2.0 * std::numbers::pi);
    return !(re_tau < scale * nu * nu * std::log(1.0 / nu + 1.0));
}

// All discs for coprime p/q <= 1/2 with q <= q_max, plus the 1/16 disc;
// rotation numbers 1/q get the sharpened exact-multiplier radius.
inline std::vector<YoccozDisc> disc_atlas(std::int64_t q_max) {
    if (q_max < 2) throw std::invalid_argument("disc_atlas: need q_max >= 2");
    std::vector<YoccozDisc> discs;
    auto add = [&](std::int64_t p, std::int64_t q) {
        bool sharp = (p == 1);
        double r = sharp ? sharpened_radius(q) : disc_radius(p, q);
        discs.push_back({p, q,
                         2.0 * std::numbers::pi * static_cast<double>(p) /
                             static_cast<double>(q),
                         r, sharp});
    };
    for (std::int64_t q = 2; q <= q_max; ++q)
        for (std::int64_t p = 1; 2 * p <= q; ++p)
            if (std::gcd(p, q) == 1) add(p, q);
    if (q_max < 16) add(1, 16);
    return discs;
}

}  // namespace modmat
