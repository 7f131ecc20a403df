// Command-line front end: every library module exposed as a subcommand
// with JSON/CSV/PPM outputs.
//
// Exit codes: 0 success, 2 parse/precondition error, 3 verification FAIL.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "modmat/contfrac.hpp"
#include "modmat/correspondence.hpp"
#include "modmat/lune.hpp"
#include "modmat/parse.hpp"
#include "modmat/render.hpp"
#include "modmat/sturmian.hpp"
#include "modmat/symbols.hpp"
#include "modmat/verify.hpp"
#include "modmat/word.hpp"
#include "modmat/yoccoz.hpp"

using json = nlohmann::ordered_json;
using namespace modmat;

namespace {

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json complex_json(Cx z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json surd_json(const Quad& q) {
    return json{{"exact", q.exact_string()}, {"decimal", fmt17(q.value())}};
}

int run_word(const std::string& letters, bool as_json) {
    Word w = Word::parse(letters);
    json out;
    out["word"] = w.str();
    out["trace"] = to_string(w.trace());
    switch (w.classify()) {
        case WordClass::Hyperbolic: out["class"] = "hyperbolic"; break;
        case WordClass::Parabolic: out["class"] = "parabolic"; break;
        case WordClass::Elliptic: out["class"] = "elliptic"; break;
    }
    if (w.mixed()) {
        auto fp = w.fixed_points();
        out["x_minus"] = surd_json(fp.x_minus);
        out["x_plus"] = surd_json(fp.x_plus);
    }
    if (w.classify() == WordClass::Hyperbolic)
        out["multiplier"] = surd_json(w.multiplier());
    if (w.mixed() && is_sturmian(w)) {
        RotationNumber rot = rotation_number_of(w);
        out["rotation"] = json{{"p", rot.p}, {"q", rot.q}};
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "word " << w.str() << "  trace " << to_string(w.trace())
                  << "  class " << out["class"].get<std::string>() << "\n";
        if (out.contains("x_minus"))
            std::cout << "x- = " << out["x_minus"]["exact"].get<std::string>()
                      << " = " << out["x_minus"]["decimal"].get<std::string>()
                      << "\nx+ = " << out["x_plus"]["exact"].get<std::string>()
                      << " = " << out["x_plus"]["decimal"].get<std::string>()
                      << "\n";
        if (out.contains("multiplier"))
            std::cout << "multiplier = "
                      << out["multiplier"]["exact"].get<std::string>() << " = "
                      << out["multiplier"]["decimal"].get<std::string>() << "\n";
    }
    return 0;
}

int run_minkowski(const std::string& cf_str, const std::string& bin_str) {
    json out;
    if (!cf_str.empty() && !bin_str.empty())
        throw std::invalid_argument("give either --cf or --binary, not both");
    if (cf_str.empty() && bin_str.empty())
        throw std::invalid_argument("need --cf or --binary");
    if (!cf_str.empty()) {
        ContinuedFraction cf = parse_cf(cf_str);
        Quad v = eval_cf(cf);
        BinaryAngle img = question_mark(cf);
        out["cf"] = cf.str();
        out["value"] = surd_json(v);
        out["binary"] = img.str();
        out["binary_rational"] = img.value().get_str();
    } else {
        BinaryAngle angle = parse_binary(bin_str);
        ContinuedFraction cf = question_mark_inverse(angle);
        out["binary"] = angle.str();
        out["binary_rational"] = angle.value().get_str();
        out["cf"] = cf.str();
        out["value"] = surd_json(eval_cf(cf));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_sturmian(std::int64_t p, std::int64_t q, bool as_json) {
    RotationNumber rot{p, q};
    SturmianBlock blk = t_word(rot);
    BlockStructure bs = block_structure(blk);
    auto [lo, hi] = multiplier_bounds(rot);
    Quad mu = blk.word.multiplier();
    json out;
    out["p"] = p;
    out["q"] = q;
    out["word"] = blk.word.str();
    out["block_r"] = bs.r;
    out["block_count"] = bs.s;
    out["block_kinds"] = bs.kinds;
    out["multiplier"] = surd_json(mu);
    out["bound_lower"] = to_string(lo);
    out["bound_upper"] = to_string(hi);
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "T_{" << p << "/" << q << "} = " << blk.word.str() << "\n"
                  << "blocks: " << bs.s << " of majority-run length "
                  << bs.r - 1 << " or " << bs.r << "\n"
                  << "multiplier = " << mu.exact_string() << " = "
                  << fmt17(mu.value()) << "\n"
                  << "bounds (" << to_string(lo) << ", " << to_string(hi)
                  << ")\n";
    }
    return 0;
}

int run_zeta(const std::string& a_str) {
    Parameter par(parse_complex(a_str));
    FixedPointData fp = alpha_fixed_point(par);
    json out;
    out["a"] = complex_json(par.a);
    out["b"] = complex_json(par.b());
    out["z0"] = complex_json(fp.z0);
    out["Z0"] = complex_json(fp.Z0);
    out["zeta"] = complex_json(fp.zeta);
    out["E"] = complex_json(fp.E);
    out["abs_zeta"] = std::abs(fp.zeta);
    out["arg_zeta"] = std::arg(fp.zeta);
    out["log_zeta"] =
        complex_json(Cx(std::log(std::abs(fp.zeta)), std::arg(fp.zeta)));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_orbit(const std::string& a_str, const std::string& z_str,
              std::size_t n_max) {
    Parameter par(parse_complex(a_str));
    OrbitResult orb = orbit(par, SpherePoint(parse_complex(z_str)), n_max);
    std::cout << "n,re,im,escaped\n";
    for (std::size_t k = 0; k < orb.points.size(); ++k) {
        const SpherePoint& pt = orb.points[k];
        bool esc = orb.escape_index && *orb.escape_index == k;
        if (pt.at_infinity)
            std::cout << k << ",inf,inf," << (esc ? 1 : 0) << "\n";
        else
            std::cout << k << "," << fmt17(pt.value.real()) << ","
                      << fmt17(pt.value.imag()) << "," << (esc ? 1 : 0)
                      << "\n";
    }
    if (orb.tie_breaks)
        std::cerr << "note: " << orb.tie_breaks
                  << " boundary tie-break(s) during branch selection\n";
    return 0;
}

int run_yoccoz(std::int64_t qmax, const std::string& json_path,
               const std::string& test_a, double scale) {
    if (!test_a.empty()) {
        Parameter par(parse_complex(test_a));
        Cx zeta = multiplier_zeta(par);
        bool excluded = yoccoz_excluded(zeta, scale);
        double bound = 0.5 * (3.0 + std::sqrt(5.0));
        std::cout << "a = " << test_a << "  zeta = " << fmt17(zeta.real())
                  << (zeta.imag() < 0 ? "-" : "+")
                  << fmt17(std::abs(zeta.imag())) << "i  |zeta| = "
                  << fmt17(std::abs(zeta)) << "\n";
        if (excluded) {
            if (!abs_bound_ok(zeta))
                std::cout << "verdict: excluded: |zeta|=" << fmt17(std::abs(zeta))
                          << " > " << fmt17(bound) << "\n";
            else
                std::cout << "verdict: excluded: log zeta outside the "
                             "admissible discs\n";
        } else {
            std::cout << "verdict: not excluded by the inequality\n";
        }
        return 0;
    }
    auto atlas = disc_atlas(qmax);
    json out = json::array();
    for (const auto& d : atlas)
        out.push_back(json{{"p", d.p},
                           {"q", d.q},
                           {"tangency", d.tangency},
                           {"radius", d.radius},
                           {"sharpened", d.sharpened}});
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw std::runtime_error("cannot open " + json_path);
        f << out.dump(2) << "\n";
        std::cout << "wrote " << atlas.size() << " discs to " << json_path
                  << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_lune(bool dyn, double theta, double alpha, const std::string& a_str,
             std::size_t samples, std::uint64_t seed) {
    Cx a = parse_complex(a_str);
    if (!dyn) {
        bool inside = param_lune_contains(theta, a);
        std::cout << "a = " << a_str << (inside ? " inside" : " outside")
                  << " the parameter lune of angle " << fmt17(theta) << "\n";
        return 0;
    }
    DynLuneReport rep = dyn_lune_check(alpha, a, samples, seed);
    std::cout << "samples: " << rep.samples
              << "  violations: " << rep.violations.size()
              << "  worst margin: " << fmt17(rep.worst_margin)
              << "  sector violations: " << rep.sector_violations << "\n";
    for (std::size_t k = 0; k < rep.violations.size() && k < 5; ++k) {
        const auto& v = rep.violations[k];
        std::cout << "  sample (" << fmt17(v.sample.real()) << ","
                  << fmt17(v.sample.imag()) << ") -> image ("
                  << fmt17(v.image.real()) << "," << fmt17(v.image.imag())
                  << ") margin " << fmt17(v.margin) << "\n";
    }
    return 0;
}

int run_mandel(const std::string& center, double radius, std::size_t px,
               std::size_t max_iter, const std::string& out,
               const std::string& csv, unsigned threads) {
    GridSpec g{parse_complex(center), radius, px, px, max_iter};
    EscapeField field = mandel_field(g, threads);
    if (!out.empty()) {
        write_image(field, out);
        std::cout << "wrote " << out << "\n";
    }
    if (!csv.empty()) {
        export_csv(field, csv);
        std::cout << "wrote " << csv << "\n";
    }
    return 0;
}

int run_limit(const std::string& a_str, const std::string& center,
              double radius, std::size_t px, std::size_t max_iter,
              const std::string& out, const std::string& csv, bool plus,
              unsigned threads) {
    Parameter par(parse_complex(a_str));
    GridSpec g{parse_complex(center), radius, px, px, max_iter};
    EscapeField field = limit_field(par, g, plus, threads);
    if (!out.empty()) {
        write_image(field, out);
        std::cout << "wrote " << out << "\n";
    }
    if (!csv.empty()) {
        export_csv(field, csv);
        std::cout << "wrote " << csv << "\n";
    }
    return 0;
}

int run_verify(const std::string& json_path, bool mutate) {
    CertificateReport rep = intersection_certificate(mutate);
    for (const auto& step : rep.steps)
        std::cout << (step.pass ? "PASS " : "FAIL ") << step.name << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
    if (!json_path.empty()) {
        json out;
        out["pass"] = rep.pass;
        out["steps"] = json::array();
        for (const auto& step : rep.steps)
            out["steps"].push_back(json{{"name", step.name},
                                        {"pass", step.pass},
                                        {"detail", step.detail}});
        out["q_polynomial"] = rsu_to_string(q_polynomial());
        out["discriminant"] = zd_to_string(q_discriminant_closed_form());
        std::ofstream f(json_path);
        if (!f) throw std::runtime_error("cannot open " + json_path);
        f << out.dump(2) << "\n";
    }
    return rep.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular-mating toolkit: word algebra, codings, "
                 "correspondence dynamics, inequality tests, renders and "
                 "exact verification"};
    app.require_subcommand(1);

    // word
    auto* word_cmd = app.add_subcommand("word", "finite word algebra");
    std::string word_letters;
    bool word_json = false;
    word_cmd->add_option("--letters", word_letters,
                         "word over {a, b}, rightmost letter acts first")
        ->required();
    word_cmd->add_flag("--json", word_json, "JSON output");

    // minkowski
    auto* mink_cmd =
        app.add_subcommand("minkowski", "question-mark codings");
    std::string mink_cf, mink_bin;
    mink_cmd->add_option("--cf", mink_cf,
                         "continued fraction, e.g. \"0;1,(2,1)\"");
    mink_cmd->add_option("--binary", mink_bin,
                         "binary angle, e.g. \"0.(011)\"");

    // sturmian
    auto* st_cmd = app.add_subcommand("sturmian", "balanced words");
    std::int64_t st_p = 1, st_q = 2;
    bool st_json = false;
    st_cmd->add_option("--p", st_p, "numerator")->required();
    st_cmd->add_option("--q", st_q, "denominator")->required();
    st_cmd->add_flag("--json", st_json, "JSON output");

    // zeta
    auto* zeta_cmd =
        app.add_subcommand("zeta", "fixed-point multiplier data");
    std::string zeta_a;
    zeta_cmd->add_option("--a", zeta_a, "parameter, e.g. 4+3i")->required();

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "iterate the 2:1 map");
    std::string orbit_a, orbit_z;
    std::size_t orbit_n = 100;
    orbit_cmd->add_option("--a", orbit_a, "parameter")->required();
    orbit_cmd->add_option("--z", orbit_z, "start point (Z-coordinate)")
        ->required();
    orbit_cmd->add_option("--n", orbit_n, "max iterations");

    // yoccoz
    auto* yz_cmd = app.add_subcommand("yoccoz", "inequality discs and tests");
    std::int64_t yz_qmax = 8;
    std::string yz_json, yz_test;
    double yz_scale = 5.0;
    yz_cmd->add_option("--qmax", yz_qmax, "largest denominator");
    yz_cmd->add_option("--json", yz_json, "write the disc atlas here");
    yz_cmd->add_option("--test-a", yz_test, "exclusion test at a parameter");
    yz_cmd->add_option("--scale", yz_scale,
                       "curve scale factor (default 5, sharpened 4)");

    // lune
    auto* lune_cmd = app.add_subcommand("lune", "lune membership and checks");
    bool lune_dyn = false;
    double lune_theta = std::numbers::pi / 3.0;
    double lune_alpha = std::numbers::pi / 3.0;
    std::string lune_a;
    std::size_t lune_samples = 10000;
    std::uint64_t lune_seed = 12345;
    lune_cmd->add_flag("--dyn", lune_dyn, "dynamical-lune image check");
    lune_cmd->add_option("--theta", lune_theta, "parameter lune angle");
    lune_cmd->add_option("--alpha", lune_alpha, "dynamical lune angle");
    lune_cmd->add_option("--a", lune_a, "parameter")->required();
    lune_cmd->add_option("--samples", lune_samples, "sample count");
    lune_cmd->add_option("--seed", lune_seed, "sampling seed");

    // mandel
    auto* mandel_cmd =
        app.add_subcommand("mandel", "parameter-plane escape render");
    std::string m_center = "4+0i", m_out, m_csv;
    double m_radius = 3.2;
    std::size_t m_px = 800, m_iter = 1000;
    unsigned m_threads = 0;
    mandel_cmd->add_option("--center", m_center, "grid centre");
    mandel_cmd->add_option("--radius", m_radius, "half-width");
    mandel_cmd->add_option("--px", m_px, "pixels per side");
    mandel_cmd->add_option("--max-iter", m_iter, "iteration budget");
    mandel_cmd->add_option("--out", m_out, "PPM output path");
    mandel_cmd->add_option("--csv", m_csv, "CSV output path");
    mandel_cmd->add_option("--threads", m_threads,
                           "worker cap (default MM_THREADS or hardware)");

    // limit
    auto* limit_cmd =
        app.add_subcommand("limit", "dynamical-plane escape render");
    std::string l_a, l_center = "0+0i", l_out, l_csv;
    double l_radius = 4.0;
    std::size_t l_px = 800, l_iter = 1000;
    bool l_plus = false;
    unsigned l_threads = 0;
    limit_cmd->add_option("--a", l_a, "parameter")->required();
    limit_cmd->add_option("--center", l_center, "grid centre");
    limit_cmd->add_option("--radius", l_radius, "half-width");
    limit_cmd->add_option("--px", l_px, "pixels per side");
    limit_cmd->add_option("--max-iter", l_iter, "iteration budget");
    limit_cmd->add_option("--out", l_out, "PPM output path");
    limit_cmd->add_option("--csv", l_csv, "CSV output path");
    limit_cmd->add_flag("--plus", l_plus, "render the mirror limit set");
    limit_cmd->add_option("--threads", l_threads, "worker cap");

    // verify-lemma9
    auto* ver_cmd = app.add_subcommand(
        "verify-lemma9", "exact re-verification of the intersection lemma");
    std::string ver_json;
    bool ver_mutate = false;
    ver_cmd->add_option("--json", ver_json, "write the full report here");
    ver_cmd->add_flag("--mutate", ver_mutate,
                      "inject a coefficient perturbation (must FAIL)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (word_cmd->parsed()) return run_word(word_letters, word_json);
        if (mink_cmd->parsed()) return run_minkowski(mink_cf, mink_bin);
        if (st_cmd->parsed()) return run_sturmian(st_p, st_q, st_json);
        if (zeta_cmd->parsed()) return run_zeta(zeta_a);
        if (orbit_cmd->parsed()) return run_orbit(orbit_a, orbit_z, orbit_n);
        if (yz_cmd->parsed())
            return run_yoccoz(yz_qmax, yz_json, yz_test, yz_scale);
        if (lune_cmd->parsed())
            return run_lune(lune_dyn, lune_theta, lune_alpha, lune_a,
                            lune_samples, lune_seed);
        if (mandel_cmd->parsed())
            return run_mandel(m_center, m_radius, m_px, m_iter, m_out, m_csv,
                              m_threads);
        if (limit_cmd->parsed())
            return run_limit(l_a, l_center, l_radius, l_px, l_iter, l_out,
                             l_csv, l_plus, l_threads);
        if (ver_cmd->parsed()) return run_verify(ver_json, ver_mutate);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
