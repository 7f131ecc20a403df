#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "modmat/correspondence.hpp"

namespace modmat {

struct GridSpec {
    Cx center{0.0, 0.0};
    double half_width = 1.0;
    std::size_t width = 1, height = 1;
    std::size_t max_iter = 1000;

    void validate() const {
        if (width < 1 || height < 1 || max_iter < 1 || half_width <= 0.0)
            throw std::invalid_argument("GridSpec: degenerate grid");
    }

    double half_height() const {
        return half_width * static_cast<double>(height) /
               static_cast<double>(width);
    }

    // Pixel centres on the lattice containing the grid centre itself
    // (column w/2, row h/2 for even sizes land exactly on `center`).
    // Rows j and h-j then carry exactly negated y on a real-centred
    // grid, which makes conjugation symmetry pixel-exact.
    Cx pixel(std::size_t i, std::size_t j) const {
        double x = center.real() +
                   half_width *
                       (2.0 * static_cast<double>(i) -
                        static_cast<double>(width)) /
                       static_cast<double>(width);
        double y = center.imag() +
                   half_height() *
                       (static_cast<double>(height) -
                        2.0 * static_cast<double>(j)) /
                       static_cast<double>(height);
        return {x, y};
    }
};

struct PixelRecord {
    std::int32_t escape_index = -1;  // -1 = never entered Delta_Cov
    Cx last_point{0.0, 0.0};
    std::uint8_t in_dj_disc = 0;  // escape point inside the Delta_J circle
    std::uint8_t undefined = 0;   // parameter puncture a = 1
};

struct EscapeField {
    GridSpec grid;
    std::vector<PixelRecord> pixels;  // row-major

    const PixelRecord& at(std::size_t i, std::size_t j) const {
        return pixels[j * grid.width + i];
    }
};

namespace detail {

// Signed test for |W - x0| <= R where the circle through 1 and a has
// centre x0 = (|a|^2-1) / (2(Re a - 1)) on the real axis; written
// multiplied out so the degenerate Re a = 1 case needs no special path.
inline bool inside_dj_circle(Cx a, Cx w) {
    double dn = a.real() - 1.0;
    double g = (std::norm(w) - 1.0) * dn -
               (std::norm(a) - 1.0) * (w.real() - 1.0);
    return (dn >= 0.0) ? (g <= 0.0) : (g >= 0.0);
}

inline unsigned worker_count() {
    if (const char* env = std::getenv("MM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <typename PerPixel>
inline void run_rows(EscapeField& field, PerPixel&& fn, unsigned threads) {
    const std::size_t h = field.grid.height;
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (std::size_t j = next.fetch_add(1); j < h; j = next.fetch_add(1))
            for (std::size_t i = 0; i < field.grid.width; ++i)
                field.pixels[j * field.grid.width + i] = fn(i, j);
    };
    if (threads <= 1) {
        body();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

}  // namespace detail

// Parameter-plane escape field: per pixel a, the critical value
// J_a(2) = 2/(3-a) is iterated under f_a; pixels whose orbit never
// reaches Delta_Cov approximate the connectedness locus.
inline EscapeField mandel_field(const GridSpec& grid, unsigned threads = 0) {
    grid.validate();
    if (threads == 0) threads = detail::worker_count();
    EscapeField field{grid, {}};
    field.pixels.resize(grid.width * grid.height);
    detail::run_rows(
        field,
        [&](std::size_t i, std::size_t j) {
            PixelRecord rec;
            Cx a = grid.pixel(i, j);
            if (a == Cx(1.0, 0.0)) {
                rec.undefined = 1;
                return rec;
            }
            Parameter par(a);
            // critical value J_a(2) = 2/(3-a); a = 3 sends it to infinity
            SpherePoint cur = (a == Cx(3.0, 0.0))
                                  ? SpherePoint::infinity()
                                  : SpherePoint(2.0 / (3.0 - a));
            std::size_t n = 0;
            while (n < grid.max_iter && !in_delta_cov(cur)) {
                cur = f_map(par, cur).value;
                ++n;
            }
            if (in_delta_cov(cur)) {
                rec.escape_index = static_cast<std::int32_t>(n);
                rec.last_point = cur.at_infinity ? Cx(0.0, 0.0) : cur.value;
                rec.in_dj_disc =
                    (!cur.at_infinity && detail::inside_dj_circle(a, cur.value))
                        ? 1
                        : 0;
            }
            return rec;
        },
        threads);
    return field;
}

// Dynamical-plane escape field for fixed a: escape times of f_a. With
// plus_side = true the J_a-mirror is rendered (pixels are reflected
// through the involution before iterating), approximating the other
// limit set.
inline EscapeField limit_field(const Parameter& par, const GridSpec& grid,
                               bool plus_side = false, unsigned threads = 0) {
    grid.validate();
    if (threads == 0) threads = detail::worker_count();
    EscapeField field{grid, {}};
    field.pixels.resize(grid.width * grid.height);
    detail::run_rows(
        field,
        [&](std::size_t i, std::size_t j) {
            PixelRecord rec;
            SpherePoint cur(grid.pixel(i, j));
            if (plus_side) cur = j_involution(par, cur);
            std::size_t n = 0;
            while (n < grid.max_iter && !in_delta_cov(cur))
                cur = f_map(par, cur).value, ++n;
            if (in_delta_cov(cur)) {
                rec.escape_index = static_cast<std::int32_t>(n);
                rec.last_point = cur.at_infinity ? Cx(0.0, 0.0) : cur.value;
                rec.in_dj_disc =
                    (!cur.at_infinity &&
                     detail::inside_dj_circle(par.a, cur.value))
                        ? 1
                        : 0;
            }
            return rec;
        },
        threads);
    return field;
}

struct Rgb {
    std::uint8_t r, g, b;
};

// Two hue families (one per fundamental-domain flag) cycled by escape
// band. Fixed table => byte-identical output for identical fields.
inline Rgb palette_color(std::int32_t escape_index, bool in_dj) {
    if (escape_index < 0) return {0, 0, 0};
    static constexpr Rgb warm[8] = {
        {255, 96, 0},  {232, 128, 24}, {208, 160, 48}, {184, 128, 72},
        {160, 96, 40}, {192, 64, 16},  {224, 80, 8},   {240, 112, 32},
    };
    static constexpr Rgb cool[8] = {
        {0, 96, 255},  {24, 128, 232}, {48, 160, 208}, {72, 128, 184},
        {40, 96, 160}, {16, 64, 192},  {8, 80, 224},   {32, 112, 240},
    };
    const Rgb* table = in_dj ? warm : cool;
    return table[static_cast<std::size_t>(escape_index) % 8];
}

// Binary PPM (P6), 8-bit RGB, black for non-escaping pixels.
inline void write_image(const EscapeField& field, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("write_image: cannot open " + path);
    out << "P6\n" << field.grid.width << " " << field.grid.height << "\n255\n";
    std::vector<unsigned char> row(field.grid.width * 3);
    for (std::size_t j = 0; j < field.grid.height; ++j) {
        for (std::size_t i = 0; i < field.grid.width; ++i) {
            const PixelRecord& rec = field.at(i, j);
            Rgb c = rec.undefined
                        ? Rgb{0, 0, 0}
                        : palette_color(rec.escape_index, rec.in_dj_disc != 0);
            row[3 * i] = c.r;
            row[3 * i + 1] = c.g;
            row[3 * i + 2] = c.b;
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    if (!out)
        throw std::runtime_error("write_image: write failed for " + path);
}

// One row per pixel: re,im,n,flag with n = -1 for non-escaping pixels.
inline void export_csv(const EscapeField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_csv: cannot open " + path);
    out << "re,im,n,flag\n";
    char buf[96];
    for (std::size_t j = 0; j < field.grid.height; ++j)
        for (std::size_t i = 0; i < field.grid.width; ++i) {
            const PixelRecord& rec = field.at(i, j);
            Cx c = field.grid.pixel(i, j);
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%d,%d\n", c.real(),
                          c.imag(), rec.escape_index,
                          static_cast<int>(rec.in_dj_disc));
            out << buf;
        }
    if (!out) throw std::runtime_error("export_csv: write failed for " + path);
}

}  // namespace modmat
