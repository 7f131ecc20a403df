#pragma once

#include <cctype>
#include <complex>
#include <stdexcept>
#include <string>

#include "modmat/contfrac.hpp"

namespace modmat {

// "x+yi" with optional spaces; accepts "4", "-1.5-0.25i", "3i", "i",
// "-i" and exponent forms like "2.5e-3+1e2i".
inline std::complex<double> parse_complex(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty complex literal");
    auto parse_num = [](const std::string& u, std::size_t& pos) {
        std::size_t start = pos;
        if (pos < u.size() && (u[pos] == '+' || u[pos] == '-')) ++pos;
        std::size_t digits = 0;
        while (pos < u.size() &&
               (std::isdigit(static_cast<unsigned char>(u[pos])) ||
                u[pos] == '.' || u[pos] == 'e' || u[pos] == 'E' ||
                ((u[pos] == '+' || u[pos] == '-') &&
                 (u[pos - 1] == 'e' || u[pos - 1] == 'E')))) {
            ++pos;
            ++digits;
        }
        // a bare sign before 'i' means coefficient 1
        if (digits == 0) return std::string(u.substr(start, pos - start) + "1");
        return std::string(u.substr(start, pos - start));
    };
    std::size_t pos = 0;
    std::string first = parse_num(t, pos);
    if (pos == t.size()) return {std::stod(first), 0.0};
    if (t[pos] == 'i' && pos + 1 == t.size()) return {0.0, std::stod(first)};
    std::string second = parse_num(t, pos);
    if (pos + 1 != t.size() || t[pos] != 'i')
        throw std::invalid_argument("cannot parse complex literal: " + s);
    return {std::stod(first), std::stod(second)};
}

// "a0;a1,a2,(p1,p2)" -- parentheses mark the repeating block; a leading
// "(...)" alone denotes a purely periodic expansion.
inline ContinuedFraction parse_cf(const std::string& s) {
    ContinuedFraction cf;
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    bool in_period = false;
    std::string cur;
    bool saw_semicolon = false;
    auto flush = [&](bool required) {
        if (cur.empty()) {
            if (required) throw std::invalid_argument("bad cf entry");
            return;
        }
        std::int64_t v = std::stoll(cur);
        (in_period ? cf.period : cf.pre).push_back(v);
        cur.clear();
    };
    for (char c : t) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            cur.push_back(c);
        } else if (c == ';') {
            flush(true);
            saw_semicolon = true;
        } else if (c == ',') {
            flush(false);
        } else if (c == '(') {
            flush(false);
            in_period = true;
        } else if (c == ')') {
            flush(false);
            in_period = false;
        } else {
            throw std::invalid_argument(std::string("bad cf character: ") + c);
        }
    }
    flush(false);
    if (!saw_semicolon && cf.pre.size() > 1)
        throw std::invalid_argument("cf needs 'a0;...' form");
    cf.validate();
    return cf;
}

// "0.bits(periodbits)"
inline BinaryAngle parse_binary(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.rfind("0.", 0) != 0)
        throw std::invalid_argument("binary angle must start with 0.");
    std::vector<int> pre, per;
    bool in_period = false;
    for (std::size_t i = 2; i < t.size(); ++i) {
        char c = t[i];
        if (c == '(') {
            in_period = true;
        } else if (c == ')') {
            in_period = false;
        } else if (c == '0' || c == '1') {
            (in_period ? per : pre).push_back(c - '0');
        } else {
            throw std::invalid_argument("bad binary digit");
        }
    }
    return BinaryAngle::from_bits(pre, per);
}

}  // namespace modmat
