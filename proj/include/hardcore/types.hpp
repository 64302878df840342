#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hardcore {

// Exact arithmetic backends. Counts are arbitrary-precision integers and all
// probability/ratio comparisons that the certifications rely on are done in
// exact rationals; floats appear only in eigenvalue work and reports.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& x) { return x.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

inline Rat rat_pow(const Rat& x, unsigned k) {
    Rat r = 1;
    Rat base = x;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

inline BigInt int_pow(const BigInt& x, unsigned k) {
    BigInt r = 1, base = x;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

// Parses "p/q", an integer, or a plain decimal ("0.5") into an exact rational.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        unsigned frac = static_cast<unsigned>(s.size() - dot - 1);
        BigInt num(digits.empty() ? "0" : digits);
        return Rat(num, int_pow(BigInt(10), frac));
    }
    return Rat(BigInt(s));
}

inline std::string format_rational(const Rat& x) {
    std::string n = numerator(x).str();
    if (denominator(x) == 1) return n;
    return n + "/" + denominator(x).str();
}

}  // namespace hardcore
