#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qspieri {

// All coefficients in this library are exact rationals.  Arbitrary precision
// is required: halved operator families and theta expansions introduce
// denominators that are powers of 2, and exact rank computations can grow
// intermediate numerators well past 64 bits.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) { return r.str(); }

// Accepts "p", "-p", "p/q", "-p/q".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

// 2^k for possibly negative k.
inline Rational pow2(long k) {
    if (k >= 0) return Rational(Integer(1) << k);
    return Rational(1, Integer(1) << (-k));
}

}  // namespace qspieri
