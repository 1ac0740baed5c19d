#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace capcodes {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

/// "n/d", or "n" for integers.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "a/b", "a" or a finite decimal such as "0.01".
Rational parse_rational(const std::string& text);

}  // namespace capcodes
