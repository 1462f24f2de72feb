#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rational& r) {
    return is_integer(r) && numerator(r) >= 0;
}

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("to_long: not an integer: " + r.str());
    return static_cast<long>(numerator(r));
}

/// "p" or "p/q", q > 0.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

} // namespace qd
