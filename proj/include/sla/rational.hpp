#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "sla/errors.hpp"

namespace sla {

// Exact arithmetic base types. cpp_rational keeps every value normalized
// (coprime numerator/denominator, denominator positive), so equality is
// plain comparison.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Renders "p" for integers and "p/q" otherwise; exact round trip with
// parse_rat below.
inline std::string rat_str(const Rat& r) {
    if (rat_den(r) == 1)
        return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Parses "p", "-p", "p/q" with optional surrounding sign on the numerator.
inline Rat parse_rat(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    Int num, den;
    try {
        if (slash == std::string::npos) {
            num = Int(text);
            den = 1;
        } else {
            num = Int(text.substr(0, slash));
            den = Int(text.substr(slash + 1));
        }
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
    if (den == 0)
        throw ParseError("zero denominator in rational literal '" + text + "'");
    return Rat(num, den);
}

inline Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

} // namespace sla
