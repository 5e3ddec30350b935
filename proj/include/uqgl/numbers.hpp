// Arbitrary-precision integer/rational aliases and small helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace uqgl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = int_gcd(a, b);
    Int l = (a / g) * b;
    return l < 0 ? -l : l;
}

// gcd on rationals: the positive generator of the fractional ideal (a, b).
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    Int n = int_gcd(numerator(a), numerator(b));
    Int d = int_lcm(denominator(a), denominator(b));
    return Rat(n, d);
}

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct denominator_vanishes_at_root : error {
    denominator_vanishes_at_root()
        : error("denominator vanishes at the root of unity") {}
};

struct invalid_index : error {
    explicit invalid_index(const std::string& what) : error(what) {}
};

struct non_dominant_weight : error {
    explicit non_dominant_weight(const std::string& what) : error(what) {}
};

struct incompatible_character : error {
    explicit incompatible_character(const std::string& what) : error(what) {}
};

// Engine self-consistency failures (rule cycles, budget overruns).
struct internal_defect : error {
    explicit internal_defect(const std::string& what) : error(what) {}
};

struct unknown_commutation_rule : internal_defect {
    explicit unknown_commutation_rule(const std::string& what)
        : internal_defect(what) {}
};

struct parse_error : error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace uqgl
