#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hkt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using i64 = long long;

// Raised when an operation would exceed a configured enumeration bound.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when input data violates a structural axiom.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

inline i64 gcd_ll(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i64 t = a % b; a = b; b = t; }
    return a;
}

// Exact division; throws if the quotient is not integral.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("exact_div: division by zero");
    Int q = a / b;
    if (q * b != a) throw std::logic_error("exact_div: non-exact division");
    return q;
}

inline i64 to_i64(const Int& v) {
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
        throw std::overflow_error("to_i64: value out of range");
    return static_cast<i64>(v);
}

}  // namespace hkt
