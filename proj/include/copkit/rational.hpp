#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace copkit {

// Exact arithmetic for every identity-bearing quantity. Floating point is
// reserved for fits and diagnostics.
using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline double to_double(const rational& q) { return q.convert_to<double>(); }

inline std::string num_str(const rational& q) {
    return numerator(q).convert_to<std::string>();
}

inline std::string den_str(const rational& q) {
    return denominator(q).convert_to<std::string>();
}

// "num/den" in lowest terms; integers render without the "/1".
inline std::string fraction_str(const rational& q) {
    if (denominator(q) == 1) return num_str(q);
    return num_str(q) + "/" + den_str(q);
}

} // namespace copkit
