#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace repmat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 decimal digits; used where an exact rational is not available (irrational scale factors).
using Real50 = boost::multiprecision::cpp_bin_float_50;

/// Converts an exact rational to the requested scalar type.
template <class Scalar>
Scalar rational_cast(const Rational& q) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
        return q;
    } else if constexpr (std::is_floating_point_v<Scalar>) {
        return static_cast<Scalar>(Real50(boost::multiprecision::numerator(q)) /
                                   Real50(boost::multiprecision::denominator(q)));
    } else {
        return Scalar(boost::multiprecision::numerator(q)) / Scalar(boost::multiprecision::denominator(q));
    }
}

/// "p/q" (or "p" when q == 1), decimal digits.
inline std::string to_string(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace repmat
