#ifndef HYPNET_RATIONAL_HPP
#define HYPNET_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hypnet/half_int.hpp"

namespace hypnet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational to_rational(HalfInt h) { return Rational(h.twice(), 2); }

// "p/q", or "p" when the denominator is 1.
inline std::string rational_str(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace hypnet

#endif
