#pragma once

// Exact base scalars. BigRational is always canonical (coprime numerator and
// denominator, denominator positive, zero is 0/1), so structural equality is
// mathematical equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace treepoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

/// Binomial coefficient over the integers, multiplicative form. Exact at
/// every step because each prefix product of k consecutive integers is
/// divisible by k!.
inline BigInt integerBinomial(const BigInt& n, unsigned k) {
    BigInt out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= n - i;
        out /= static_cast<int>(i) + 1;
    }
    return out;
}

inline std::string toString(const BigRational& value) { return value.str(); }

} // namespace treepoly
