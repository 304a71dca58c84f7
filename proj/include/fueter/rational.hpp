// Exact rational scalar for the polynomial identity path.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fueter {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
inline Rational pochhammer(const Rational& a, int n) {
    Rational p = 1;
    for (int i = 0; i < n; ++i) p *= a + i;
    return p;
}

}  // namespace fueter
