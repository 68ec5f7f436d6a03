// Exact integer scalars used everywhere in the library.
//
// All coefficients, dimension counts and series entries are arbitrary-precision
// integers so that no verification result ever depends on machine word size.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace coalg {

using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// n! as an exact integer.
inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace coalg
