#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bbwdim {

/// Exact arbitrary-precision integer. Every dimension in this library is a
/// BigInt; rationals appear only transiently inside product formulas.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(long long n) {
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Exact binomial coefficient; 0 outside the triangle.
inline BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

/// Binomial with an arbitrarily large upper argument.
inline BigInt binomial_big(const BigInt& n, long long k) {
    if (n < 0 || k < 0 || n < k) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace bbwdim
