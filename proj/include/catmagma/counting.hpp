#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace catmagma {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// C_n = binom(2n, n) / (n + 1), exact.
inline BigInt catalan_number(long long n) {
    if (n < 0) throw std::invalid_argument("catalan_number: n must be >= 0");
    return binomial(2 * n, n) / (n + 1);
}

/// Number of norm-l elements of a free magma on p generators: p^l * C_{l-1}.
inline BigInt p_catalan_number(long long p, long long l) {
    if (p < 1 || l < 1) throw std::invalid_argument("p_catalan_number: need p >= 1, l >= 1");
    BigInt pw = 1;
    for (long long i = 0; i < l; ++i) pw *= p;
    return pw * catalan_number(l - 1);
}

/// Count of norm-n elements whose decomposition has k right generator
/// multiplications. Zero outside 1 <= k <= n-1.
inline BigInt narayana_value(long long n, long long k) {
    if (n < 2) throw std::invalid_argument("narayana_value: n must be >= 2");
    if (k < 1 || k > n - 1) return 0;
    return binomial(n - 1, k) * binomial(n - 1, k - 1) / (n - 1);
}

} // namespace catmagma
