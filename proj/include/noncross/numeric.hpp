#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>

namespace noncross {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline BigRational rat_pow(const BigRational& base, unsigned exp) {
    BigRational r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline BigInt binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt acc = 1;
    for (unsigned i = 1; i <= r; ++i) {
        acc *= n - r + i;
        acc /= i;
    }
    return acc;
}

// Exact square root of a non-negative rational, or nullopt if it is not a
// perfect square.
inline std::optional<BigRational> exact_sqrt(const BigRational& v) {
    if (v < 0) return std::nullopt;
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return BigRational(sn, sd);
}

}  // namespace noncross
