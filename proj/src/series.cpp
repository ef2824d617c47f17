#include "noncross/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace noncross {

Series::Series(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

Series Series::zero(int order) {
    return Series(std::vector<BigRational>(order + 1, BigRational(0)));
}

Series Series::constant(const BigRational& c, int order) {
    std::vector<BigRational> v(order + 1, BigRational(0));
    v[0] = c;
    return Series(std::move(v));
}

Series Series::x_power(int e, int order) {
    if (e < 0 || e > order) throw std::invalid_argument("monomial exponent out of range");
    std::vector<BigRational> v(order + 1, BigRational(0));
    v[e] = 1;
    return Series(std::move(v));
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRational& c) { return c == 0; });
}

Series add(const Series& a, const Series& b) {
    int order = std::min(a.order(), b.order());
    std::vector<BigRational> v(order + 1);
    for (int i = 0; i <= order; ++i) v[i] = a.coeffs()[i] + b.coeffs()[i];
    return Series(std::move(v));
}

Series sub(const Series& a, const Series& b) {
    int order = std::min(a.order(), b.order());
    std::vector<BigRational> v(order + 1);
    for (int i = 0; i <= order; ++i) v[i] = a.coeffs()[i] - b.coeffs()[i];
    return Series(std::move(v));
}

Series mul(const Series& a, const Series& b) {
    int order = std::min(a.order(), b.order());
    std::vector<BigRational> v(order + 1, BigRational(0));
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeffs()[j] == 0) continue;
            v[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return Series(std::move(v));
}

Series scale(const BigRational& c, const Series& a) {
    std::vector<BigRational> v(a.coeffs());
    for (auto& x : v) x *= c;
    return Series(std::move(v));
}

Series div(const Series& a, const Series& b) {
    int v = 0;
    while (v <= b.order() && b.coeffs()[v] == 0) ++v;
    if (v > b.order()) throw std::invalid_argument("division by zero series");
    for (int i = 0; i <= std::min(v - 1, a.order()); ++i) {
        if (a.coeffs()[i] != 0) throw std::invalid_argument("non-divisible");
    }
    int order = std::min(a.order(), b.order()) - v;
    if (order < 0) throw std::invalid_argument("non-divisible");
    // After cancelling x^v, divide by the unit via the standard recurrence.
    std::vector<BigRational> q(order + 1);
    const BigRational& b0 = b.coeffs()[v];
    for (int n = 0; n <= order; ++n) {
        BigRational acc = a.coeffs()[n + v];
        for (int j = 1; j <= n; ++j) acc -= b.coeffs()[j + v] * q[n - j];
        q[n] = acc / b0;
    }
    return Series(std::move(q));
}

Series sqrt_series(const Series& a) {
    auto s0 = exact_sqrt(a.coeffs()[0]);
    if (!s0 || *s0 == 0) throw std::invalid_argument("non-square constant term");
    int order = a.order();
    std::vector<BigRational> s(order + 1);
    s[0] = *s0;
    BigRational twice_s0 = 2 * s[0];
    for (int n = 1; n <= order; ++n) {
        BigRational acc = a.coeffs()[n];
        for (int i = 1; i < n; ++i) acc -= s[i] * s[n - i];
        s[n] = acc / twice_s0;
    }
    return Series(std::move(s));
}

Series truncate(const Series& a, int order) {
    if (order > a.order()) throw std::invalid_argument("beyond truncation order");
    std::vector<BigRational> v(a.coeffs().begin(), a.coeffs().begin() + order + 1);
    return Series(std::move(v));
}

BigRational coeff(const Series& a, int n) {
    if (n < 0 || n > a.order()) throw std::out_of_range("beyond truncation order");
    return a.coeffs()[n];
}

std::vector<BigInt> integer_coeffs(const Series& a) {
    std::vector<BigInt> out;
    out.reserve(a.coeffs().size());
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        const BigRational& c = a.coeffs()[i];
        if (boost::multiprecision::denominator(c) != 1)
            throw std::runtime_error("non-integral coefficient at index " + std::to_string(i));
        out.push_back(boost::multiprecision::numerator(c));
    }
    return out;
}

namespace {

std::string rational_str(const BigRational& c) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(c);
    if (boost::multiprecision::denominator(c) != 1)
        out << '/' << boost::multiprecision::denominator(c);
    return out.str();
}

}  // namespace

std::string to_string(const Series& a) {
    std::ostringstream out;
    bool first = true;
    for (int n = 0; n <= a.order(); ++n) {
        const BigRational& c = a.coeffs()[n];
        if (c == 0) continue;
        BigRational mag = c < 0 ? BigRational(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (n == 0) {
            out << rational_str(mag);
        } else {
            if (mag != 1) out << rational_str(mag) << '*';
            out << 'x';
            if (n > 1) out << '^' << n;
        }
    }
    if (first) out << '0';
    out << " + O(x^" << a.order() + 1 << ")";
    return out.str();
}

}  // namespace noncross
