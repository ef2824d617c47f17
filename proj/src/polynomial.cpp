#include "noncross/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace noncross {

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const BigRational& c) {
    return Polynomial(std::vector<BigRational>{c});
}

Polynomial Polynomial::x_power(int e, const BigRational& c) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::vector<BigRational> v(e + 1, BigRational(0));
    v[e] = c;
    return Polynomial(std::move(v));
}

BigRational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[i];
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> v(std::max(a.coeffs().size(), b.coeffs().size()), BigRational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) v[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) v[i] += b.coeffs()[i];
    return Polynomial(std::move(v));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> v(std::max(a.coeffs().size(), b.coeffs().size()), BigRational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) v[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) v[i] -= b.coeffs()[i];
    return Polynomial(std::move(v));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<BigRational> v(a.coeffs().size() + b.coeffs().size() - 1, BigRational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return Polynomial(std::move(v));
}

Polynomial poly_scale(const BigRational& c, const Polynomial& a) {
    std::vector<BigRational> v(a.coeffs());
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Series poly_eval_series(const Polynomial& p, int order) {
    std::vector<BigRational> v(order + 1, BigRational(0));
    for (int i = 0; i <= std::min(p.degree(), order); ++i) v[i] = p.coeffs()[i];
    return Series(std::move(v));
}

namespace {

Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m, std::vector<int>& cols, int row) {
    int s = static_cast<int>(cols.size());
    if (s == 0) return Polynomial::constant(1);
    Polynomial acc;
    for (int j = 0; j < s; ++j) {
        const Polynomial& entry = m[row][cols[j]];
        if (entry.is_zero()) continue;
        int col = cols[j];
        cols.erase(cols.begin() + j);
        Polynomial minor = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + j, col);
        Polynomial term = poly_mul(entry, minor);
        acc = (j % 2 == 0) ? poly_add(acc, term) : poly_sub(acc, term);
    }
    return acc;
}

}  // namespace

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    size_t s = m.size();
    for (const auto& row : m) {
        if (row.size() != s) throw std::invalid_argument("non-square matrix");
    }
    if (s == 0) return Polynomial::constant(1);
    std::vector<int> cols(s);
    for (size_t i = 0; i < s; ++i) cols[i] = static_cast<int>(i);
    return det_rec(m, cols, 0);
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int n = p.degree(); n >= 0; --n) {
        const BigRational& c = p.coeffs()[n];
        if (c == 0) continue;
        BigRational mag = c < 0 ? BigRational(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::ostringstream ms;
        ms << boost::multiprecision::numerator(mag);
        if (boost::multiprecision::denominator(mag) != 1)
            ms << '/' << boost::multiprecision::denominator(mag);
        if (n == 0) {
            out << ms.str();
        } else {
            if (mag != 1) out << ms.str() << '*';
            out << 'x';
            if (n > 1) out << '^' << n;
        }
    }
    return out.str();
}

}  // namespace noncross
