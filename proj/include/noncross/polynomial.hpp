#pragma once

#include <string>
#include <vector>

#include "noncross/numeric.hpp"
#include "noncross/series.hpp"

namespace noncross {

// Exact polynomial in x over the rationals. Coefficient i belongs to x^i;
// no trailing zeros are stored, the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigRational> coeffs);
    static Polynomial constant(const BigRational& c);
    static Polynomial x_power(int e, const BigRational& c = 1);  // c*x^e

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational coeff(int i) const;

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    void normalize();
    std::vector<BigRational> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const BigRational& c, const Polynomial& a);

// The polynomial read as a series truncated at the given order.
Series poly_eval_series(const Polynomial& p, int order);

// Exact determinant by cofactor expansion along the first row, skipping
// zero entries (the matrices checked here are lower Hessenberg).
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

std::string to_string(const Polynomial& p);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly_add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return poly_sub(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

}  // namespace noncross
