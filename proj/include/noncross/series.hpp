#pragma once

#include <string>
#include <vector>

#include "noncross/numeric.hpp"

namespace noncross {

// Truncated formal power series in x with exact rational coefficients.
// Coefficients of x^(order+1) and beyond are unknown, not zero, so
// truncation orders shrink under division by non-units.
class Series {
public:
    explicit Series(std::vector<BigRational> coeffs);

    static Series zero(int order);
    static Series constant(const BigRational& c, int order);
    static Series x_power(int e, int order);  // the monomial x^e

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    // True iff every known coefficient is zero.
    bool is_zero() const;

private:
    std::vector<BigRational> coeffs_;  // exactly order+1 entries
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const BigRational& c, const Series& a);

// Series division with valuation cancellation: both operands are shifted
// down by the valuation of b, then divided by the resulting unit. The result
// order is min(order a, order b) minus that valuation.
Series div(const Series& a, const Series& b);

// The branch with positive constant term; requires a perfect-square c0.
Series sqrt_series(const Series& a);

Series truncate(const Series& a, int order);

BigRational coeff(const Series& a, int n);  // throws beyond the order
std::vector<BigInt> integer_coeffs(const Series& a);

std::string to_string(const Series& a);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

}  // namespace noncross
