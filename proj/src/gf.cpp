#include "noncross/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace noncross {

namespace {

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

void require_k(int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
}

void require_order(int order) {
    if (order < 0) throw std::invalid_argument("order must be non-negative");
}

// Discriminant (1-kx)^2 - 4x^2 as a polynomial.
Polynomial discriminant(int k) {
    return Polynomial({1, -2 * k, BigRational(k) * k - 4});
}

// 1 - (k-2)x
Polynomial one_minus_km2_x(int k) {
    return Polynomial({1, -(k - 2)});
}

// sum_{j=j_lo}^{j_hi} sum_{i=0}^{j} (-1)^(i+j) x^i beta(i,j)
Polynomial beta_sum_num(int j_lo, int j_hi) {
    Polynomial acc;
    for (int j = j_lo; j <= j_hi; ++j) {
        for (int i = 0; i <= j; ++i) {
            Polynomial term = poly_mul(Polynomial::x_power(i, sign(i + j)), beta(i, j));
            acc = poly_add(acc, term);
        }
    }
    return acc;
}

// sum_{j=j_lo}^{j_hi} sum_{i=0}^{j} (-1)^(i+j) i x beta(i,j)
Polynomial beta_sum_den(int j_lo, int j_hi) {
    Polynomial acc;
    for (int j = j_lo; j <= j_hi; ++j) {
        for (int i = 0; i <= j; ++i) {
            Polynomial term = poly_mul(Polynomial::x_power(1, sign(i + j) * i), beta(i, j));
            acc = poly_add(acc, term);
        }
    }
    return acc;
}

// sum_{i=0}^{j} (-1)^(i+j) x^i beta(i,j) for a single j
Polynomial beta_row_num(int j) { return beta_sum_num(j, j); }

// sum_{i=0}^{j} (-1)^(i+j) i beta(i,j) for a single j (no x factor)
Polynomial beta_row_den_bare(int j) {
    Polynomial acc;
    for (int i = 0; i <= j; ++i) {
        acc = poly_add(acc, poly_scale(sign(i + j) * i, beta(i, j)));
    }
    return acc;
}

}  // namespace

Polynomial beta(int i, int j) {
    if (i < 0 || j < 0 || i > j) throw std::invalid_argument("beta requires 0 <= i <= j");
    if (i == j) return Polynomial::constant(1);
    Polynomial acc = Polynomial::x_power(1, j);
    for (int s = i + 1; s <= j - 1; ++s) {
        acc = poly_mul(acc, Polynomial({-1, s}));
    }
    return acc;
}

Series y_series(int k, int order) {
    require_k(k);
    require_order(order);
    int m = order + 1;
    Series root = sqrt_series(poly_eval_series(discriminant(k), m));
    Series num = sub(poly_eval_series(one_minus_km2_x(k), m), root);
    Series den = poly_eval_series(poly_mul(Polynomial({0, 2}), one_minus_km2_x(k)), m);
    return div(num, den);  // valuation 1 cancels, leaving exactly `order`
}

Series gf_k2_series(int k, int order) {
    require_k(k);
    require_order(order);
    int m = std::max(order + 2, k - 1);  // the x^(k-1) tail must be representable
    Series y = y_series(k, m);
    Series one = Series::constant(1, m);
    Series xy = mul(Series::x_power(1, m), y);
    Series tail = div(mul(Series::x_power(k - 1, m), y), sub(one, xy));
    Series num = add(tail, poly_eval_series(beta_sum_num(0, k - 2), m));
    Series den = poly_eval_series(poly_sub(Polynomial::constant(1), beta_sum_den(0, k - 2)), m);
    return truncate(div(num, den), order);
}

std::vector<BigInt> gf_k2(int k, int order) { return integer_coeffs(gf_k2_series(k, order)); }

Series gf_k1_series(int k, int order) {
    require_k(k);
    require_order(order);
    Polynomial one_minus_x({1, -1});
    Polynomial s1 = beta_sum_num(1, k - 2);
    Polynomial s2 = beta_row_num(k - 1);
    Polynomial num = poly_add(one_minus_x, poly_add(poly_mul(one_minus_x, s1), s2));

    Polynomial t1;
    for (int j = 1; j <= k - 2; ++j) t1 = poly_add(t1, beta_row_den_bare(j));
    Polynomial t2 = beta_row_den_bare(k - 1);
    Polynomial x = Polynomial::x_power(1);
    Polynomial den = poly_sub(one_minus_x, poly_add(poly_mul(poly_mul(x, one_minus_x), t1),
                                                    poly_mul(x, t2)));
    int m = order + 2;
    return truncate(div(poly_eval_series(num, m), poly_eval_series(den, m)), order);
}

std::vector<BigInt> gf_k1(int k, int order) { return integer_coeffs(gf_k1_series(k, order)); }

Series gf_q_series(int ell, int order) {
    if (ell < 0) throw std::invalid_argument("l must be non-negative");
    require_order(order);
    Polynomial num = poly_add(Polynomial::constant(1), beta_sum_num(1, ell));
    Polynomial den = poly_sub(Polynomial::constant(1), beta_sum_den(1, ell));
    int m = order + 2;
    return truncate(div(poly_eval_series(num, m), poly_eval_series(den, m)), order);
}

std::vector<BigInt> gf_q(int ell, int order) { return integer_coeffs(gf_q_series(ell, order)); }

namespace {

std::vector<BigInt> stirling_row(int n) {
    std::vector<BigInt> row{1};  // S(0,0)
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1, 0);
        for (int i = 1; i <= m; ++i) {
            next[i] = (i < m ? row[i] * i : BigInt(0)) + row[i - 1];
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

BigInt stirling2(int n, int i) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (i < 0 || i > n) return 0;
    return stirling_row(n)[i];
}

BigInt bell(int n) {
    auto row = stirling_row(n);
    BigInt acc = 0;
    for (const auto& v : row) acc += v;
    return acc;
}

BigInt gf_k0(int k, int n) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    auto row = stirling_row(n);
    BigInt acc = 0;
    for (int i = 0; i <= std::min(k - 1, n); ++i) acc += row[i];
    return acc;
}

std::vector<BigInt> gf_k0_sequence(int k, int n_max) {
    std::vector<BigInt> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) out.push_back(gf_k0(k, n));
    return out;
}

BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    return binomial(2 * n, n) / (n + 1);
}

BigInt a007317(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (n == 0) return 1;
    // The alternating sum evaluates the binomial transform of the Catalan
    // numbers; the partition count of [n] is its entry n-1.
    int m = n - 1;
    BigInt acc = 0;
    for (int i = 0; i <= m; ++i) {
        BigInt term = big_pow(3, m - i) * binomial(m, i) * binomial(i, i / 2);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

BigInt closed_form_k1(int k, int n) {
    if (k < 2 || k > 6 || n < 1) throw std::invalid_argument("closed form out of range");
    BigInt num;
    BigInt den;
    switch (k) {
        case 2:
            num = big_pow(2, n - 1);
            den = 1;
            break;
        case 3:
            num = big_pow(3, n) + 3;
            den = 6;
            break;
        case 4:
            num = big_pow(4, n) + 6 * big_pow(2, n) + 8;
            den = 24;
            break;
        case 5:
            num = big_pow(5, n) + 10 * big_pow(3, n) + 20 * big_pow(2, n) + 45;
            den = 120;
            break;
        default:
            num = big_pow(6, n) + 15 * big_pow(4, n) + 40 * big_pow(3, n) +
                  135 * big_pow(2, n) + 264;
            den = 720;
            break;
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("closed form not integral");
    return q;
}

Series kernel_residual(int k, int order) {
    require_k(k);
    require_order(order);
    int m = order + 2;
    Series y = y_series(k, m);
    Series one = Series::constant(1, m);
    Series x = Series::x_power(1, m);
    Series xy = mul(x, y);
    Series term1 = mul(sub(one, y), sub(one, xy));
    Series term2 = mul(Series::x_power(2, m), mul(y, y));
    Series term3 = scale(k - 1, mul(xy, sub(one, xy)));
    return truncate(add(term1, add(term2, term3)), order);
}

Series kernel_residual_other_root(int k, int order) {
    require_k(k);
    require_order(order);
    int m = order + 2;
    Series root = sqrt_series(poly_eval_series(discriminant(k), m));
    Series lead = poly_eval_series(one_minus_km2_x(k), m);
    Series u = div(add(lead, root), poly_eval_series(poly_scale(2, one_minus_km2_x(k)), m));
    Series one = Series::constant(1, m);
    Series x = Series::x_power(1, m);
    Series one_minus_u = sub(one, u);
    Series term1 = mul(sub(x, u), one_minus_u);
    Series term2 = mul(x, mul(u, u));
    Series term3 = scale(k - 1, mul(x, mul(u, one_minus_u)));
    return truncate(add(term1, add(term2, term3)), order);
}

}  // namespace noncross
