#pragma once

#include <vector>

#include "noncross/numeric.hpp"
#include "noncross/polynomial.hpp"
#include "noncross/series.hpp"

namespace noncross {

// beta(j,j) = 1 and beta(i,j) = j*x*prod_{s=i+1}^{j-1}(s*x - 1) for i < j.
Polynomial beta(int i, int j);

// Root of the kernel with a power-series expansion:
//   y_k = (1-(k-2)x - sqrt((1-kx)^2-4x^2)) / (2x(1-(k-2)x)).
// Inputs are computed one order higher so the valuation-1 division still
// delivers the requested order. y_series(2) is the Catalan series.
Series y_series(int k, int order);

// Counts of partitions avoiding 12...k12 (d=2 family), as exact integers
// c_0..c_order.
std::vector<BigInt> gf_k2(int k, int order);
Series gf_k2_series(int k, int order);

// Counts of partitions avoiding 12...k1 (d=1 family).
std::vector<BigInt> gf_k1(int k, int order);
Series gf_k1_series(int k, int order);

// Expansion of I_l(x), the quotient built from the beta sums with j = 1..l.
std::vector<BigInt> gf_q(int ell, int order);
Series gf_q_series(int ell, int order);

// S(n,i) by the triangular recurrence; i outside 0..n counts as 0.
BigInt stirling2(int n, int i);
BigInt bell(int n);

// Partitions with at most k-1 blocks (d=0 family): sum_{i<k} S(n,i).
BigInt gf_k0(int k, int n);
std::vector<BigInt> gf_k0_sequence(int k, int n_max);

BigInt catalan(int n);

// Binomial transform of the Catalan numbers, indexed to start 1,1,2,5,...
// so that a007317(n) counts the partitions avoiding 12312 of [n].
BigInt a007317(int n);

// The five explicit closed forms for the d=1 family, k = 2..6, n >= 1
// (2^(n-1), (3^n+3)/6, ...). All families count 1 at n = 0, where these
// expressions are wrong or non-integral.
BigInt closed_form_k1(int k, int n);

// Substitutes y_series(k) into the denominator-cleared kernel
//   (1-y)(1-xy) + x^2 y^2 + (k-1)xy(1-xy);
// the result must vanish identically.
Series kernel_residual(int k, int order);

// Same check for the conjugate root (+sqrt branch). That root has a pole at
// x = 0, so the kernel is cleared of one more power of x and evaluated at
// u = x*y, which is a unit series:
//   (x-u)(1-u) + x u^2 + (k-1) x u (1-u).
Series kernel_residual_other_root(int k, int order);

}  // namespace noncross
