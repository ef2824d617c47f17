#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noncross/numeric.hpp"
#include "noncross/partition.hpp"

namespace noncross {

// Brute-force enumeration cost grows like Bell(n); the cap is enforced on
// every oracle entry point and surfaced on the CLI as --max-brute-n.
struct BruteForceLimits {
    int max_n = 12;
};

struct Discrepancy {
    std::string index;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string name;
    std::map<std::string, std::string> params;
    bool pass = true;
    std::optional<Discrepancy> first_discrepancy;
    double elapsed_ms = 0.0;

    std::string to_json() const;
};

// Counts of (k,d)-noncrossing partitions of [n], n = 0..n_max, by pruned
// enumeration.
std::vector<BigInt> bruteforce_series(int k, int d, int n_max,
                                      const BruteForceLimits& limits = {});

// Counts of (k,2)-noncrossing partitions with initial run length exactly l.
std::vector<BigInt> bruteforce_run_series(int k, int ell, int n_max,
                                          const BruteForceLimits& limits = {});

// The 65 published values for k = 2..6, n = 0..12.
const std::vector<std::vector<BigInt>>& reference_table1();

CheckReport check_table1();
// Fixture hook: compare gf_k2 against an arbitrary table (rows k=2..).
CheckReport check_table1_against(const std::vector<std::vector<BigInt>>& table);

// Formula expansion (d = 2, 1 or 0) against the pruned enumeration.
CheckReport check_series_vs_bruteforce(int k, int d, int n_max,
                                       const BruteForceLimits& limits = {});

// F_{k,l} = l*x*G_{k,l} + x^l for 1 <= l <= k-1, with both sides built from
// enumerated run-length counts.
CheckReport check_lemma1(int k, int ell, int order, const BruteForceLimits& limits = {});

// F_{k,k-1+j} = x^(k-1+j) + sum_{i<j} x^(j+1-i) G_{k,k-1+i} + (k-1)x G_{k,k-1+j}.
CheckReport check_lemma3(int k, int j, int order, const BruteForceLimits& limits = {});

// Determinant of the lower-Hessenberg matrix with rows a..b against
// b*x*prod_{j=a}^{b-1}(j*x - 1).
CheckReport check_determinant_identity(int a, int b);

// Functional equation for F_k(x,y), evaluated at rational y samples after
// clearing (1-y)(1-xy). Runs with length > order cannot reach coefficients
// of x^<=order, so truncating the run index at the order is exact.
CheckReport check_functional_equation(int k, int order,
                                      const std::vector<BigRational>& y_samples,
                                      const BruteForceLimits& limits = {});
std::vector<BigRational> default_y_samples(int count);

// Three-way comparison for I_l: (a) the formula expansion, (b) the Stirling
// partial sums, (c) enumeration of partitions with run length <= l. The
// check passes iff (a) = (b); an (a) != (c) mismatch is reported in params
// as informational.
CheckReport check_q_identity(int ell, int n_max, const BruteForceLimits& limits = {});

enum class Suite { quick, full };

std::vector<CheckReport> run_suite(Suite suite, const BruteForceLimits& limits = {},
                                   bool inject_table_error = false);

std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace noncross
