#pragma once

#include <string>

#include "cpimm/atlas.hpp"
#include "cpimm/conditions.hpp"

namespace cpimm {

// Result of one bulk scan: how many subjects were checked, how many failed,
// and a description of the first failure.
struct CheckResult {
  long long checked = 0;
  long long failed = 0;
  std::string first_counterexample;

  bool passed() const { return failed == 0; }

  void fail(const std::string& what) {
    if (failed == 0) first_counterexample = what;
    ++failed;
  }
};

CheckResult merge(const CheckResult& a, const CheckResult& b);

// Both scans over the valuation vectors of (log(1+t)/t)^m for m = 1..max_m,
// sharing one series power per m:
//   lemma_equivalence: the closed form agrees with the direct condition
//     v_7 = v_8 < v_i (i < 7);
//   pattern_conformance: every applicable case pattern matches, the cases
//     cover exactly the m with nu(m) not in {1, 2}, and doubling m = 2^e ->
//     2^(e+1) raises every entry by one for e = 3..12.
struct ValuationScan {
  CheckResult lemma_equivalence;
  CheckResult pattern_conformance;
};

ValuationScan scan_valuation_patterns(long long max_m);

// lambda^(8p) = 1 + u1*8p T + u2*4p T^2 + u3*8p T^3 with all u_i of
// valuation 0, for p = 1..max_p.
CheckResult check_odd_fraction_structure(long long max_p);

// crabb_cp_system(p) is solvable exactly when p != 0 (mod 8), for
// p = 1..max_p.
CheckResult check_cp_solvability_law(long long max_p);

// crabb_hp_system(K) is unsolvable for K = 1..max_k.
CheckResult check_hp_unsolvability_law(long long max_k);

// For every n <= max_n with alpha(n) = 8, the divisibility condition holds
// exactly on the classes n == 22 (mod 32) or 132 (mod 256) for even n, and
// n == 15 (mod 16) or 37 (mod 64) for odd n.
CheckResult check_alpha8_congruence_reduction(long long max_n);

// Both scans over the published tables for n = 4..max_n with
// 2 <= alpha(n) <= 8, sharing one condition evaluation per n:
//   reproduction: exactly one row matches n and its nonimmersion entry
//     equals the theorem-derived value;
//   condition_consistency: every row asserting d = 2*alpha implies the
//     divisibility condition holds at each matching n.
struct TableScan {
  CheckResult reproduction;
  CheckResult condition_consistency;
};

TableScan scan_tables(long long max_n);

// The two binomial valuation formulas:
//   nu(C(-(4p+2), 4p+eps)) for eps = -2..1 equals alpha(p)-1,
//     2+alpha(p)+nu(p), alpha(p), alpha(p)+1, for p = 1..max_p;
//   nu(C(-(2l+1), 2l-eps)) = 3, 2, 2 for eps = 0..2 when alpha(l) = 3,
//     for l = 1..max_p.
CheckResult check_binomial_valuation_formulas(long long max_p);

}  // namespace cpimm
