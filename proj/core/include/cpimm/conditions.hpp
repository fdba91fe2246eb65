#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cpimm/congruence.hpp"
#include "cpimm/dyadic.hpp"
#include "cpimm/series.hpp"

namespace cpimm {

// Valuations of the coefficients c_0..c_alpha of (log(1+t)/t)^m at
// m = 2n+1-alpha(n), and the verdict of the divisibility condition
//   nu(c_{alpha-1}) = nu(c_alpha) < nu(c_i) for all i < alpha-1.
struct SigristSuterReport {
  long long n = 0;
  int alpha_n = 0;
  long long m = 0;
  std::vector<Valuation> coefficient_valuations;
  bool holds = false;
};

// Evaluates the condition above. Requires alpha(n) >= 2.
SigristSuterReport sigrist_suter(long long n);

// Valuations v_0(m)..v_8(m) of the first nine coefficients of
// (log(1+t)/t)^m. Requires m >= 1.
std::array<Valuation, 9> valuation_vector(long long m);

// Closed form equivalent to v_7(m) = v_8(m) < v_i(m) for i < 7:
//   nu(m-7) = 4  or  nu(m-5) = 5  or  nu(m-3) = 6  or  nu(m-1) = 8.
// Requires m >= 1.
bool lemma_closed_form(long long m);

// One of the nine tabulated valuation-vector shapes, instantiated at a
// concrete m. Entries may be exact or lower bounds.
struct ValuationPattern {
  int case_id = 0;    // 1..9, in the residue-class order below
  long long e = 0;    // case 1: m = 2^e (2a+1), e >= 3
  long long a = 0;
  long long k = 0;    // cases 2..9: the class parameter

  std::array<TruncatedValuation, 9> entries;

  bool matches(const std::array<Valuation, 9>& v) const;

  // "case 2: m = 7 + 8k with k = 3" and the like.
  std::string describe() const;
};

// Selects and instantiates the pattern covering m:
//   1: nu(m) >= 3        2: m == 7 (mod 8)    3: m == 5 (mod 8)
//   4: m == 3 (mod 32)   5: m == 19 (mod 32)  6: m == 11 (mod 16)
//   7: m == 9 (mod 16)   8: m == 17 (mod 32)  9: m == 1 (mod 32)
// Returns nullopt when nu(m) is 1 or 2, which no tabulated case covers.
// Requires m >= 1.
std::optional<ValuationPattern> case_pattern(long long m);

// A congruence system extracted from coefficients of a series power,
// together with its solution or conflict certificate.
struct ObstructionSystem {
  std::vector<CongruenceConstraint> constraints;
  SolveResult result;
};

// System on coefficients 0..3 of lambda(T)^(8p): targets (0,0,0,64) with
// modulus exponents (1,3,5,7). Solvable exactly when p != 0 (mod 8).
// Requires p >= 1.
ObstructionSystem crabb_cp_system(long long p);

// System on coefficients 0..2 of lambda(T)^(4K-1): targets (0,8,16) with
// modulus exponents (1,4,5). Unsolvable for every K >= 1.
ObstructionSystem crabb_hp_system(long long K);

}  // namespace cpimm
