#include "cpimm/checks.hpp"

namespace cpimm {

namespace {

std::string vector_to_string(const std::array<Valuation, 9>& v) {
  std::string s;
  for (const Valuation& x : v) {
    if (!s.empty()) s += ", ";
    s += x.to_string();
  }
  return s;
}

bool direct_lemma_condition(const std::array<Valuation, 9>& v) {
  if (v[7] != v[8]) return false;
  for (int i = 0; i < 7; ++i)
    if (!(v[7] < v[static_cast<std::size_t>(i)])) return false;
  return true;
}

}  // namespace

CheckResult merge(const CheckResult& a, const CheckResult& b) {
  CheckResult out;
  out.checked = a.checked + b.checked;
  out.failed = a.failed + b.failed;
  out.first_counterexample =
      a.failed > 0 ? a.first_counterexample : b.first_counterexample;
  return out;
}

ValuationScan scan_valuation_patterns(long long max_m) {
  ValuationScan scan;
  for (long long m = 1; m <= max_m; ++m) {
    const std::array<Valuation, 9> v = valuation_vector(m);

    const bool direct = direct_lemma_condition(v);
    const bool closed = lemma_closed_form(m);
    ++scan.lemma_equivalence.checked;
    if (direct != closed)
      scan.lemma_equivalence.fail(
          "m=" + std::to_string(m) + ": direct condition " +
          (direct ? "true" : "false") + " but closed form " +
          (closed ? "true" : "false"));

    const std::optional<ValuationPattern> pat = case_pattern(m);
    const long long vm = nu(m).value();
    const bool applicable = vm == 0 || vm >= 3;
    if (pat.has_value() != applicable) {
      ++scan.pattern_conformance.checked;
      scan.pattern_conformance.fail("m=" + std::to_string(m) +
                                    ": case coverage disagrees with nu(m)=" +
                                    std::to_string(vm));
    } else if (pat) {
      ++scan.pattern_conformance.checked;
      if (!pat->matches(v))
        scan.pattern_conformance.fail("m=" + std::to_string(m) + " (" +
                                      pat->describe() +
                                      "): vector " + vector_to_string(v));
    }
  }

  // Doubling: squaring the series adds one to every entry past the constant
  // term (the dominant product term is 2 c_0 c_i); the constant term itself
  // is always 1.
  for (long long e = 3; e <= 12; ++e) {
    const std::array<Valuation, 9> v1 = valuation_vector(1LL << e);
    const std::array<Valuation, 9> v2 = valuation_vector(1LL << (e + 1));
    ++scan.pattern_conformance.checked;
    if (v1[0] != Valuation(0) || v2[0] != Valuation(0)) {
      scan.pattern_conformance.fail("doubling 2^" + std::to_string(e) +
                                    ": constant entry is not a unit");
      continue;
    }
    for (std::size_t i = 1; i < 9; ++i) {
      if (v2[i] != v1[i] + 1) {
        scan.pattern_conformance.fail(
            "doubling 2^" + std::to_string(e) + " -> 2^" + std::to_string(e + 1) +
            ": entry " + std::to_string(i) + " is " + v2[i].to_string() +
            ", expected " + (v1[i] + 1).to_string());
        break;
      }
    }
  }
  return scan;
}

CheckResult check_odd_fraction_structure(long long max_p) {
  CheckResult out;
  for (long long p = 1; p <= max_p; ++p) {
    const TruncatedSeries s =
        pow_trunc(lambda_series(3), static_cast<unsigned long long>(8 * p));
    ++out.checked;
    if (s.coeff(0) != Rational(1)) {
      out.fail("p=" + std::to_string(p) + ": constant term " + s.coeff(0).to_string());
      continue;
    }
    const long long mult[4] = {0, 8, 4, 8};
    for (int i = 1; i <= 3; ++i) {
      const Rational u = s.coeff(i) / Rational(mult[i] * p);
      if (nu(u) != Valuation(0)) {
        out.fail("p=" + std::to_string(p) + ": coefficient " + std::to_string(i) +
                 " = " + s.coeff(i).to_string() + " is not an odd multiple of " +
                 std::to_string(mult[i]) + "p");
        break;
      }
    }
  }
  return out;
}

CheckResult check_cp_solvability_law(long long max_p) {
  CheckResult out;
  for (long long p = 1; p <= max_p; ++p) {
    const ObstructionSystem sys = crabb_cp_system(p);
    const bool expected = p % 8 != 0;
    ++out.checked;
    if (sys.result.solvable != expected)
      out.fail("p=" + std::to_string(p) + ": " +
               (sys.result.solvable ? "solvable" : "unsolvable") + ", expected " +
               (expected ? "solvable" : "unsolvable"));
  }
  return out;
}

CheckResult check_hp_unsolvability_law(long long max_k) {
  CheckResult out;
  for (long long K = 1; K <= max_k; ++K) {
    const ObstructionSystem sys = crabb_hp_system(K);
    ++out.checked;
    if (sys.result.solvable)
      out.fail("K=" + std::to_string(K) + ": solvable with e == " +
               sys.result.residue.str() + " (mod 2^" +
               std::to_string(sys.result.residue_modulus_exponent) + ")");
  }
  return out;
}

CheckResult check_alpha8_congruence_reduction(long long max_n) {
  CheckResult out;
  for (long long n = 1; n <= max_n; ++n) {
    if (alpha(n) != 8) continue;
    const bool holds = sigrist_suter(n).holds;
    const bool expected = n % 2 == 0 ? (n % 32 == 22 || n % 256 == 132)
                                     : (n % 16 == 15 || n % 64 == 37);
    ++out.checked;
    if (holds != expected)
      out.fail("n=" + std::to_string(n) + ": condition " +
               (holds ? "holds" : "fails") + " but the congruence classes say " +
               (expected ? "holds" : "fails"));
  }
  return out;
}

TableScan scan_tables(long long max_n) {
  TableScan scan;
  for (long long n = 4; n <= max_n; ++n) {
    const long long a = alpha(n);
    if (a < 2 || a > 8) continue;

    ++scan.reproduction.checked;
    const int matches = table_match_count(n);
    if (matches != 1) {
      scan.reproduction.fail("n=" + std::to_string(n) + ": " +
                             std::to_string(matches) + " rows match");
      continue;
    }
    const TableRow* row = find_table_row(n);
    const bool holds = sigrist_suter(n).holds;
    const NonimmersionResult ni =
        nonimmersion_from_condition(static_cast<int>(a), epsilon_ss(n), holds);
    if (!row->e || *row->e != ni.e)
      scan.reproduction.fail("n=" + std::to_string(n) + ": table e " +
                             (row->e ? std::to_string(*row->e) : "absent") +
                             ", derived e " + std::to_string(ni.e) + " (" +
                             ni.trace + ")");

    if (row->d == 2 * a) {
      ++scan.condition_consistency.checked;
      if (!holds)
        scan.condition_consistency.fail(
            "n=" + std::to_string(n) + ": row asserts d = 2*alpha = " +
            std::to_string(row->d) + " but the divisibility condition fails");
    }
  }
  return scan;
}

CheckResult check_binomial_valuation_formulas(long long max_p) {
  CheckResult out;
  for (long long p = 1; p <= max_p; ++p) {
    ++out.checked;
    const Valuation expected[4] = {Valuation(alpha(p) - 1), nu(p) + (2 + alpha(p)),
                                   Valuation(alpha(p)), Valuation(alpha(p) + 1)};
    for (int i = 0; i < 4; ++i) {
      const long long eps = i - 2;
      const Valuation got = nu_binomial(-(4 * p + 2), 4 * p + eps);
      if (got != expected[i]) {
        out.fail("p=" + std::to_string(p) + ", eps=" + std::to_string(eps) +
                 ": nu(C(-(4p+2), 4p+eps)) = " + got.to_string() + ", expected " +
                 expected[i].to_string());
        break;
      }
    }
  }
  for (long long l = 1; l <= max_p; ++l) {
    if (alpha(l) != 3) continue;
    ++out.checked;
    const long long expected[3] = {3, 2, 2};
    for (int eps = 0; eps <= 2; ++eps) {
      const Valuation got = nu_binomial(-(2 * l + 1), 2 * l - eps);
      if (got != Valuation(expected[eps])) {
        out.fail("l=" + std::to_string(l) + ", eps=" + std::to_string(eps) +
                 ": nu(C(-(2l+1), 2l-eps)) = " + got.to_string() + ", expected " +
                 std::to_string(expected[eps]));
        break;
      }
    }
  }
  return out;
}

}  // namespace cpimm
