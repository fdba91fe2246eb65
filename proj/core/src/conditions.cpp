#include "cpimm/conditions.hpp"

#include <stdexcept>

namespace cpimm {

namespace {

constexpr auto E = &TruncatedValuation::exact;
constexpr auto AL = &TruncatedValuation::at_least;

struct CaseClass {
  long long offset;
  long long modulus;
};

// Residue classes for cases 2..9.
CaseClass case_class(int case_id) {
  switch (case_id) {
    case 2: return {7, 8};
    case 3: return {5, 8};
    case 4: return {3, 32};
    case 5: return {19, 32};
    case 6: return {11, 16};
    case 7: return {9, 16};
    case 8: return {17, 32};
    case 9: return {1, 32};
    default: throw std::logic_error("case_class: bad case id");
  }
}

}  // namespace

SigristSuterReport sigrist_suter(long long n) {
  if (n < 2) throw std::invalid_argument("sigrist_suter: n must be >= 2");
  const long long a = alpha(n);
  if (a < 2) throw std::invalid_argument("sigrist_suter: alpha(n) must be >= 2");

  SigristSuterReport rep;
  rep.n = n;
  rep.alpha_n = static_cast<int>(a);
  rep.m = 2 * n + 1 - a;

  const TruncatedSeries s =
      pow_trunc(log_over_t_series(rep.alpha_n), static_cast<unsigned long long>(rep.m));
  rep.coefficient_valuations.reserve(static_cast<std::size_t>(a) + 1);
  for (int i = 0; i <= rep.alpha_n; ++i)
    rep.coefficient_valuations.push_back(nu(s.coeff(i)));

  const Valuation tail = rep.coefficient_valuations[static_cast<std::size_t>(a - 1)];
  bool holds = tail == rep.coefficient_valuations[static_cast<std::size_t>(a)];
  for (int i = 0; holds && i < rep.alpha_n - 1; ++i)
    holds = tail < rep.coefficient_valuations[static_cast<std::size_t>(i)];
  rep.holds = holds;
  return rep;
}

std::array<Valuation, 9> valuation_vector(long long m) {
  if (m < 1) throw std::invalid_argument("valuation_vector: m must be >= 1");
  const TruncatedSeries s =
      pow_trunc(log_over_t_series(8), static_cast<unsigned long long>(m));
  std::array<Valuation, 9> v{0, 0, 0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i <= 8; ++i) v[static_cast<std::size_t>(i)] = nu(s.coeff(i));
  return v;
}

bool lemma_closed_form(long long m) {
  if (m < 1) throw std::invalid_argument("lemma_closed_form: m must be >= 1");
  return nu(m - 7) == Valuation(4) || nu(m - 5) == Valuation(5) ||
         nu(m - 3) == Valuation(6) || nu(m - 1) == Valuation(8);
}

bool ValuationPattern::matches(const std::array<Valuation, 9>& v) const {
  for (std::size_t i = 0; i < 9; ++i)
    if (!entries[i].matches(v[i])) return false;
  return true;
}

std::string ValuationPattern::describe() const {
  if (case_id == 1)
    return "case 1: m = 2^e (2a+1) with e = " + std::to_string(e) +
           ", a = " + std::to_string(a);
  const CaseClass c = case_class(case_id);
  return "case " + std::to_string(case_id) + ": m = " + std::to_string(c.offset) +
         " + " + std::to_string(c.modulus) + "k with k = " + std::to_string(k);
}

std::optional<ValuationPattern> case_pattern(long long m) {
  if (m < 1) throw std::invalid_argument("case_pattern: m must be >= 1");

  ValuationPattern p;
  const Valuation vm = nu(m);
  if (vm >= Valuation(3)) {
    p.case_id = 1;
    p.e = vm.value();
    p.a = ((m >> p.e) - 1) / 2;
    const long long e = p.e;
    p.entries = {E(0),     E(e - 1), E(e - 3), E(e - 3), E(e - 6),
                 E(e - 5), E(e - 7), E(e - 7), E(e - 11)};
    return p;
  }
  if (m % 2 == 0) return std::nullopt;

  switch (m % 8) {
    case 7:
      p.case_id = 2;
      p.k = (m - 7) / 8;
      p.entries = {E(0),  E(-1), E(-2), E(-3), E(-4),
                   E(-5), E(-6), E(-7), nu_trunc(p.k, 2) + (-8)};
      return p;
    case 5:
      p.case_id = 3;
      p.k = (m - 5) / 8;
      p.entries = {E(0),  E(-1), E(-1),  AL(-1), E(-4),
                   E(-5), AL(-4), E(-6), nu_trunc(p.k, 3) + (-8)};
      return p;
    default:
      break;
  }
  switch (m % 16) {
    case 11:
      p.case_id = 6;
      p.k = (m - 11) / 16;
      p.entries = {E(0),   E(-1), E(-2), E(-3), E(-3),
                   AL(-3), E(-5), E(-6), E(-8)};
      return p;
    case 9:
      p.case_id = 7;
      p.k = (m - 9) / 16;
      p.entries = {E(0),  E(-1), AL(-1), E(-2), E(-3),
                   E(-4), E(-4), AL(-3), E(-8)};
      return p;
    default:
      break;
  }
  switch (m % 32) {
    case 3:
      p.case_id = 4;
      p.k = (m - 3) / 32;
      p.entries = {E(0),  E(-1), E(-2), E(-3), AL(-1),
                   E(-4), E(-4), E(-5), nu_trunc(p.k, 2) + (-6)};
      return p;
    case 19:
      p.case_id = 5;
      p.k = (m - 19) / 32;
      p.entries = {E(0),  E(-1), E(-2),  E(-3),  E(-2),
                   E(-4), AL(-3), AL(-4), E(-7)};
      return p;
    case 17:
      p.case_id = 8;
      p.k = (m - 17) / 32;
      p.entries = {E(0),  E(-1), E(0),  E(-2), E(-2),
                   E(-3), E(-3), AL(-2), E(-7)};
      return p;
    case 1:
      p.case_id = 9;
      p.k = (m - 1) / 32;
      p.entries = {E(0),   E(-1),  E(0),  E(-2), AL(-1),
                   AL(-2), AL(-2), E(-3), nu_trunc(p.k, 4) + (-6)};
      return p;
    default:
      throw std::logic_error("case_pattern: unreachable");
  }
}

ObstructionSystem crabb_cp_system(long long p) {
  if (p < 1) throw std::invalid_argument("crabb_cp_system: p must be >= 1");
  const TruncatedSeries s =
      pow_trunc(lambda_series(3), static_cast<unsigned long long>(8 * p));
  ObstructionSystem sys;
  sys.constraints = {{s.coeff(0), 0, 1},
                     {s.coeff(1), 0, 3},
                     {s.coeff(2), 0, 5},
                     {s.coeff(3), 64, 7}};
  sys.result = solve_system(sys.constraints);
  return sys;
}

ObstructionSystem crabb_hp_system(long long K) {
  if (K < 1) throw std::invalid_argument("crabb_hp_system: K must be >= 1");
  const TruncatedSeries s =
      pow_trunc(lambda_series(2), static_cast<unsigned long long>(4 * K - 1));
  ObstructionSystem sys;
  sys.constraints = {{s.coeff(0), 0, 1}, {s.coeff(1), 8, 4}, {s.coeff(2), 16, 5}};
  sys.result = solve_system(sys.constraints);
  return sys;
}

}  // namespace cpimm
