#include "cpimm/congruence.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpimm {

namespace {

Int mod_pow2(Int x, int bits) {
  Int mod = Int(1) << bits;
  x %= mod;
  if (x < 0) x += mod;
  return x;
}

// 2-adic inverse of an odd u modulo 2^bits, in [0, 2^bits), by Newton
// iteration: inv <- inv * (2 - u*inv) doubles the number of correct bits.
Int inverse_odd_mod_pow2(const Int& u, int bits) {
  Int ur = mod_pow2(u, bits);
  Int inv = 1;
  for (int have = 1; have < bits; have *= 2)
    inv = mod_pow2(inv * (2 - ur * inv), bits);
  return inv;
}

}  // namespace

std::string CongruenceConstraint::to_string() const {
  return "e * (" + coefficient.to_string() + ") == " + std::to_string(target) +
         " (mod " + Int(Int(1) << modulus_exponent).str() + ")";
}

ReducedConstraint reduce_constraint(const CongruenceConstraint& c) {
  if (c.modulus_exponent < 1)
    throw std::invalid_argument("reduce_constraint: modulus exponent must be >= 1");
  const int k = c.modulus_exponent;
  const Valuation s = nu(c.coefficient);
  const Valuation vb = nu(c.target);

  ReducedConstraint out;
  if (s >= Valuation(k)) {
    out.kind = vb >= Valuation(k) ? ReducedConstraint::Kind::AlwaysHolds
                                  : ReducedConstraint::Kind::NeverHolds;
    return out;
  }
  if (vb < s) {
    out.kind = ReducedConstraint::Kind::NeverHolds;
    return out;
  }

  const long long sv = s.value();
  const int m = static_cast<int>(k - sv);
  out.kind = ReducedConstraint::Kind::ResidueClass;
  out.modulus_exponent = m;
  if (c.target == 0) {
    out.residue = 0;
    return out;
  }

  // e == b/a (mod 2^m). Write b*den(a) = 2^sx * x_odd, num(a) = 2^sy * y_odd;
  // then b/a = 2^(sx-sy) * x_odd/y_odd with sx-sy = nu(b) - s >= 0.
  Int x = Int(c.target) * c.coefficient.den();
  const Int& y = c.coefficient.num();
  const long long sx = nu(x).value();
  const long long sy = nu(y).value();
  const long long shift = sx - sy;
  if (shift >= m) {
    out.residue = 0;
    return out;
  }
  Int x_odd = x / (Int(1) << sx);
  Int y_odd = y / (Int(1) << sy);
  Int r = mod_pow2(x_odd, m) * inverse_odd_mod_pow2(y_odd, m);
  out.residue = mod_pow2(r << shift, m);
  return out;
}

SolveResult solve_system(std::span<const CongruenceConstraint> constraints) {
  std::vector<ReducedConstraint> reduced;
  reduced.reserve(constraints.size());
  for (const CongruenceConstraint& c : constraints)
    reduced.push_back(reduce_constraint(c));

  SolveResult out;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i].kind == ReducedConstraint::Kind::NeverHolds) {
      out.conflict = Conflict{i, std::nullopt};
      return out;
    }
  }

  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i].kind != ReducedConstraint::Kind::ResidueClass) continue;
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      if (reduced[j].kind != ReducedConstraint::Kind::ResidueClass) continue;
      const int m = std::min(reduced[i].modulus_exponent, reduced[j].modulus_exponent);
      if ((reduced[i].residue - reduced[j].residue) % (Int(1) << m) != 0) {
        out.conflict = Conflict{i, j};
        return out;
      }
    }
  }

  out.solvable = true;
  out.residue = 0;
  out.residue_modulus_exponent = 0;
  for (const ReducedConstraint& r : reduced) {
    if (r.kind != ReducedConstraint::Kind::ResidueClass) continue;
    if (r.modulus_exponent > out.residue_modulus_exponent) {
      out.residue_modulus_exponent = r.modulus_exponent;
      out.residue = r.residue;
    }
  }
  return out;
}

bool satisfies(const CongruenceConstraint& c, const Int& e) {
  Rational lhs = c.coefficient * Rational(e) - Rational(c.target);
  return nu(lhs) >= Valuation(c.modulus_exponent);
}

}  // namespace cpimm
