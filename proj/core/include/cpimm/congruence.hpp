#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpimm/dyadic.hpp"

namespace cpimm {

// One condition e*a == b (mod 2^k) on a single integer unknown e. The
// coefficient a is an exact rational and may have even numerator or
// denominator; the condition means nu(e*a - b) >= k.
struct CongruenceConstraint {
  Rational coefficient;
  long long target = 0;
  int modulus_exponent = 1;  // k >= 1

  // "e * (a) == b (mod 2^k)"
  std::string to_string() const;
};

// Outcome of reducing one constraint: it holds for every integer e, for no
// integer e, or exactly on a residue class e == residue (mod 2^j) with
// 0 <= residue < 2^j.
struct ReducedConstraint {
  enum class Kind { AlwaysHolds, NeverHolds, ResidueClass };

  Kind kind = Kind::AlwaysHolds;
  Int residue;
  int modulus_exponent = 0;
};

// Certified reason a system has no solution: either one constraint is
// unsatisfiable on its own, or two constraints force incompatible residue
// classes. Indices refer to the input order.
struct Conflict {
  std::size_t first = 0;
  std::optional<std::size_t> second;
};

struct SolveResult {
  bool solvable = false;
  // The full solution set e == residue (mod 2^residue_modulus_exponent)
  // when solvable; an empty system is solvable with modulus exponent 0.
  Int residue;
  int residue_modulus_exponent = 0;
  std::optional<Conflict> conflict;
};

// Reduces e*a == b (mod 2^k) with s = nu(a):
//   s >= k             -> AlwaysHolds iff nu(b) >= k, else NeverHolds
//   s < k, nu(b) < s   -> NeverHolds
//   otherwise          -> e == b/a (mod 2^(k-s)), via the 2-adic inverse of
//                         the odd part of a.
// Requires modulus_exponent >= 1.
ReducedConstraint reduce_constraint(const CongruenceConstraint& c);

// Intersects the reduced constraints. Residue classes on powers of two are
// nested, so the system is solvable iff no single constraint reduces to
// NeverHolds and every pair of residue classes agrees modulo the smaller of
// their moduli; the intersection is then the class with the largest modulus.
// When unsolvable, the conflict names the first NeverHolds constraint in
// input order, or else the lexicographically first disagreeing pair.
SolveResult solve_system(std::span<const CongruenceConstraint> constraints);

// Whether a concrete integer e satisfies the constraint, by evaluating
// nu(e*a - b) >= k directly.
bool satisfies(const CongruenceConstraint& c, const Int& e);

}  // namespace cpimm
