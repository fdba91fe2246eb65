#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "cpimm/congruence.hpp"

using namespace cpimm;

namespace {

using Kind = ReducedConstraint::Kind;

// All e in [0, 256) satisfying every constraint, via the direct valuation
// test. Sound whenever every residue class has modulus exponent <= 8.
std::vector<long long> brute_solutions(const std::vector<CongruenceConstraint>& cs) {
  std::vector<long long> out;
  for (long long e = 0; e < 256; ++e) {
    bool ok = true;
    for (const CongruenceConstraint& c : cs)
      if (!satisfies(c, Int(e))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(e);
  }
  return out;
}

struct SystemGenerator {
  std::mt19937_64 rng;

  explicit SystemGenerator(unsigned long long seed) : rng(seed) {}

  CongruenceConstraint constraint() {
    while (true) {
      const int k = 1 + static_cast<int>(rng() % 8);
      long long num = static_cast<long long>(rng() % 601) - 300;
      if (rng() % 16 == 0) num = 0;
      const long long den = 1 + static_cast<long long>(rng() % 64);
      const long long b = static_cast<long long>(rng() % 512) - 256;
      const CongruenceConstraint c{Rational(Int(num), Int(den)), b, k};
      // Keep the implied residue modulus within the 8-bit brute-force range.
      const Valuation s = nu(c.coefficient);
      if (s < Valuation(k) && k - s.value() > 8) continue;
      return c;
    }
  }

  std::vector<CongruenceConstraint> system() {
    std::vector<CongruenceConstraint> cs;
    const std::size_t count = 1 + rng() % 4;
    for (std::size_t i = 0; i < count; ++i) cs.push_back(constraint());
    return cs;
  }
};

// Checks one solver verdict against brute-force enumeration, including the
// conflict certificate. Returns a failure description or the empty string.
std::string check_against_brute_force(const std::vector<CongruenceConstraint>& cs) {
  const SolveResult res = solve_system(cs);
  const std::vector<long long> brute = brute_solutions(cs);

  if (res.solvable) {
    if (brute.empty()) return "solver says solvable, brute force finds nothing";
    const Int mod = Int(1) << res.residue_modulus_exponent;
    std::vector<long long> expected;
    for (long long e = 0; e < 256; ++e)
      if ((Int(e) - res.residue) % mod == 0) expected.push_back(e);
    if (brute != expected) return "solution class disagrees with brute force";
    return "";
  }

  if (!brute.empty()) return "solver says unsolvable, brute force finds solutions";
  if (!res.conflict) return "unsolvable verdict carries no conflict";
  const Conflict& c = *res.conflict;
  if (c.second) {
    const std::vector<CongruenceConstraint> pair = {cs[c.first], cs[*c.second]};
    if (!brute_solutions(pair).empty())
      return "conflict pair is satisfiable on its own";
  } else {
    const std::vector<CongruenceConstraint> single = {cs[c.first]};
    if (!brute_solutions(single).empty())
      return "conflict constraint is satisfiable on its own";
  }
  return "";
}

}  // namespace

TEST_CASE("reduce_constraint on known inputs") {
  SUBCASE("odd unit coefficient") {
    const ReducedConstraint r = reduce_constraint({Rational(Int(-1), Int(3)), 0, 1});
    CHECK(r.kind == Kind::ResidueClass);
    CHECK(r.modulus_exponent == 1);
    CHECK(r.residue == 0);
  }
  SUBCASE("coefficient valuation shifts the modulus") {
    const ReducedConstraint r = reduce_constraint({Rational(4), 8, 4});
    CHECK(r.kind == Kind::ResidueClass);
    CHECK(r.modulus_exponent == 2);
    CHECK(r.residue == 2);
  }
  SUBCASE("vacuous when the coefficient vanishes to high order") {
    const ReducedConstraint r = reduce_constraint({Rational(), 0, 3});
    CHECK(r.kind == Kind::AlwaysHolds);
  }
  SUBCASE("impossible when the target is too odd") {
    const ReducedConstraint r = reduce_constraint({Rational(8), 4, 3});
    CHECK(r.kind == Kind::NeverHolds);
  }
  SUBCASE("even denominator raises the modulus") {
    const ReducedConstraint r = reduce_constraint({Rational(Int(1), Int(4)), 2, 3});
    CHECK(r.kind == Kind::ResidueClass);
    CHECK(r.modulus_exponent == 5);
    CHECK(r.residue == 8);
  }
  SUBCASE("modulus exponent must be positive") {
    CHECK_THROWS_AS(reduce_constraint({Rational(1), 0, 0}), std::invalid_argument);
  }
}

TEST_CASE("reduced classes match the direct valuation test") {
  std::mt19937_64 rng(301ULL);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    long long num = static_cast<long long>(rng() % 129) - 64;
    const long long den = 1 + static_cast<long long>(rng() % 16);
    const long long b = static_cast<long long>(rng() % 64) - 32;
    const CongruenceConstraint c{Rational(Int(num), Int(den)), b, k};
    const Valuation s = nu(c.coefficient);
    if (s < Valuation(k) && k - s.value() > 8) continue;

    const ReducedConstraint r = reduce_constraint(c);
    for (long long e = 0; e < 256; ++e) {
      bool expected = false;
      switch (r.kind) {
        case Kind::AlwaysHolds: expected = true; break;
        case Kind::NeverHolds: expected = false; break;
        case Kind::ResidueClass:
          expected = (Int(e) - r.residue) % (Int(1) << r.modulus_exponent) == 0;
          break;
      }
      if (satisfies(c, Int(e)) != expected) {
        CAPTURE(c.to_string());
        CAPTURE(e);
        REQUIRE(satisfies(c, Int(e)) == expected);
      }
    }
  }
}

TEST_CASE("solve_system on known systems") {
  SUBCASE("empty system") {
    const SolveResult r = solve_system({});
    CHECK(r.solvable);
    CHECK(r.residue_modulus_exponent == 0);
    CHECK(r.residue == 0);
  }
  SUBCASE("nested classes intersect to the finest") {
    const std::vector<CongruenceConstraint> cs = {{Rational(1), 2, 2},
                                                  {Rational(1), 0, 1}};
    const SolveResult r = solve_system(cs);
    CHECK(r.solvable);
    CHECK(r.residue_modulus_exponent == 2);
    CHECK(r.residue == 2);
  }
  SUBCASE("incompatible pair is certified") {
    const std::vector<CongruenceConstraint> cs = {{Rational(1), 0, 1},
                                                  {Rational(1), 2, 2},
                                                  {Rational(1), 1, 3}};
    const SolveResult r = solve_system(cs);
    CHECK(!r.solvable);
    REQUIRE(r.conflict.has_value());
    CHECK(r.conflict->first == 0);
    REQUIRE(r.conflict->second.has_value());
    CHECK(*r.conflict->second == 2);
  }
  SUBCASE("single impossible constraint is certified alone") {
    const std::vector<CongruenceConstraint> cs = {{Rational(1), 0, 1},
                                                  {Rational(16), 8, 4}};
    const SolveResult r = solve_system(cs);
    CHECK(!r.solvable);
    REQUIRE(r.conflict.has_value());
    CHECK(r.conflict->first == 1);
    CHECK(!r.conflict->second.has_value());
  }
}

TEST_CASE("solver matches brute force on random systems") {
  SystemGenerator gen(20260817ULL);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::vector<CongruenceConstraint> cs = gen.system();
    const std::string failure = check_against_brute_force(cs);
    if (!failure.empty()) {
      CAPTURE(trial);
      CAPTURE(failure);
      REQUIRE(failure.empty());
    }
  }
}

TEST_CASE("verdicts are order independent") {
  SystemGenerator gen(402ULL);
  std::mt19937_64 shuffle_rng(403ULL);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<CongruenceConstraint> cs = gen.system();
    const SolveResult before = solve_system(cs);
    std::shuffle(cs.begin(), cs.end(), shuffle_rng);
    const SolveResult after = solve_system(cs);
    CHECK(before.solvable == after.solvable);
    if (before.solvable) {
      CHECK(before.residue_modulus_exponent == after.residue_modulus_exponent);
      CHECK(before.residue == after.residue);
    }
  }
}

TEST_CASE("satisfies evaluates the congruence directly") {
  const CongruenceConstraint c{Rational(Int(-5)), 8, 4};
  CHECK(satisfies(c, Int(8)));
  CHECK(!satisfies(c, Int(4)));
  CHECK(satisfies(c, Int(24)));
}
