#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpimm/conditions.hpp"

namespace cpimm {

enum class Parity { Even, Odd };

Parity parity_of(long long n);

// One congruence test on n: n == residue (mod modulus), optionally negated.
struct CongruenceAtom {
  long long residue = 0;
  long long modulus = 1;
  bool negated = false;

  bool matches(long long n) const;
  std::string to_string() const;  // "n == 10 (mod 16)" / "n != 10 (mod 16)"
};

// Conjunction or disjunction of congruence atoms; no atoms means the row is
// unconditional within its alpha and parity class.
struct RowCondition {
  enum class Mode { All, Any };

  Mode mode = Mode::All;
  std::vector<CongruenceAtom> atoms;

  bool matches(long long n) const;
  std::string to_string() const;
};

// One row of the published immersion/nonimmersion tables. alpha = nullopt
// stands for the tail rows covering every alpha > 8; those have no
// nonimmersion entry.
struct TableRow {
  std::optional<int> alpha;
  Parity parity;
  RowCondition condition;
  int d = 0;
  std::string d_source;
  std::optional<int> e;
  std::optional<std::string> e_source;
};

// All rows, even parity first, sorted by alpha and then by the order the
// published tables list the congruence subcases.
const std::vector<TableRow>& immersion_table();

// Number of table rows matching n. The rows partition each alpha and parity
// class, so this is 1 for every n with alpha(n) >= 2 and 0 otherwise.
int table_match_count(long long n);

// The unique matching row, or nullptr when alpha(n) <= 1. Throws
// std::logic_error if the table fails to partition (zero or multiple
// matches for an n with alpha(n) >= 2).
const TableRow* find_table_row(long long n);

// Offset epsilon(n) in the nonimmersion bound 2*alpha(n) - epsilon(n):
//   n even, alpha == 1 (mod 4) ->  0
//   n even, alpha == 2,3 (mod 4) -> 1
//   otherwise                   -> -1
// Requires n >= 2.
int epsilon_ss(long long n);

struct ImmersionEntry {
  int d = 0;
  std::string source;
};

// Table lookup of the immersion dimension. nullopt when alpha(n) <= 1.
std::optional<ImmersionEntry> immersion_d(long long n);

struct NonimmersionResult {
  int e = 0;
  std::string trace;  // "SchwS", "SigS", or "SchwS,SigS" on a tie
};

// Combines the two nonimmersion bounds: 2*alpha - epsilon always applies;
// 2*alpha applies when the divisibility condition fails. The result is the
// stronger (smaller) bound, with the trace naming the theorems achieving it.
NonimmersionResult nonimmersion_from_condition(int alpha_n, int epsilon, bool condition_holds);

// Nonimmersion dimension for n, evaluating the divisibility condition.
// Requires alpha(n) >= 2.
NonimmersionResult nonimmersion_e(long long n);

// Everything the atlas knows about one n. d/e are nullopt outside the
// covered range; gap means e >= d + 2.
struct ImmersionRecord {
  long long n = 0;
  int alpha = 0;
  Parity parity = Parity::Even;
  std::optional<int> d;
  std::optional<std::string> d_source;
  std::optional<int> e;
  std::optional<std::string> e_trace;
  bool gap = false;
  std::optional<std::string> note;
};

struct AtlasFilter {
  std::optional<int> alpha;
  std::optional<Parity> parity;
  std::optional<CongruenceAtom> congruence;
};

struct AtlasOptions {
  // Also derive e = 2*alpha - epsilon for alpha(n) > 8, where the tables
  // leave the entry blank. Off by default.
  bool derive_e_above_8 = false;
};

// Assembles the record for one n >= 2.
ImmersionRecord immersion_record(long long n, const AtlasOptions& opts = {});

// Records for every n in [from, to] passing the filter, sorted by n.
// Requires 2 <= from <= to.
std::vector<ImmersionRecord> atlas_records(long long from, long long to,
                                           const AtlasFilter& filter = {},
                                           const AtlasOptions& opts = {});

// Markdown report grouped by parity, then alpha, then the published
// subcase order. Deterministic for a given record list.
std::string atlas_markdown(const std::vector<ImmersionRecord>& records);

// JSON array of objects with keys n, alpha, parity, d, d_source, e,
// e_trace, gap, note (null where unknown), 2-space indented.
std::string atlas_json(const std::vector<ImmersionRecord>& records);

}  // namespace cpimm
