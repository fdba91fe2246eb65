#include "cpimm/atlas.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cpimm {

Parity parity_of(long long n) {
  return n % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool CongruenceAtom::matches(long long n) const {
  const long long r = ((n % modulus) + modulus) % modulus;
  const long long want = ((residue % modulus) + modulus) % modulus;
  return (r == want) != negated;
}

std::string CongruenceAtom::to_string() const {
  return "n " + std::string(negated ? "!=" : "==") + " " + std::to_string(residue) +
         " (mod " + std::to_string(modulus) + ")";
}

bool RowCondition::matches(long long n) const {
  if (atoms.empty()) return true;
  if (mode == Mode::All) {
    for (const CongruenceAtom& a : atoms)
      if (!a.matches(n)) return false;
    return true;
  }
  for (const CongruenceAtom& a : atoms)
    if (a.matches(n)) return true;
  return false;
}

std::string RowCondition::to_string() const {
  std::string out;
  const char* sep = mode == Mode::All ? " and " : " or ";
  for (const CongruenceAtom& a : atoms) {
    if (!out.empty()) out += sep;
    out += a.to_string();
  }
  return out;
}

namespace {

RowCondition always() { return {}; }

RowCondition is(long long r, long long m) {
  return {RowCondition::Mode::All, {{r, m, false}}};
}

RowCondition isnt(long long r, long long m) {
  return {RowCondition::Mode::All, {{r, m, true}}};
}

RowCondition neither(long long r1, long long m1, long long r2, long long m2) {
  return {RowCondition::Mode::All, {{r1, m1, true}, {r2, m2, true}}};
}

RowCondition either(long long r1, long long m1, long long r2, long long m2) {
  return {RowCondition::Mode::Any, {{r1, m1, false}, {r2, m2, false}}};
}

RowCondition is_but_not(long long r1, long long m1, long long r2, long long m2) {
  return {RowCondition::Mode::All, {{r1, m1, false}, {r2, m2, true}}};
}

}  // namespace

const std::vector<TableRow>& immersion_table() {
  static const std::vector<TableRow> table = [] {
    std::vector<TableRow> t;
    auto row = [&t](std::optional<int> alpha, Parity parity, RowCondition cond, int d,
                    const char* d_src, std::optional<int> e,
                    std::optional<const char*> e_src) {
      TableRow r;
      r.alpha = alpha;
      r.parity = parity;
      r.condition = std::move(cond);
      r.d = d;
      r.d_source = d_src;
      r.e = e;
      if (e_src) r.e_source = *e_src;
      t.push_back(std::move(r));
    };

    const Parity even = Parity::Even;
    const Parity odd = Parity::Odd;
    const std::nullopt_t none = std::nullopt;

    row(2, even, always(), 2, "DM", 3, none);
    row(3, even, always(), 4, "Davis", 5, none);
    row(4, even, isnt(10, 16), 7, "DM", 8, none);
    row(4, even, is(10, 16), 7, "DM", 9, none);
    row(5, even, always(), 9, "DM", 10, none);
    row(6, even, always(), 10, "DM", 11, none);
    row(7, even, always(), 11, "DM", 13, none);
    row(8, even, neither(22, 32, 132, 256), 14, "DM", 16, none);
    row(8, even, either(22, 32, 132, 256), 14, "DM", 17, none);
    row(none, even, always(), 14, "DM", none, none);

    row(2, odd, always(), 3, "James", 4, "SigS");
    row(3, odd, is(1, 4), 5, "Ran", 6, "SigS");
    row(3, odd, is(3, 4), 6, "Steer", 7, "SchwS");
    row(4, odd, isnt(7, 8), 7, "DM", 8, "SigS");
    row(4, odd, is(7, 8), 8, "Crabb", 9, "SchwS");
    row(5, odd, is(1, 4), 9, "DM", 11, "SchwS");
    row(5, odd, is(3, 8), 9, "DM", 10, "SigS");
    row(5, odd, is(7, 8), 10, "Crabb", 11, "SchwS");
    row(6, odd, is(1, 4), 11, "DM", 12, "SigS");
    row(6, odd, is(3, 16), 11, "DM", 12, "SigS");
    row(6, odd, is(11, 16), 12, "Crabb", 13, "SchwS");
    row(6, odd, is(7, 8), 12, "Crabb", 13, "SchwS");
    row(7, odd, is(1, 4), 13, "DM", 14, "SigS");
    row(7, odd, is(3, 64), 13, "DM", 14, "SigS");
    row(7, odd, is_but_not(3, 8, 3, 64), 14, "Davis", 15, "SchwS");
    row(7, odd, is(7, 8), 14, "Crabb", 15, "SchwS");
    row(8, odd, neither(15, 16, 37, 64), 15, "DM", 16, "SigS");
    row(8, odd, either(15, 16, 37, 64), 15, "DM", 17, "SchwS");
    row(none, odd, always(), 15, "DM", none, none);

    return t;
  }();
  return table;
}

namespace {

bool row_matches(const TableRow& row, long long n, long long alpha_n) {
  if (row.parity != parity_of(n)) return false;
  if (row.alpha ? *row.alpha != alpha_n : alpha_n <= 8) return false;
  return row.condition.matches(n);
}

}  // namespace

int table_match_count(long long n) {
  const long long a = alpha(n);
  if (a <= 1) return 0;
  int count = 0;
  for (const TableRow& row : immersion_table())
    if (row_matches(row, n, a)) ++count;
  return count;
}

const TableRow* find_table_row(long long n) {
  const long long a = alpha(n);
  if (a <= 1) return nullptr;
  const TableRow* found = nullptr;
  for (const TableRow& row : immersion_table()) {
    if (!row_matches(row, n, a)) continue;
    if (found)
      throw std::logic_error("find_table_row: multiple rows match n = " + std::to_string(n));
    found = &row;
  }
  if (!found)
    throw std::logic_error("find_table_row: no row matches n = " + std::to_string(n));
  return found;
}

int epsilon_ss(long long n) {
  if (n < 2) throw std::invalid_argument("epsilon_ss: n must be >= 2");
  if (n % 2 == 0) {
    switch (alpha(n) % 4) {
      case 1: return 0;
      case 2:
      case 3: return 1;
      default: return -1;
    }
  }
  return -1;
}

std::optional<ImmersionEntry> immersion_d(long long n) {
  const TableRow* row = find_table_row(n);
  if (!row) return std::nullopt;
  return ImmersionEntry{row->d, row->d_source};
}

NonimmersionResult nonimmersion_from_condition(int alpha_n, int epsilon,
                                               bool condition_holds) {
  const int e_always = 2 * alpha_n - epsilon;
  if (condition_holds) return {e_always, "SchwS"};
  const int e_failed = 2 * alpha_n;
  if (e_failed < e_always) return {e_failed, "SigS"};
  if (e_failed == e_always) return {e_failed, "SchwS,SigS"};
  return {e_always, "SchwS"};
}

NonimmersionResult nonimmersion_e(long long n) {
  return nonimmersion_from_condition(static_cast<int>(alpha(n)), epsilon_ss(n),
                                     sigrist_suter(n).holds);
}

ImmersionRecord immersion_record(long long n, const AtlasOptions& opts) {
  if (n < 2) throw std::invalid_argument("immersion_record: n must be >= 2");
  ImmersionRecord rec;
  rec.n = n;
  rec.alpha = static_cast<int>(alpha(n));
  rec.parity = parity_of(n);

  if (const TableRow* row = find_table_row(n)) {
    rec.d = row->d;
    rec.d_source = row->d_source;
  }
  if (rec.alpha >= 2 && rec.alpha <= 8) {
    const NonimmersionResult ni = nonimmersion_e(n);
    rec.e = ni.e;
    rec.e_trace = ni.trace;
  } else if (rec.alpha > 8 && opts.derive_e_above_8) {
    rec.e = 2 * rec.alpha - epsilon_ss(n);
    rec.e_trace = "SchwS";
  }
  rec.gap = rec.d && rec.e && *rec.e >= *rec.d + 2;
  if (rec.parity == Parity::Odd && rec.alpha == 5 && n % 4 == 1)
    rec.note = "claimed d=10 immersion (Crabb) invalid; gap stands";
  return rec;
}

std::vector<ImmersionRecord> atlas_records(long long from, long long to,
                                           const AtlasFilter& filter,
                                           const AtlasOptions& opts) {
  if (from < 2 || to < from)
    throw std::invalid_argument("atlas_records: need 2 <= from <= to");
  std::vector<ImmersionRecord> out;
  for (long long n = from; n <= to; ++n) {
    if (filter.alpha && alpha(n) != *filter.alpha) continue;
    if (filter.parity && parity_of(n) != *filter.parity) continue;
    if (filter.congruence && !filter.congruence->matches(n)) continue;
    out.push_back(immersion_record(n, opts));
  }
  return out;
}

namespace {

long long row_ordinal(long long n) {
  const TableRow* row = find_table_row(n);
  if (!row) return -1;
  return row - immersion_table().data();
}

void markdown_section(std::ostringstream& os, const char* title,
                      std::vector<const ImmersionRecord*> recs) {
  if (recs.empty()) return;
  std::sort(recs.begin(), recs.end(),
            [](const ImmersionRecord* x, const ImmersionRecord* y) {
              const auto kx = std::make_tuple(x->alpha, row_ordinal(x->n), x->n);
              const auto ky = std::make_tuple(y->alpha, row_ordinal(y->n), y->n);
              return kx < ky;
            });
  os << "## " << title << "\n\n";
  os << "| n | alpha | class | d | d ref | e | e trace | gap | note |\n";
  os << "|--:|------:|-------|--:|-------|--:|---------|:---:|------|\n";
  for (const ImmersionRecord* r : recs) {
    const TableRow* row = r->alpha >= 2 ? find_table_row(r->n) : nullptr;
    os << "| " << r->n << " | " << r->alpha << " | "
       << (row ? row->condition.to_string() : "") << " | "
       << (r->d ? std::to_string(*r->d) : "") << " | "
       << (r->d_source ? *r->d_source : "") << " | "
       << (r->e ? std::to_string(*r->e) : "") << " | "
       << (r->e_trace ? *r->e_trace : "") << " | " << (r->gap ? "yes" : "") << " | "
       << (r->note ? *r->note : "") << " |\n";
  }
  os << "\n";
}

}  // namespace

std::string atlas_markdown(const std::vector<ImmersionRecord>& records) {
  std::ostringstream os;
  os << "# CP^n immersion atlas\n\n";
  std::vector<const ImmersionRecord*> even, odd;
  for (const ImmersionRecord& r : records)
    (r.parity == Parity::Even ? even : odd).push_back(&r);
  markdown_section(os, "n even", std::move(even));
  markdown_section(os, "n odd", std::move(odd));
  return os.str();
}

std::string atlas_json(const std::vector<ImmersionRecord>& records) {
  using nlohmann::ordered_json;
  ordered_json arr = ordered_json::array();
  for (const ImmersionRecord& r : records) {
    ordered_json obj;
    obj["n"] = r.n;
    obj["alpha"] = r.alpha;
    obj["parity"] = r.parity == Parity::Even ? "even" : "odd";
    obj["d"] = r.d ? ordered_json(*r.d) : ordered_json(nullptr);
    obj["d_source"] = r.d_source ? ordered_json(*r.d_source) : ordered_json(nullptr);
    obj["e"] = r.e ? ordered_json(*r.e) : ordered_json(nullptr);
    obj["e_trace"] = r.e_trace ? ordered_json(*r.e_trace) : ordered_json(nullptr);
    obj["gap"] = r.gap;
    obj["note"] = r.note ? ordered_json(*r.note) : ordered_json(nullptr);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace cpimm
