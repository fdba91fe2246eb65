#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cpimm/atlas.hpp"
#include "cpimm/checks.hpp"
#include "cpimm/conditions.hpp"
#include "cpimm/congruence.hpp"
#include "cpimm/dyadic.hpp"
#include "cpimm/series.hpp"

namespace {

using namespace cpimm;

std::string join_coeffs(const TruncatedSeries& s) {
  std::string out;
  for (const Rational& c : s.coeffs()) {
    if (!out.empty()) out += ", ";
    out += c.to_string();
  }
  return out;
}

template <typename Range>
std::string join_valuations(const Range& vals) {
  std::string out;
  for (const auto& v : vals) {
    if (!out.empty()) out += ", ";
    out += v.to_string();
  }
  return out;
}

void run_series(const std::string& which, long long power, int order) {
  const TruncatedSeries base =
      which == "lambda" ? lambda_series(order) : log_over_t_series(order);
  const TruncatedSeries s = pow_trunc(base, static_cast<unsigned long long>(power));
  std::cout << join_coeffs(s) << "\n";
}

void run_sigs(long long n) {
  const SigristSuterReport rep = sigrist_suter(n);
  std::cout << "n = " << rep.n << "\n";
  std::cout << "alpha = " << rep.alpha_n << "\n";
  std::cout << "m = " << rep.m << "\n";
  std::cout << "nu(c_0..c_" << rep.alpha_n
            << ") = " << join_valuations(rep.coefficient_valuations) << "\n";
  std::cout << "holds = " << (rep.holds ? "true" : "false") << "\n";
}

void print_system(const ObstructionSystem& sys) {
  std::cout << "constraints:\n";
  for (std::size_t i = 0; i < sys.constraints.size(); ++i)
    std::cout << "  [" << i << "] " << sys.constraints[i].to_string() << "\n";
  if (sys.result.solvable) {
    std::cout << "verdict: solvable, e == " << sys.result.residue << " (mod "
              << (Int(1) << sys.result.residue_modulus_exponent) << ")\n";
    return;
  }
  std::cout << "verdict: unsolvable\n";
  const Conflict& c = *sys.result.conflict;
  if (c.second)
    std::cout << "conflict: constraints " << c.first << " and " << *c.second
              << " are incompatible\n";
  else
    std::cout << "conflict: constraint " << c.first << " is unsatisfiable\n";
}

void run_crabb_cp(long long p) {
  const ObstructionSystem sys = crabb_cp_system(p);
  std::cout << "p = " << p << "\n";
  std::cout << "series: lambda(T)^" << 8 * p << ", order 3\n";
  print_system(sys);
}

void run_crabb_hp(long long K) {
  const ObstructionSystem sys = crabb_hp_system(K);
  std::cout << "K = " << K << "\n";
  std::cout << "series: lambda(T)^" << 4 * K - 1 << ", order 2\n";
  print_system(sys);
}

void run_binom(long long top, long long k) {
  std::cout << nu_binomial(top, k) << "\n";
}

void run_vvec(long long m, bool show_pattern) {
  const std::array<Valuation, 9> v = valuation_vector(m);
  std::cout << "m = " << m << "\n";
  std::cout << "v_0..v_8 = " << join_valuations(v) << "\n";
  if (!show_pattern) return;
  const std::optional<ValuationPattern> pat = case_pattern(m);
  if (!pat) {
    std::cout << "no applicable case pattern (nu(m) = " << nu(m) << ")\n";
    return;
  }
  std::cout << pat->describe() << "\n";
  std::cout << "pattern = " << join_valuations(pat->entries) << "\n";
  std::cout << "matches = " << (pat->matches(v) ? "true" : "false") << "\n";
}

void run_atlas(long long from, long long to, std::optional<int> alpha_filter,
               const std::string& parity, const std::string& format,
               bool derive_above_8) {
  AtlasFilter filter;
  filter.alpha = alpha_filter;
  if (parity == "even") filter.parity = Parity::Even;
  if (parity == "odd") filter.parity = Parity::Odd;
  AtlasOptions opts;
  opts.derive_e_above_8 = derive_above_8;
  const std::vector<ImmersionRecord> records = atlas_records(from, to, filter, opts);
  std::cout << (format == "md" ? atlas_markdown(records) : atlas_json(records));
}

int run_verify(const std::string& suite, std::optional<long long> bound) {
  long long b = 0;
  if (bound) {
    b = *bound;
  } else if (suite == "lemma" || suite == "patterns") {
    b = 8192;
  } else if (suite == "crabb") {
    b = 1024;
  } else if (suite == "tables") {
    b = 16384;
  } else {
    b = 4096;
  }

  CheckResult r;
  if (suite == "lemma") {
    r = scan_valuation_patterns(b).lemma_equivalence;
  } else if (suite == "patterns") {
    r = scan_valuation_patterns(b).pattern_conformance;
  } else if (suite == "crabb") {
    r = merge(check_cp_solvability_law(b), check_hp_unsolvability_law(b));
  } else if (suite == "tables") {
    const TableScan scan = scan_tables(b);
    r = merge(scan.reproduction, scan.condition_consistency);
  } else {
    r = check_binomial_valuation_formulas(b);
  }

  if (r.passed()) {
    std::cout << "PASS " << r.checked << "/" << r.checked << "\n";
    return 0;
  }
  std::cout << "counterexample: " << r.first_counterexample << "\n";
  std::cout << "FAIL " << (r.checked - r.failed) << "/" << r.checked << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 2-adic arithmetic behind CP^n immersion and nonimmersion bounds"};
  app.require_subcommand(1);
  int rc = 0;

  auto* series = app.add_subcommand("series", "Print coefficients of a series power");
  std::string series_which;
  long long series_power = 1;
  int series_order = kDefaultOrder;
  series->add_option("--which", series_which, "Base series: lambda or log")
      ->required()
      ->check(CLI::IsMember({"lambda", "log"}));
  series->add_option("--power", series_power, "Exponent m >= 0")
      ->check(CLI::NonNegativeNumber);
  series->add_option("--order", series_order, "Truncation order >= 0")
      ->check(CLI::NonNegativeNumber);
  series->callback([&] { run_series(series_which, series_power, series_order); });

  auto* sigs = app.add_subcommand("sigs", "Evaluate the divisibility condition at n");
  long long sigs_n = 0;
  sigs->add_option("--n", sigs_n, "Complex dimension n with alpha(n) >= 2")->required();
  sigs->callback([&] { run_sigs(sigs_n); });

  auto* crabb = app.add_subcommand("crabb", "Congruence obstruction systems");
  crabb->require_subcommand(1);
  auto* cp = crabb->add_subcommand("cp", "System on lambda^(8p) coefficients 0..3");
  long long cp_p = 0;
  cp->add_option("--p", cp_p, "p >= 1")->required()->check(CLI::PositiveNumber);
  cp->callback([&] { run_crabb_cp(cp_p); });
  auto* hp = crabb->add_subcommand("hp", "System on lambda^(4K-1) coefficients 0..2");
  long long hp_k = 0;
  hp->add_option("--K", hp_k, "K >= 1")->required()->check(CLI::PositiveNumber);
  hp->callback([&] { run_crabb_hp(hp_k); });

  auto* binom = app.add_subcommand("binom", "2-adic valuation of C(top, k)");
  long long binom_top = 0;
  long long binom_k = 0;
  binom->add_option("--top", binom_top, "Upper index, any sign")->required();
  binom->add_option("--k", binom_k, "Lower index >= 0")
      ->required()
      ->check(CLI::NonNegativeNumber);
  binom->callback([&] { run_binom(binom_top, binom_k); });

  auto* vvec = app.add_subcommand("vvec", "Valuations of the first nine coefficients");
  long long vvec_m = 0;
  bool vvec_pattern = false;
  vvec->add_option("--m", vvec_m, "Exponent m >= 1")->required()->check(CLI::PositiveNumber);
  vvec->add_flag("--pattern", vvec_pattern, "Also match the tabulated case pattern");
  vvec->callback([&] { run_vvec(vvec_m, vvec_pattern); });

  auto* atlas = app.add_subcommand("atlas", "Immersion/nonimmersion records for a range");
  long long atlas_from = 0;
  long long atlas_to = 0;
  std::optional<int> atlas_alpha;
  std::string atlas_parity;
  std::string atlas_format = "json";
  bool atlas_above8 = false;
  atlas->add_option("--from", atlas_from, "First n (>= 2)")->required();
  atlas->add_option("--to", atlas_to, "Last n")->required();
  atlas->add_option("--alpha", atlas_alpha, "Keep only n with this alpha(n)");
  atlas->add_option("--parity", atlas_parity, "Keep only even or odd n")
      ->check(CLI::IsMember({"even", "odd"}));
  atlas->add_option("--format", atlas_format, "Output format")
      ->check(CLI::IsMember({"json", "md"}));
  atlas->add_flag("--derive-e-above-8", atlas_above8,
                  "Fill in e = 2*alpha - epsilon where the tables leave it blank");
  atlas->callback([&] {
    run_atlas(atlas_from, atlas_to, atlas_alpha, atlas_parity, atlas_format,
              atlas_above8);
  });

  auto* verify = app.add_subcommand("verify", "Run one bulk verification suite");
  std::string verify_suite;
  std::optional<long long> verify_bound;
  verify->add_option("--suite", verify_suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"lemma", "patterns", "crabb", "tables", "binomials"}));
  verify->add_option("--bound", verify_bound, "Scan bound (suite-specific default)")
      ->check(CLI::PositiveNumber);
  verify->callback([&] { rc = run_verify(verify_suite, verify_bound); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
