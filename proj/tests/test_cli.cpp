#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CPIMM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("series subcommand") {
  const CliResult lambda8 = run_cli("series --which lambda --power 8 --order 3");
  CHECK(lambda8.exit_code == 0);
  CHECK(lambda8.out == "1, -8/3, 68/15, -1192/189\n");

  const CliResult log1 = run_cli("series --which log --order 3");
  CHECK(log1.exit_code == 0);
  CHECK(log1.out == "1, -1/2, 1/3, -1/4\n");

  const CliResult power0 = run_cli("series --which log --power 0 --order 2");
  CHECK(power0.exit_code == 0);
  CHECK(power0.out == "1, 0, 0\n");
}

TEST_CASE("sigs subcommand") {
  const CliResult holds = run_cli("sigs --n 255");
  CHECK(holds.exit_code == 0);
  CHECK(contains(holds.out, "alpha = 8"));
  CHECK(contains(holds.out, "m = 503"));
  CHECK(contains(holds.out, "holds = true"));

  const CliResult fails = run_cli("sigs --n 510");
  CHECK(fails.exit_code == 0);
  CHECK(contains(fails.out, "holds = false"));
}

TEST_CASE("crabb subcommands") {
  const CliResult cp2 = run_cli("crabb cp --p 2");
  CHECK(cp2.exit_code == 0);
  CHECK(contains(cp2.out, "lambda(T)^16"));
  CHECK(contains(cp2.out, "verdict: solvable, e == 4 (mod 8)"));

  const CliResult cp40 = run_cli("crabb cp --p 40");
  CHECK(cp40.exit_code == 0);
  CHECK(contains(cp40.out, "verdict: unsolvable"));

  const CliResult hp4 = run_cli("crabb hp --K 4");
  CHECK(hp4.exit_code == 0);
  CHECK(contains(hp4.out, "lambda(T)^15"));
  CHECK(contains(hp4.out, "verdict: unsolvable"));
  CHECK(contains(hp4.out, "constraints 1 and 2 are incompatible"));
}

TEST_CASE("binom subcommand") {
  const CliResult finite = run_cli("binom --top -126 --k 124");
  CHECK(finite.exit_code == 0);
  CHECK(finite.out == "5\n");

  const CliResult infinite = run_cli("binom --top 4 --k 7");
  CHECK(infinite.exit_code == 0);
  CHECK(infinite.out == "inf\n");
}

TEST_CASE("vvec subcommand") {
  const CliResult plain = run_cli("vvec --m 8");
  CHECK(plain.exit_code == 0);
  CHECK(contains(plain.out, "v_0..v_8 = 0, 2, 0, 0, -3, -2, -4, -4, -8"));

  const CliResult patterned = run_cli("vvec --m 7 --pattern");
  CHECK(patterned.exit_code == 0);
  CHECK(contains(patterned.out, "case 2: m = 7 + 8k with k = 0"));
  CHECK(contains(patterned.out, ">=-6"));
  CHECK(contains(patterned.out, "matches = true"));

  const CliResult uncovered = run_cli("vvec --m 6 --pattern");
  CHECK(uncovered.exit_code == 0);
  CHECK(contains(uncovered.out, "no applicable case pattern"));
}

TEST_CASE("atlas subcommand") {
  const CliResult json_out = run_cli("atlas --from 251 --to 251 --format json");
  CHECK(json_out.exit_code == 0);
  const nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(json_out.out);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["n"] == 251);
  CHECK(parsed[0]["d"] == 14);
  CHECK(parsed[0]["e"] == 15);
  CHECK(parsed[0]["gap"] == false);
  CHECK(parsed.dump(2) + "\n" == json_out.out);

  const CliResult md_out = run_cli("atlas --from 4 --to 16 --format md");
  CHECK(md_out.exit_code == 0);
  CHECK(contains(md_out.out, "# CP^n immersion atlas"));
  CHECK(contains(md_out.out, "| 10 | 2 |"));

  const CliResult filtered = run_cli("atlas --from 4 --to 512 --alpha 8 --parity odd");
  CHECK(filtered.exit_code == 0);
  const nlohmann::ordered_json records = nlohmann::ordered_json::parse(filtered.out);
  REQUIRE(records.is_array());
  CHECK(records.size() == 8);  // 255 and 511 - 2^k for k = 1..7
  CHECK(records[0]["n"] == 255);
  CHECK(records[0]["e"] == 17);

  const CliResult empty = run_cli("atlas --from 4 --to 8 --alpha 7");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "[]\n");

  const CliResult above8 = run_cli("atlas --from 511 --to 511 --derive-e-above-8");
  CHECK(above8.exit_code == 0);
  const nlohmann::ordered_json tail = nlohmann::ordered_json::parse(above8.out);
  CHECK(tail[0]["e"] == 19);
  const CliResult blank = run_cli("atlas --from 511 --to 511");
  const nlohmann::ordered_json no_tail = nlohmann::ordered_json::parse(blank.out);
  CHECK(no_tail[0]["e"].is_null());
}

TEST_CASE("verify subcommand") {
  const CliResult lemma = run_cli("verify --suite lemma --bound 64");
  CHECK(lemma.exit_code == 0);
  CHECK(lemma.out == "PASS 64/64\n");

  const CliResult crabb = run_cli("verify --suite crabb --bound 8");
  CHECK(crabb.exit_code == 0);
  CHECK(crabb.out == "PASS 16/16\n");

  const CliResult tables = run_cli("verify --suite tables --bound 512");
  CHECK(tables.exit_code == 0);
  CHECK(contains(tables.out, "PASS"));

  const CliResult binomials = run_cli("verify --suite binomials --bound 128");
  CHECK(binomials.exit_code == 0);
  CHECK(contains(binomials.out, "PASS"));

  const CliResult patterns = run_cli("verify --suite patterns --bound 64");
  CHECK(patterns.exit_code == 0);
  CHECK(contains(patterns.out, "PASS"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("series --which tan --order 3").exit_code == 2);
  CHECK(run_cli("series --which log --order -1").exit_code == 2);
  CHECK(run_cli("series --which log --power -3").exit_code == 2);
  CHECK(run_cli("sigs --n 2").exit_code == 2);   // alpha(2) = 1
  CHECK(run_cli("sigs --n 64").exit_code == 2);  // alpha(64) = 1
  CHECK(run_cli("crabb cp --p 0").exit_code == 2);
  CHECK(run_cli("crabb").exit_code == 2);
  CHECK(run_cli("binom --top 5 --k -1").exit_code == 2);
  CHECK(run_cli("vvec --m 0").exit_code == 2);
  CHECK(run_cli("atlas --from 4 --to 3").exit_code == 2);
  CHECK(run_cli("atlas --from 1 --to 5").exit_code == 2);
  CHECK(run_cli("atlas --from 4 --to 8 --format yaml").exit_code == 2);
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
  CHECK(run_cli("verify --suite lemma --bound 0").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("series --help").exit_code == 0);
}
