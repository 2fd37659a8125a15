#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int status = -1;
  std::string out;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(VINFER_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string scenario(const std::string& name) {
  return std::string(VINFER_SCENARIO_DIR) + "/" + name;
}

class TempFile {
 public:
  explicit TempFile(const std::string& stem, const std::string& content = "") {
    path_ = (fs::temp_directory_path() / stem).string();
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::error_code ec; fs::remove(path_, ec); }
  const std::string& path() const { return path_; }
  std::string read() const {
    std::ifstream in(path_, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

 private:
  std::string path_;
};

constexpr const char* kCoffeeApx =
    "arg(opp_p_cup_intact_2).\n"
    "arg(sup_p_cup_intact_1).\n"
    "arg(sup_p_have_coffee_1).\n"
    "att(opp_p_cup_intact_2,sup_p_cup_intact_1).\n"
    "att(sup_p_cup_intact_1,sup_p_have_coffee_1).\n"
    "att(sup_p_have_coffee_1,sup_p_cup_intact_1).\n";

const char* kBrokenScenario =
    "agents: u, v\n"
    "atoms: p\n"
    "actions: go\n"
    "state s0: p=1\n"
    "trans: s0 -go-> s9\n"
    "val u @ *: p\n"
    "observer: v\n"
    "expresser: u\n";

}  // namespace

TEST_CASE("validate accepts the bundled scenarios") {
  auto result = run_cli("validate " + scenario("coffee.scn"));
  CHECK(result.status == 0);
  auto other = run_cli("validate " + scenario("icecream.scn"));
  CHECK(other.status == 0);
}

TEST_CASE("validate reports undeclared states and exits with a domain error") {
  TempFile bad("vinfer_cli_bad.scn", kBrokenScenario);
  auto result = run_cli("validate " + bad.path());
  CHECK(result.status == 1);
  CHECK(result.out.find("s9") != std::string::npos);
}

TEST_CASE("missing input files are an io error") {
  auto result = run_cli("validate /nonexistent/nowhere.scn");
  CHECK(result.status == 2);
  auto solve = run_cli("solve /nonexistent/nowhere.apx");
  CHECK(solve.status == 2);
}

TEST_CASE("run prints the final verdicts") {
  auto result = run_cli("run " + scenario("coffee.scn"));
  CHECK(result.status == 0);
  CHECK(result.out ==
        "  believed:     have_coffee\n"
        "  believed not: cup_intact\n"
        "  undecided:    (none)\n");
}

TEST_CASE("run --trace narrates each observation") {
  auto result = run_cli("run --trace " + scenario("coffee.scn"));
  CHECK(result.status == 0);
  CHECK(result.out.find("obs 1:") != std::string::npos);
  CHECK(result.out.find("obs 2:") != std::string::npos);
  CHECK(result.out.find("sup_p_have_coffee_1") != std::string::npos);
  CHECK(result.out.find("final:") != std::string::npos);
}

TEST_CASE("run --report structured emits json verdicts") {
  auto result = run_cli("run --report structured " + scenario("coffee.scn"));
  CHECK(result.status == 0);
  CHECK(result.out.find("\"final\"") != std::string::npos);
  CHECK(result.out.find("\"have_coffee\"") != std::string::npos);
  CHECK(result.out.find("\"believed_not\"") != std::string::npos);
}

TEST_CASE("run --export-af replaces the report when no output file is given") {
  auto result = run_cli("run --export-af apx " + scenario("coffee.scn"));
  CHECK(result.status == 0);
  CHECK(result.out == kCoffeeApx);
}

TEST_CASE("run --export-af --out writes the file and keeps the report") {
  TempFile out("vinfer_cli_out.apx");
  auto result = run_cli("run --export-af apx --out " + out.path() + " " +
                        scenario("coffee.scn"));
  CHECK(result.status == 0);
  CHECK(result.out.find("believed:     have_coffee") != std::string::npos);
  CHECK(out.read() == kCoffeeApx);
}

TEST_CASE("solve computes the grounded extension of an apx file") {
  TempFile apx("vinfer_cli_coffee.apx", kCoffeeApx);
  auto result = run_cli("solve " + apx.path());
  CHECK(result.status == 0);
  CHECK(result.out == "opp_p_cup_intact_2\nsup_p_have_coffee_1\n");
}

TEST_CASE("solve --semantics complete lists every extension") {
  TempFile tgf("vinfer_cli_cycle.tgf", "a\nb\n#\na b\nb a\n");
  auto result = run_cli("solve --semantics complete " + tgf.path());
  CHECK(result.status == 0);
  CHECK(result.out == "\na\nb\n");

  TempFile apx("vinfer_cli_coffee.apx", kCoffeeApx);
  auto coffee = run_cli("solve --semantics complete " + apx.path());
  CHECK(coffee.status == 0);
  CHECK(coffee.out == "opp_p_cup_intact_2 sup_p_have_coffee_1\n");
}

TEST_CASE("solve on an empty framework prints nothing for grounded") {
  TempFile apx("vinfer_cli_empty.apx", "");
  auto result = run_cli("solve " + apx.path());
  CHECK(result.status == 0);
  CHECK(result.out.empty());
}

TEST_CASE("solve rejects malformed input with the offending line") {
  TempFile apx("vinfer_cli_malformed.apx", "arg(a).\nwhat is this\n");
  auto result = run_cli("solve " + apx.path());
  CHECK(result.status == 1);
  CHECK(result.out.find("line 2") != std::string::npos);
}

TEST_CASE("solve refuses to enumerate oversized frameworks") {
  std::string big;
  for (int i = 0; i < 16; ++i) big += "arg(a" + std::to_string(i) + ").\n";
  TempFile apx("vinfer_cli_big.apx", big);
  auto result = run_cli("solve --semantics complete " + apx.path());
  CHECK(result.status == 1);
  CHECK(result.out.find("15") != std::string::npos);
  // grounded still works at that size
  CHECK(run_cli("solve " + apx.path()).status == 0);
}

TEST_CASE("export renders dot with dashed blockers") {
  auto result = run_cli("export --format dot " + scenario("coffee.scn"));
  CHECK(result.status == 0);
  CHECK(result.out.find("digraph") != std::string::npos);
  CHECK(result.out.find("\"opp_p_cup_intact_2\" [style=dashed];") != std::string::npos);
}

TEST_CASE("export defaults to apx on stdout") {
  auto result = run_cli("export " + scenario("coffee.scn"));
  CHECK(result.status == 0);
  CHECK(result.out == kCoffeeApx);
}

TEST_CASE("export --out writes the requested file") {
  TempFile out("vinfer_cli_export.tgf");
  auto result = run_cli("export --format tgf --out " + out.path() + " " +
                        scenario("coffee.scn"));
  CHECK(result.status == 0);
  CHECK(out.read().find("#\n") != std::string::npos);
}

TEST_CASE("run rejects inconsistent scripts with the observation index") {
  std::string text =
      "agents: u, v\n"
      "atoms: p\n"
      "actions: go\n"
      "state s0: p=1\n"
      "state s1: p=1\n"
      "trans: s0 -go-> s1\n"
      "val u @ *: p\n"
      "observer: v\n"
      "expresser: u\n"
      "obs 1: state=s1 action=go express=distress?\n";
  TempFile bad("vinfer_cli_inconsistent.scn", text);
  auto result = run_cli("run " + bad.path());
  CHECK(result.status == 1);
  CHECK(result.out.find("obs 1") != std::string::npos);
}

TEST_CASE("a scenario with no observations still runs") {
  std::string text =
      "agents: u, v\n"
      "atoms: p\n"
      "actions: go\n"
      "state s0: p=1\n"
      "val u @ *: p\n"
      "observer: v\n"
      "expresser: u\n";
  TempFile quiet("vinfer_cli_quiet.scn", text);
  auto result = run_cli("run " + quiet.path());
  CHECK(result.status == 0);
  CHECK(result.out.find("(none)") != std::string::npos);
}

TEST_CASE("usage errors exit with the domain code") {
  CHECK(run_cli("run --no-such-flag x").status == 1);
  CHECK(run_cli("frobnicate").status == 1);
  CHECK(run_cli("solve --semantics stable whatever.apx").status == 1);
}

TEST_CASE("help and version succeed") {
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("--version").status == 0);
  CHECK(run_cli("run --help").status == 0);
}
