// CLI front end, exercised in-process through run_cli.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sandwich/cli.hpp"

using namespace sandwich;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("info and enumerate") {
  auto r = cli({"info", "--variant", "pt", "--m", "3", "--n", "5", "--a",
                "1 1 2 2 -"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha: 2") != std::string::npos);
  CHECK(r.out.find("Lambda: 4") != std::string::npos);
  CHECK(r.out.find("b: 1 3 -") != std::string::npos);

  auto e = cli({"enumerate", "--variant", "pt", "--m", "1", "--n", "1",
                "--a", "1"});
  CHECK(e.code == 0);
  CHECK(e.out == "1\n-\n");
}

TEST_CASE("rank subcommand prints the formula, case and exact confirmation") {
  auto r = cli({"rank", "--variant", "pt", "--m", "3", "--n", "5", "--a",
                "1 1 2 2 -", "--budget", "100000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank formula: 60") != std::string::npos);
  CHECK(r.out.find("case: below_xi_neither") != std::string::npos);
  CHECK(r.out.find("generates: yes") != std::string::npos);
  CHECK(r.out.find("rank exact: 60") != std::string::npos);
  CHECK(r.out.find("certified lower bound: 60") != std::string::npos);
}

TEST_CASE("regular, idempotents, pset, greens, egen") {
  auto reg = cli({"regular", "--variant", "pt", "--m", "3", "--n", "5",
                  "--a", "1 1 2 2 -"});
  CHECK(reg.code == 0);
  CHECK(reg.out.find("|Reg| formula: 49") != std::string::npos);
  CHECK(reg.out.find("agreement: yes") != std::string::npos);

  auto idem = cli({"idempotents", "--variant", "pt", "--m", "3", "--n", "5",
                   "--a", "1 1 2 2 -"});
  CHECK(idem.code == 0);
  CHECK(idem.out.find("idempotents formula: 29") != std::string::npos);

  auto ps = cli({"pset", "--variant", "pt", "--m", "3", "--n", "5", "--a",
                 "1 1 2 2 -", "1 3 -"});
  CHECK(ps.code == 0);
  CHECK(ps.out.find("regular: yes") != std::string::npos);

  auto gr = cli({"greens", "--variant", "pt", "--m", "3", "--n", "5", "--a",
                 "1 1 2 2 -", "H", "1 3 -"});
  CHECK(gr.code == 0);
  CHECK(gr.out.find("H^a-class") != std::string::npos);

  auto eg = cli({"egen", "--variant", "pt", "--m", "3", "--n", "5", "--a",
                 "1 1 2 2 -", "--budget", "0"});
  CHECK(eg.code == 0);
  CHECK(eg.out.find("|E|: 29") != std::string::npos);
  CHECK(eg.out.find("|<E>|: 37") != std::string::npos);
  CHECK(eg.out.find("witness generates: yes") != std::string::npos);
}

TEST_CASE("eggbox formats") {
  auto dot = cli({"eggbox", "--variant", "pt", "--m", "3", "--n", "5", "--a",
                  "1 1 2 2 -", "--scope", "regular", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  auto js = cli({"eggbox", "--variant", "pt", "--m", "3", "--n", "5", "--a",
                 "1 1 2 2 -", "--scope", "regular", "--format", "json"});
  CHECK(js.code == 0);
  CHECK(js.out.find("\"schema_version\": 1") != std::string::npos);
  auto ascii = cli({"eggbox", "--variant", "pt", "--m", "3", "--n", "5",
                    "--a", "1 1 2 2 -", "--scope", "full", "--format",
                    "ascii"});
  CHECK(ascii.code == 0);
  CHECK(ascii.out.find("scope=full") != std::string::npos);
}

TEST_CASE("verify is deterministic and clean at size 2") {
  auto v1 = cli({"verify", "--variant", "pt", "--max-size", "2"});
  auto v2 = cli({"verify", "--variant", "pt", "--max-size", "2"});
  CHECK(v1.code == 0);
  CHECK(v1.out == v2.out);
  CHECK(v1.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("usage and cap errors") {
  CHECK(cli({"rank", "--variant", "pt", "--m", "3", "--n", "5"}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
  CHECK(cli({"rank", "--variant", "pt", "--m", "3", "--n", "5", "--a",
             "9 9 9 9 9"})
            .code == 1);
  // A cap below the hom-set size trips exit code 3.
  auto capped = cli({"enumerate", "--variant", "pt", "--m", "3", "--n", "5",
                     "--a", "1 1 2 2 -", "--cap", "10"});
  CHECK(capped.code == 3);
  // Exhausting the search budget on an otherwise healthy run exits 3.
  auto starved = cli({"rank", "--variant", "pt", "--m", "3", "--n", "3",
                      "--a", "1 2 3", "--budget", "2"});
  CHECK(starved.code == 3);
  CHECK(starved.out.find("budget exhausted") != std::string::npos);
}

TEST_CASE("output file and cap environment variable") {
  std::string path = "cli_eggbox_test_output.json";
  auto r = cli({"eggbox", "--variant", "pt", "--m", "2", "--n", "2", "--a",
                "1 2", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(static_cast<bool>(in));
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str().find("\"schema_version\": 1") != std::string::npos);
  in.close();
  std::remove(path.c_str());

  setenv("SANDWICH_CAP", "5", 1);
  auto capped = cli({"enumerate", "--variant", "pt", "--m", "2", "--n", "2",
                     "--a", "1 2"});
  CHECK(capped.code == 3);
  unsetenv("SANDWICH_CAP");
  auto fine = cli({"enumerate", "--variant", "pt", "--m", "2", "--n", "2",
                   "--a", "1 2"});
  CHECK(fine.code == 0);
}
