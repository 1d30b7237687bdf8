#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "glie/cli.hpp"
#include "glie/table.hpp"

using namespace glie;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::vector<std::string>(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("list-presentations") {
  auto r = run_cli({"list-presentations"});
  CHECK(r.code == 0);
  CHECK(r.out.find("kohno") != std::string::npos);
  CHECK(r.out.find("sphere-reduced") != std::string::npos);
}

TEST_CASE("table json round-trips and is byte-stable") {
  auto r = run_cli({"table", "--presentation", "pm0n-reduced", "--n", "4", "--max-degree", "5",
                    "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = table::parse_json(r.out);
  CHECK(doc.presentation == "pm0n-reduced");
  CHECK(doc.n == 4);
  REQUIRE(doc.rows.size() == 5);
  std::size_t expected[5] = {2, 1, 2, 3, 6};
  for (int d = 0; d < 5; ++d) {
    CHECK(doc.rows[d].degree == d + 1);
    CHECK(doc.rows[d].rank == expected[d]);
    CHECK(doc.rows[d].torsion.empty());
  }
  CHECK(table::parse_json(table::emit_json(doc)) == doc);

  auto again = run_cli({"table", "--presentation", "pm0n-reduced", "--n", "4", "--max-degree", "5",
                        "--format", "json"});
  CHECK(again.out == r.out);  // byte-identical
}

TEST_CASE("table csv output") {
  auto r = run_cli({"table", "--presentation", "sphere-reduced", "--n", "4", "--max-degree", "1",
                    "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "degree,witt,rank,torsion\n1,3,2,2\n");
}

TEST_CASE("table text output mentions the witt column") {
  auto r = run_cli({"table", "--presentation", "kohno", "--n", "2", "--max-degree", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("witt") != std::string::npos);
  CHECK(r.out.find("kohno") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"table", "--presentation", "nope", "--n", "4", "--max-degree", "2"}).code == 2);
  CHECK(run_cli({"table", "--presentation", "ihara", "--n", "2", "--max-degree", "2"}).code == 2);
  CHECK(run_cli({"table", "--presentation", "ihara", "--n", "4"}).code == 2);
  CHECK(run_cli({"verify", "not-a-check"}).code == 2);
  CHECK(run_cli({"verify"}).code == 2);
  CHECK(run_cli({"bogus-subcommand"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"table", "--presentation", "ihara", "--n", "4", "--max-degree", "2", "--format",
                 "yaml"})
            .code == 2);
}

TEST_CASE("verify checks pass on the shipped identities") {
  CHECK(run_cli({"verify", "burau", "--n", "5"}).code == 0);
  CHECK(run_cli({"verify", "delta2", "--n", "4"}).code == 0);
  CHECK(run_cli({"verify", "magnus", "--n", "4"}).code == 0);
  CHECK(run_cli({"verify", "central", "--n", "4"}).code == 0);
  CHECK(run_cli({"verify", "sphere-sanity", "--n", "5"}).code == 0);
  CHECK(run_cli({"verify", "example-pm04", "--max-degree", "5"}).code == 0);
  CHECK(run_cli({"verify", "theorem2", "--n", "4", "--max-degree", "3"}).code == 0);
  CHECK(run_cli({"verify", "theorem1", "--n", "4", "--max-degree", "3"}).code == 0);
  CHECK(run_cli({"verify", "corollary", "--n", "4"}).code == 0);
  CHECK(run_cli({"verify", "--check", "delta2", "--n", "3"}).code == 0);
}

TEST_CASE("help exits cleanly") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("table") != std::string::npos);
}
