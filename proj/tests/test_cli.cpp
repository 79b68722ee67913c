#include "fwexact/cli.hpp"

#include <doctest.h>

#include "schema_check.hpp"

#include <fstream>
#include <sstream>

using schema_check::Json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::initializer_list<std::string> args) {
  std::vector<std::string> argv{"fwexact"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code = fwexact::run_cli(argv, out, err);
  return {code, out.str(), err.str()};
}

Json load_schema(const std::string& name) {
  std::ifstream f(std::string(FWEXACT_SOURCE_DIR) + "/schemas/" + name);
  REQUIRE(f.good());
  return Json::parse(f);
}

void check_schema(const std::string& doc, const std::string& schema_name) {
  std::string err =
      schema_check::conforms(Json::parse(doc), load_schema(schema_name));
  CHECK_MESSAGE(err.empty(), err);
}

Json strip_timing(Json doc) {
  for (Json& check : doc["checks"]) check.erase("elapsed_ms");
  return doc;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(cli({"verify", "-n", "4"}).code == 0);
  CHECK(cli({"verify", "-n", "4", "--phi-sign", "plus"}).code == 1);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"solve", "--theory", "nonsense"}).code == 2);
  CHECK(cli({"coeffs", "-n", "2"}).code == 2);  // below the jmax >= 4 floor
  CHECK(cli({"verify", "-n", "64"}).code == 2);
  CHECK(cli({"solve", "--theory", "dirac-pauli", "-n", "2"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("json outputs conform to the shipped schemas") {
  check_schema(cli({"solve", "-n", "5", "--format", "json"}).out,
               "series.schema.json");
  check_schema(cli({"solve", "--theory", "dirac-pauli", "-n", "5", "--format",
                    "json"})
                   .out,
               "series.schema.json");
  check_schema(cli({"coeffs", "-n", "6", "--format", "json"}).out,
               "coeffs.schema.json");
  check_schema(cli({"series-check", "-n", "12", "--format", "json"}).out,
               "series_check.schema.json");
  check_schema(
      cli({"hamiltonian", "-n", "4", "--expanded", "--format", "json"}).out,
      "hamiltonian.schema.json");
  check_schema(cli({"hamiltonian", "--theory", "dirac-pauli", "-n", "4",
                    "--format", "json"})
                   .out,
               "hamiltonian.schema.json");
  check_schema(cli({"verify", "-n", "4", "--format", "json"}).out,
               "report.schema.json");
  check_schema(cli({"report", "-n", "4"}).out, "report.schema.json");

  // The x series of a solve document also conforms to the bare opexpr schema
  // term by term.
  Json doc = Json::parse(cli({"solve", "-n", "3", "--format", "json"}).out);
  for (const Json& order : doc["x"]["orders"])
    CHECK(schema_check::conforms(order["terms"],
                                 load_schema("opexpr.schema.json"))
              .empty());
}

TEST_CASE("deterministic output for fixed flags") {
  auto a = cli({"solve", "--theory", "dirac-pauli", "-n", "7", "--format",
                "json"});
  auto b = cli({"solve", "--theory", "dirac-pauli", "-n", "7", "--format",
                "json"});
  CHECK(a.out == b.out);

  auto c = cli({"coeffs", "-n", "10", "--format", "json"});
  auto d = cli({"coeffs", "-n", "10", "--format", "json"});
  CHECK(c.out == d.out);

  auto e = cli({"hamiltonian", "-n", "5", "--expanded", "--format", "json"});
  auto f = cli({"hamiltonian", "-n", "5", "--expanded", "--format", "json"});
  CHECK(e.out == f.out);

  // Reports carry per-check wall times; determinism holds modulo those.
  auto g = cli({"verify", "-n", "4", "--format", "json"});
  auto h = cli({"verify", "-n", "4", "--format", "json"});
  CHECK(strip_timing(Json::parse(g.out)) == strip_timing(Json::parse(h.out)));
}

TEST_CASE("report content") {
  auto r = cli({"report", "-n", "4"});
  CHECK(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["overall_pass"] == true);
  CHECK(doc["command"] == "report");
  CHECK(!doc["edotpi_breakdown"].empty());

  bool saw_f = false, saw_c1 = false, saw_discovered = false;
  for (const Json& check : doc["checks"]) {
    if (check["name"] == "identity_F") {
      saw_f = true;
      CHECK(check["status"] == "printed-inconsistent");
      CHECK(check["authoritative"] == false);
      CHECK(check["first_failure"]["order"] == 1);
    }
    if (check["name"] == "identity_C1") {
      saw_c1 = true;
      CHECK(check["status"] == "printed-inconsistent");
      CHECK(check["first_failure"]["order"] == 2);
    }
    if (check["name"] == "discovered_edotpi_relation") {
      saw_discovered = true;
      CHECK(check["status"] == "pass");
    }
  }
  CHECK(saw_f);
  CHECK(saw_c1);
  CHECK(saw_discovered);
}

TEST_CASE("verify is monotone in the order") {
  for (int n : {2, 4, 6, 8})
    CHECK(cli({"verify", "-n", std::to_string(n)}).code == 0);
}

TEST_CASE("negative control is localized in the report") {
  auto r = cli({"verify", "-n", "4", "--phi-sign", "plus", "--format",
                "json"});
  CHECK(r.code == 1);
  Json doc = Json::parse(r.out);
  CHECK(doc["overall_pass"] == false);
  for (const Json& check : doc["checks"]) {
    if (check["name"] == "dirac_recursion_vs_closed_form") {
      CHECK(check["status"] == "fail");
      CHECK(check["first_failure"]["order"] == 3);
      CHECK(check["first_failure"]["structure"].get<std::string>().find(
                "s.E") != std::string::npos);
    }
  }
}

TEST_CASE("latex output is a standalone document") {
  auto r = cli({"solve", "-n", "3", "--format", "latex"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\\documentclass") == 0);
  CHECK(r.out.find("\\begin{align*}") != std::string::npos);
  CHECK(r.out.find("X_{3}") != std::string::npos);
  CHECK(r.out.find("\\end{document}") != std::string::npos);

  auto h = cli({"hamiltonian", "--theory", "dirac-pauli", "-n", "4",
                "--expanded", "--format", "latex"});
  CHECK(h.out.find("mc^{2}") != std::string::npos);
  CHECK(h.out.find("\\mu'") != std::string::npos);
  CHECK(h.out.find("(2mc)") != std::string::npos);
}

TEST_CASE("output file writing") {
  std::string path = "cli_test_output.json";
  auto r = cli({"coeffs", "-n", "5", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  check_schema(buf.str(), "coeffs.schema.json");
  std::remove(path.c_str());
}
