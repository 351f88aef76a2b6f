#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "plaus/cli.hpp"
#include "plaus/serialize.hpp"

using namespace plaus;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "cli_test_" + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("check: valid formula exits 0") {
  auto r = run({"check", "U x P(x) -> exists x P(x)", "--max-domain", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("valid up to bound") != std::string::npos);
}

TEST_CASE("check: countermodel exits 1") {
  auto r = run({"check", "U x P(x) -> U x Q(x)", "--max-domain", "2"});
  CHECK(r.status == 1);
  CHECK(r.out.find("countermodel") != std::string::npos);
}

TEST_CASE("check: jsonl output is machine readable and deterministic") {
  std::vector<std::string> args{"check", "U x P(x) -> forall x P(x)",
                                "--max-domain", "2", "--format", "jsonl"};
  auto r1 = run(args);
  auto r2 = run(args);
  CHECK(r1.status == 1);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("\"v\":1") != std::string::npos);
  CHECK(r1.out.find("\"status\":\"invalid\"") != std::string::npos);
}

TEST_CASE("check: parse error exits 2 with a diagnostic") {
  auto r = run({"check", "U x P(x", "--max-domain", "2"});
  CHECK(r.status == 2);
  CHECK(r.err.find("syntax error at 1:8") != std::string::npos);
}

TEST_CASE("check: guard violation exits 2 and names the estimate") {
  auto r = run({"check", "U x P(x)", "--max-domain", "5"});
  CHECK(r.status == 2);
  CHECK(r.err.find("--unsafe-size") != std::string::npos);
}

TEST_CASE("model evaluates structure files") {
  std::string path = write_temp(
      "k.json",
      R"({"domain":["a","b"],"opens":[["a"],["a","b"]],"predicates":{"P":[["a"]]}})");
  auto t = run({"model", path, "U x P(x)"});
  CHECK(t.status == 0);
  CHECK(t.out == "true\n");
  auto f = run({"model", path, "U x ~P(x)"});
  CHECK(f.status == 1);
  CHECK(f.out == "false\n");
  auto missing = run({"model", "no_such_file.json", "U x P(x)"});
  CHECK(missing.status == 2);
  CHECK(missing.err.find("no_such_file.json") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("formula can come from a file") {
  std::string path = write_temp("f.txt", "U x P(x) -> exists x P(x)");
  auto r = run({"check", path, "--file", "--max-domain", "2"});
  CHECK(r.status == 0);
  std::remove(path.c_str());
}

TEST_CASE("enumerate counts") {
  auto spaces = run({"enumerate", "spaces", "--size", "2"});
  CHECK(spaces.status == 0);
  CHECK(spaces.out == "spaces at size 2: 3\n");
  auto quantifiers = run({"enumerate", "quantifiers", "--size", "3"});
  CHECK(quantifiers.out == "quantifiers at size 3: 5\n");
  auto upsilons = run({"enumerate", "upsilons", "--size", "2"});
  CHECK(upsilons.out == "upsilons at size 2: 9\n");
  auto identity =
      run({"enumerate", "upsilons", "--size", "2", "--quantifier", "identity"});
  CHECK(identity.out == "upsilons at size 2: 1\n");
}

TEST_CASE("enumerate --list emits one item per line") {
  auto r = run({"enumerate", "spaces", "--size", "2", "--list", "--format",
                "jsonl"});
  CHECK(r.status == 0);
  // 3 item lines + 1 summary line
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 4);
}

TEST_CASE("laws suites") {
  auto funcalg = run({"laws", "--suite", "funcalg", "--size", "2"});
  CHECK(funcalg.status == 0);
  CHECK(funcalg.out.find("P6: fails (expected)") != std::string::npos);
  CHECK(funcalg.out.find("all laws behaved as expected") != std::string::npos);

  auto monadic = run({"laws", "--suite", "monadic", "--size", "3"});
  CHECK(monadic.status == 0);
  CHECK(monadic.out.find("checked 5 quantifiers") != std::string::npos);

  auto ubiq = run({"laws", "--suite", "ubiq", "--size", "2"});
  CHECK(ubiq.status == 0);
  CHECK(ubiq.out.find("checked 10 ubiquity algebras") != std::string::npos);
}

TEST_CASE("quotient-check audits and reports") {
  auto r = run({"quotient-check", "--size", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("13 (algebra, ideal) pairs") != std::string::npos);
  CHECK(r.out.find("13 descend") != std::string::npos);
  CHECK(r.out.find("disjunction law holds") != std::string::npos);

  auto jsonl = run({"quotient-check", "--size", "2", "--format", "jsonl"});
  int lines = 0;
  for (char c : jsonl.out) lines += c == '\n';
  CHECK(lines == 14);  // 13 verdicts + summary
}

TEST_CASE("axioms command") {
  auto r = run({"axioms", "--max-domain", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("Ax1: valid up to bound 2") != std::string::npos);
  CHECK(r.out.find("T1.iii: valid up to bound 2") != std::string::npos);
  CHECK(r.out.find("all axiom schemas valid") != std::string::npos);
}

TEST_CASE("jsonl output is byte-identical across invocations") {
  const std::vector<std::vector<std::string>> invocations = {
      {"axioms", "--max-domain", "2", "--format", "jsonl"},
      {"enumerate", "spaces", "--size", "3", "--list", "--format", "jsonl"},
      {"laws", "--suite", "funcalg", "--size", "2", "--format", "jsonl"},
      {"quotient-check", "--size", "2", "--format", "jsonl"},
  };
  for (const auto& args : invocations) {
    auto r1 = run(args);
    auto r2 = run(args);
    CHECK(r1.out == r2.out);
    CHECK(r1.status == r2.status);
  }
}

TEST_CASE("unsafe-size prints the cost estimate first") {
  auto r = run({"enumerate", "spaces", "--size", "4", "--unsafe-size"});
  CHECK(r.status == 0);
  CHECK(r.err.find("cost estimate") != std::string::npos);
  CHECK(r.out == "spaces at size 4: 145\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"no-such-command"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"laws", "--suite", "bogus"}).status == 2);
}

TEST_CASE("structure and space json round trips") {
  Json j = Json::parse(
      R"({"domain":["a","b"],"opens":[["a"],["a","b"]],"predicates":{"P":[["a"]],"R":[["a","b"],["b","b"]]}})");
  PTStructure k = structure_from_json(j);
  CHECK(structure_from_json(structure_to_json(k)) == k);
  CHECK(space_from_json(space_to_json(k.opens())) == k.opens());
  // opens are listed canonically
  CHECK(space_to_json(k.opens())["opens"] ==
        Json::parse(R"([["a"],["a","b"]])"));

  // bad files are rejected with the violated clause
  CHECK_THROWS_AS(
      structure_from_json(Json::parse(R"({"domain":["a"],"opens":[]})")),
      ValidationError);
  CHECK_THROWS_AS(structure_from_json(Json::parse(
                      R"({"domain":["a","b"],"opens":[["a"],["a","b"]],
                          "predicates":{"P":[["a"],["a","b"]]}})")),
                  ValidationError);
}

TEST_CASE("elements and tables serialize in the documented shapes") {
  auto algebra = BoolAlgebra::powerset({"b", "a"});
  CHECK(elem_to_json(algebra->one()) == Json::parse(R"(["a","b"])"));
  CHECK(elem_to_json(algebra->zero()) == Json::parse("[]"));
  MonadicAlgebra m{Quantifier::simple(algebra)};
  Json q = quantifier_to_json(m.quantifier());
  CHECK(q.is_array());
  CHECK(q.size() == algebra->size());
  CHECK(q[0] == Json::parse(R"([[],[]])"));
  UbiquityAlgebra u = UbiquityAlgebra::identity(m);
  Json uj = ubiquity_to_json(u);
  CHECK(uj.contains("algebra"));
  CHECK(uj.contains("exists"));
  CHECK(uj.contains("upsilon"));
}
