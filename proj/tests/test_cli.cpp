#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

#include "skein/cli.hpp"
#include "skein/hecke.hpp"
#include "skein/skein_basis.hpp"

using namespace skein;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: trace example") {
  Result r = run_cli({"trace", "--n", "2", "t^2 t1"});
  CHECK(r.code == kOk);
  CHECK(r.out == "q*s[1]*s[2] + (q-1)*z*s[3]\n");
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli({"trace", "--n", "2", "t^2 x1"}).code == kParseError);
  CHECK(run_cli({"trace", "--n", "1", "g3"}).code == kValidationError);
  CHECK(run_cli({"bbm", "t t1", "--strand", "5"}).code == kValidationError);
  CHECK(run_cli({"enum", "--exp-bound", "0"}).code == kValidationError);
  CHECK(run_cli({"frobnicate"}).code == kValidationError);
  CHECK(run_cli({"check-identity", "--identity", "lemma2ii", "--n", "1", "--k", "-1"}).code == kVerificationFailure);
  CHECK(run_cli({"check-identity", "--identity", "lemma2ii", "--n", "1", "--k", "-1", "--derived"}).code == kOk);
  CHECK(run_cli({"decompose", "t t1^2"}).code == kOk);
  CHECK(run_cli({"decompose", "t t1"}).code == kVerificationFailure);
  CHECK(run_cli({"--help"}).code == kOk);
}

TEST_CASE("cli: system export") {
  Result r = run_cli({"system", "--set", "lambda-aug", "--level", "3", "--positive", "--max-index", "2", "--strand",
                      "first", "--p", "1", "--format", "json"});
  REQUIRE(r.code == kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 8);
  std::set<std::string> unknowns;
  for (const auto& u : j["unknowns"]) unknowns.insert(u.get<std::string>());
  for (const auto& row : j["rows"]) {
    CHECK(row["strand"] == 1);
    for (const auto& [k, v] : row["coeffs"].items()) {
      CHECK(unknowns.count(k) == 1);
      CHECK(v.is_string());
      CHECK_FALSE(RationalFn::parse(v.get<std::string>()).is_zero());
    }
  }
  Result all = run_cli({"system", "--set", "lambda", "--level", "3", "--positive", "--max-index", "2", "--format",
                        "json", "--jobs", "4"});
  CHECK(nlohmann::json::parse(all.out)["rows"].size() == 12);
}

TEST_CASE("cli: identical invocations give identical output") {
  std::vector<std::string> args{"verify-theorem", "--level", "2", "--positive", "--max-index", "2", "--p", "2",
                                "--format", "json"};
  Result a = run_cli(args), b = run_cli(args);
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  args.push_back("--jobs");
  args.push_back("3");
  CHECK(run_cli(args).out == a.out);
  args.push_back("--strict");
  CHECK(run_cli(args).code == kVerificationFailure);
}

TEST_CASE("cli: printed values re-parse") {
  Result nf = run_cli({"nf", "--n", "3", "g2 t1 g1^-1 u2"});
  REQUIRE(nf.code == kOk);
  Result en = run_cli({"enum", "--set", "lambda-aug", "--level", "1", "--max-index", "2", "--exp-bound", "2"});
  REQUIRE(en.code == kOk);
  std::istringstream lines(en.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(SkeinMonomial::parse(line).str() == line);
    ++count;
  }
  CHECK(count == 12);
  Result ord = run_cli({"order", "t^-1 t1", "t t1^-1"});
  CHECK(ord.out == "LESS\n");
  Result conv = run_cli({"convert", "t^2 t1", "--format", "json"});
  auto j = nlohmann::json::parse(conv.out);
  CHECK(j["lambda_prime"].size() == 2);
  for (const auto& t : j["lambda_prime"]) {
    SkeinMonomial m = SkeinMonomial::parse(t["monomial"].get<std::string>());
    if (m.index() > 0) CHECK(m.variant == LoopVariant::TPrime);
    RationalFn::parse(t["coeff"].get<std::string>());
  }
}
