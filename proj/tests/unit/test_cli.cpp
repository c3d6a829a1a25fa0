#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "binact");
  std::ostringstream out, err;
  const int code = binact::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json report(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("orbit report") {
  const auto r = run({"orbit", "--space", "s3", "--point", "x"});
  REQUIRE(r.code == 0);
  const auto j = report(r);
  CHECK(j["command"] == "orbit");
  CHECK(j["results"]["step"] == 3);
  CHECK(j["results"]["chain"][0] == nlohmann::json{"x", "xh"});
  CHECK(j["version"] == binact::cli::kVersion);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"verify-implications", "--group", "z4", "--carrier", "3",
                                      "--random", "40", "--seed", "9"};
  CHECK(run(args).out == run(args).out);
  CHECK(report(run(args))["inputs"]["seed"] == 9);
}

TEST_CASE("exit codes") {
  CHECK(run({"orbit", "--space", "missing", "--point", "0"}).code == binact::cli::kInputError);
  CHECK(run({"frobnicate"}).code == binact::cli::kInputError);
  CHECK(run({"classify", "--space", "coset:s3:(12)"}).code == binact::cli::kInputError);
  CHECK(run({"census", "--group", "z4", "--carrier", "3", "--budget", "5"}).code ==
        binact::cli::kBudgetExceeded);
  CHECK(run({"steps", "--space", "eta:s3", "--max-order", "4"}).code ==
        binact::cli::kBudgetExceeded);
  CHECK(run({"continuum", "axioms", "--dim", "2", "--samples", "50", "--tol-axiom", "1e-30"})
            .code == binact::cli::kRefuted);
}

TEST_CASE("census emits one line per space and a summary") {
  const auto r = run({"census", "--group", "z2", "--carrier", "2"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == 5);
  CHECK(rows.back()["results"]["total"] == 4);
}

TEST_CASE("windowed orbit") {
  const auto j = report(run({"orbit", "--space", "zwin:10", "--point", "2"}));
  for (const auto& v : j["results"]["orbit"]) CHECK(v.get<int>() % 2 == 0);
  CHECK(j["results"]["step"].is_null());
  CHECK(j["results"]["partial"] == true);
}

TEST_CASE("verification commands pass on small groups") {
  CHECK(run({"verify-thm1", "--group", "s3"}).code == 0);
  CHECK(run({"verify-thm2", "--group", "klein"}).code == 0);
  CHECK(run({"verify-prop2", "--group", "z4"}).code == 0);
  CHECK(run({"translate", "--space", "z5", "--point", "2"}).code == 0);
  CHECK(run({"continuum", "witness", "--dim", "3", "--samples", "100"}).code == 0);
}

TEST_CASE("gallery family matches dihedral_family") {
  const auto j = report(run({"gallery", "family", "--ms", "3,4"}));
  const std::size_t ms[] = {3, 4};
  CHECK(j["results"] == binact::cli::dihedral_family(ms));
}
