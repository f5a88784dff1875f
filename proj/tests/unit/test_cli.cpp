#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "teichkit/cli/dispatch.hpp"
#include "teichkit/cli/fixtures.hpp"
#include "teichkit/cli/json_io.hpp"

using namespace teichkit::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err, std::move(env));
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) : path_(fs::temp_directory_path() / ("teichkit_" + tag)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path_ / name) << text; }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("dispatch examples") {
  const Run jordan = run({"hopf", "classify", "--matrix", "[[[0.5,0],[1,0]],[[0,0],[0.5,0]]]"});
  CHECK(jordan.code == kExitOk);
  const Json doc = Json::parse(jordan.out);
  CHECK(doc["class"] == "resonant");
  CHECK(doc["lambda"].dump() == "[0.5,0]");
  CHECK(doc["p"] == 1);

  const Run reduce = run({"tori", "reduce", "--tau", "5", "1"});
  CHECK(reduce.code == kExitOk);
  CHECK(reduce.out == "{\"reduced\":[0,1],\"witness\":[[1,-5],[0,1]]}\n");

  const Run morita = run({"fol", "morita", "--alpha", R"({"p":0,"q":1,"d":2})", "--beta", R"({"p":1,"q":1,"d":2})"});
  CHECK(morita.code == kExitOk);
  CHECK(morita.out == "{\"equivalent\":true}\n");
}

TEST_CASE("exit codes and error documents") {
  const Run domain = run({"hopf", "classify", "--matrix", "[[1,0],[0,0.5]]"});
  CHECK(domain.code == kExitDomainError);
  CHECK(domain.out.empty());
  CHECK(Json::parse(domain.err)["error"] == "NotContracting");

  for (const std::vector<std::string>& bad : std::vector<std::vector<std::string>>{
           {},
           {"nosuch"},
           {"hopf", "classify"},
           {"hopf", "classify", "--matrix", "[[1,0],[0"},
           {"hopf", "classify", "--matrix", "[[1,0]]"},
           {"tori", "reduce", "--tau", "abc", "1"},
           {"fol", "cf", "--alpha", "1/0"},
           {"teich", "twin", "--x", R"({"stratum":"d","params":[1]})"},
           {"atlas", "check", "--structure", "unknown"},
       }) {
    const Run r = run(bad);
    CHECK(r.code == kExitUsage);
    CHECK(r.out.empty());
    CHECK(Json::parse(r.err).contains("error"));
  }

  const Run singular = run({"core", "inverse", "--matrix", "[[1,2],[2,4]]"});
  CHECK(singular.code == kExitDomainError);
  CHECK(Json::parse(singular.err)["error"] == "SingularMatrix");

  const Run lower = run({"tori", "reduce", "--tau", "0", "-1"});
  CHECK(lower.code == kExitDomainError);
}

TEST_CASE("output is deterministic with twelve significant digits") {
  const std::vector<std::string> args = {"hopf", "classify", "--matrix", "[[0.3,0.1],[0.2,0.4]]"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const Run third = run({"fol", "orbit", "--z0", "1", "0", "--alpha", "1/3", "--max", "5"});
  CHECK(third.out.find("-0.866025403784") != std::string::npos);
  const Run check1 = run({"atlas", "check", "--structure", "conjugation", "--samples", "30", "--seed", "4"});
  const Run check2 = run({"atlas", "check", "--structure", "conjugation", "--samples", "30", "--seed", "4"});
  CHECK(check1.out == check2.out);
  CHECK(Json::parse(check1.out)["passed"] == false);
}

TEST_CASE("tolerance from flag and environment") {
  // |0.5^2 - 0.2501| = 1e-4: resonant only with a loose tolerance.
  const std::vector<std::string> args = {"hopf", "resonance", "--big", "0.5", "0", "--small", "0.2501", "0"};
  CHECK(Json::parse(run(args).out)["p"].is_null());
  CHECK(Json::parse(run(args, "1e-3").out)["p"] == 2);
  std::vector<std::string> flagged = args;
  flagged.insert(flagged.end(), {"--eps", "1e-12"});
  CHECK(Json::parse(run(flagged, "1e-3").out)["p"].is_null());
  CHECK(run(args, "not-a-number").code == kExitUsage);
  CHECK(run(args, "-1").code == kExitUsage);
}

TEST_CASE("fixture runner: empty directory passes with zero fixtures") {
  TempDir dir("empty");
  const FixtureSummary s = run_fixtures(dir.path());
  CHECK(s.results.empty());
  CHECK(s.passed(true));
}

TEST_CASE("fixture runner: matching, tolerant and perturbed fixtures") {
  TempDir dir("mixed");
  dir.write("a_exact.json", R"({"command":["tori","reduce","--tau","5","1"],
                                "expected":{"reduced":[0,1],"witness":[[1,-5],[0,1]]}})");
  dir.write("b_tolerant.json", R"({"command":["hopf","dettrace","--matrix","[[0.5,0],[0,0.25]]"],
                                   "expected":{"det":[0.1250000000001,0],"trace":[0.75,0]}})");
  dir.write("c_error.json", R"({"command":["hopf","classify","--matrix","[[1,0],[0,0.5]]"],
                                "expected":{"error":"NotContracting","message":"matrix is not a contraction"},"exit":1})");
  FixtureSummary s = run_fixtures(dir.path());
  REQUIRE(s.results.size() == 3);
  CHECK(s.results[0].status == FixtureResult::Status::Exact);
  CHECK(s.results[1].status == FixtureResult::Status::WithinTolerance);
  CHECK(s.results[2].status == FixtureResult::Status::Exact);
  CHECK(s.passed(false));
  CHECK_FALSE(s.passed(true));

  dir.write("d_perturbed.json", R"({"command":["hopf","dettrace","--matrix","[[0.5,0],[0,0.25]]"],
                                    "expected":{"det":[0.126,0],"trace":[0.75,0]}})");
  s = run_fixtures(dir.path());
  REQUIRE(s.results.size() == 4);
  CHECK(s.results[3].status == FixtureResult::Status::Failed);
  CHECK(s.results[3].detail.find("det") != std::string::npos);
  CHECK_FALSE(s.passed(false));
  CHECK(s.count(FixtureResult::Status::Failed) == 1);

  dir.write("e_broken.json", "{not json");
  s = run_fixtures(dir.path());
  CHECK(s.results[4].status == FixtureResult::Status::Failed);
}

TEST_CASE("fixture runner: missing directory is rejected") {
  CHECK_THROWS(run_fixtures("/nonexistent/teichkit/fixtures"));
  const Run r = run({"fixtures", "--dir", "/nonexistent/teichkit/fixtures"});
  CHECK(r.code != kExitOk);
}

TEST_CASE("fixtures subcommand over the shipped corpus") {
  const Run r = run({"fixtures", "--dir", TEICHKIT_FIXTURE_DIR, "--exact"});
  CHECK(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["fixtures"].get<int>() > 60);
}
