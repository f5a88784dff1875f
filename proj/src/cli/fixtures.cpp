#include "teichkit/cli/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "teichkit/cli/dispatch.hpp"
#include "teichkit/cli/json_io.hpp"

namespace teichkit::cli {

namespace {

// Structural comparison with numeric tolerance; returns the first mismatch.
std::optional<std::string> compare(const Json& got, const Json& want, double tol, const std::string& path) {
  if (got.is_number() && want.is_number()) {
    const double g = got.get<double>();
    const double w = want.get<double>();
    if (std::abs(g - w) <= tol) return std::nullopt;
    return path + ": got " + got.dump() + ", expected " + want.dump();
  }
  if (got.type() != want.type()) return path + ": got " + got.dump() + ", expected " + want.dump();
  if (got.is_array()) {
    if (got.size() != want.size()) {
      return path + ": array length " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (auto diff = compare(got[i], want[i], tol, path + "[" + std::to_string(i) + "]")) return diff;
    }
    return std::nullopt;
  }
  if (got.is_object()) {
    if (got.size() != want.size()) return path + ": key sets differ: " + got.dump() + " vs " + want.dump();
    for (const auto& [key, value] : want.items()) {
      if (!got.contains(key)) return path + ": missing key \"" + key + "\"";
      if (auto diff = compare(got.at(key), value, tol, path + "." + key)) return diff;
    }
    return std::nullopt;
  }
  if (got == want) return std::nullopt;
  return path + ": got " + got.dump() + ", expected " + want.dump();
}

FixtureResult run_one(const std::filesystem::path& file, double tol) {
  FixtureResult result;
  result.name = file.filename().string();
  std::ifstream in(file);
  if (!in) {
    result.detail = "cannot open fixture";
    return result;
  }
  const Json fixture = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (fixture.is_discarded() || !fixture.is_object() || !fixture.contains("command") ||
      !fixture.contains("expected") || !fixture.at("command").is_array()) {
    result.detail = "malformed fixture: needs \"command\" array and \"expected\"";
    return result;
  }
  std::vector<std::string> args;
  for (const auto& a : fixture.at("command")) {
    if (!a.is_string()) {
      result.detail = "command entries must be strings";
      return result;
    }
    args.push_back(a.get<std::string>());
  }
  const int want_exit = fixture.value("exit", 0);

  std::ostringstream out;
  std::ostringstream err;
  const int got_exit = dispatch(args, out, err);
  if (got_exit != want_exit) {
    result.detail = "exit code " + std::to_string(got_exit) + ", expected " + std::to_string(want_exit) +
                    "; stdout=" + out.str() + " stderr=" + err.str();
    return result;
  }
  std::string text = want_exit == 0 ? out.str() : err.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  const Json& expected = fixture.at("expected");
  if (text == expected.dump()) {
    result.status = FixtureResult::Status::Exact;
    return result;
  }
  const Json got = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (got.is_discarded()) {
    result.detail = "output is not JSON: " + text;
    return result;
  }
  if (auto diff = compare(got, expected, tol, "$")) {
    result.detail = *diff;
    return result;
  }
  result.status = FixtureResult::Status::WithinTolerance;
  result.detail = "bytes differ: got " + text + ", expected " + expected.dump();
  return result;
}

}  // namespace

std::size_t FixtureSummary::count(FixtureResult::Status status) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [status](const FixtureResult& r) { return r.status == status; }));
}

bool FixtureSummary::passed(bool require_exact) const {
  const std::size_t bad = count(FixtureResult::Status::Failed) +
                          (require_exact ? count(FixtureResult::Status::WithinTolerance) : 0);
  return bad == 0;
}

FixtureSummary run_fixtures(const std::filesystem::path& dir, double tol) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::InvalidArgument, "fixture directory '" + dir.string() + "' does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  FixtureSummary summary;
  for (const auto& file : files) summary.results.push_back(run_one(file, tol));
  return summary;
}

}  // namespace teichkit::cli
