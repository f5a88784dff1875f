#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace teichkit::cli {

/// A fixture file is a JSON object
///   {"command": [args...], "expected": <document>, "exit": <code, default 0>}
/// where `expected` is compared against stdout on exit 0 and against the
/// stderr error document otherwise.
struct FixtureResult {
  enum class Status { Exact, WithinTolerance, Failed };

  std::string name;
  Status status = Status::Failed;
  std::string detail;
};

struct FixtureSummary {
  std::vector<FixtureResult> results;

  std::size_t count(FixtureResult::Status status) const;
  /// With `require_exact`, tolerance-only matches count as failures.
  bool passed(bool require_exact) const;
};

/// Runs every *.json fixture in `dir` (sorted by file name) through dispatch.
/// Numbers are compared with absolute tolerance `tol` when bytes differ.
FixtureSummary run_fixtures(const std::filesystem::path& dir, double tol = 1e-9);

}  // namespace teichkit::cli
