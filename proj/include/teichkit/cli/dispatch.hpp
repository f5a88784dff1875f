#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace teichkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Name of the environment variable that overrides the default tolerance.
inline constexpr const char* kEpsEnvVar = "TEICHKIT_EPS";

/// Runs one command line (without the program name). On success writes one
/// JSON document and a newline to `out` and returns 0. Usage errors return 2
/// and domain errors return 1, both with {"error", "message"} on `err`.
/// `env_eps` is the tolerance from the environment; a --eps flag wins over it.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             std::optional<std::string> env_eps = std::nullopt);

}  // namespace teichkit::cli
