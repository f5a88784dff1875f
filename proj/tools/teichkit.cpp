#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "teichkit/cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_eps;
  if (const char* value = std::getenv(teichkit::cli::kEpsEnvVar)) env_eps = value;
  return teichkit::cli::dispatch(args, std::cout, std::cerr, env_eps);
}
