#pragma once

#include <string>
#include <vector>

#include "electre_score/cli.hpp"

namespace test {

/// Runs the command line entry point with `args` (program name excluded).
inline int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "electre-score");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  return electre_score::cli::run(static_cast<int>(args.size()), argv.data());
}

}  // namespace test
