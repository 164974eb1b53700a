#pragma once

#include <string>
#include <vector>

namespace tdfc {

/// Exit-code contract: 0 success, 1 verification failure, 2 input error,
/// 3 infeasible embedding.
int run_cli(const std::vector<std::string>& args);

}  // namespace tdfc
