#pragma once

#include <ostream>

#include "cuhyper/analysis.hpp"

namespace cuh {

/// 0 when no report failed, 2 otherwise.
int suite_exit_code(const SuiteResult& suite);

/// Exit codes: 0 success, 1 usage or input error, 2 a check failed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cuh
