#pragma once

#include <ostream>

namespace hcf {

// Exit codes: 0 success/certified, 1 property violated/counterexample/anomaly,
// 2 usage or input error.
int run_cli(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

} // namespace hcf
