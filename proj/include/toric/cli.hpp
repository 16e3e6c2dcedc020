#pragma once

#include <ostream>

namespace toric {

// Exit codes: 0 success, 1 invalid input or domain error, 2 verification
// failure or internal error. Diagnostics go to err as one JSON object.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toric
