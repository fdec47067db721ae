#pragma once

#include <iosfwd>

namespace wsat {

// Dispatches the batch CLI. Returns the process exit code: 0 on success/true,
// 1 on false/invalid input, 2 on usage errors. Timing goes to `err` only, so
// `out` and written artifacts are byte-stable for fixed inputs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wsat
