#pragma once

#include <iosfwd>

namespace betashift {

// Batch front-end.  Data goes to `out`, diagnostics to `err`.
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 precision/guard error,
// 4 verification failure.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betashift
