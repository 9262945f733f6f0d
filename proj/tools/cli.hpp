#pragma once

#include <iosfwd>

namespace relspeed::cli {

// Full command-line entry point. Writes documents to out (or to --output),
// diagnostics to err. Returns the process exit code: 0 on success, 1 for
// usage problems, 2 when the physics or the arithmetic rejects the request.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace relspeed::cli
