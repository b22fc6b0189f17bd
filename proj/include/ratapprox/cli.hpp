#pragma once

#include <ostream>

namespace ratapprox::cli {

/// Entry point of the ratapprox command line tool. Returns the process exit
/// code: 0 when every requested output was written, 1 on a library error,
/// and the CLI11 code for usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ratapprox::cli
