#pragma once

#include <iosfwd>

namespace fracineq::cli {

/// Full command-line entry point; returns the process exit code.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fracineq::cli
