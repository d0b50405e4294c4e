#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hgap/error.hpp"

namespace hgap {

/// 0 success, 1 usage or malformed input, 2 not real-rooted,
/// 3 internal invariant breach.
int exit_code(Errc code) noexcept;

/// Runs the command line (without the program name) against the given streams.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hgap
