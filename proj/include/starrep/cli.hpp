#pragma once

#include "starrep/presentation.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace starrep {

/// The system commands operate on. Plain presentations yield their relations
/// as given (status raw). Presentations marked `double: yes` are completed
/// and joined with the stars of the completed relations; the result is
/// certified closed, trying other starred-letter orders if the declared one
/// does not close. Throws PreconditionError when that fails.
RewriteSystem prepare_system(const Presentation& p, const Bindings& overrides = {});

/// Loads FILE: an existing path, else a bundled preset spec. Throws ParseError.
std::string load_source(const std::string& file);

/// Runs one command line (without the program name). Exit codes: 0 success
/// or holds, 1 fails, 2 inconclusive, 3 input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace starrep
