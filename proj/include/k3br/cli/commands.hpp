#pragma once

#include <ostream>

namespace k3br::cli {

/// Parses arguments, runs one subcommand and writes its reports to out
/// (text, or JSON lines with --json). Usage errors go to err with exit 64.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k3br::cli
