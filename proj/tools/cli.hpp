#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcnpn::cli
{

enum ExitCode : int
{
  kSuccess = 0,
  kNegative = 1, ///< not equivalent, or a self-test failure
  kUsage = 2
};

/// Runs one command line (without the program name) against the given streams.
int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace dcnpn::cli
