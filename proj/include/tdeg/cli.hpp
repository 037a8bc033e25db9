#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tdeg/json_io.hpp"

namespace tdeg {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInvalid = 2 };

/// Runs one subcommand. args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;
};

/// Checks a certificate document of any kind and replays every claim it
/// carries for `blocks` target blocks. Schema problems throw Error(Schema).
VerifyReport verify_document(const Json& doc, std::uint64_t blocks);

}  // namespace tdeg
