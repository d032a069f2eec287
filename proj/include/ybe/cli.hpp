#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybe::cli {

/// Exit codes shared by every verb.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // validation or mathematical failure
inline constexpr int kUsage = 2;    // bad flags, unreadable or malformed input

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, progress and diagnostics to `err`. Verbs that produce records also
/// put them into the store given by --store, or by $YBX_STORE when unset.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ybe::cli
