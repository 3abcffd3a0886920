#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "perichar/cancel.hpp"

namespace perichar::cli {

/// Token observed by every long-running command; main() wires SIGINT to it.
CancelToken& global_cancel();

/// Run one invocation (args exclude the program name). Deterministic:
/// identical inputs produce byte-identical output. Exit codes: 0 success,
/// 1 domain error ("ERROR: ..." on err), 2 usage error, 130 cancelled.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace perichar::cli
