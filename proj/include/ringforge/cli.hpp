#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringforge {

// Runs one CLI invocation. Pure apart from the streams it is handed (and an
// optional RINGFORGE_MAX_ORDER environment override): identical argument
// vectors produce byte-identical output.
//
// Exit codes: 0 success, 1 computational failure, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringforge
