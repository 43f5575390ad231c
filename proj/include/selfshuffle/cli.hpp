#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace selfshuffle {

// Exit status: 0 success, 1 domain error or failed verification, 2 usage or parse error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selfshuffle
