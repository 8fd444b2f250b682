#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyprime::cli {

// Exit codes: 0 success/valid, 1 invalid certificate, 2 usage error,
// 3 computation error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace polyprime::cli
