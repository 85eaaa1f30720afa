#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permpack::cli {

/// Run one permpack command. Returns 0 on success, 1 on usage or input
/// errors, 2 when a verification command finds a counterexample.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permpack::cli
