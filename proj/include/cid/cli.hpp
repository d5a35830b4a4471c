#ifndef CID_CLI_HPP
#define CID_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cid::cli {

/// Exit codes: 0 all checks pass, 1 a mathematical check failed (witness
/// printed), 2 usage error, 3 resource cap hit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cid::cli

#endif
