#ifndef WHRANK_CLI_HPP
#define WHRANK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace whrank {

// Exit codes: 0 success, 1 usage error, 2 computation or input error,
// 3 success with N > 0 (rank and classdata only).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whrank

#endif  // WHRANK_CLI_HPP
