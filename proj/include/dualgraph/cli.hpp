#ifndef DUALGRAPH_CLI_HPP
#define DUALGRAPH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dualgraph {

// Exit codes:
//   0  success
//   1  usage, parse or validation failure
//   2  not a dual graph (intersection matrix not negative definite)
//   3  cross-check inconsistency or audit failure
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dualgraph

#endif
