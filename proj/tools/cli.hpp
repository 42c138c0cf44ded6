#ifndef CESARO_TOOLS_CLI_HPP
#define CESARO_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cesaro::cli
{

// Exit codes: 0 success with all verdicts passing, 1 a verdict failed,
// 2 malformed input (bad flags, bad JSON, bad spec).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cesaro::cli

#endif
