#ifndef CFH_CLI_HPP
#define CFH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cfh {

// full command surface; args excludes the program name.
// exit codes: 0 ok, 1 invalid input, 2 internal invariant violation
int cli_main(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace cfh

#endif // CFH_CLI_HPP
