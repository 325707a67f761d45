#ifndef YHECKE_CLI_HPP
#define YHECKE_CLI_HPP

// The `yhecke` command line. Exit codes: 0 success, 1 computation or
// validation error, 2 usage error. Errors print one line to `err`.

#include <ostream>

namespace yhecke {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace yhecke

#endif  // YHECKE_CLI_HPP
