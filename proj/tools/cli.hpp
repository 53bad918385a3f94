#ifndef WHW_TOOLS_CLI_HPP
#define WHW_TOOLS_CLI_HPP

#include <ostream>

namespace whw::cli {

enum Exit : int {
    ok = 0,
    usage = 1,
    check_failed = 2,
    parse_error = 3,
    schema_error = 4,
    precondition = 5,
};

// Entry point behind the `whw` binary; tests call it in process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace whw::cli

#endif
