#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltlmc::cli
{

// Process exit statuses.
enum exit_status : int
{
    ok = 0,            // all specs hold / suite matches / oracle agrees
    violated = 1,      // some spec fails / suite mismatch / oracle disagreement
    usage_error = 2,   // bad arguments, missing files, syntax or semantic errors
    state_limit = 3,   // state space cap exceeded
};

// Runs the command line `args` (without the program name), writing the
// report to `out` and diagnostics to `err`.
int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err );

} // namespace ltlmc::cli
