#pragma once

#include "planarg/textio.hpp"

#include <iosfwd>
#include <optional>

namespace planarg
{

// Process exit codes.
enum exit_code : int
{
    exit_ok = 0,
    exit_invalid_input = 1,
    exit_io_failure = 2
};

struct solve_options
{
    semantics kind = semantics::grounded;
    std::optional< std::size_t > max_len; // defaults to the number of states
    revisit policy = revisit::forbid;
    bool explain = false;
};

// parse -> plan -> argue -> evaluate -> explain.
[[nodiscard]] results solve( const system_document& doc, const solve_options& options = {} );

// Entry point of the planarg tool; writes results to out and diagnostics to err.
int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err );

} // namespace planarg
