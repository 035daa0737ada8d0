#pragma once

#include <iosfwd>

namespace mub {

/// Exit statuses of the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verify_failed = 1;
inline constexpr int not_prime_power = 2;
inline constexpr int not_mub = 3;           // also wrong basis count
inline constexpr int numerical_failure = 4;
inline constexpr int usage = 64;
inline constexpr int bad_input = 65;        // malformed or invalid collection file
inline constexpr int no_input = 66;
inline constexpr int cant_create = 73;
}  // namespace exit_code

/// mubtool {gen|drop|complete|verify}; see README for flags.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mub
