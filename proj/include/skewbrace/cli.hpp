#ifndef SKEWBRACE_CLI_HPP_
#define SKEWBRACE_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace skewbrace::cli {

  // Exit codes.
  inline constexpr int ok             = 0;  // success or predicate true
  inline constexpr int predicate_false = 1;
  inline constexpr int input_error    = 2;
  inline constexpr int bound_exceeded = 3;

  // Seed used by randomized commands when --seed is absent.
  inline constexpr std::uint64_t default_seed = 42;

  // Runs one command; `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace skewbrace::cli

#endif  // SKEWBRACE_CLI_HPP_
