// Shared driver for the fk3, jordan and fulcrum command-line tools.

#ifndef FULCRUM_TOOLS_CLI_HPP_
#define FULCRUM_TOOLS_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace fulcrum::cli {

  enum class Command { classify, verify, nichols_dim, jordan_verify, complete };

  struct RunConfig {
    Command     command = Command::nichols_dim;
    std::string field   = "F2";
    std::string group   = "gx";
    std::string lambda;
    std::string mu;
    std::size_t max_len = 6;
    std::string out;     // artifact path; empty means stdout where relevant
    std::string format = "json";
    std::string input;   // presentation file for complete
    bool        certify   = false;
    bool        galois    = false;
    bool        coactions = false;
    unsigned    jobs      = 1;
  };

  inline constexpr int exit_ok      = 0;
  inline constexpr int exit_failure = 1;
  inline constexpr int exit_usage   = 2;

  /// Runs one pipeline; human-readable lines go to out, diagnostics to err.
  int run(RunConfig const& config, std::ostream& out, std::ostream& err);

  /// Entry points that parse argv with CLI11 and call run.
  int fk3_main(int argc, char const* const* argv);
  int jordan_main(int argc, char const* const* argv);
  int fulcrum_main(int argc, char const* const* argv);

}  // namespace fulcrum::cli

#endif  // FULCRUM_TOOLS_CLI_HPP_
