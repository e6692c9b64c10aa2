#pragma once

// Command-line front end. Subcommands: table, verify, cartan, series, lie,
// lyndon, sign. Exit codes: 0 success, 1 verification failure, 2 usage or
// cap error.

#include <iosfwd>
#include <optional>
#include <string>

#include "facealg/genfunc.hpp"
#include "facealg/lyndon.hpp"

namespace facealg::cli {

  enum class Format { text, json, csv };

  enum ExitCode : int {
    kSuccess      = 0,
    kVerifyFailed = 1,
    kUsageError   = 2,
  };

  struct RunConfig {
    std::string              command;
    int                      n = 0;
    std::optional<Partition> lambda;
    std::optional<Partition> mu;
    std::optional<Partition> nu;
    Word                     word;
    Format                   format = Format::text;
    char                     basis  = 's';
    int                      jobs   = 1;
    // Largest n for commands that build the face algebra.
    int cap_faces = kDefaultAnalysisCap;
    // Largest truncation for commands that only expand the series.
    int         cap_series = kDefaultSeriesCap;
    std::string out;  // empty: the output stream passed to run
  };

  // "2,1,1" -> (2,1,1). Parts must be positive and weakly decreasing.
  Partition parse_partition(std::string const& text);
  // "1,1,2" -> the word 112.
  Word parse_word(std::string const& text);

  // Runs one parsed configuration, writing the result to out.
  int execute(RunConfig const& config, std::ostream& out, std::ostream& err);

  // Parses argv (flags may also come from FACEALG_* environment variables)
  // and runs the subcommand.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace facealg::cli
