#ifndef MEMGAME_CLI_HPP
#define MEMGAME_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "memgame/engine.hpp"
#include "memgame/verify.hpp"

namespace memgame::cli {

enum class Command { Table, Heatmap, Frontier, Verify };

struct RunConfig {
    Command command = Command::Verify;
    MoveRule game = MoveRule::mem_zero();
    Count max_n = 500;
    std::optional<std::string> out; ///< stdout when empty (heatmap requires a path)
    bool start_col = false;
    bool frontier_col = false;
    std::uint64_t budget = 0; ///< option enumerations for the generic builder; 0 = unlimited
    unsigned threads = 1;
    std::string oeis_fixture;
    Count exceptional_max_n = 50;
};

/// Exit codes: 0 success, 1 verification failure, 2 usage or runtime error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitError = 2;

/// Parses the command line; throws ParseError (or returns an exit code through `exit_code`) on bad input.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Runs one subcommand. `build` replaces the table builder (fault injection in tests).
int run(const RunConfig& config, std::ostream& out, std::ostream& err, TableBuilderFn build = {});

/// parse_args + run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace memgame::cli

#endif
