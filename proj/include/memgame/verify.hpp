#ifndef MEMGAME_VERIFY_HPP
#define MEMGAME_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "memgame/engine.hpp"

namespace memgame {

/// Produces the table a suite checks; swapped out in tests to inject faults.
using TableBuilderFn = std::function<GrundyTable(const MoveRule&, Count)>;

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures; ///< `FAIL n=.. k=.. expected=.. got=..` lines
    std::vector<std::string> notes;    ///< findings that do not fail the suite
    bool skipped = false;

    bool passed() const noexcept { return failures.empty(); }
};

struct VerifyConfig {
    Count max_n = 500;
    MoveRule extra_rule = MoveRule::mem_zero(); ///< also checked against the oracle
    std::vector<Grundy> oeis_prefix;            ///< frontier fixture, index 0 is n = 0
    unsigned threads = 1;
    TableBuilderFn build = [](const MoveRule& rule, Count n) { return compute_table(rule, n); };
};

/// Runs every theorem check and returns one result per suite, in a fixed order.
std::vector<SuiteResult> run_verification(const VerifyConfig& config);

/// Prints one summary line per suite plus its failure lines; returns true iff all passed.
bool print_verification(const std::vector<SuiteResult>& results, std::ostream& out,
                        std::size_t max_failures_per_suite = 20);

} // namespace memgame

#endif
