#ifndef MEMGAME_REPORT_HPP
#define MEMGAME_REPORT_HPP

#include <ostream>

#include "memgame/frontier.hpp"

namespace memgame {

struct FrontierReportOptions {
    Count exceptional_max_n = 50; ///< list exceptional positions up to this row
    MortalityOptions mortality;
};

/// Line-oriented `key: value` report of the Mem0 frontier, stable enough to diff.
void write_frontier_report(const GrundyTable& table, std::ostream& out, const FrontierReportOptions& options = {});

} // namespace memgame

#endif
