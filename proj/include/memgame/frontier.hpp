#ifndef MEMGAME_FRONTIER_HPP
#define MEMGAME_FRONTIER_HPP

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "memgame/engine.hpp"

namespace memgame {

/// The value dies out after `death_row`: twice its last frontier occurrence.
struct Mortal {
    Count death_row = 0;
    friend bool operator==(const Mortal&, const Mortal&) = default;
};

/// A value seen once on the frontier that keeps appearing past its final frontier.
struct ImmortalCandidate {
    std::vector<Count> evidence_rows; ///< rows beyond twice the frontier occurrence holding the value
    friend bool operator==(const ImmortalCandidate&, const ImmortalCandidate&) = default;
};

/// The table does not reach far enough to decide.
struct Undetermined {
    Count horizon = 0;
    friend bool operator==(const Undetermined&, const Undetermined&) = default;
};

using MortalityClass = std::variant<Mortal, ImmortalCandidate, Undetermined>;

struct MortalityOptions {
    /// Distinct rows beyond the final frontier needed before calling a value immortal.
    std::size_t min_evidence_rows = 3;
};

/// Summary of the Mem0 frontier sequence G(n_inf), n = 0..max_n.
struct FrontierReport {
    Count max_n = 0;
    std::vector<Grundy> frontier;
    std::map<Grundy, Count> first_occurrence;
    std::map<Grundy, std::vector<Count>> occurrences;
};

/// Frontier column of a Mem0 table. Throws RuleMismatch for other rules.
std::vector<Grundy> frontier_values(const GrundyTable& table);

FrontierReport make_frontier_report(const GrundyTable& table);

/// Least frontier index per value.
const std::map<Grundy, Count>& first_occurrence(const FrontierReport& report);

/// Frontier indices holding m, ascending; empty if m never occurs.
std::vector<Count> occurrences(const FrontierReport& report, Grundy m);

/// Values occurring exactly `multiplicity` times on the frontier, ascending.
std::vector<Grundy> values_with_multiplicity(const FrontierReport& report, std::size_t multiplicity);

/// For each value, the ascending list of rows (over every cell of the row) containing it.
class ValueRows {
public:
    explicit ValueRows(const GrundyTable& table);

    const std::vector<Count>& rows(Grundy m) const;

    /// Rows strictly greater than `after` that contain m.
    std::vector<Count> rows_after(Grundy m, Count after) const;

private:
    std::vector<std::vector<Count>> rows_;
    std::vector<Count> empty_;
};

MortalityClass classify_mortality(const GrundyTable& table, Grundy m, const MortalityOptions& options = {});
MortalityClass classify_mortality(const GrundyTable& table, const FrontierReport& report, const ValueRows& index,
                                  Grundy m, const MortalityOptions& options = {});

/// n_k with G(n_k) == G((n-k)_k).
struct ExceptionalPosition {
    Count n = 0;
    Count k = 0;
    Grundy value = 0;
    /// G(n_k) differs from G(n_inf), so only the exceptional branch explains it.
    bool strict = false;

    friend bool operator==(const ExceptionalPosition&, const ExceptionalPosition&) = default;
};

/// All exceptional positions with 1 <= k <= n <= n_max, row-major.
std::vector<ExceptionalPosition> exceptional_positions(const GrundyTable& table, Count n_max);

/// Values whose single frontier occurrence n has 2n <= max_n and that still
/// appear in enough rows beyond 2n.
std::vector<Grundy> immortality_scan(const GrundyTable& table, const MortalityOptions& options = {});

} // namespace memgame

#endif
