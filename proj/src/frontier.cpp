#include "memgame/frontier.hpp"

#include <algorithm>
#include <string>

#include "memgame/error.hpp"

namespace memgame {

namespace {

void require_mem_zero(const GrundyTable& table)
{
    if (table.rule().kind() != MoveRule::Kind::MemZero)
        throw RuleMismatch("frontier analysis needs a mem0 table, got " + table.rule().to_string());
}

} // namespace

std::vector<Grundy> frontier_values(const GrundyTable& table)
{
    require_mem_zero(table);
    std::vector<Grundy> values;
    values.reserve(std::size_t{table.max_n()} + 1);
    for (Count n = 0; n <= table.max_n(); ++n)
        values.push_back(table.frontier(n));
    return values;
}

FrontierReport make_frontier_report(const GrundyTable& table)
{
    FrontierReport report;
    report.max_n = table.max_n();
    report.frontier = frontier_values(table);
    for (Count n = 0; n < report.frontier.size(); ++n) {
        const Grundy m = report.frontier[n];
        report.first_occurrence.try_emplace(m, n);
        report.occurrences[m].push_back(n);
    }
    return report;
}

const std::map<Grundy, Count>& first_occurrence(const FrontierReport& report)
{
    return report.first_occurrence;
}

std::vector<Count> occurrences(const FrontierReport& report, Grundy m)
{
    auto it = report.occurrences.find(m);
    return it == report.occurrences.end() ? std::vector<Count>{} : it->second;
}

std::vector<Grundy> values_with_multiplicity(const FrontierReport& report, std::size_t multiplicity)
{
    std::vector<Grundy> values;
    for (const auto& [m, where] : report.occurrences)
        if (where.size() == multiplicity)
            values.push_back(m);
    return values;
}

ValueRows::ValueRows(const GrundyTable& table) : rows_(std::size_t{table.max_value()} + 1)
{
    std::vector<Count> last_row(rows_.size(), 0);
    std::vector<bool> seen_any(rows_.size(), false);
    for (Count n = 0; n <= table.max_n(); ++n) {
        for (Grundy v : table.row(n)) {
            if (seen_any[v] && last_row[v] == n)
                continue;
            seen_any[v] = true;
            last_row[v] = n;
            rows_[v].push_back(n);
        }
    }
}

const std::vector<Count>& ValueRows::rows(Grundy m) const
{
    return m < rows_.size() ? rows_[m] : empty_;
}

std::vector<Count> ValueRows::rows_after(Grundy m, Count after) const
{
    const auto& all = rows(m);
    return {std::upper_bound(all.begin(), all.end(), after), all.end()};
}

MortalityClass classify_mortality(const GrundyTable& table, const FrontierReport& report, const ValueRows& index,
                                  Grundy m, const MortalityOptions& options)
{
    const auto where = occurrences(report, m);
    if (where.empty())
        throw NotOnFrontier("value " + std::to_string(m) + " does not reach the frontier by row " +
                            std::to_string(table.max_n()));
    const std::uint64_t horizon = table.max_n();
    const std::uint64_t first = where.front();
    // Beyond 2 f(m) the value can no longer return to the frontier.
    if (horizon < 2 * first)
        return Undetermined{table.max_n()};

    if (where.size() >= 2) {
        const std::uint64_t death_row = 2 * std::uint64_t{where.back()};
        if (horizon < 2 * death_row)
            return Undetermined{table.max_n()};
        if (!index.rows_after(m, static_cast<Count>(death_row)).empty())
            return Undetermined{table.max_n()};
        return Mortal{static_cast<Count>(death_row)};
    }

    auto evidence = index.rows_after(m, static_cast<Count>(2 * first));
    if (evidence.size() >= options.min_evidence_rows)
        return ImmortalCandidate{std::move(evidence)};
    return Undetermined{table.max_n()};
}

MortalityClass classify_mortality(const GrundyTable& table, Grundy m, const MortalityOptions& options)
{
    const auto report = make_frontier_report(table);
    const ValueRows index(table);
    return classify_mortality(table, report, index, m, options);
}

std::vector<ExceptionalPosition> exceptional_positions(const GrundyTable& table, Count n_max)
{
    require_mem_zero(table);
    if (n_max > table.max_n())
        throw PreconditionViolation("n_max " + std::to_string(n_max) + " is beyond the table (max_n " +
                                    std::to_string(table.max_n()) + ")");
    std::vector<ExceptionalPosition> found;
    for (Count n = 1; n <= n_max; ++n) {
        const Grundy frontier = table.frontier(n);
        for (Count k = 1; k <= n; ++k) {
            const Grundy value = table.exactly(n, k);
            // (n-k)_k; the zero-stone case is the terminal state with value 0.
            const Grundy reduced = table.exactly(n - k, k);
            if (value == reduced)
                found.push_back({n, k, value, value != frontier});
        }
    }
    return found;
}

std::vector<Grundy> immortality_scan(const GrundyTable& table, const MortalityOptions& options)
{
    const auto report = make_frontier_report(table);
    const ValueRows index(table);
    std::vector<Grundy> candidates;
    for (const auto& [m, where] : report.occurrences) {
        if (where.size() != 1 || 2 * std::uint64_t{where.front()} > table.max_n())
            continue;
        if (std::holds_alternative<ImmortalCandidate>(classify_mortality(table, report, index, m, options)))
            candidates.push_back(m);
    }
    return candidates;
}

} // namespace memgame
