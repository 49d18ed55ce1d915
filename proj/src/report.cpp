#include "memgame/report.hpp"

#include <algorithm>

namespace memgame {

namespace {

template <typename Range>
void write_list(std::ostream& out, const Range& values)
{
    bool first = true;
    for (const auto& v : values) {
        out << (first ? "" : " ") << v;
        first = false;
    }
}

} // namespace

void write_frontier_report(const GrundyTable& table, std::ostream& out, const FrontierReportOptions& options)
{
    const FrontierReport report = make_frontier_report(table);
    const ValueRows rows(table);

    out << "game: " << table.rule().to_string() << '\n';
    out << "max_n: " << table.max_n() << '\n';
    out << "frontier: ";
    write_list(out, report.frontier);
    out << '\n';

    std::size_t max_multiplicity = 0;
    for (const auto& [m, where] : report.occurrences)
        max_multiplicity = std::max(max_multiplicity, where.size());

    for (const auto& [m, f] : report.first_occurrence) {
        out << "f(" << m << "): " << f << '\n';
        out << "occurrences(" << m << "): ";
        write_list(out, report.occurrences.at(m));
        out << '\n';
    }

    out << "multiplicity_max: " << max_multiplicity << '\n';
    for (std::size_t count = 1; count <= max_multiplicity; ++count) {
        out << "multiplicity(" << count << "): ";
        write_list(out, values_with_multiplicity(report, count));
        out << '\n';
    }

    std::vector<Grundy> immortal;
    for (const auto& [m, where] : report.occurrences) {
        const auto cls = classify_mortality(table, report, rows, m, options.mortality);
        out << "class(" << m << "): ";
        if (const auto* mortal = std::get_if<Mortal>(&cls)) {
            out << "mortal death_row=" << mortal->death_row;
        } else if (const auto* cand = std::get_if<ImmortalCandidate>(&cls)) {
            out << "immortal-candidate evidence_rows=" << cand->evidence_rows.size()
                << " first_row=" << cand->evidence_rows.front() << " last_row=" << cand->evidence_rows.back();
            immortal.push_back(m);
        } else {
            out << "undetermined horizon=" << std::get<Undetermined>(cls).horizon;
        }
        out << '\n';
    }

    const Count exceptional_top = std::min(options.exceptional_max_n, table.max_n());
    const auto exceptional = exceptional_positions(table, exceptional_top);
    out << "exceptional_max_n: " << exceptional_top << '\n';
    out << "exceptional_count: " << exceptional.size() << '\n';
    for (const auto& e : exceptional)
        out << "exceptional: " << e.n << ' ' << e.k << ' ' << e.value << ' ' << (e.strict ? "strict" : "frontier")
            << '\n';

    out << "immortal_candidates: ";
    write_list(out, immortal);
    out << '\n';
}

} // namespace memgame
