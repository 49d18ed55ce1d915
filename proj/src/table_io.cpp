#include "memgame/table_io.hpp"

#include <charconv>
#include <map>
#include <string>
#include <string_view>

#include "memgame/error.hpp"

namespace memgame {

namespace {

template <typename T>
T parse_number(std::string_view text, std::size_t line_no)
{
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad number '" + std::string(text) + "'");
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

void write_csv(const GrundyTable& table, std::ostream& out, CsvColumns columns)
{
    const Count N = table.max_n();
    out << "n,k,grundy\n";
    for (Count n = 1; n <= N; ++n) {
        if (columns.start)
            out << n << ",0," << table.start(n) << '\n';
        for (Count k = 1; k <= N; ++k)
            out << n << ',' << k << ',' << table.exactly(n, k) << '\n';
        if (columns.frontier)
            out << n << ",inf," << table.frontier(n) << '\n';
    }
}

GrundyTable read_csv(std::istream& in, const MoveRule& rule)
{
    std::string line;
    if (!std::getline(in, line) || trim(line) != "n,k,grundy")
        throw ParseError("missing 'n,k,grundy' header");

    // Tag n + 1 is reserved for the frontier so that row n holds n + 2 cells.
    std::map<Count, std::map<Count, Grundy>> cells;
    std::size_t line_no = 1;
    Count max_n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = trim(line);
        if (row.empty())
            continue;
        const auto c1 = row.find(',');
        const auto c2 = row.find(',', c1 == std::string_view::npos ? c1 : c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected three fields");
        const auto n = parse_number<Count>(row.substr(0, c1), line_no);
        const auto k_text = row.substr(c1 + 1, c2 - c1 - 1);
        const auto value = parse_number<Grundy>(row.substr(c2 + 1), line_no);
        const Count tag = k_text == "inf" ? n + 1 : parse_number<Count>(k_text, line_no);
        if (tag <= n + 1)
            cells[n][tag] = value;
        max_n = std::max(max_n, n);
    }
    if (max_n == 0)
        throw ParseError("CSV holds no rows");

    std::vector<std::vector<Grundy>> rows(std::size_t{max_n} + 1);
    rows[0] = {0, 0};
    for (Count n = 1; n <= max_n; ++n) {
        const auto& got = cells[n];
        if (got.size() != std::size_t{n} + 2)
            throw ParseError("row " + std::to_string(n) + " is incomplete; write it with start and frontier columns");
        for (const auto& [tag, value] : got)
            rows[n].push_back(value);
    }
    return GrundyTable::from_rows(rule, rows);
}

void write_pgm(const GrundyTable& table, std::ostream& out)
{
    const Count N = table.max_n();
    const std::uint32_t v_max = table.max_value();
    out << "P5\n" << N << ' ' << N << "\n255\n";
    std::string row(N, '\0');
    for (Count n = 1; n <= N; ++n) {
        for (Count k = 1; k <= N; ++k) {
            const std::uint32_t v = table.exactly(n, k);
            // round(255 v / v_max), ties away from zero
            const std::uint32_t shade = v_max == 0 ? 0 : (2 * 255 * v + v_max) / (2 * v_max);
            row[k - 1] = static_cast<char>(static_cast<unsigned char>(shade));
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

std::vector<Grundy> read_sequence_fixture(std::istream& in)
{
    std::vector<Grundy> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        values.push_back(parse_number<Grundy>(text, line_no));
    }
    return values;
}

} // namespace memgame
