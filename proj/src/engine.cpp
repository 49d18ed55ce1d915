#include "memgame/engine.hpp"

#include <algorithm>
#include <string>

#include "memgame/error.hpp"

namespace memgame {

Grundy mex(std::span<const Grundy> values)
{
    std::vector<bool> seen(values.size() + 1, false);
    for (Grundy v : values)
        if (v < seen.size())
            seen[v] = true;
    Grundy result = 0;
    while (seen[result])
        ++result;
    return result;
}

Grundy mex_without(std::span<const std::uint32_t> counts, Grundy mex_s, Grundy x)
{
    if (x >= counts.size() || counts[x] == 0)
        throw PreconditionViolation("mex_without: value " + std::to_string(x) + " is not in the multiset");
    if (counts[x] == 1 && x < mex_s)
        return x;
    return mex_s;
}

Grundy GrundyOracle::value(const Position& root)
{
    if (auto it = memo_.find(key(root)); it != memo_.end())
        return it->second;

    std::vector<Position> stack{root};
    std::vector<Grundy> option_values;
    while (!stack.empty()) {
        const Position pos = stack.back();
        if (memo_.contains(key(pos))) {
            stack.pop_back();
            continue;
        }
        const auto moves = allowed_moves(rule_, pos);
        bool ready = true;
        option_values.clear();
        for (Count m : moves) {
            const Position next = apply_move(rule_, pos, m);
            if (auto it = memo_.find(key(next)); it != memo_.end()) {
                option_values.push_back(it->second);
            } else {
                stack.push_back(next);
                ready = false;
            }
        }
        if (ready) {
            memo_.emplace(key(pos), mex(option_values));
            stack.pop_back();
        }
    }
    return memo_.at(key(root));
}

Grundy grundy_oracle(const MoveRule& rule, const Position& pos)
{
    return GrundyOracle(rule).value(pos);
}

GrundyTable::GrundyTable(MoveRule rule, Count max_n, std::vector<Grundy> cells)
    : rule_(rule), max_n_(max_n), cells_(std::move(cells))
{
    if (!cells_.empty())
        max_value_ = *std::max_element(cells_.begin(), cells_.end());
}

GrundyTable GrundyTable::from_rows(MoveRule rule, const std::vector<std::vector<Grundy>>& rows)
{
    if (rows.empty())
        throw PreconditionViolation("a table needs at least row 0");
    const auto max_n = static_cast<Count>(rows.size() - 1);
    std::vector<Grundy> cells;
    cells.reserve(cell_count(max_n));
    for (Count n = 0; n <= max_n; ++n) {
        if (rows[n].size() != std::size_t{n} + 2)
            throw PreconditionViolation("row " + std::to_string(n) + " must have " + std::to_string(n + 2) +
                                        " cells");
        cells.insert(cells.end(), rows[n].begin(), rows[n].end());
    }
    return GrundyTable(rule, max_n, std::move(cells));
}

/// Row-by-row construction; each row only reads earlier rows.
class TableBuilder {
public:
    TableBuilder(const MoveRule& rule, Count max_n, const TableOptions& options)
        : rule_(rule), max_n_(max_n), options_(options), cells_(GrundyTable::cell_count(max_n), 0),
          options_value_(std::size_t{max_n} + 2, 0), counts_(std::size_t{max_n} + 2, 0),
          seen_(std::size_t{max_n} + 2, 0)
    {
    }

    GrundyTable build()
    {
        // Row 0 is the terminal state; both of its cells stay 0.
        for (Count n = 1; n <= max_n_; ++n) {
            gather_option_values(n);
            switch (rule_.kind()) {
            case MoveRule::Kind::MemZero:
                mem_zero_row(n);
                break;
            case MoveRule::Kind::Mem:
                suffix_row(n, /*strict=*/false);
                break;
            case MoveRule::Kind::MemPlus:
                suffix_row(n, /*strict=*/true);
                break;
            case MoveRule::Kind::Dudeney:
            case MoveRule::Kind::LinearScale:
                generic_row(n);
                break;
            }
        }
        return GrundyTable(rule_, max_n_, std::move(cells_));
    }

private:
    Grundy& cell(Count n, Count tag) { return cells_[GrundyTable::offset(n) + tag]; }

    Grundy cell(Count n, Count tag) const { return cells_[GrundyTable::offset(n) + tag]; }

    // options_value_[m] = value of the position reached by removing m from row n.
    void gather_option_values(Count n)
    {
        for (Count m = 1; m <= n; ++m) {
            const Count rest = n - m;
            options_value_[m] = cell(rest, m > rest ? rest + 1 : m);
        }
    }

    // Every cell's option set is the full row minus at most one move.
    void mem_zero_row(Count n)
    {
        for (Count m = 1; m <= n; ++m)
            ++counts_[options_value_[m]];
        Grundy mex_s = 0;
        while (counts_[mex_s] != 0)
            ++mex_s;
        const std::span<const std::uint32_t> counts(counts_.data(), std::size_t{n} + 2);
        for (Count k = 1; k <= n; ++k)
            cell(n, k) = mex_without(counts, mex_s, options_value_[k]);
        cell(n, 0) = mex_s;
        cell(n, n + 1) = mex_s;
        for (Count m = 1; m <= n; ++m)
            counts_[options_value_[m]] = 0;
    }

    // Options of n_k are the removals m >= k (Mem) or m > k (Mem+): a suffix of the row.
    void suffix_row(Count n, bool strict)
    {
        Grundy running = 0;
        auto insert = [&](Count m) {
            seen_[options_value_[m]] = 1;
            while (seen_[running] != 0)
                ++running;
        };
        for (Count k = n; k >= 1; --k) {
            if (strict) {
                cell(n, k) = running;
                insert(k);
            } else {
                insert(k);
                cell(n, k) = running;
            }
        }
        cell(n, 0) = running;
        cell(n, n + 1) = 0;
        for (Count m = 1; m <= n; ++m)
            seen_[options_value_[m]] = 0;
    }

    void generic_row(Count n)
    {
        for (Count tag = 0; tag <= n + 1; ++tag) {
            spent_ += n;
            if (options_.option_budget != 0 && spent_ > options_.option_budget)
                throw CapacityError("option budget of " + std::to_string(options_.option_budget) +
                                    " enumerations exhausted at row " + std::to_string(n));
            ++stamp_;
            for (Count m = 1; m <= n; ++m) {
                const bool legal = tag == 0 ? rule_.permits_opening(m) : rule_.permits(tag, m);
                if (legal)
                    seen_[options_value_[m]] = stamp_;
            }
            Grundy value = 0;
            while (seen_[value] == stamp_)
                ++value;
            cell(n, tag) = value;
        }
    }

    MoveRule rule_;
    Count max_n_;
    TableOptions options_;
    std::vector<Grundy> cells_;
    std::vector<Grundy> options_value_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t stamp_ = 0;
    std::uint64_t spent_ = 0;
};

GrundyTable compute_table(const MoveRule& rule, Count max_n, const TableOptions& options)
{
    if (max_n == 0)
        throw PreconditionViolation("max_n must be at least 1");
    if (max_n > kMaxTableN)
        throw CapacityError("max_n " + std::to_string(max_n) + " exceeds the 16-bit table limit " +
                            std::to_string(kMaxTableN));
    const std::size_t bytes = GrundyTable::cell_count(max_n) * sizeof(Grundy);
    if (bytes > options.memory_budget)
        throw CapacityError("table for max_n " + std::to_string(max_n) + " needs " + std::to_string(bytes) +
                            " bytes, over the budget of " + std::to_string(options.memory_budget));
    return TableBuilder(rule, max_n, options).build();
}

} // namespace memgame
