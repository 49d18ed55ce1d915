#ifndef MEMGAME_ENGINE_HPP
#define MEMGAME_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "memgame/core.hpp"

namespace memgame {

/// Grundy values never exceed the heap size, so 16 bits cover every table we allow.
using Grundy = std::uint16_t;

/// Largest heap size a GrundyTable can hold (the frontier tag n + 1 must fit in a Grundy).
inline constexpr Count kMaxTableN = 65534;

/// Least nonnegative integer missing from `values`.
Grundy mex(std::span<const Grundy> values);

/// mex of a multiset after removing one copy of `x`, in O(1).
///
/// `counts[v]` is the multiplicity of v in the multiset S and `mex_s` is mex(S).
/// Throws PreconditionViolation when x is not in S.
Grundy mex_without(std::span<const std::uint32_t> counts, Grundy mex_s, Grundy x);

/// Reference evaluator: memoized search straight from `allowed_moves`.
///
/// Evaluation uses an explicit stack, so deep games do not recurse. The memo
/// persists across calls; reuse one instance when probing many positions.
class GrundyOracle {
public:
    explicit GrundyOracle(MoveRule rule) : rule_(rule) {}

    Grundy value(const Position& pos);

    const MoveRule& rule() const noexcept { return rule_; }
    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    static std::uint64_t key(const Position& pos) noexcept
    {
        return (std::uint64_t{pos.stones()} << 32) | pos.tag();
    }

    MoveRule rule_;
    std::unordered_map<std::uint64_t, Grundy> memo_;
};

/// One-shot convenience wrapper around GrundyOracle.
Grundy grundy_oracle(const MoveRule& rule, const Position& pos);

/// Immutable triangular table of Grundy values for one rule.
///
/// Row n holds n + 2 cells indexed by canonical tag: 0 (start), 1..n, n + 1
/// (frontier). Rows are stored back to back.
class GrundyTable {
public:
    /// Wraps already computed rows; `rows[n]` must have n + 2 entries.
    static GrundyTable from_rows(MoveRule rule, const std::vector<std::vector<Grundy>>& rows);

    const MoveRule& rule() const noexcept { return rule_; }
    Count max_n() const noexcept { return max_n_; }

    Grundy at(Count n, Count tag) const { return cells_[offset(n) + tag]; }
    Grundy at(const Position& pos) const { return at(pos.stones(), pos.tag()); }
    /// Value of n_k for any k >= 1, folding k > n into the frontier.
    Grundy exactly(Count n, Count k) const { return at(n, k > n ? n + 1 : k); }
    Grundy start(Count n) const { return at(n, 0); }
    Grundy frontier(Count n) const { return at(n, n + 1); }

    std::span<const Grundy> row(Count n) const { return {cells_.data() + offset(n), std::size_t{n} + 2}; }

    Grundy max_value() const noexcept { return max_value_; }

    static std::size_t offset(Count n) noexcept { return std::size_t{n} * (std::size_t{n} + 3) / 2; }
    static std::size_t cell_count(Count max_n) noexcept { return offset(max_n + 1); }

private:
    friend class TableBuilder;

    GrundyTable(MoveRule rule, Count max_n, std::vector<Grundy> cells);

    MoveRule rule_;
    Count max_n_;
    std::vector<Grundy> cells_;
    Grundy max_value_ = 0;
};

struct TableOptions {
    /// Upper bound on table storage in bytes.
    std::size_t memory_budget = std::size_t{2} << 30;
    /// Cap on option enumerations for the generic (Dudeney, linear-scale) builder; 0 means unlimited.
    std::uint64_t option_budget = 0;
};

/// Builds the full table for heaps 0..max_n.
///
/// Mem, Mem+ and Mem0 rows take O(n) each; the other families fall back to a
/// per-cell mex. Throws CapacityError when a budget would be exceeded.
GrundyTable compute_table(const MoveRule& rule, Count max_n, const TableOptions& options = {});

} // namespace memgame

#endif
