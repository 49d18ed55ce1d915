#ifndef MEMGAME_CORE_HPP
#define MEMGAME_CORE_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace memgame {

/// Heap sizes and removal counts.
using Count = std::uint32_t;

/// Raw "last removal" tag: 0 encodes the start of the game, any k > n the frontier.
using RawTag = std::uint64_t;
inline constexpr RawTag kFrontierSentinel = std::numeric_limits<RawTag>::max();

/// Exact positive rational p/q used by the linear-scale rule family.
struct Ratio {
    Count num = 1;
    Count den = 1;

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// A memfunction from the closed family of built-in rules.
///
/// `permits(k, m)` answers whether m stones may be removed when the previous
/// player removed k. Construction validates parameters, so every MoveRule
/// value satisfies the canonicalization contract (any k > n behaves like the
/// frontier).
class MoveRule {
public:
    enum class Kind { Mem, MemPlus, MemZero, Dudeney, LinearScale };

    static MoveRule mem() { return MoveRule(Kind::Mem, 0, {}); }
    static MoveRule mem_plus() { return MoveRule(Kind::MemPlus, 0, {}); }
    static MoveRule mem_zero() { return MoveRule(Kind::MemZero, 0, {}); }
    static MoveRule dudeney(Count cap);
    static MoveRule linear_scale(Ratio ratio);

    /// Parses `mem`, `mem+`, `mem0`, `dudeney:Y` or `scale:p/q`.
    static MoveRule parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    Count cap() const noexcept { return cap_; }
    Ratio ratio() const noexcept { return ratio_; }

    /// Whether removing m is legal right after a removal of k (k >= 1, m >= 1).
    bool permits(Count k, Count m) const noexcept;

    /// Whether removing m is legal on the opening move.
    bool permits_opening(Count m) const noexcept;

    std::string to_string() const;

    friend bool operator==(const MoveRule&, const MoveRule&) = default;

private:
    MoveRule(Kind kind, Count cap, Ratio ratio) : kind_(kind), cap_(cap), ratio_(ratio) {}

    Kind kind_;
    Count cap_;
    Ratio ratio_;
};

/// A heap of `stones` together with what the previous player removed.
///
/// Canonical positions have 1 <= k <= stones for `Last::Exactly`; anything
/// larger is folded into `Last::Frontier`. All zero-stone positions are the
/// same terminal state.
class Position {
public:
    enum class Last { Start, Exactly, Frontier };

    static Position start(Count stones) { return Position(stones, Last::Start, 0); }
    static Position frontier(Count stones) { return Position(stones, Last::Frontier, 0); }
    /// Canonicalizes: k > stones yields a frontier position.
    static Position exactly(Count stones, Count k);

    Count stones() const noexcept { return stones_; }
    Last last() const noexcept { return last_; }
    /// The previous removal; only meaningful for `Last::Exactly`.
    Count removed() const noexcept { return k_; }

    /// Dense column index: 0 for Start, k for Exactly(k), stones + 1 for Frontier.
    Count tag() const noexcept;

    /// Inverse of `tag()`.
    static Position from_tag(Count stones, Count tag);

    std::string to_string() const;

    friend bool operator==(const Position&, const Position&) = default;

private:
    Position(Count stones, Last last, Count k) : stones_(stones), last_(last), k_(k) {}

    Count stones_;
    Last last_;
    Count k_;
};

/// Legal removals from a canonical position, strictly ascending within [1, stones].
std::vector<Count> allowed_moves(const MoveRule& rule, const Position& pos);

/// Legal removals from a raw (n, k_raw) state, with no canonicalization applied.
/// k_raw = 0 is the opening move; k_raw may exceed n.
std::vector<Count> raw_allowed_moves(const MoveRule& rule, Count n, RawTag k_raw);

/// Position reached by removing m stones. Throws IllegalMove if m is not legal.
Position apply_move(const MoveRule& rule, const Position& pos, Count m);

/// Folds a raw state to its canonical position: 0 -> Start, k_raw > n -> Frontier.
Position canonical_key(const MoveRule& rule, Count n, RawTag k_raw);

} // namespace memgame

#endif
