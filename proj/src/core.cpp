#include "memgame/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "memgame/error.hpp"

namespace memgame {

namespace {

Count parse_count(std::string_view text, std::string_view what)
{
    Count value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

} // namespace

MoveRule MoveRule::dudeney(Count cap)
{
    if (cap == 0)
        throw PreconditionViolation("dudeney cap must be positive");
    return MoveRule(Kind::Dudeney, cap, {});
}

MoveRule MoveRule::linear_scale(Ratio ratio)
{
    if (ratio.num == 0 || ratio.den == 0)
        throw PreconditionViolation("scale ratio must be a positive rational");
    // Folding k > n into the frontier is only sound when floor(p k / q) >= k.
    if (ratio.num < ratio.den)
        throw PreconditionViolation("scale ratio must satisfy p/q >= 1");
    return MoveRule(Kind::LinearScale, 0, ratio);
}

MoveRule MoveRule::parse(std::string_view text)
{
    if (text == "mem")
        return mem();
    if (text == "mem+")
        return mem_plus();
    if (text == "mem0")
        return mem_zero();
    if (text.starts_with("dudeney:"))
        return dudeney(parse_count(text.substr(8), "dudeney cap"));
    if (text.starts_with("scale:")) {
        auto body = text.substr(6);
        auto slash = body.find('/');
        if (slash == std::string_view::npos)
            throw ParseError("scale rule needs p/q, got '" + std::string(text) + "'");
        return linear_scale({parse_count(body.substr(0, slash), "scale numerator"),
                             parse_count(body.substr(slash + 1), "scale denominator")});
    }
    throw ParseError("unknown game '" + std::string(text) + "'");
}

bool MoveRule::permits(Count k, Count m) const noexcept
{
    switch (kind_) {
    case Kind::Mem:
        return m >= k;
    case Kind::MemPlus:
        return m > k;
    case Kind::MemZero:
        return m != k;
    case Kind::Dudeney:
        return m != k && m <= cap_;
    case Kind::LinearScale:
        return std::uint64_t{m} * ratio_.den <= std::uint64_t{k} * ratio_.num;
    }
    return false;
}

bool MoveRule::permits_opening(Count m) const noexcept
{
    return kind_ != Kind::Dudeney || m <= cap_;
}

std::string MoveRule::to_string() const
{
    switch (kind_) {
    case Kind::Mem:
        return "mem";
    case Kind::MemPlus:
        return "mem+";
    case Kind::MemZero:
        return "mem0";
    case Kind::Dudeney:
        return "dudeney:" + std::to_string(cap_);
    case Kind::LinearScale:
        return "scale:" + std::to_string(ratio_.num) + "/" + std::to_string(ratio_.den);
    }
    return "?";
}

Position Position::exactly(Count stones, Count k)
{
    if (k == 0)
        throw PreconditionViolation("a previous removal must be positive");
    if (k > stones)
        return frontier(stones);
    return Position(stones, Last::Exactly, k);
}

Count Position::tag() const noexcept
{
    switch (last_) {
    case Last::Start:
        return 0;
    case Last::Exactly:
        return k_;
    case Last::Frontier:
        return stones_ + 1;
    }
    return 0;
}

Position Position::from_tag(Count stones, Count tag)
{
    if (tag == 0)
        return start(stones);
    if (tag > stones)
        return frontier(stones);
    return Position(stones, Last::Exactly, tag);
}

std::string Position::to_string() const
{
    std::ostringstream out;
    out << stones_ << '_';
    switch (last_) {
    case Last::Start:
        out << "start";
        break;
    case Last::Exactly:
        out << k_;
        break;
    case Last::Frontier:
        out << "inf";
        break;
    }
    return out.str();
}

std::vector<Count> raw_allowed_moves(const MoveRule& rule, Count n, RawTag k_raw)
{
    std::vector<Count> moves;
    for (Count m = 1; m <= n; ++m) {
        bool legal = false;
        if (k_raw == 0)
            legal = rule.permits_opening(m);
        else
            legal = rule.permits(static_cast<Count>(std::min<RawTag>(k_raw, std::numeric_limits<Count>::max())), m);
        if (legal)
            moves.push_back(m);
    }
    return moves;
}

std::vector<Count> allowed_moves(const MoveRule& rule, const Position& pos)
{
    const Count n = pos.stones();
    std::vector<Count> moves;
    switch (pos.last()) {
    case Position::Last::Start:
        for (Count m = 1; m <= n; ++m)
            if (rule.permits_opening(m))
                moves.push_back(m);
        break;
    case Position::Last::Exactly:
        for (Count m = 1; m <= n; ++m)
            if (rule.permits(pos.removed(), m))
                moves.push_back(m);
        break;
    case Position::Last::Frontier:
        switch (rule.kind()) {
        case MoveRule::Kind::Mem:
        case MoveRule::Kind::MemPlus:
            break;
        case MoveRule::Kind::MemZero:
        case MoveRule::Kind::LinearScale:
            for (Count m = 1; m <= n; ++m)
                moves.push_back(m);
            break;
        case MoveRule::Kind::Dudeney:
            for (Count m = 1; m <= std::min(n, rule.cap()); ++m)
                moves.push_back(m);
            break;
        }
        break;
    }
    return moves;
}

Position apply_move(const MoveRule& rule, const Position& pos, Count m)
{
    const Count n = pos.stones();
    if (m == 0 || m > n)
        throw IllegalMove("cannot remove " + std::to_string(m) + " from " + pos.to_string());
    bool legal = false;
    switch (pos.last()) {
    case Position::Last::Start:
        legal = rule.permits_opening(m);
        break;
    case Position::Last::Exactly:
        legal = rule.permits(pos.removed(), m);
        break;
    case Position::Last::Frontier:
        legal = rule.permits(n + 1, m);
        break;
    }
    if (!legal)
        throw IllegalMove("removing " + std::to_string(m) + " from " + pos.to_string() + " is not allowed under " +
                          rule.to_string());
    return Position::exactly(n - m, m);
}

Position canonical_key(const MoveRule&, Count n, RawTag k_raw)
{
    if (k_raw == 0)
        return Position::start(n);
    if (k_raw > n)
        return Position::frontier(n);
    return Position::exactly(n, static_cast<Count>(k_raw));
}

} // namespace memgame
