#include "memgame/closed_forms.hpp"

#include <bit>

#include "memgame/error.hpp"

namespace memgame {

std::uint64_t triangular(std::uint64_t m) noexcept
{
    return m * (m + 1) / 2;
}

Count mem_plus_grundy(Count n, Count k)
{
    if (n == 0 || k == 0)
        throw PreconditionViolation("mem_plus_grundy needs n, k >= 1");
    auto fits = [&](std::uint64_t m) { return m * k + triangular(m) <= n; };
    // m*k + T_m is strictly increasing in m; m = n never fits.
    std::uint64_t lo = 0;
    std::uint64_t hi = n;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (fits(mid))
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<Count>(lo);
}

SectorCoords sector(Count m, Count k)
{
    if (k == 0)
        throw PreconditionViolation("sector columns start at 1");
    SectorCoords s;
    s.m = m;
    s.k = k;
    s.lo = std::uint64_t{k} * m + triangular(m);
    s.hi = std::uint64_t{k} * (m + 1) + triangular(std::uint64_t{m} + 1) - 1;
    return s;
}

SectorCoords sector_of(Count n, Count k)
{
    return sector(mem_plus_grundy(n, k), k);
}

std::optional<Count> mem_grundy_diag(Count n, Count k)
{
    if (n == 0 || k == 0)
        throw PreconditionViolation("mem_grundy_diag needs n, k >= 1");
    if (std::uint64_t{k} * k < n)
        return std::nullopt;
    return n / k;
}

unsigned v2(std::uint64_t n)
{
    if (n == 0)
        throw PreconditionViolation("v2 is only defined for positive integers");
    return static_cast<unsigned>(std::countr_zero(n));
}

Parity v2_parity(std::uint64_t n) noexcept
{
    if (n == 0)
        return Parity::Even;
    return std::countr_zero(n) % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool mem0_is_p_position(const Position& pos)
{
    const Count n = pos.stones();
    if (n == 0)
        return true;
    return pos.last() == Position::Last::Exactly && pos.removed() == n && v2_parity(n) == Parity::Even;
}

bool twelve_diagonal_predicate(Count k)
{
    if (k == 0)
        throw PreconditionViolation("twelve_diagonal_predicate needs k >= 1");
    const unsigned e = v2(k);
    const Count odd = k >> e;
    const bool exceptional = (odd == 1 && e >= 4) || odd == 3 || odd == 15;
    const bool even = e % 2 == 0;
    return exceptional ? !even : even;
}

} // namespace memgame
