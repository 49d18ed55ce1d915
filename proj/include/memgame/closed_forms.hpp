#ifndef MEMGAME_CLOSED_FORMS_HPP
#define MEMGAME_CLOSED_FORMS_HPP

#include <cstdint>
#include <optional>

#include "memgame/core.hpp"

namespace memgame {

/// m(m+1)/2.
std::uint64_t triangular(std::uint64_t m) noexcept;

/// Grundy value of n_k in Mem+: the largest m with m*k + T_m <= n.
Count mem_plus_grundy(Count n, Count k);

/// Column slice of a Mem+ sector: heaps lo..hi in column k all have value m.
struct SectorCoords {
    Count m = 0;
    Count k = 1;
    std::uint64_t lo = 0; ///< k*m + T_m, the m-front in column k
    std::uint64_t hi = 0; ///< k*(m+1) + T_{m+1} - 1

    std::uint64_t width() const noexcept { return hi - lo + 1; }

    friend bool operator==(const SectorCoords&, const SectorCoords&) = default;
};

/// Sector bounds for sector m in column k.
SectorCoords sector(Count m, Count k);

/// The sector containing n_k.
SectorCoords sector_of(Count n, Count k);

/// floor(n/k) when k*k >= n (Mem); empty outside that range.
std::optional<Count> mem_grundy_diag(Count n, Count k);

/// Dyadic valuation; n must be positive.
unsigned v2(std::uint64_t n);

enum class Parity { Even, Odd };

/// Parity of v2(n), with v2(0) taken as even.
Parity v2_parity(std::uint64_t n) noexcept;

/// Whether a canonical Mem0 position is a previous-player win.
bool mem0_is_p_position(const Position& pos);

/// Predicted truth of G((k+22)_k) == 12 in Mem0.
///
/// Even v2(k) predicts 12, except on k = 2^e (e >= 4), 3*2^e and 15*2^e where
/// the parity test is reversed.
bool twelve_diagonal_predicate(Count k);

} // namespace memgame

#endif
