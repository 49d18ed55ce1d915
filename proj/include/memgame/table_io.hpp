#ifndef MEMGAME_TABLE_IO_HPP
#define MEMGAME_TABLE_IO_HPP

#include <istream>
#include <ostream>
#include <vector>

#include "memgame/engine.hpp"

namespace memgame {

struct CsvColumns {
    bool start = false;    ///< emit k=0 (the opening position)
    bool frontier = false; ///< emit k=inf
};

/// Writes `n,k,grundy` rows for n = 1..N and k = 1..N (k > n folds to the frontier).
void write_csv(const GrundyTable& table, std::ostream& out, CsvColumns columns = {});

/// Rebuilds a table from CSV written with both extra columns.
GrundyTable read_csv(std::istream& in, const MoveRule& rule);

/// Binary PGM (P5, maxval 255): row n, column k, for 1 <= n, k <= N.
void write_pgm(const GrundyTable& table, std::ostream& out);

/// Integer-per-line sequence file; blank lines and lines starting with '#' are skipped.
std::vector<Grundy> read_sequence_fixture(std::istream& in);

} // namespace memgame

#endif
