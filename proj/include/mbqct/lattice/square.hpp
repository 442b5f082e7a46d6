#pragma once

#include <vector>

#include "mbqct/lattice/graph.hpp"

namespace mbqct {

// Periodic Lx x Ly square lattice.  Site id = row * lx + col.
struct SquareLattice {
  int lx = 0;
  int ly = 0;
  Graph graph;

  int n_sites() const { return lx * ly; }
  std::int32_t site(int row, int col) const;

  // Site ids for 1-based column positions along a fixed row (the transfer
  // matrix correlators live on one row).
  std::vector<std::int32_t> row_sites(std::span<const int> positions,
                                      int row = 0) const;
};

SquareLattice build_square(int lx, int ly);

}  // namespace mbqct
