#pragma once

#include <cstdint>
#include <vector>

#include "mbqct/lattice/graph.hpp"
#include "mbqct/lattice/rhg.hpp"

namespace mbqct {

// Periodic simple-cubic cluster graph of linear size N (even, >= 4).
// The retained subset (sites with one or two odd coordinates) is what is
// left after the Z-basis reduction; reindexed, it is the qubit set of the
// RhgComplex of size N/2.
struct CubicClusterGraph {
  int n = 0;
  Graph graph;  // 6-regular, N^3 sites

  // cubic site -> qubit id in RhgComplex(n/2) numbering (faces first, then
  // edges), or -1 for removed sites.
  std::vector<std::int32_t> site_to_qubit;
  std::vector<std::int64_t> qubit_to_site;  // inverse

  std::int64_t site(int x, int y, int z) const;
};

CubicClusterGraph build_cubic(int n);

}  // namespace mbqct
