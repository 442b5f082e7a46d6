#include "mbqct/lattice/square.hpp"

#include <stdexcept>

namespace mbqct {

std::int32_t SquareLattice::site(int row, int col) const {
  row %= ly;
  if (row < 0) row += ly;
  col %= lx;
  if (col < 0) col += lx;
  return static_cast<std::int32_t>(row * lx + col);
}

std::vector<std::int32_t> SquareLattice::row_sites(
    std::span<const int> positions, int row) const {
  std::vector<std::int32_t> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(site(row, p - 1));
  return out;
}

SquareLattice build_square(int lx, int ly) {
  if (lx < 2 || ly < 2)
    throw std::invalid_argument("build_square: lattice sides must be >= 2");
  SquareLattice lat;
  lat.lx = lx;
  lat.ly = ly;
  GraphBuilder b(static_cast<std::int32_t>(lx) * ly);
  for (int r = 0; r < ly; ++r) {
    for (int c = 0; c < lx; ++c) {
      const std::int32_t s = lat.site(r, c);
      b.add_bond(s, lat.site(r, c + 1));
      b.add_bond(s, lat.site(r + 1, c));
    }
  }
  lat.graph = b.build();
  return lat;
}

}  // namespace mbqct
