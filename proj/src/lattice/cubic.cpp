#include "mbqct/lattice/cubic.hpp"

#include <stdexcept>

namespace mbqct {

std::int64_t CubicClusterGraph::site(int x, int y, int z) const {
  auto w = [&](int v) {
    v %= n;
    return v < 0 ? v + n : v;
  };
  return (static_cast<std::int64_t>(w(x)) * n + w(y)) * n + w(z);
}

CubicClusterGraph build_cubic(int n) {
  if (n < 4 || (n % 2) != 0)
    throw std::invalid_argument("build_cubic: N must be even and >= 4");

  CubicClusterGraph cu;
  cu.n = n;
  const std::int64_t volume = static_cast<std::int64_t>(n) * n * n;
  GraphBuilder b(static_cast<std::int32_t>(volume));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto s = static_cast<std::int32_t>(cu.site(x, y, z));
        b.add_bond(s, static_cast<std::int32_t>(cu.site(x + 1, y, z)));
        b.add_bond(s, static_cast<std::int32_t>(cu.site(x, y + 1, z)));
        b.add_bond(s, static_cast<std::int32_t>(cu.site(x, y, z + 1)));
      }
  cu.graph = b.build();

  // Coordinates carry over unchanged to the RhgComplex of size n/2.
  const RhgComplex rhg(n / 2);
  cu.site_to_qubit.assign(volume, -1);
  cu.qubit_to_site.assign(rhg.n_qubits(), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const std::int64_t s = cu.site(x, y, z);
        const std::int64_t rs = rhg.site(x, y, z);
        const int odd = (x & 1) + (y & 1) + (z & 1);
        std::int32_t q = -1;
        if (odd == 2) q = rhg.face_index(rs);
        else if (odd == 1) q = rhg.n_faces() + rhg.edge_index(rs);
        cu.site_to_qubit[s] = q;
        if (q >= 0) cu.qubit_to_site[q] = s;
      }
  return cu;
}

}  // namespace mbqct
