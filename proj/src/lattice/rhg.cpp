#include "mbqct/lattice/rhg.hpp"

#include <stdexcept>

namespace mbqct {

namespace {

int wrap(int x, int span) {
  x %= span;
  return x < 0 ? x + span : x;
}

}  // namespace

RhgComplex::RhgComplex(int n) : n_(n), span_(2 * n) {
  if (n < 2) throw std::invalid_argument("RhgComplex: N must be >= 2");
  const std::int64_t volume =
      static_cast<std::int64_t>(span_) * span_ * span_;
  site_index_.assign(volume, -1);
  site_class_.assign(volume, 0);

  for (int x = 0; x < span_; ++x) {
    for (int y = 0; y < span_; ++y) {
      for (int z = 0; z < span_; ++z) {
        const std::int64_t s = site(x, y, z);
        const int odd = (x & 1) + (y & 1) + (z & 1);
        site_class_[s] = static_cast<std::uint8_t>(odd);
        switch (odd) {
          case 0:
            site_index_[s] = static_cast<std::int32_t>(dual_cubes_.size());
            dual_cubes_.push_back(s);
            break;
          case 1: {
            site_index_[s] = static_cast<std::int32_t>(edges_.size());
            edges_.push_back(s);
            const int axis = (x & 1) ? 0 : (y & 1) ? 1 : 2;
            edge_odd_axis_.push_back(static_cast<std::uint8_t>(axis));
            break;
          }
          case 2: {
            site_index_[s] = static_cast<std::int32_t>(faces_.size());
            faces_.push_back(s);
            const int axis = !(x & 1) ? 0 : !(y & 1) ? 1 : 2;
            face_even_axis_.push_back(static_cast<std::uint8_t>(axis));
            break;
          }
          default:
            site_index_[s] = static_cast<std::int32_t>(primal_cubes_.size());
            primal_cubes_.push_back(s);
            break;
        }
      }
    }
  }

  auto shifted = [&](std::int64_t s, int axis, int delta) {
    auto c = coords(s);
    c[axis] = wrap(c[axis] + delta, span_);
    return site(c[0], c[1], c[2]);
  };

  face_cubes_.resize(faces_.size());
  face_edges_.resize(faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const std::int64_t s = faces_[f];
    const int even_axis = face_even_axis_[f];
    face_cubes_[f] = {primal_cube_index(shifted(s, even_axis, -1)),
                      primal_cube_index(shifted(s, even_axis, +1))};
    int k = 0;
    for (int axis = 0; axis < 3; ++axis) {
      if (axis == even_axis) continue;
      face_edges_[f][k++] = edge_index(shifted(s, axis, -1));
      face_edges_[f][k++] = edge_index(shifted(s, axis, +1));
    }
  }

  edge_faces_.resize(edges_.size());
  edge_dual_cubes_.resize(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const std::int64_t s = edges_[e];
    const int odd_axis = edge_odd_axis_[e];
    edge_dual_cubes_[e] = {dual_cube_index(shifted(s, odd_axis, -1)),
                           dual_cube_index(shifted(s, odd_axis, +1))};
    int k = 0;
    for (int axis = 0; axis < 3; ++axis) {
      if (axis == odd_axis) continue;
      edge_faces_[e][k++] = face_index(shifted(s, axis, -1));
      edge_faces_[e][k++] = face_index(shifted(s, axis, +1));
    }
  }

  primal_cube_faces_.resize(primal_cubes_.size());
  for (std::size_t q = 0; q < primal_cubes_.size(); ++q) {
    for (int axis = 0; axis < 3; ++axis) {
      primal_cube_faces_[q][2 * axis] =
          face_index(shifted(primal_cubes_[q], axis, -1));
      primal_cube_faces_[q][2 * axis + 1] =
          face_index(shifted(primal_cubes_[q], axis, +1));
    }
  }

  dual_cube_edges_.resize(dual_cubes_.size());
  for (std::size_t q = 0; q < dual_cubes_.size(); ++q) {
    for (int axis = 0; axis < 3; ++axis) {
      dual_cube_edges_[q][2 * axis] =
          edge_index(shifted(dual_cubes_[q], axis, -1));
      dual_cube_edges_[q][2 * axis + 1] =
          edge_index(shifted(dual_cubes_[q], axis, +1));
    }
  }

  GraphBuilder builder(n_qubits());
  for (std::int32_t f = 0; f < n_faces(); ++f)
    for (const std::int32_t e : face_edges_[f])
      builder.add_bond(f, n_faces() + e);
  qubit_graph_ = builder.build();
}

std::int64_t RhgComplex::site(int x, int y, int z) const {
  x = wrap(x, span_);
  y = wrap(y, span_);
  z = wrap(z, span_);
  return (static_cast<std::int64_t>(x) * span_ + y) * span_ + z;
}

std::array<int, 3> RhgComplex::coords(std::int64_t s) const {
  const int z = static_cast<int>(s % span_);
  s /= span_;
  const int y = static_cast<int>(s % span_);
  const int x = static_cast<int>(s / span_);
  return {x, y, z};
}

std::int64_t RhgComplex::dual_site(std::int64_t s) const {
  const auto c = coords(s);
  return site(c[0] + 1, c[1] + 1, c[2] + 1);
}

std::int32_t RhgComplex::face_index(std::int64_t s) const {
  return site_class_[s] == 2 ? site_index_[s] : -1;
}
std::int32_t RhgComplex::edge_index(std::int64_t s) const {
  return site_class_[s] == 1 ? site_index_[s] : -1;
}
std::int32_t RhgComplex::primal_cube_index(std::int64_t s) const {
  return site_class_[s] == 3 ? site_index_[s] : -1;
}
std::int32_t RhgComplex::dual_cube_index(std::int64_t s) const {
  return site_class_[s] == 0 ? site_index_[s] : -1;
}

std::array<int, 3> RhgComplex::primal_cube_cell(std::int32_t q) const {
  const auto c = coords(primal_cubes_[q]);
  return {c[0] / 2, c[1] / 2, c[2] / 2};
}

std::array<int, 3> RhgComplex::dual_cube_cell(std::int32_t q) const {
  const auto c = coords(dual_cubes_[q]);
  return {c[0] / 2, c[1] / 2, c[2] / 2};
}

RhgComplex build_rhg(int n) { return RhgComplex(n); }

ErrorChain ErrorChain::empty(const RhgComplex& c) {
  ErrorChain chain;
  chain.primal.assign(c.n_faces(), 0);
  chain.dual.assign(c.n_edges(), 0);
  return chain;
}

void ErrorChain::xor_with(const ErrorChain& other) {
  if (primal.size() != other.primal.size() || dual.size() != other.dual.size())
    throw std::invalid_argument("ErrorChain: size mismatch");
  for (std::size_t i = 0; i < primal.size(); ++i) primal[i] ^= other.primal[i];
  for (std::size_t i = 0; i < dual.size(); ++i) dual[i] ^= other.dual[i];
}

std::int64_t ErrorChain::primal_weight() const {
  std::int64_t w = 0;
  for (const auto b : primal) w += b;
  return w;
}

std::int64_t ErrorChain::dual_weight() const {
  std::int64_t w = 0;
  for (const auto b : dual) w += b;
  return w;
}

ErrorChain chain_xor(const ErrorChain& a, const ErrorChain& b) {
  ErrorChain out = a;
  out.xor_with(b);
  return out;
}

bool HomologyClass::trivial() const {
  for (int a = 0; a < 3; ++a)
    if (primal[a] || dual[a]) return false;
  return true;
}

HomologyClass homology_winding(const RhgComplex& complex,
                               const ErrorChain& cycle) {
  if (cycle.primal.size() != static_cast<std::size_t>(complex.n_faces()) ||
      cycle.dual.size() != static_cast<std::size_t>(complex.n_edges()))
    throw std::invalid_argument("homology_winding: chain size mismatch");

  // Cycle precondition: every cube parity must be even.
  std::vector<std::uint8_t> parity(complex.n_primal_cubes(), 0);
  for (std::int32_t f = 0; f < complex.n_faces(); ++f)
    if (cycle.primal[f])
      for (const std::int32_t q : complex.face_cubes(f)) parity[q] ^= 1;
  for (const auto p : parity)
    if (p) throw std::invalid_argument("homology_winding: primal chain is not a cycle");
  parity.assign(complex.n_dual_cubes(), 0);
  for (std::int32_t e = 0; e < complex.n_edges(); ++e)
    if (cycle.dual[e])
      for (const std::int32_t q : complex.edge_dual_cubes(e)) parity[q] ^= 1;
  for (const auto p : parity)
    if (p) throw std::invalid_argument("homology_winding: dual chain is not a cycle");

  // A primal face with even axis a is the dual-lattice edge crossing the
  // plane x_a = 0 iff its a-coordinate is 0; dual faces cross the shifted
  // plane x_a = 1.
  HomologyClass h;
  for (std::int32_t f = 0; f < complex.n_faces(); ++f) {
    if (!cycle.primal[f]) continue;
    const int axis = complex.face_normal_axis(f);
    if (complex.coords(complex.face_site(f))[axis] == 0) h.primal[axis] ^= 1;
  }
  for (std::int32_t e = 0; e < complex.n_edges(); ++e) {
    if (!cycle.dual[e]) continue;
    const int axis = complex.edge_axis(e);
    if (complex.coords(complex.edge_site(e))[axis] == 1) h.dual[axis] ^= 1;
  }
  return h;
}

}  // namespace mbqct
