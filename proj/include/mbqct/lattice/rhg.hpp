#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mbqct/lattice/graph.hpp"

namespace mbqct {

// Periodic RHG cell complex of linear size N, coordinates {0..2N-1}^3.
// A site's class is its number of odd coordinates:
//   0 -> dual cube center, 1 -> edge qubit (= dual face),
//   2 -> face qubit (= primal face), 3 -> primal cube center.
// Duality is the coordinate shift by (1,1,1).
class RhgComplex {
 public:
  explicit RhgComplex(int n);

  int n() const { return n_; }
  int span() const { return span_; }
  std::int32_t n_faces() const { return static_cast<std::int32_t>(faces_.size()); }
  std::int32_t n_edges() const { return static_cast<std::int32_t>(edges_.size()); }
  std::int32_t n_primal_cubes() const { return static_cast<std::int32_t>(primal_cubes_.size()); }
  std::int32_t n_dual_cubes() const { return static_cast<std::int32_t>(dual_cubes_.size()); }
  std::int32_t n_qubits() const { return n_faces() + n_edges(); }

  std::int64_t site(int x, int y, int z) const;  // periodic wrap
  std::array<int, 3> coords(std::int64_t site) const;
  std::int64_t dual_site(std::int64_t site) const;  // shift by (1,1,1)

  std::int64_t face_site(std::int32_t f) const { return faces_[f]; }
  std::int64_t edge_site(std::int32_t e) const { return edges_[e]; }
  std::int64_t primal_cube_site(std::int32_t q) const { return primal_cubes_[q]; }
  std::int64_t dual_cube_site(std::int32_t q) const { return dual_cubes_[q]; }

  std::int32_t face_index(std::int64_t site) const;        // -1 if not a face
  std::int32_t edge_index(std::int64_t site) const;
  std::int32_t primal_cube_index(std::int64_t site) const;
  std::int32_t dual_cube_index(std::int64_t site) const;

  int face_normal_axis(std::int32_t f) const { return face_even_axis_[f]; }
  int edge_axis(std::int32_t e) const { return edge_odd_axis_[e]; }

  // Incidence, all by class index.
  const std::array<std::int32_t, 2>& face_cubes(std::int32_t f) const { return face_cubes_[f]; }
  const std::array<std::int32_t, 4>& face_edges(std::int32_t f) const { return face_edges_[f]; }
  const std::array<std::int32_t, 4>& edge_faces(std::int32_t e) const { return edge_faces_[e]; }
  const std::array<std::int32_t, 2>& edge_dual_cubes(std::int32_t e) const { return edge_dual_cubes_[e]; }
  const std::array<std::int32_t, 6>& primal_cube_faces(std::int32_t q) const { return primal_cube_faces_[q]; }
  const std::array<std::int32_t, 6>& dual_cube_edges(std::int32_t q) const { return dual_cube_edges_[q]; }

  // Primal-cube cell coordinates (site = 2*cell + 1 per axis).
  std::array<int, 3> primal_cube_cell(std::int32_t q) const;
  std::array<int, 3> dual_cube_cell(std::int32_t q) const;

  // Cluster-state interaction graph: vertices [0, n_faces) are face qubits,
  // [n_faces, n_faces + n_edges) are edge qubits; 4-regular bipartite.
  const Graph& qubit_graph() const { return qubit_graph_; }

 private:
  int n_;
  int span_;
  std::vector<std::int64_t> faces_, edges_, primal_cubes_, dual_cubes_;
  std::vector<std::int32_t> site_index_;   // index within its class
  std::vector<std::uint8_t> site_class_;
  std::vector<std::uint8_t> face_even_axis_, edge_odd_axis_;
  std::vector<std::array<std::int32_t, 2>> face_cubes_, edge_dual_cubes_;
  std::vector<std::array<std::int32_t, 4>> face_edges_, edge_faces_;
  std::vector<std::array<std::int32_t, 6>> primal_cube_faces_, dual_cube_edges_;
  Graph qubit_graph_;
};

RhgComplex build_rhg(int n);

// Z-error supports: primal bitset over face qubits, dual bitset over edge
// qubits.
struct ErrorChain {
  std::vector<std::uint8_t> primal;
  std::vector<std::uint8_t> dual;

  static ErrorChain empty(const RhgComplex& c);
  void xor_with(const ErrorChain& other);
  std::int64_t primal_weight() const;
  std::int64_t dual_weight() const;
  bool is_empty() const { return primal_weight() == 0 && dual_weight() == 0; }
};

ErrorChain chain_xor(const ErrorChain& a, const ErrorChain& b);

// Per axis and per primal/dual, parity of crossings of the fixed homology
// cut plane.
struct HomologyClass {
  std::array<std::uint8_t, 3> primal{0, 0, 0};
  std::array<std::uint8_t, 3> dual{0, 0, 0};

  bool trivial() const;
  bool operator==(const HomologyClass&) const = default;
};

// Requires `cycle` to have empty syndrome on both sectors; throws
// std::invalid_argument otherwise.
HomologyClass homology_winding(const RhgComplex& complex,
                               const ErrorChain& cycle);

}  // namespace mbqct
