#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mbqct {

// Immutable undirected graph in CSR form.  Parallel bonds are kept (a 2-wide
// periodic lattice really does have double bonds) and show up both in the
// adjacency multiset and in the bond list, so energies stay consistent.
struct Graph {
  std::int32_t n = 0;
  std::vector<std::int32_t> offsets;                        // size n+1
  std::vector<std::int32_t> adj;                            // neighbor multiset
  std::vector<std::pair<std::int32_t, std::int32_t>> bonds; // each bond once
  int max_degree = 0;

  int degree(std::int32_t i) const {
    return static_cast<int>(offsets[i + 1] - offsets[i]);
  }
  std::span<const std::int32_t> neighbors(std::int32_t i) const {
    return {adj.data() + offsets[i],
            static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
  }
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::int32_t n) : n_(n) {}
  void add_bond(std::int32_t a, std::int32_t b);
  Graph build();  // sorts adjacency, checks symmetry/irreflexivity

 private:
  std::int32_t n_;
  std::vector<std::pair<std::int32_t, std::int32_t>> bonds_;
};

}  // namespace mbqct
