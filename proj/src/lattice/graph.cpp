#include "mbqct/lattice/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbqct {

void GraphBuilder::add_bond(std::int32_t a, std::int32_t b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_)
    throw std::invalid_argument("GraphBuilder: bond endpoint out of range");
  if (a == b) throw std::invalid_argument("GraphBuilder: self-loop");
  bonds_.emplace_back(a, b);
}

Graph GraphBuilder::build() {
  Graph g;
  g.n = n_;
  g.bonds = std::move(bonds_);
  std::vector<std::int32_t> deg(n_, 0);
  for (const auto& [a, b] : g.bonds) {
    ++deg[a];
    ++deg[b];
  }
  g.offsets.assign(n_ + 1, 0);
  for (std::int32_t i = 0; i < n_; ++i) g.offsets[i + 1] = g.offsets[i] + deg[i];
  g.adj.resize(g.offsets[n_]);
  std::vector<std::int32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [a, b] : g.bonds) {
    g.adj[cursor[a]++] = b;
    g.adj[cursor[b]++] = a;
  }
  for (std::int32_t i = 0; i < n_; ++i) {
    std::sort(g.adj.begin() + g.offsets[i], g.adj.begin() + g.offsets[i + 1]);
    g.max_degree = std::max(g.max_degree, g.degree(i));
  }
  return g;
}

}  // namespace mbqct
