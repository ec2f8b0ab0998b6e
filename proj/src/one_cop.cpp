#include "copsrobber/one_cop.hpp"

namespace copsrobber {

VertexSet block_dominating_vertices(const Graph& g, const VertexSet& block) {
  VertexSet out(g.n());
  const int size = block.size();
  for (Vertex u : block) {
    int covered = 1;
    for (Vertex w : g.neighbors(u))
      if (block.contains(w)) ++covered;
    if (covered == size) out.insert(u);
  }
  return out;
}

std::vector<DirectedHole> directed_holes(const Graph& g, const BlockDecomposition& dec) {
  std::vector<DirectedHole> holes;
  for (auto [b, u] : dec.tree_edges) {
    if (!block_dominating_vertices(g, dec.blocks[b]).contains(u)) holes.push_back({b, u});
  }
  return holes;
}

namespace {

// Block tree with blocks at [0, #blocks) and cut vertex v at #blocks + v.
struct BlockTree {
  int num_blocks;
  std::vector<std::vector<int>> adj;

  BlockTree(const Graph& g, const BlockDecomposition& dec)
      : num_blocks(static_cast<int>(dec.blocks.size())), adj(num_blocks + g.n()) {
    for (auto [b, u] : dec.tree_edges) {
      adj[b].push_back(num_blocks + u);
      adj[num_blocks + u].push_back(b);
    }
  }

  std::vector<int> parents_from(int root) const {
    std::vector<int> parent(adj.size(), -2);
    parent[root] = -1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int y : adj[x]) {
        if (parent[y] == -2) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    return parent;
  }
};

}  // namespace

std::optional<Hallway> find_hallway(const Graph& g, const BlockDecomposition& dec,
                                    const std::vector<DirectedHole>& holes) {
  if (holes.size() < 2) return std::nullopt;
  BlockTree tree(g, dec);
  for (std::size_t i = 0; i < holes.size(); ++i) {
    const auto& src = holes[i];
    auto parent = tree.parents_from(src.block_index);
    for (std::size_t j = 0; j < holes.size(); ++j) {
      const auto& dst = holes[j];
      if (dst.block_index == src.block_index) continue;
      // Entry into B' must be its hole vertex.
      if (parent[dst.block_index] != tree.num_blocks + dst.cut_vertex) continue;
      // Walk back to B; the node adjacent to B is the exit cut vertex.
      int x = dst.block_index;
      while (parent[x] != src.block_index) x = parent[x];
      if (x == tree.num_blocks + src.cut_vertex) return Hallway{src, dst};
    }
  }
  return std::nullopt;
}

OneCopVerdict decide_one_cop(const Graph& g) {
  if (!is_connected(g)) throw NotConnected("one-cop decision requires a connected graph");
  OneCopVerdict verdict;
  if (g.n() <= 2) {
    verdict.is_copwin = true;
    return verdict;
  }
  verdict.decomposition = block_decomposition(g);
  const auto& dec = verdict.decomposition;
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b) {
    if (block_dominating_vertices(g, dec.blocks[b]).empty()) {
      verdict.witness = BadBlock{b};
      return verdict;
    }
  }
  if (auto hallway = find_hallway(g, dec, directed_holes(g, dec))) {
    verdict.witness = *hallway;
    return verdict;
  }
  verdict.is_copwin = true;
  return verdict;
}

}  // namespace copsrobber
