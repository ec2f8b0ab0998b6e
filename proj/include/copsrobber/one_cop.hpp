#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "copsrobber/graph.hpp"

namespace copsrobber {

/// Block B with a cut vertex u in B such that {u} does not dominate B.
struct DirectedHole {
  int block_index;
  Vertex cut_vertex;
  friend bool operator==(const DirectedHole&, const DirectedHole&) = default;
};

struct Hallway {
  DirectedHole first;
  DirectedHole second;
};

/// A block that no single vertex dominates.
struct BadBlock {
  int block_index;
};

struct OneCopVerdict {
  bool is_copwin = false;
  /// Empty when is_copwin; otherwise a bad block or a hallway.
  std::variant<std::monostate, BadBlock, Hallway> witness;
  /// Decomposition the witness indexes into (empty for n <= 2).
  BlockDecomposition decomposition;
};

/// Vertices u of `block` whose closed neighbourhood contains the whole block.
VertexSet block_dominating_vertices(const Graph& g, const VertexSet& block);

std::vector<DirectedHole> directed_holes(const Graph& g, const BlockDecomposition& dec);

/// Two holes (B, u1), (B', uk) where B u1 ... uk B' is the block-tree path.
std::optional<Hallway> find_hallway(const Graph& g, const BlockDecomposition& dec,
                                    const std::vector<DirectedHole>& holes);

/// c_inf(g) == 1 iff every block has a dominating vertex and there is no hallway.
OneCopVerdict decide_one_cop(const Graph& g);

}  // namespace copsrobber
