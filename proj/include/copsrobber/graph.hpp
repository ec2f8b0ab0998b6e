#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copsrobber/errors.hpp"

namespace copsrobber {

using Vertex = int;

/// Subset of [0, universe) backed by a bit vector; iterates in ascending order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int size() const;
  bool empty() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);
  bool is_subset_of(const VertexSet& other) const;

  std::vector<Vertex> to_vector() const;
  std::optional<Vertex> min() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) { advance(); }
    Vertex operator*() const { return pos_; }
    iterator& operator++() {
      ++pos_;
      advance();
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    void advance();
    const VertexSet* set_ = nullptr;
    int pos_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, universe_); }

 private:
  friend class iterator;
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

VertexSet operator|(VertexSet a, const VertexSet& b);
VertexSet operator&(VertexSet a, const VertexSet& b);
VertexSet operator-(VertexSet a, const VertexSet& b);
std::ostream& operator<<(std::ostream& os, const VertexSet& s);

/// Movement allowance per turn: a finite number of edges, or unbounded.
class Speed {
 public:
  static constexpr Speed infinite() { return Speed(-1); }
  static Speed steps(int k);

  constexpr bool is_infinite() const { return value_ < 0; }
  /// Finite value; infinite speeds are capped at n (no simple path is longer).
  int capped(int n) const { return is_infinite() ? n : value_; }
  int value() const { return value_; }
  std::string to_string() const;
  /// Accepts a positive integer or one of "inf", "infinity", "∞".
  static Speed parse(std::string_view text);

  friend constexpr bool operator==(Speed, Speed) = default;

 private:
  constexpr explicit Speed(int v) : value_(v) {}
  int value_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Builds from an edge list; duplicates collapse, loops and out-of-range ids throw InvalidEdge.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  int n() const { return static_cast<int>(adjacency_.size()); }
  int m() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  int max_degree() const;
  int min_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int m_ = 0;
};

// Edge-list text format: "n m" header then m lines "u v"; '#' lines are comments.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
Graph read_edge_list_file(const std::string& path);

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// N(s): vertices with a neighbour in s (may intersect s).
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

/// Connected components of g - forbidden, each ascending, listed by minimum element.
std::vector<VertexSet> removal_components(const Graph& g, const VertexSet& forbidden);
bool is_connected(const Graph& g);

/// Vertices reachable from src along paths of length <= steps avoiding forbidden.
VertexSet reachable_within(const Graph& g, Vertex src, Speed steps, const VertexSet& forbidden);

/// All-pairs BFS distances; unreachable pairs hold -1.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);
  int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int n() const { return n_; }
  /// Largest finite distance.
  int diameter() const;

 private:
  int n_;
  std::vector<int> dist_;
};

struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// (block index, cut vertex) incidences of the block tree, sorted.
  std::vector<std::pair<int, Vertex>> tree_edges;
};

/// Blocks and cut vertices of a connected graph. n == 1 yields an empty decomposition.
BlockDecomposition block_decomposition(const Graph& g);

/// G_t: u ~ v iff 1 <= dist_G(u, v) <= t.
Graph power_graph(const Graph& g, int t);

/// Cartesian product; tuple (x1..xm) maps to the mixed-radix index with x1 most significant.
Graph cartesian_product(std::span<const Graph> factors);

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace copsrobber
