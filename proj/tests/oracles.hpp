#pragma once

// Brute-force reference implementations, independent of the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "copsrobber/graph.hpp"

namespace oracle {

using copsrobber::Graph;
using copsrobber::Vertex;

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<int>> a(g.n(), std::vector<int>(g.n(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

/// Endpoints of simple paths from src of length <= steps avoiding `forbidden`.
inline std::set<Vertex> paths_reach(const Graph& g, Vertex src, int steps, const std::set<Vertex>& forbidden) {
  std::set<Vertex> out{src};
  std::vector<char> on_path(g.n(), 0);
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int left) {
    out.insert(v);
    if (left == 0) return;
    on_path[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (!on_path[w] && !forbidden.count(w)) dfs(w, left - 1);
    on_path[v] = 0;
  };
  dfs(src, steps);
  return out;
}

/// Union-find components of g - forbidden, as sorted vectors sorted by first element.
inline std::vector<std::vector<Vertex>> union_find_components(const Graph& g, const std::set<Vertex>& forbidden) {
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : g.edges())
    if (!forbidden.count(u) && !forbidden.count(v)) parent[find(u)] = find(v);
  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!forbidden.count(v)) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool connected_without(const Graph& g, const std::vector<Vertex>& keep, Vertex removed) {
  std::set<Vertex> forbidden;
  for (Vertex v = 0; v < g.n(); ++v)
    if (v == removed || std::find(keep.begin(), keep.end(), v) == keep.end()) forbidden.insert(v);
  return union_find_components(g, forbidden).size() <= 1;
}

inline int distance(const Graph& g, Vertex a, Vertex b) {
  std::vector<int> d(g.n(), -1);
  std::vector<Vertex> q{a};
  d[a] = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (Vertex w : g.neighbors(q[i]))
      if (d[w] < 0) d[w] = d[q[i]] + 1, q.push_back(w);
  return d[b];
}

inline int edge_boundary(const Graph& g, std::uint32_t s) {
  int count = 0;
  for (auto [u, v] : g.edges())
    if (((s >> u) & 1u) != ((s >> v) & 1u)) ++count;
  return count;
}

inline int vertex_boundary(const Graph& g, std::uint32_t s) {
  std::uint32_t nbrs = 0;
  for (auto [u, v] : g.edges()) {
    if ((s >> u) & 1u) nbrs |= 1u << v;
    if ((s >> v) & 1u) nbrs |= 1u << u;
  }
  return std::popcount(nbrs & ~s);
}

/// Minimum ratio num/den over 1 <= |S| <= n/2 as (num, den) in lowest terms.
inline std::pair<long, long> min_ratio(const Graph& g, const std::function<int(const Graph&, std::uint32_t)>& boundary) {
  long best_num = 1, best_den = 0;
  for (std::uint32_t s = 1; s < (1u << g.n()); ++s) {
    const int size = std::popcount(s);
    if (2 * size > g.n()) continue;
    const long b = boundary(g, s);
    if (best_den == 0 || b * best_den < best_num * size) best_num = b, best_den = size;
  }
  const long d = std::gcd(best_num, best_den);
  return {best_num / d, best_den / d};
}

inline int domination_by_enumeration(const Graph& g) {
  const int n = g.n();
  for (int size = 1; size <= n; ++size) {
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - size, pick.end(), 1);
    do {
      std::vector<char> covered(n, 0);
      for (Vertex v = 0; v < n; ++v) {
        if (!pick[v]) continue;
        covered[v] = 1;
        for (Vertex w : g.neighbors(v)) covered[w] = 1;
      }
      if (std::all_of(covered.begin(), covered.end(), [](char c) { return c; })) return size;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

/// Game values by synchronous value iteration directly from the rules, over
/// cop tuples (unsorted) rather than multisets. Infinity means robber wins.
/// cop_value[(cops, r)] = cop moves to capture with cops to move.
struct NaiveGame {
  static constexpr int kInf = std::numeric_limits<int>::max();
  int n, k, a, b;
  std::vector<std::vector<int>> dist;
  std::map<std::pair<std::vector<Vertex>, Vertex>, int> cop_value, robber_value;

  NaiveGame(const Graph& g, int cops, int robber_speed, int cop_speed)
      : n(g.n()), k(cops), a(robber_speed), b(cop_speed), dist(g.n(), std::vector<int>(g.n())) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) dist[u][v] = distance(g, u, v);

    std::vector<std::vector<Vertex>> tuples;
    std::vector<Vertex> cur(k, 0);
    std::function<void(int)> gen = [&](int i) {
      if (i == k) return tuples.push_back(cur);
      for (Vertex v = 0; v < n; ++v) cur[i] = v, gen(i + 1);
    };
    gen(0);

    auto occupied = [](const std::vector<Vertex>& c, Vertex r) { return std::find(c.begin(), c.end(), r) != c.end(); };
    std::map<std::pair<std::vector<Vertex>, Vertex>, std::set<Vertex>> robber_moves;
    for (const auto& c : tuples) {
      std::set<Vertex> forb(c.begin(), c.end());
      for (Vertex r = 0; r < n; ++r) {
        if (occupied(c, r)) continue;
        cop_value[{c, r}] = kInf;
        robber_value[{c, r}] = kInf;
        robber_moves[{c, r}] = paths_reach(g, r, a, forb);
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      auto next_cop = cop_value;
      auto next_rob = robber_value;
      for (auto& [key, value] : next_cop) {
        const auto& [c, r] = key;
        int best = kInf;
        if (std::any_of(c.begin(), c.end(), [&](Vertex x) { return dist[x][r] >= 0 && dist[x][r] <= b; })) {
          best = 1;
        } else {
          // Every joint move: each cop to a vertex within distance b.
          std::vector<Vertex> to(k);
          std::function<void(int)> go = [&](int i) {
            if (i == k) {
              if (occupied(to, r)) return;
              int v = robber_value.at({to, r});
              if (v != kInf) best = std::min(best, v + 1);
              return;
            }
            for (Vertex w = 0; w < n; ++w)
              if (dist[c[i]][w] >= 0 && dist[c[i]][w] <= b) to[i] = w, go(i + 1);
          };
          go(0);
        }
        if (best != value) value = best, changed = true;
      }
      for (auto& [key, value] : next_rob) {
        int worst = 0;
        for (Vertex r2 : robber_moves.at(key)) worst = std::max(worst, cop_value.at({key.first, r2}));
        if (worst != value) value = worst, changed = true;
      }
      cop_value = std::move(next_cop);
      robber_value = std::move(next_rob);
    }
  }

  bool placement_wins(const std::vector<Vertex>& c) const {
    for (Vertex r = 0; r < n; ++r) {
      if (std::find(c.begin(), c.end(), r) != c.end()) continue;
      if (cop_value.at({c, r}) == kInf) return false;
    }
    return true;
  }

  bool some_placement_wins() const {
    for (const auto& [key, value] : cop_value) {
      if (placement_wins(key.first)) return true;
    }
    // Placements covering every vertex win vacuously.
    return k >= n;
  }
};

}  // namespace oracle
