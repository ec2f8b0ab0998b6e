#include "copsrobber/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace copsrobber {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  while (true) {
    std::uint64_t x = next();
    if (x <= limit) return x % bound;
  }
}

// ----------------------------------------------------------------- Named

Graph path_graph(int n) {
  if (n < 1) throw TooSmall("path needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw TooSmall("cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw TooSmall("complete graph needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph wheel_graph(int n) {
  if (n < 4) throw TooSmall("wheel needs n >= 4");
  std::vector<std::pair<Vertex, Vertex>> edges;
  const int rim = n - 1;
  for (Vertex v = 0; v < rim; ++v) {
    edges.emplace_back(v, (v + 1) % rim);
    edges.emplace_back(v, rim);
  }
  return Graph(n, edges);
}

Graph star_graph(int n) {
  if (n < 2) throw TooSmall("star needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, edges);
}

Graph double_wheel_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int base : {0, 5}) {
    for (int i = 0; i < 4; ++i) {
      edges.emplace_back(base + i, base + (i + 1) % 4);
      edges.emplace_back(base + i, base + 4);
    }
  }
  edges.emplace_back(0, 10);
  edges.emplace_back(10, 5);
  return Graph(11, edges);
}

Graph named(const std::string& kind, int n) {
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "complete") return complete_graph(n);
  if (kind == "wheel") return wheel_graph(n);
  if (kind == "star") return star_graph(n);
  if (kind == "petersen") return petersen_graph();
  if (kind == "double-wheel") return double_wheel_graph();
  throw PreconditionError("unknown graph family '" + kind + "'");
}

Graph grid(std::span<const int> dims) {
  std::vector<Graph> factors;
  for (int d : dims) factors.push_back(path_graph(d));
  return cartesian_product(factors);
}

Graph torus(std::span<const int> dims) {
  std::vector<Graph> factors;
  for (int d : dims) {
    if (d < 3) throw TooSmall("torus dimensions must be >= 3");
    factors.push_back(cycle_graph(d));
  }
  return cartesian_product(factors);
}

// ---------------------------------------------------------------- Random

Graph gnp(int n, double p, Seed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
  if (n < 0) throw PreconditionError("negative vertex count");
  SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_regular(int n, int d, Seed seed, const RegularOptions& options) {
  if (n < 1 || d < 0 || d >= n) throw PreconditionError("random regular graph needs 0 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw PreconditionError("n * d must be even");
  SplitMix64 rng(seed);
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) points.push_back(v);

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    // Fisher-Yates shuffle, then pair consecutive points.
    std::vector<Vertex> perm = points;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    edges.clear();
    seen.clear();
    bool simple = true;
    for (std::size_t i = 0; i + 1 < perm.size() && simple; i += 2) {
      auto e = std::minmax(perm[i], perm[i + 1]);
      simple = e.first != e.second && seen.insert(e).second;
      edges.emplace_back(e.first, e.second);
    }
    if (simple) return Graph(n, edges);
  }
  throw RetryLimit("random regular sampler exceeded its attempt limit");
}

// ----------------------------------------------------------- Enumeration

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) edges.emplace_back(u, v);
  return Graph(n, edges);
}

namespace {

bool mask_connected(int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& pairs) {
  std::uint32_t adj[8] = {};
  for (std::size_t bit = 0; bit < pairs.size(); ++bit) {
    if ((mask >> bit) & 1u) {
      adj[pairs[bit].first] |= 1u << pairs[bit].second;
      adj[pairs[bit].second] |= 1u << pairs[bit].first;
    }
  }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

}  // namespace

std::vector<std::uint64_t> connected_masks(int n) {
  if (n < 1) throw TooSmall("enumeration needs n >= 1");
  if (n > 7) throw TooLarge("labelled enumeration is limited to n <= 7");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    if (mask_connected(n, mask, pairs)) out.push_back(mask);
  return out;
}

void enumerate_connected(int n, const std::function<void(std::uint64_t, const Graph&)>& visit) {
  for (auto mask : connected_masks(n)) visit(mask, graph_from_mask(n, mask));
}

std::uint64_t connected_labeled_count(int n) {
  if (n < 1 || n > 11) throw PreconditionError("count supported for 1 <= n <= 11");
  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::vector<std::uint64_t> c(n + 1, 0);
  for (int m = 1; m <= n; ++m) {
    std::uint64_t total = std::uint64_t{1} << (m * (m - 1) / 2);
    for (int k = 1; k < m; ++k) {
      total -= binom(m - 1, k - 1) * c[k] * (std::uint64_t{1} << ((m - k) * (m - k - 1) / 2));
    }
    c[m] = total;
  }
  return c[n];
}

}  // namespace copsrobber
