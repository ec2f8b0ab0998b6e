#include "copsrobber/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace copsrobber {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> out(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex w : g.neighbors(v)) out[v] |= Mask{1} << w;
  return out;
}

VertexSet mask_to_set(int n, Mask mask) {
  VertexSet s(n);
  while (mask != 0) {
    s.insert(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

// Running minimum of boundary/size with the size-then-lexicographic tie rule.
struct BestRatio {
  std::int64_t num = 0;
  std::int64_t den = 0;
  Mask mask = 0;

  void offer(std::int64_t b, std::int64_t size, Mask s) {
    if (den == 0) {
      num = b, den = size, mask = s;
      return;
    }
    const auto lhs = b * den, rhs = num * size;
    bool better = lhs < rhs;
    if (lhs == rhs) {
      if (size != den) {
        better = size < den;
      } else {
        const Mask diff = s ^ mask;
        better = diff != 0 && (s & (diff & (~diff + 1))) != 0;
      }
    }
    if (better) num = b, den = size, mask = s;
  }
};

void check_scan_budget(const Graph& g, const BoundsOptions& options) {
  if (g.n() < 2) throw PreconditionError("isoperimetric numbers need n >= 2");
  if (g.n() > std::min(options.max_subset_vertices, 62)) {
    throw BudgetExceeded("2^" + std::to_string(g.n()) + " subsets exceed the isoperimetric budget");
  }
}

// Visits every subset in Gray-code order; `toggle(v, added)` updates the
// caller's incremental state and `visit(mask, size)` inspects it.
template <typename Toggle, typename Visit>
void gray_scan(int n, Toggle&& toggle, Visit&& visit) {
  Mask s = 0;
  int size = 0;
  const Mask limit = Mask{1} << n;
  for (Mask i = 1; i < limit; ++i) {
    const int v = std::countr_zero(i);
    const bool added = ((s >> v) & 1u) == 0;
    toggle(v, added, s);
    s ^= Mask{1} << v;
    size += added ? 1 : -1;
    visit(s, size);
  }
}

}  // namespace

IsoperimetricResult edge_isoperimetric_exact(const Graph& g, const BoundsOptions& options) {
  check_scan_budget(g, options);
  const int n = g.n();
  const auto nbr = neighbor_masks(g);
  std::int64_t boundary = 0;
  BestRatio best;
  gray_scan(
      n,
      [&](int v, bool added, Mask before) {
        const Mask others = before & ~(Mask{1} << v);
        const std::int64_t delta = g.degree(v) - 2 * std::popcount(nbr[v] & others);
        boundary += added ? delta : -delta;
      },
      [&](Mask s, int size) {
        if (2 * size <= n) best.offer(boundary, size, s);
      });
  return {Rational(best.num, best.den), mask_to_set(n, best.mask)};
}

IsoperimetricResult vertex_isoperimetric_exact(const Graph& g, const BoundsOptions& options) {
  check_scan_budget(g, options);
  const int n = g.n();
  std::vector<int> inside_neighbors(n, 0);
  std::int64_t boundary = 0;  // |N(S) \ S|
  BestRatio best;
  gray_scan(
      n,
      [&](int v, bool added, Mask before) {
        if (added) {
          if (inside_neighbors[v] > 0) --boundary;
          for (Vertex w : g.neighbors(v))
            if (++inside_neighbors[w] == 1 && ((before >> w) & 1u) == 0) ++boundary;
        } else {
          const Mask after = before & ~(Mask{1} << v);
          for (Vertex w : g.neighbors(v))
            if (--inside_neighbors[w] == 0 && ((after >> w) & 1u) == 0) --boundary;
          if (inside_neighbors[v] > 0) ++boundary;
        }
      },
      [&](Mask s, int size) {
        if (2 * size <= n) best.offer(boundary, size, s);
      });
  return {Rational(best.num, best.den), mask_to_set(n, best.mask)};
}

// ------------------------------------------------------------- Domination

VertexSet greedy_dominating_set(const Graph& g) {
  const int n = g.n();
  VertexSet chosen(n), dominated(n);
  while (dominated.size() < n) {
    Vertex best = -1;
    int best_gain = -1;
    for (Vertex v = 0; v < n; ++v) {
      int gain = dominated.contains(v) ? 0 : 1;
      for (Vertex w : g.neighbors(v))
        if (!dominated.contains(w)) ++gain;
      if (gain > best_gain) best = v, best_gain = gain;
    }
    chosen.insert(best);
    dominated.insert(best);
    for (Vertex w : g.neighbors(best)) dominated.insert(w);
  }
  return chosen;
}

namespace {

struct DominationSearch {
  int n;
  int max_cover;  // Delta + 1
  Mask all;
  std::vector<Mask> closed;
  int best_size;
  Mask best_set;

  void run(Mask dominated, Mask chosen, int size) {
    if (dominated == all) {
      if (size < best_size) best_size = size, best_set = chosen;
      return;
    }
    const int missing = std::popcount(all & ~dominated);
    if (size + (missing + max_cover - 1) / max_cover >= best_size) return;
    // Some vertex of N[u] must be chosen for the lowest undominated u.
    const int u = std::countr_zero(all & ~dominated);
    std::vector<std::pair<int, int>> options;  // (-gain, vertex)
    for (Mask c = closed[u]; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      options.emplace_back(-std::popcount(closed[v] & ~dominated), v);
    }
    std::sort(options.begin(), options.end());
    for (auto [neg_gain, v] : options) run(dominated | closed[v], chosen | (Mask{1} << v), size + 1);
  }
};

}  // namespace

DominationResult domination_number_exact(const Graph& g, const BoundsOptions& options) {
  const int n = g.n();
  if (n == 0) return {0, VertexSet(0)};
  if (n > std::min(options.max_domination_vertices, 64)) {
    throw BudgetExceeded("graph too large for exact domination search");
  }
  DominationSearch search{n, g.max_degree() + 1, n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, {}, 0, 0};
  search.closed = neighbor_masks(g);
  for (Vertex v = 0; v < n; ++v) search.closed[v] |= Mask{1} << v;
  auto greedy = greedy_dominating_set(g);
  search.best_size = greedy.size();
  for (Vertex v : greedy) search.best_set |= Mask{1} << v;
  search.run(0, 0, 0);
  return {search.best_size, mask_to_set(n, search.best_set)};
}

// ---------------------------------------------------------------- Bounds

Rational BoundReport::best_lower() const {
  return std::max({lower_edge_sharp, lower_edge_relaxed, lower_vertex_b, lower_vertex_c});
}

BoundReport isoperimetric_bounds(const Graph& g, const Rational& iota_e, const Rational& iota_v,
                                 int gamma) {
  const int delta = g.max_degree();
  if (delta < 1) throw PreconditionError("bounds need a graph with an edge");
  BoundReport r;
  r.n = g.n();
  r.max_degree = delta;
  r.iota_e = iota_e;
  r.iota_v = iota_v;
  r.gamma = gamma;
  r.upper_domination = gamma;
  const Rational n(g.n()), d(delta);
  // Zero only when iota_e = 0 and D = 1, where the bound is trivially 0.
  const Rational sharp_den = d * d - d + iota_e * (d + 1);
  r.lower_edge_sharp = sharp_den == Rational(0) ? Rational(0) : iota_e * n / sharp_den;
  r.lower_edge_relaxed = iota_e * n / (2 * d * d);
  r.lower_vertex_b = iota_v * n / (3 * d + iota_v * (d + 1));
  r.lower_vertex_c = iota_v * n / (4 * d);
  return r;
}

BoundReport isoperimetric_bounds(const Graph& g, const Rational& iota_e, const Rational& iota_v,
                                 const BoundsOptions& options) {
  return isoperimetric_bounds(g, iota_e, iota_v, domination_number_exact(g, options).size);
}

bool escape_certificate(const Graph& g, int m, const BoundsOptions& options) {
  const int n = g.n();
  if (m < 0) throw PreconditionError("m must be non-negative");
  m = std::min(m, n);
  // Budget: sum of C(n, i) for i <= m.
  long double subsets = 0, term = 1;
  for (int i = 0; i <= m; ++i) {
    subsets += term;
    term = term * (n - i) / (i + 1);
  }
  if (subsets > static_cast<long double>(options.max_subsets)) {
    throw BudgetExceeded("escape certificate enumeration exceeds the subset budget");
  }

  auto has_large_component = [&](const std::vector<Vertex>& s) {
    auto removed = closed_neighborhood(g, VertexSet(n, s));
    for (const auto& comp : removal_components(g, removed))
      if (2 * comp.size() > n) return true;
    return false;
  };

  std::vector<Vertex> s;
  for (int size = 0; size <= m; ++size) {
    s.resize(size);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
      if (!has_large_component(s)) return false;
      int i = size - 1;
      while (i >= 0 && s[i] == n - size + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return true;
}

// ------------------------------------------------------------ Subset pick

bool in_pick_window(long long sum, long long t, long long n, PickMode mode) {
  if (2 * sum > n) return false;
  return mode == PickMode::A ? 3 * sum >= t : 4 * sum >= n;
}

std::vector<int> subset_pick(std::span<const int> sizes, int n, PickMode mode) {
  if (sizes.empty()) throw InfeasibleInput("no items");
  long long t = 0;
  for (int s : sizes) {
    if (s <= 0) throw InfeasibleInput("item sizes must be positive");
    if (2LL * s > n) throw InfeasibleInput("item size exceeds n/2");
    t += s;
  }
  if (t > n) throw InfeasibleInput("item sum exceeds n");
  if (mode == PickMode::B && 4 * t < n) throw InfeasibleInput("item sum below n/4");

  for (int i = 0; i < static_cast<int>(sizes.size()); ++i)
    if (in_pick_window(sizes[i], t, n, mode)) return {i};

  std::vector<int> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
  std::vector<int> picked;
  long long sum = 0;
  for (int i : order) {
    picked.push_back(i);
    sum += sizes[i];
    const bool reached_lower = mode == PickMode::A ? 3 * sum >= t : 4 * sum >= n;
    if (reached_lower) break;
  }
  if (in_pick_window(sum, t, n, mode)) {
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  // Subset-sum table over sums <= n/2; parent[s] = item that first reached s.
  const int cap = n / 2;
  std::vector<int> parent(cap + 1, -1), prev(cap + 1, -1);
  std::vector<char> reach(cap + 1, 0);
  reach[0] = 1;
  for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
    for (int s = cap; s >= sizes[i]; --s) {
      if (!reach[s] && reach[s - sizes[i]]) {
        reach[s] = 1;
        parent[s] = i;
        prev[s] = s - sizes[i];
      }
    }
  }
  for (int s = 1; s <= cap; ++s) {
    if (!reach[s] || !in_pick_window(s, t, n, mode)) continue;
    std::vector<int> out;
    for (int x = s; x > 0; x = prev[x]) out.push_back(parent[x]);
    std::sort(out.begin(), out.end());
    return out;
  }
  throw InfeasibleInput("no subset sum lies in the window");
}

// ------------------------------------------------------- Transcendental

double alon_spencer_domination_bound(const Graph& g) {
  const double d1 = g.min_degree() + 1.0;
  return g.n() * (1.0 + std::log(d1)) / d1;
}

bool random_domination_constants_check(double b, double t, double k) {
  if (!(b > 0.0 && b < 1.0)) throw PreconditionError("b must lie in (0, 1)");
  constexpr double slack = 1e-9;
  const double beta = 1.0 - b;
  const double t_min = (1.0 + std::log(2.0)) / beta - std::log(beta);
  const double k_min = 2.0 * t / (1.0 - std::exp(-t));
  return t - t_min > slack && k - k_min > slack;
}

}  // namespace copsrobber
