#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "copsrobber/graph.hpp"

namespace copsrobber {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);
double to_double(const Rational& q);

struct IsoperimetricResult {
  Rational value;
  VertexSet witness;
};

struct BoundsOptions {
  /// Largest n for the 2^n isoperimetric scans.
  int max_subset_vertices = 24;
  /// Largest n for the exact domination search.
  int max_domination_vertices = 40;
  /// Largest number of subsets escape_certificate may enumerate.
  std::uint64_t max_subsets = std::uint64_t{1} << 26;
};

/// min over 1 <= |S| <= n/2 of |boundary edges(S)| / |S|; ties go to the
/// smaller witness, then the lexicographically smaller one.
IsoperimetricResult edge_isoperimetric_exact(const Graph& g, const BoundsOptions& options = {});

/// min over 1 <= |S| <= n/2 of |N(S) \ S| / |S|, same tie rule.
IsoperimetricResult vertex_isoperimetric_exact(const Graph& g, const BoundsOptions& options = {});

struct DominationResult {
  int size;
  VertexSet witness;
};

/// Exact domination number by branch and bound.
DominationResult domination_number_exact(const Graph& g, const BoundsOptions& options = {});

/// Greedy dominating set (max new coverage, smallest id on ties).
VertexSet greedy_dominating_set(const Graph& g);

struct BoundReport {
  int n = 0;
  int max_degree = 0;
  Rational iota_e;
  Rational iota_v;
  int gamma = 0;

  Rational lower_edge_sharp;    // iota_e n / (D^2 - D + iota_e (D + 1))
  Rational lower_edge_relaxed;  // iota_e n / (2 D^2)
  Rational lower_vertex_b;      // iota_v n / (3 D + iota_v (D + 1))
  Rational lower_vertex_c;      // iota_v n / (4 D)
  int upper_domination = 0;

  Rational best_lower() const;
};

/// Isoperimetric lower bounds on c_inf together with the domination upper bound.
BoundReport isoperimetric_bounds(const Graph& g, const Rational& iota_e, const Rational& iota_v,
                                 const BoundsOptions& options = {});
/// Same, reusing an already computed domination number.
BoundReport isoperimetric_bounds(const Graph& g, const Rational& iota_e, const Rational& iota_v,
                                 int gamma);

/// True iff for every S with |S| <= m, G - N[S] has a component with more than
/// n/2 vertices. A true certificate proves that m cops do not suffice.
bool escape_certificate(const Graph& g, int m, const BoundsOptions& options = {});

enum class PickMode {
  /// sum in [t/3, n/2]
  A,
  /// sum in [n/4, n/2], requires t >= n/4
  B,
};

/// Indices (ascending) of items whose sizes sum into the mode's window.
std::vector<int> subset_pick(std::span<const int> sizes, int n, PickMode mode);

/// True iff `sum` lies in the mode's window for total t and universe n.
bool in_pick_window(long long sum, long long t, long long n, PickMode mode);

/// n (1 + ln(delta + 1)) / (delta + 1).
double alon_spencer_domination_bound(const Graph& g);

/// With beta = 1 - b: t > (1 + ln 2)/beta - ln beta and k > 2t / (1 - e^-t),
/// each strict inequality required to hold by more than 1e-9.
bool random_domination_constants_check(double b, double t, double k);

}  // namespace copsrobber
