#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "copsrobber/graph.hpp"

namespace copsrobber {

using Seed = std::uint64_t;

/// SplitMix64 (Steele, Lea, Flood 2014):
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
/// Fixed here so seeded outputs do not depend on the standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(Seed seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// C_{n-1} on 0..n-2 plus hub n-1.
Graph wheel_graph(int n);
/// Hub 0 joined to leaves 1..n-1.
Graph star_graph(int n);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();
/// Two wheels on 5 vertices whose rim vertices 0 and 5 are joined by 0 - 10 - 5.
Graph double_wheel_graph();

/// Named families: "path", "cycle", "complete", "wheel", "star" (with n) and "petersen".
Graph named(const std::string& kind, int n = 0);

Graph grid(std::span<const int> dims);
Graph torus(std::span<const int> dims);

/// Each pair u < v in lexicographic order is kept when uniform01() < p.
Graph gnp(int n, double p, Seed seed);

struct RegularOptions {
  int max_attempts = 100'000;
};

/// Pairing model with rejection of loops and multi-edges.
Graph random_regular(int n, int d, Seed seed, const RegularOptions& options = {});

/// Bit i of the mask is the i-th pair (u < v) in lexicographic order.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Calls `visit(mask, graph)` for every connected labelled graph on n vertices, in mask order.
void enumerate_connected(int n, const std::function<void(std::uint64_t, const Graph&)>& visit);
std::vector<std::uint64_t> connected_masks(int n);

/// Labelled connected graph count by the standard recurrence.
std::uint64_t connected_labeled_count(int n);

}  // namespace copsrobber
