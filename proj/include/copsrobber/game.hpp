#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "copsrobber/graph.hpp"

namespace copsrobber {

enum class Turn { Cop, Robber };

/// Sorted multiset of cop vertices.
using CopPositions = std::vector<Vertex>;

struct GameConfig {
  int cop_count = 1;
  Speed robber_speed = Speed::infinite();
  int cop_speed = 1;

  void validate() const;
};

struct GameState {
  CopPositions cops;
  Vertex robber = 0;
  Turn turn = Turn::Cop;
  friend bool operator==(const GameState&, const GameState&) = default;
};

/// All sorted k-multisets over [0, n) in lexicographic order, with O(k) ranking.
class MultisetIndex {
 public:
  MultisetIndex(int n, int k);

  std::int64_t size() const { return size_; }
  int n() const { return n_; }
  int k() const { return k_; }
  std::span<const Vertex> at(std::int64_t index) const {
    return {flat_.data() + index * k_, static_cast<std::size_t>(k_)};
  }
  /// Rank of a sorted multiset.
  std::int64_t index_of(std::span<const Vertex> sorted) const;

  /// Number of k-multisets over n values, saturating at INT64_MAX.
  static std::int64_t count(int n, int k);

 private:
  int n_, k_;
  std::int64_t size_;
  // cnt_[j][v]: number of sorted j-multisets with every value in [v, n).
  std::vector<std::vector<std::int64_t>> cnt_;
  std::vector<Vertex> flat_;
};

struct SolveOptions {
  std::uint64_t max_states = 50'000'000;
  std::uint64_t max_transitions = 200'000'000;
};

/// Capture move marker in the strategy table.
inline constexpr std::int32_t kCaptureMove = -2;
inline constexpr std::int32_t kNoMove = -1;

/// Cop-turn state index -> chosen successor cop multiset index (or kCaptureMove).
struct StrategyTable {
  std::vector<std::int32_t> choice;
};

/// Least fixed point of the capture game. Ranks count cop moves until capture
/// under optimal play: capture-now states have rank 1; a robber-turn state has
/// the largest rank among its successors; a cop-turn state is one more than its
/// best successor.
class SolveResult {
 public:
  const Graph& graph() const { return graph_; }
  const GameConfig& config() const { return config_; }
  const MultisetIndex& positions() const { return index_; }
  const DistanceMatrix& distances() const { return dist_; }
  const StrategyTable& strategy() const { return strategy_; }

  bool is_winning(const GameState& s) const { return rank(s).has_value(); }
  std::optional<int> rank(const GameState& s) const;
  /// Strategy move for a winning cop-turn state.
  std::optional<CopPositions> strategy_move(const GameState& s) const;

  std::int64_t rank_at(std::int64_t cops_index, Vertex robber, Turn turn) const {
    const auto i = cops_index * graph_.n() + robber;
    return turn == Turn::Cop ? cop_rank_[i] : robber_rank_[i];
  }

  /// Live states (robber not on a cop) of both turns.
  std::uint64_t live_states() const { return live_states_; }
  std::uint64_t winning_states() const { return winning_states_; }
  /// Largest rank reached, i.e. number of fixed-point rounds.
  int rounds() const { return rounds_; }

 private:
  friend SolveResult solve(const Graph&, const GameConfig&, const SolveOptions&);
  SolveResult(const Graph& g, const GameConfig& cfg)
      : graph_(g), config_(cfg), index_(g.n(), cfg.cop_count), dist_(g) {}

  Graph graph_;
  GameConfig config_;
  MultisetIndex index_;
  DistanceMatrix dist_;
  std::vector<std::int32_t> cop_rank_;
  std::vector<std::int32_t> robber_rank_;
  StrategyTable strategy_;
  std::uint64_t live_states_ = 0;
  std::uint64_t winning_states_ = 0;
  int rounds_ = 0;
};

/// Robber destinations along cop-free paths of length <= a, cop vertices excluded.
VertexSet legal_robber_moves(const Graph& g, const GameState& s, Speed robber_speed);

/// Vertices within distance b of `from`.
VertexSet legal_cop_moves_single(const Graph& g, Vertex from, int cop_speed);

SolveResult solve(const Graph& g, const GameConfig& cfg, const SolveOptions& options = {});

/// True iff every robber start off the placement loses against optimal cops.
bool placement_wins(const SolveResult& result, std::span<const Vertex> placement);
bool placement_wins(const Graph& g, const GameConfig& cfg, std::span<const Vertex> placement,
                    const SolveOptions& options = {});

struct CopNumberResult {
  /// Empty when more than k_max cops are needed.
  std::optional<int> value;
  /// Lexicographically first winning placement for `value` cops.
  CopPositions placement;
  std::uint64_t states = 0;
  int rounds = 0;
};

CopNumberResult cop_number(const Graph& g, Speed robber_speed, int cop_speed, int k_max,
                           const SolveOptions& options = {});

/// First winning placement in lexicographic order, if any.
std::optional<CopPositions> first_winning_placement(const SolveResult& result);

std::optional<CopPositions> best_cop_move(const SolveResult& result, const GameState& s);

/// Greedy pursuit: each cop independently steps to the vertex within b that is
/// closest to the robber (smallest id on ties), staying put if nothing improves.
CopPositions heuristic_cop_move(const Graph& g, const GameState& s, int cop_speed);
CopPositions heuristic_cop_move(const Graph& g, const DistanceMatrix& dist, const GameState& s,
                                int cop_speed);

CopPositions canonical(CopPositions cops);

}  // namespace copsrobber
