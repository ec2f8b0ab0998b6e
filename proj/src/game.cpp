#include "copsrobber/game.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace copsrobber {

void GameConfig::validate() const {
  if (cop_count < 1) throw PreconditionError("cop count must be >= 1");
  if (cop_speed < 1) throw PreconditionError("cop speed must be >= 1");
}

CopPositions canonical(CopPositions cops) {
  std::sort(cops.begin(), cops.end());
  return cops;
}

// ------------------------------------------------------------ MultisetIndex

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

std::int64_t saturating_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Exact while it fits; C(n, i) * (n - i) / (i + 1) stays integral.
  __int128 acc = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace

std::int64_t MultisetIndex::count(int n, int k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  return saturating_binomial(static_cast<std::int64_t>(n) + k - 1, k);
}

MultisetIndex::MultisetIndex(int n, int k) : n_(n), k_(k), size_(count(n, k)) {
  if (size_ == kSaturated || size_ > (std::int64_t{1} << 31)) throw BudgetExceeded("too many cop placements");
  cnt_.assign(k + 1, std::vector<std::int64_t>(n + 1, 0));
  for (int j = 0; j <= k; ++j)
    for (int v = 0; v <= n; ++v) cnt_[j][v] = count(n - v, j);

  flat_.reserve(static_cast<std::size_t>(size_) * k);
  if (k == 0 || n == 0) return;
  std::vector<Vertex> current(k, 0);
  while (true) {
    flat_.insert(flat_.end(), current.begin(), current.end());
    int i = k - 1;
    while (i >= 0 && current[i] == n - 1) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[i];
  }
}

std::int64_t MultisetIndex::index_of(std::span<const Vertex> sorted) const {
  std::int64_t rank = 0;
  Vertex lo = 0;
  for (int i = 0; i < k_; ++i) {
    const int remaining = k_ - i;
    rank += cnt_[remaining][lo] - cnt_[remaining][sorted[i]];
    lo = sorted[i];
  }
  return rank;
}

// ------------------------------------------------------------------- Moves

VertexSet legal_robber_moves(const Graph& g, const GameState& s, Speed robber_speed) {
  VertexSet cops(g.n(), s.cops);
  return reachable_within(g, s.robber, robber_speed, cops);
}

VertexSet legal_cop_moves_single(const Graph& g, Vertex from, int cop_speed) {
  if (cop_speed < 1) throw PreconditionError("cop speed must be >= 1");
  return reachable_within(g, from, Speed::steps(cop_speed), VertexSet(g.n()));
}

// ------------------------------------------------------------------- Solver

namespace {

// Bounded BFS over g avoiding `blocked`, reusing scratch buffers between calls.
class RobberReach {
 public:
  RobberReach(const Graph& g, Speed speed)
      : g_(g), limit_(speed.capped(g.n())), stamp_(g.n(), 0), depth_(g.n(), 0) {}

  // `blocked` marks cop vertices with the current epoch value in blocked_stamp.
  template <typename Visit>
  void run(Vertex src, std::span<const Vertex> cops, Visit&& visit) {
    ++epoch_;
    // Cop vertices are stamped as visited so the search never enters them.
    for (Vertex c : cops) stamp_[c] = epoch_;
    queue_.clear();
    queue_.push_back(src);
    stamp_[src] = epoch_;
    depth_[src] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex v = queue_[head];
      visit(v);
      if (depth_[v] == limit_) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          depth_[w] = depth_[v] + 1;
          queue_.push_back(w);
        }
      }
    }
  }

 private:
  const Graph& g_;
  int limit_;
  std::vector<std::uint32_t> stamp_;
  std::vector<int> depth_;
  std::vector<Vertex> queue_;
  std::uint32_t epoch_ = 0;
};

// Distinct joint cop moves per multiset, in ascending index order (CSR).
struct JointMoves {
  std::vector<std::int64_t> offset;
  std::vector<std::int32_t> target;

  std::span<const std::int32_t> of(std::int64_t c) const {
    return {target.data() + offset[c], static_cast<std::size_t>(offset[c + 1] - offset[c])};
  }
};

JointMoves build_joint_moves(const Graph& g, const MultisetIndex& index, int cop_speed,
                             std::uint64_t max_transitions) {
  const int n = g.n();
  const int k = index.k();
  std::vector<std::vector<Vertex>> ball(n);
  for (Vertex v = 0; v < n; ++v) ball[v] = legal_cop_moves_single(g, v, cop_speed).to_vector();

  JointMoves out;
  out.offset.reserve(index.size() + 1);
  out.offset.push_back(0);
  std::vector<std::int64_t> seen(index.size(), -1);
  std::vector<Vertex> pick(k), sorted(k);
  std::vector<std::int32_t> found;

  for (std::int64_t c = 0; c < index.size(); ++c) {
    auto cops = index.at(c);
    found.clear();
    // Odometer over the product of per-cop balls.
    std::vector<std::size_t> digit(k, 0);
    while (true) {
      for (int i = 0; i < k; ++i) sorted[i] = ball[cops[i]][digit[i]];
      std::sort(sorted.begin(), sorted.end());
      auto target = index.index_of(sorted);
      if (seen[target] != c) {
        seen[target] = c;
        found.push_back(static_cast<std::int32_t>(target));
      }
      int i = k - 1;
      while (i >= 0 && ++digit[i] == ball[cops[i]].size()) digit[i--] = 0;
      if (i < 0) break;
    }
    std::sort(found.begin(), found.end());
    out.target.insert(out.target.end(), found.begin(), found.end());
    if (out.target.size() > max_transitions) throw BudgetExceeded("joint cop move table exceeds budget");
    out.offset.push_back(static_cast<std::int64_t>(out.target.size()));
  }
  return out;
}

}  // namespace

SolveResult solve(const Graph& g, const GameConfig& cfg, const SolveOptions& options) {
  cfg.validate();
  if (!is_connected(g)) throw NotConnected("graph is not connected");
  const int n = g.n();
  const auto placements = MultisetIndex::count(n, cfg.cop_count);
  const __int128 states = static_cast<__int128>(placements) * n * 2;
  if (placements == kSaturated || states > static_cast<__int128>(options.max_states)) {
    throw BudgetExceeded("state space of " + std::to_string(n) + " vertices with " +
                         std::to_string(cfg.cop_count) + " cops exceeds the state budget");
  }

  SolveResult res(g, cfg);
  const auto& index = res.index_;
  const auto& dist = res.dist_;
  const std::int64_t M = index.size();
  const int b = cfg.cop_speed;
  const std::size_t total = static_cast<std::size_t>(M) * n;

  res.cop_rank_.assign(total, 0);
  res.robber_rank_.assign(total, 0);
  res.strategy_.choice.assign(total, kNoMove);
  std::vector<std::int32_t> pending(total, 0);

  const JointMoves joint = build_joint_moves(g, index, b, options.max_transitions);
  RobberReach reach(g, cfg.robber_speed);

  // Queue entries: state index * 2 + (0 = cop turn, 1 = robber turn).
  std::vector<std::int64_t> queue;
  auto occupied = [&](std::int64_t c, Vertex v) {
    auto cops = index.at(c);
    return std::binary_search(cops.begin(), cops.end(), v);
  };

  for (std::int64_t c = 0; c < M; ++c) {
    auto cops = index.at(c);
    for (Vertex r = 0; r < n; ++r) {
      if (occupied(c, r)) continue;
      res.live_states_ += 2;
      const auto s = static_cast<std::size_t>(c) * n + r;
      bool capture = std::any_of(cops.begin(), cops.end(), [&](Vertex x) { return dist(x, r) >= 0 && dist(x, r) <= b; });
      if (capture) {
        res.cop_rank_[s] = 1;
        res.strategy_.choice[s] = kCaptureMove;
        queue.push_back(static_cast<std::int64_t>(s) * 2);
      }
      int moves = 0;
      reach.run(r, cops, [&](Vertex) { ++moves; });
      pending[s] = moves;
    }
  }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int64_t entry = queue[head];
    const auto s = static_cast<std::size_t>(entry >> 1);
    const std::int64_t c = static_cast<std::int64_t>(s) / n;
    const Vertex r = static_cast<Vertex>(s % n);
    if ((entry & 1) == 0) {
      // Cop-turn (c, r) won: robber-turn states (c, r0) with r reachable from r0.
      const int rank = res.cop_rank_[s];
      reach.run(r, index.at(c), [&](Vertex r0) {
        const auto t = static_cast<std::size_t>(c) * n + r0;
        if (res.robber_rank_[t] == 0 && --pending[t] == 0) {
          res.robber_rank_[t] = rank;
          queue.push_back(static_cast<std::int64_t>(t) * 2 + 1);
        }
      });
    } else {
      // Robber-turn (c, r) won: cop-turn (c0, r) for c0 that can move to c.
      const int rank = res.robber_rank_[s];
      for (std::int32_t c0 : joint.of(c)) {
        if (occupied(c0, r)) continue;
        const auto t = static_cast<std::size_t>(c0) * n + r;
        if (res.cop_rank_[t] == 0) {
          res.cop_rank_[t] = rank + 1;
          res.strategy_.choice[t] = static_cast<std::int32_t>(c);
          queue.push_back(static_cast<std::int64_t>(t) * 2);
        }
      }
    }
  }

  res.winning_states_ = queue.size();
  for (auto rank : res.cop_rank_) res.rounds_ = std::max<int>(res.rounds_, rank);
  return res;
}

namespace {

std::optional<std::size_t> state_slot(const SolveResult& res, const GameState& s) {
  const int n = res.graph().n();
  if (static_cast<int>(s.cops.size()) != res.config().cop_count) {
    throw PreconditionError("cop count does not match the solved configuration");
  }
  if (s.robber < 0 || s.robber >= n) throw PreconditionError("robber vertex out of range");
  for (Vertex c : s.cops)
    if (c < 0 || c >= n) throw PreconditionError("cop vertex out of range");
  if (!std::is_sorted(s.cops.begin(), s.cops.end())) throw PreconditionError("cop positions must be sorted");
  if (std::binary_search(s.cops.begin(), s.cops.end(), s.robber)) return std::nullopt;
  return static_cast<std::size_t>(res.positions().index_of(s.cops)) * n + s.robber;
}

}  // namespace

std::optional<int> SolveResult::rank(const GameState& s) const {
  auto slot = state_slot(*this, s);
  if (!slot) return std::nullopt;
  const auto r = s.turn == Turn::Cop ? cop_rank_[*slot] : robber_rank_[*slot];
  if (r == 0) return std::nullopt;
  return r;
}

std::optional<CopPositions> SolveResult::strategy_move(const GameState& s) const {
  if (s.turn != Turn::Cop) throw PreconditionError("strategy is defined on cop-turn states");
  auto slot = state_slot(*this, s);
  if (!slot) return std::nullopt;
  const auto choice = strategy_.choice[*slot];
  if (choice == kNoMove) return std::nullopt;
  if (choice == kCaptureMove) {
    CopPositions next = s.cops;
    for (auto& c : next) {
      if (dist_(c, s.robber) >= 0 && dist_(c, s.robber) <= config_.cop_speed) {
        c = s.robber;
        break;
      }
    }
    return canonical(std::move(next));
  }
  auto cops = index_.at(choice);
  return CopPositions(cops.begin(), cops.end());
}

bool placement_wins(const SolveResult& result, std::span<const Vertex> placement) {
  const int n = result.graph().n();
  CopPositions cops = canonical(CopPositions(placement.begin(), placement.end()));
  if (static_cast<int>(cops.size()) != result.config().cop_count) {
    throw PreconditionError("placement size does not match the cop count");
  }
  const auto c = result.positions().index_of(cops);
  for (Vertex r = 0; r < n; ++r) {
    if (std::binary_search(cops.begin(), cops.end(), r)) continue;
    if (result.rank_at(c, r, Turn::Cop) == 0) return false;
  }
  return true;
}

bool placement_wins(const Graph& g, const GameConfig& cfg, std::span<const Vertex> placement,
                    const SolveOptions& options) {
  return placement_wins(solve(g, cfg, options), placement);
}

std::optional<CopPositions> first_winning_placement(const SolveResult& result) {
  const auto& index = result.positions();
  for (std::int64_t c = 0; c < index.size(); ++c) {
    auto cops = index.at(c);
    if (placement_wins(result, cops)) return CopPositions(cops.begin(), cops.end());
  }
  return std::nullopt;
}

CopNumberResult cop_number(const Graph& g, Speed robber_speed, int cop_speed, int k_max,
                           const SolveOptions& options) {
  if (k_max < 1) throw PreconditionError("k_max must be >= 1");
  if (!is_connected(g)) throw NotConnected("cop number requires a connected graph");
  CopNumberResult out;
  for (int k = 1; k <= k_max; ++k) {
    auto res = solve(g, GameConfig{k, robber_speed, cop_speed}, options);
    out.states += res.live_states();
    out.rounds = res.rounds();
    if (auto placement = first_winning_placement(res)) {
      out.value = k;
      out.placement = std::move(*placement);
      return out;
    }
  }
  return out;
}

std::optional<CopPositions> best_cop_move(const SolveResult& result, const GameState& s) {
  return result.strategy_move(s);
}

CopPositions heuristic_cop_move(const Graph& g, const DistanceMatrix& dist, const GameState& s,
                                int cop_speed) {
  CopPositions next;
  next.reserve(s.cops.size());
  for (Vertex c : s.cops) {
    Vertex best = c;
    int best_dist = dist(c, s.robber) < 0 ? std::numeric_limits<int>::max() : dist(c, s.robber);
    const int here = best_dist;
    for (Vertex v = 0; v < g.n(); ++v) {
      const int step = dist(c, v);
      if (step < 0 || step > cop_speed) continue;
      const int d = dist(v, s.robber);
      if (d < 0) continue;
      if (d < best_dist || (d == best_dist && d < here && v < best)) {
        best = v;
        best_dist = d;
      }
    }
    next.push_back(best);
  }
  return canonical(std::move(next));
}

CopPositions heuristic_cop_move(const Graph& g, const GameState& s, int cop_speed) {
  return heuristic_cop_move(g, DistanceMatrix(g), s, cop_speed);
}

}  // namespace copsrobber
