#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "copsrobber/game.hpp"
#include "copsrobber/graph.hpp"

namespace copsrobber::service {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Point {
  double x = 0, y = 0;
};

struct Preset {
  std::string name;
  std::string description;
  Graph graph;
  std::vector<Point> layout;
};

/// Built-in presets overlaid by `*.g` edge-list files from `dir` (file stem is
/// the name, the first `#` line the description; files shadow built-ins).
class PresetCatalog {
 public:
  PresetCatalog();
  explicit PresetCatalog(const std::optional<std::filesystem::path>& dir);

  const Preset* find(const std::string& name) const;
  /// Sorted by name.
  std::vector<const Preset*> list() const;

 private:
  std::map<std::string, Preset> presets_;
};

/// Circle, ring-of-rings, grid or spring coordinates in [0, 1]^2.
std::vector<Point> circular_layout(int n);
std::vector<Point> grid_layout(std::span<const int> dims);
std::vector<Point> petersen_layout();
/// Deterministic force-directed layout from a circular start.
std::vector<Point> spring_layout(const Graph& g, int iterations = 300);

enum class Mode { Optimal, Heuristic };
enum class Phase { Placement, RobberTurn, Captured, Resigned };

struct MoveRecord {
  enum class Actor { Cops, Robber } actor;
  CopPositions cops_from, cops_to;
  std::optional<Vertex> robber_from;
  Vertex robber_to = 0;
  int round = 0;
};

struct GameSession {
  std::string id;
  Graph graph;
  GameConfig config;
  Mode mode = Mode::Heuristic;
  std::shared_ptr<const SolveResult> solved;
  std::shared_ptr<const DistanceMatrix> distances;
  std::string warning;
  CopPositions initial_cops;
  CopPositions cops;
  std::optional<Vertex> robber;
  Phase phase = Phase::Placement;
  std::vector<MoveRecord> history;
  int round = 0;
  /// Bumped on every accepted request that changes state.
  std::uint64_t turn_token = 0;
  std::atomic<Clock::rep> last_access{0};
  std::mutex mutex;
};

struct ServiceOptions {
  /// Budget for the per-session exact solve; larger games use the heuristic.
  SolveOptions solve{2'000'000, 50'000'000};
  std::chrono::seconds idle_expiry{3600};
  std::optional<std::filesystem::path> preset_dir;
  std::size_t solve_cache_entries = 32;
};

struct ApiResult {
  int status = 200;
  json body;
};

/// Transport-independent implementation of the HTTP API.
class GameService {
 public:
  explicit GameService(ServiceOptions options = {});

  ApiResult create_session(const json& request);
  ApiResult robber_action(const std::string& id, const json& request);
  ApiResult get_session(const std::string& id);
  ApiResult list_presets() const;
  ApiResult get_graph(const std::string& preset) const;

  std::size_t session_count() const;
  /// Drops sessions idle for longer than the expiry; returns how many.
  std::size_t expire_idle(Clock::time_point now);
  /// Test hook replacing the steady clock.
  void set_clock(std::function<Clock::time_point()> clock) { clock_ = std::move(clock); }

  const PresetCatalog& presets() const { return presets_; }

 private:
  std::shared_ptr<GameSession> lookup(const std::string& id);
  std::shared_ptr<const SolveResult> solve_cached(const Graph& g, const GameConfig& cfg);
  json view(const GameSession& s) const;
  void play_cops(GameSession& s);

  ServiceOptions options_;
  PresetCatalog presets_;
  std::function<Clock::time_point()> clock_ = [] { return Clock::now(); };

  mutable std::shared_mutex registry_mutex_;
  std::map<std::string, std::shared_ptr<GameSession>> sessions_;
  std::uint64_t id_state_;

  std::mutex cache_mutex_;
  std::map<std::string, std::shared_ptr<const SolveResult>> cache_;
  std::vector<std::string> cache_order_;
};

/// Placement used when no solver result is available: repeatedly take the
/// vertex covering the most uncovered closed neighbourhoods.
CopPositions greedy_placement(const Graph& g, int k);

class HttpServer {
 public:
  HttpServer(GameService& service, std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port or throws on failure.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  void serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace copsrobber::service
