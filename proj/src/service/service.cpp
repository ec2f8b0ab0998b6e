#include <algorithm>
#include <cstdio>
#include <random>

#include "copsrobber/errors.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/service.hpp"

namespace copsrobber::service {

namespace {

ApiResult error(int status, const std::string& message, json extra = json::object()) {
  extra["error"] = message;
  return {status, std::move(extra)};
}

json to_json(const CopPositions& cops) { return json(std::vector<Vertex>(cops.begin(), cops.end())); }

json to_json(const VertexSet& s) { return json(s.to_vector()); }

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Placement: return "placement";
    case Phase::RobberTurn: return "robber_turn";
    case Phase::Captured: return "captured";
    case Phase::Resigned: return "resigned";
  }
  return "";
}

json speed_json(Speed s) { return s.is_infinite() ? json("inf") : json(s.value()); }

Speed parse_speed(const json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 1) throw PreconditionError("speed must be positive");
    return Speed::steps(static_cast<int>(v));
  }
  if (j.is_string()) return Speed::parse(j.get<std::string>());
  throw ParseError("speed must be an integer or \"inf\"");
}

bool covers(const CopPositions& cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

/// Placement with the most robber starts losing; lexicographically first on ties.
CopPositions best_effort_placement(const SolveResult& res) {
  const auto& idx = res.positions();
  const int n = res.graph().n();
  std::int64_t best = -1, best_index = 0;
  for (std::int64_t i = 0; i < idx.size(); ++i) {
    const CopPositions cops(idx.at(i).begin(), idx.at(i).end());
    std::int64_t losing = 0;
    for (Vertex r = 0; r < n; ++r)
      if (!covers(cops, r) && res.is_winning({cops, r, Turn::Cop})) ++losing;
    if (losing > best) best = losing, best_index = i;
  }
  return CopPositions(idx.at(best_index).begin(), idx.at(best_index).end());
}

std::string cache_key(const Graph& g, const GameConfig& cfg) {
  return to_edge_list(g) + "|" + std::to_string(cfg.cop_count) + "|" + cfg.robber_speed.to_string() + "|" +
         std::to_string(cfg.cop_speed);
}

}  // namespace

CopPositions greedy_placement(const Graph& g, int k) {
  const int n = g.n();
  std::vector<char> covered(n, 0);
  CopPositions out;
  for (int i = 0; i < k; ++i) {
    // Most newly covered vertices; once everything is covered, highest degree.
    Vertex pick = 0;
    std::pair<int, int> best{-1, -1};
    for (Vertex v = 0; v < n; ++v) {
      int gain = !covered[v];
      for (Vertex w : g.neighbors(v)) gain += !covered[w];
      const std::pair<int, int> score{gain, g.degree(v)};
      if (score > best) best = score, pick = v;
    }
    covered[pick] = 1;
    for (Vertex w : g.neighbors(pick)) covered[w] = 1;
    out.push_back(pick);
  }
  return canonical(out);
}

GameService::GameService(ServiceOptions options)
    : options_(std::move(options)), presets_(options_.preset_dir), id_state_(std::random_device{}()) {}

std::shared_ptr<const SolveResult> GameService::solve_cached(const Graph& g, const GameConfig& cfg) {
  const auto key = cache_key(g, cfg);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto result = std::make_shared<const SolveResult>(solve(g, cfg, options_.solve));
  std::lock_guard lock(cache_mutex_);
  if (cache_.emplace(key, result).second) {
    cache_order_.push_back(key);
    while (cache_order_.size() > options_.solve_cache_entries) {
      cache_.erase(cache_order_.front());
      cache_order_.erase(cache_order_.begin());
    }
  }
  return result;
}

ApiResult GameService::create_session(const json& request) {
  expire_idle(clock_());
  if (!request.is_object()) return error(400, "request body must be a JSON object");

  auto session = std::make_shared<GameSession>();
  bool strict = false;
  try {
    if (request.contains("preset")) {
      if (!request["preset"].is_string()) return error(400, "preset must be a string");
      const auto* p = presets_.find(request["preset"].get<std::string>());
      if (!p) return error(400, "unknown preset: " + request["preset"].get<std::string>());
      session->graph = p->graph;
    } else if (request.contains("graph")) {
      if (!request["graph"].is_string()) return error(400, "graph must be an edge-list string");
      session->graph = from_edge_list(request["graph"].get<std::string>());
    } else {
      return error(400, "either preset or graph is required");
    }
    const json k = request.value("k", json(1));
    if (!k.is_number_integer() || k.get<long long>() < 1) return error(400, "k must be a positive integer");
    if (k.get<long long>() > session->graph.n()) return error(400, "k must not exceed the number of vertices");
    session->config.cop_count = k.get<int>();
    if (request.contains("robber_speed")) session->config.robber_speed = parse_speed(request["robber_speed"]);
    if (request.contains("cop_speed")) {
      const auto b = parse_speed(request["cop_speed"]);
      session->config.cop_speed = b.capped(session->graph.n());
    }
    if (request.contains("strict")) {
      if (!request["strict"].is_boolean()) return error(400, "strict must be a boolean");
      strict = request["strict"].get<bool>();
    }
    if (session->graph.n() == 0) return error(400, "graph has no vertices");
    if (!is_connected(session->graph)) return error(400, "graph is not connected");
    session->config.validate();
  } catch (const Error& e) {
    return error(400, e.what());
  } catch (const json::exception& e) {
    return error(400, e.what());
  }

  try {
    session->solved = solve_cached(session->graph, session->config);
    session->mode = Mode::Optimal;
    if (auto p = first_winning_placement(*session->solved)) {
      session->cops = *p;
    } else {
      session->cops = best_effort_placement(*session->solved);
    }
  } catch (const BudgetExceeded& e) {
    if (strict) return error(409, std::string("state space exceeds the solver budget: ") + e.what());
    session->mode = Mode::Heuristic;
    session->warning = "state space exceeds the solver budget; cops play the greedy heuristic";
    session->distances = std::make_shared<const DistanceMatrix>(session->graph);
    session->cops = greedy_placement(session->graph, session->config.cop_count);
  }
  session->initial_cops = session->cops;
  // No free vertex for the robber: the cops win at once.
  if (static_cast<int>(VertexSet(session->graph.n(), session->cops).size()) == session->graph.n()) {
    session->phase = Phase::Captured;
  }
  session->history.push_back({MoveRecord::Actor::Cops, {}, session->cops, std::nullopt, 0, 0});
  session->last_access = clock_().time_since_epoch().count();

  {
    std::unique_lock lock(registry_mutex_);
    do {
      SplitMix64 rng(id_state_++);
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng.next()));
      session->id = buf;
    } while (sessions_.count(session->id));
    sessions_.emplace(session->id, session);
  }
  std::lock_guard lock(session->mutex);
  return {201, view(*session)};
}

std::shared_ptr<GameSession> GameService::lookup(const std::string& id) {
  const auto now = clock_();
  expire_idle(now);
  std::shared_lock lock(registry_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->last_access = now.time_since_epoch().count();
  return it->second;
}

std::size_t GameService::expire_idle(Clock::time_point now) {
  const auto limit = std::chrono::duration_cast<Clock::duration>(options_.idle_expiry).count();
  const auto now_ticks = now.time_since_epoch().count();
  std::unique_lock lock(registry_mutex_);
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (now_ticks - it->second->last_access.load() > limit) {
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::size_t GameService::session_count() const {
  std::shared_lock lock(registry_mutex_);
  return sessions_.size();
}

ApiResult GameService::get_session(const std::string& id) {
  auto s = lookup(id);
  if (!s) return error(404, "unknown session");
  std::lock_guard lock(s->mutex);
  return {200, view(*s)};
}

void GameService::play_cops(GameSession& s) {
  const GameState state{s.cops, *s.robber, Turn::Cop};
  std::optional<CopPositions> move;
  if (s.mode == Mode::Optimal && s.solved->is_winning(state)) move = s.solved->strategy_move(state);
  if (!move) {
    const DistanceMatrix& d = s.solved ? s.solved->distances() : *s.distances;
    move = heuristic_cop_move(s.graph, d, state, s.config.cop_speed);
  }
  ++s.round;
  s.history.push_back({MoveRecord::Actor::Cops, s.cops, *move, std::nullopt, *s.robber, s.round});
  s.cops = *move;
  if (covers(s.cops, *s.robber)) s.phase = Phase::Captured;
}

ApiResult GameService::robber_action(const std::string& id, const json& request) {
  auto sp = lookup(id);
  if (!sp) return error(404, "unknown session");
  GameSession& s = *sp;
  std::lock_guard lock(s.mutex);

  if (!request.is_object()) return error(400, "request body must be a JSON object");
  if (request.contains("turn")) {
    if (!request["turn"].is_number_unsigned() && !request["turn"].is_number_integer()) {
      return error(400, "turn must be an integer token");
    }
    if (request["turn"].get<long long>() != static_cast<long long>(s.turn_token)) {
      return error(409, "stale turn token", {{"turn_token", s.turn_token}});
    }
  }
  if (s.phase == Phase::Captured || s.phase == Phase::Resigned) {
    return error(409, std::string("game is over: ") + phase_name(s.phase));
  }

  std::string action = s.phase == Phase::Placement ? "place" : "move";
  if (request.contains("action")) {
    if (!request["action"].is_string()) return error(400, "action must be a string");
    action = request["action"].get<std::string>();
  }
  if (action == "resign") {
    s.phase = Phase::Resigned;
    ++s.turn_token;
    return {200, view(s)};
  }
  if (action != "place" && action != "move") return error(400, "unknown action: " + action);
  if (action == "place" && s.phase != Phase::Placement) return error(409, "robber already placed");
  if (action == "move" && s.phase != Phase::RobberTurn) return error(409, "robber has not been placed");

  if (!request.contains("vertex") || !request["vertex"].is_number_integer()) {
    return error(400, "vertex must be an integer");
  }
  const auto v = request["vertex"].get<long long>();
  const int n = s.graph.n();

  if (action == "place") {
    VertexSet legal = VertexSet::full(n);
    for (Vertex c : s.cops) legal.erase(c);
    if (v < 0 || v >= n || !legal.contains(static_cast<Vertex>(v))) {
      return error(422, "illegal starting vertex", {{"legal_moves", to_json(legal)}});
    }
    s.robber = static_cast<Vertex>(v);
    s.history.push_back({MoveRecord::Actor::Robber, s.cops, s.cops, std::nullopt, *s.robber, s.round});
    s.phase = Phase::RobberTurn;
  } else {
    const auto legal = legal_robber_moves(s.graph, {s.cops, *s.robber, Turn::Robber}, s.config.robber_speed);
    if (v < 0 || v >= n || !legal.contains(static_cast<Vertex>(v))) {
      return error(422, "illegal robber move", {{"legal_moves", to_json(legal)}});
    }
    s.history.push_back({MoveRecord::Actor::Robber, s.cops, s.cops, s.robber, static_cast<Vertex>(v), s.round});
    s.robber = static_cast<Vertex>(v);
  }
  play_cops(s);
  ++s.turn_token;
  return {200, view(s)};
}

json GameService::view(const GameSession& s) const {
  json out;
  out["id"] = s.id;
  out["mode"] = s.mode == Mode::Optimal ? "optimal" : "heuristic";
  if (!s.warning.empty()) out["warning"] = s.warning;
  out["status"] = phase_name(s.phase);
  out["captured"] = s.phase == Phase::Captured;
  out["turn_token"] = s.turn_token;
  out["round"] = s.round;

  json edges = json::array();
  for (auto [u, v] : s.graph.edges()) edges.push_back({u, v});
  out["graph"] = {{"n", s.graph.n()}, {"m", s.graph.m()}, {"edges", edges}};
  out["config"] = {{"k", s.config.cop_count},
                   {"robber_speed", speed_json(s.config.robber_speed)},
                   {"cop_speed", s.config.cop_speed}};
  out["cops"] = to_json(s.cops);
  out["robber"] = s.robber ? json(*s.robber) : json(nullptr);

  const int n = s.graph.n();
  VertexSet legal(n);
  if (s.phase == Phase::Placement) {
    legal = VertexSet::full(n);
    for (Vertex c : s.cops) legal.erase(c);
  } else if (s.phase == Phase::RobberTurn) {
    legal = legal_robber_moves(s.graph, {s.cops, *s.robber, Turn::Robber}, s.config.robber_speed);
  }
  out["legal_moves"] = to_json(legal);

  bool winning = false;
  json rank = nullptr;
  json hints = nullptr;
  if (s.mode == Mode::Optimal) {
    const auto& res = *s.solved;
    hints = json::array();
    if (s.phase == Phase::Placement) {
      winning = placement_wins(res, s.cops);
      if (winning) {
        int worst = 0;
        for (Vertex r : legal) worst = std::max(worst, res.rank({s.cops, r, Turn::Cop}).value_or(0));
        rank = worst;
      }
    } else if (s.phase == Phase::RobberTurn) {
      const auto r = res.rank({s.cops, *s.robber, Turn::Robber});
      winning = r.has_value();
      if (r) rank = *r;
    } else {
      winning = s.phase == Phase::Captured;
    }
    for (Vertex v : legal) hints.push_back({{"vertex", v}, {"safe", !res.is_winning({s.cops, v, Turn::Cop})}});
  } else {
    winning = s.phase == Phase::Captured;
  }
  out["theoretically_winning"] = winning;
  out["rank"] = rank;
  out["hints"] = hints;

  json history = json::array();
  for (const auto& m : s.history) {
    json h;
    h["round"] = m.round;
    if (m.actor == MoveRecord::Actor::Cops) {
      h["actor"] = "cops";
      h["from"] = to_json(m.cops_from);
      h["to"] = to_json(m.cops_to);
    } else {
      h["actor"] = "robber";
      h["from"] = m.robber_from ? json(*m.robber_from) : json(nullptr);
      h["to"] = m.robber_to;
    }
    history.push_back(std::move(h));
  }
  out["history"] = std::move(history);
  return out;
}

ApiResult GameService::list_presets() const {
  json list = json::array();
  for (const auto* p : presets_.list()) {
    list.push_back({{"name", p->name}, {"n", p->graph.n()}, {"m", p->graph.m()}, {"description", p->description}});
  }
  return {200, {{"presets", list}}};
}

ApiResult GameService::get_graph(const std::string& preset) const {
  const auto* p = presets_.find(preset);
  if (!p) return error(404, "unknown preset: " + preset);
  json vertices = json::array();
  for (Vertex v = 0; v < p->graph.n(); ++v) vertices.push_back({{"id", v}, {"x", p->layout[v].x}, {"y", p->layout[v].y}});
  json edges = json::array();
  for (auto [u, v] : p->graph.edges()) edges.push_back({u, v});
  return {200,
          {{"name", p->name}, {"description", p->description}, {"n", p->graph.n()}, {"m", p->graph.m()},
           {"vertices", vertices}, {"edges", edges}, {"edge_list", to_edge_list(p->graph)}}};
}

}  // namespace copsrobber::service
