#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "httplib.h"

#include "copsrobber/errors.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/service.hpp"

using namespace copsrobber;
using namespace copsrobber::service;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("copsrobber_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<Vertex> ints(const json& j) { return j.get<std::vector<Vertex>>(); }

// Checks every recorded move against the rules and returns false on divergence.
bool replay_matches(const json& view) {
  const int n = view["graph"]["n"];
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : view["graph"]["edges"]) edges.emplace_back(e[0], e[1]);
  const Graph g(n, edges);
  const DistanceMatrix d(g);
  const auto& cfg = view["config"];
  const Speed a = cfg["robber_speed"].is_string() ? Speed::infinite() : Speed::steps(cfg["robber_speed"]);
  const int b = cfg["cop_speed"];
  const int k = cfg["k"];

  CopPositions cops;
  std::optional<Vertex> robber;
  bool captured = false;
  std::string last_actor = "robber";
  for (const auto& h : view["history"]) {
    if (captured) return false;
    const std::string actor = h["actor"];
    if (actor == last_actor) return false;
    last_actor = actor;
    if (actor == "cops") {
      const auto to = ints(h["to"]);
      if (static_cast<int>(to.size()) != k || !std::is_sorted(to.begin(), to.end())) return false;
      if (ints(h["from"]) != cops) return false;
      if (!cops.empty()) {
        // Some assignment of old to new positions moves each cop at most b.
        auto perm = to;
        bool ok = false;
        do {
          bool all = true;
          for (int i = 0; i < k; ++i) all = all && d(cops[i], perm[i]) <= b;
          ok = ok || all;
        } while (!ok && std::next_permutation(perm.begin(), perm.end()));
        if (!ok) return false;
      }
      cops = to;
      if (robber && std::find(cops.begin(), cops.end(), *robber) != cops.end()) captured = true;
    } else {
      const Vertex to = h["to"];
      if (!robber) {
        if (!h["from"].is_null() || std::find(cops.begin(), cops.end(), to) != cops.end()) return false;
      } else {
        if (h["from"] != *robber) return false;
        if (!legal_robber_moves(g, {cops, *robber, Turn::Robber}, a).contains(to)) return false;
      }
      robber = to;
    }
  }
  if (ints(view["cops"]) != cops) return false;
  if (robber != (view["robber"].is_null() ? std::nullopt : std::optional<Vertex>(view["robber"].get<Vertex>()))) {
    return false;
  }
  return captured == (view["status"] == "captured");
}

}  // namespace

TEST_CASE("presets and layouts") {
  GameService svc;
  const auto list = svc.list_presets();
  CHECK(list.status == 200);
  std::set<std::string> names;
  for (const auto& p : list.body["presets"]) names.insert(p["name"].get<std::string>());
  for (const char* expected : {"petersen", "cycle-6", "grid-3x3", "double-wheel", "torus-4x4"}) {
    CHECK(names.count(expected) == 1);
  }

  const auto pet = svc.get_graph("petersen");
  CHECK(pet.status == 200);
  CHECK(pet.body["n"] == 10);
  CHECK(pet.body["edges"].size() == 15);
  REQUIRE(pet.body["vertices"].size() == 10);
  for (const auto& v : pet.body["vertices"]) {
    CHECK(v["x"].get<double>() >= 0.0);
    CHECK(v["x"].get<double>() <= 1.0);
    CHECK(v["y"].get<double>() >= 0.0);
    CHECK(v["y"].get<double>() <= 1.0);
  }
  CHECK(svc.get_graph("no-such-graph").status == 404);

  // Spring layout is deterministic and separates vertices.
  const auto a = spring_layout(double_wheel_graph()), b = spring_layout(double_wheel_graph());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
    for (std::size_t j = 0; j < i; ++j) CHECK(std::hypot(a[i].x - a[j].x, a[i].y - a[j].y) > 1e-3);
  }
}

TEST_CASE("preset directory") {
  const auto empty = fresh_dir("empty");
  ServiceOptions opts;
  opts.preset_dir = empty;
  CHECK(GameService(opts).list_presets().body == GameService().list_presets().body);

  const auto dir = fresh_dir("presets");
  std::ofstream(dir / "cycle-4.g") << "# my square\n4 4\n0 1\n1 2\n2 3\n3 0\n";
  std::ofstream(dir / "triangle.g") << "# three\n3 3\n0 1\n1 2\n2 0\n";
  std::ofstream(dir / "notes.txt") << "ignored";
  opts.preset_dir = dir;
  GameService svc(opts);
  CHECK(svc.presets().find("cycle-4")->description == "my square");
  CHECK(svc.presets().find("triangle")->graph == complete_graph(3));
  CHECK(svc.presets().find("notes") == nullptr);
  CHECK(svc.create_session({{"preset", "triangle"}, {"k", 1}}).status == 201);

  opts.preset_dir = dir / "missing";
  CHECK_THROWS_AS(GameService{opts}, EnvironmentError);
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(empty);
}

TEST_CASE("create session") {
  GameService svc;
  auto c4 = svc.create_session({{"graph", "4 4\n0 1\n1 2\n2 3\n3 0\n"}, {"k", 2}});
  REQUIRE(c4.status == 201);
  CHECK(c4.body["mode"] == "optimal");
  CHECK(c4.body["theoretically_winning"] == true);
  CHECK(c4.body["status"] == "placement");
  CHECK(c4.body["robber"].is_null());
  CHECK(c4.body["cops"].size() == 2);
  CHECK(c4.body["legal_moves"].size() + 2 >= 4);

  auto c6 = svc.create_session({{"preset", "cycle-6"}, {"k", 1}, {"robber_speed", "inf"}});
  REQUIRE(c6.status == 201);
  CHECK(c6.body["theoretically_winning"] == false);
  CHECK(c6.body["legal_moves"].size() == 5);
  // Only starts next to the cop lose at once; the robber evades from every other start.
  const Vertex c6_cop = c6.body["cops"][0];
  for (const auto& h : c6.body["hints"]) {
    const Vertex v = h["vertex"];
    CHECK(h["safe"] == ((v - c6_cop + 6) % 6 != 1 && (c6_cop - v + 6) % 6 != 1));
  }

  CHECK(svc.create_session({{"preset", "cycle-6"}, {"k", 0}}).status == 400);
  CHECK(svc.create_session({{"graph", "3 1\n0 5\n"}}).status == 400);
  CHECK(svc.create_session({{"graph", "4 2\n0 1\n2 3\n"}}).status == 400);
  CHECK(svc.create_session({{"preset", "nope"}}).status == 400);
  CHECK(svc.create_session({{"k", 1}}).status == 400);
  CHECK(svc.create_session(json::array()).status == 400);
  CHECK(svc.create_session({{"preset", "cycle-6"}, {"robber_speed", "fast"}}).status == 400);
  CHECK(svc.create_session({{"preset", "cycle-6"}, {"k", 7}}).status == 400);

  SUBCASE("budget fallback") {
    ServiceOptions opts;
    opts.solve.max_states = 100;
    GameService small(opts);
    auto r = small.create_session({{"preset", "petersen"}, {"k", 3}});
    REQUIRE(r.status == 201);
    CHECK(r.body["mode"] == "heuristic");
    CHECK(r.body.contains("warning"));
    CHECK(r.body["hints"].is_null());
    CHECK(small.create_session({{"preset", "petersen"}, {"k", 3}, {"strict", true}}).status == 409);
  }
}

TEST_CASE("placement and moves") {
  GameService svc;
  auto created = svc.create_session({{"preset", "cycle-6"}, {"k", 1}});
  const std::string id = created.body["id"];
  const Vertex cop = created.body["cops"][0];

  CHECK(svc.get_session("ffffffffffffffff").status == 404);
  CHECK(svc.robber_action("ffffffffffffffff", {{"vertex", 0}}).status == 404);
  auto bad = svc.robber_action(id, {{"vertex", cop}});
  CHECK(bad.status == 422);
  CHECK(bad.body["legal_moves"].size() == 5);
  CHECK(svc.robber_action(id, {{"action", "move"}, {"vertex", 0}}).status == 409);
  CHECK(svc.robber_action(id, {{"vertex", "zero"}}).status == 400);

  const Vertex start = (cop + 3) % 6;
  auto placed = svc.robber_action(id, {{"vertex", start}});
  REQUIRE(placed.status == 200);
  CHECK(placed.body["status"] == "robber_turn");
  CHECK(placed.body["robber"] == start);
  CHECK(svc.robber_action(id, {{"action", "place"}, {"vertex", start}}).status == 409);

  // Stay put is legal; the cop then steps closer.
  auto stay = svc.robber_action(id, {{"vertex", start}});
  REQUIRE(stay.status == 200);
  CHECK(stay.body["round"] == 2);
  const auto legal = ints(stay.body["legal_moves"]);
  for (Vertex v = 0; v < 6; ++v) {
    if (std::find(legal.begin(), legal.end(), v) != legal.end()) continue;
    auto r = svc.robber_action(id, {{"vertex", v}});
    CHECK(r.status == 422);
    CHECK(ints(r.body["legal_moves"]) == legal);
  }
  CHECK(svc.robber_action(id, {{"turn", 0}, {"vertex", legal[0]}}).status == 409);

  auto resigned = svc.robber_action(id, {{"action", "resign"}});
  CHECK(resigned.body["status"] == "resigned");
  CHECK(svc.robber_action(id, {{"vertex", legal[0]}}).status == 409);
  CHECK(replay_matches(svc.get_session(id).body));
}

TEST_CASE("optimal cops capture within the initial rank") {
  GameService svc;
  for (const char* preset : {"cycle-4", "petersen", "grid-3x3", "path-7", "double-wheel"}) {
    const int k = std::string(preset) == "petersen" ? 3 : 2;
    auto created = svc.create_session({{"preset", preset}, {"k", k}});
    REQUIRE(created.body["theoretically_winning"] == true);
    const int initial_rank = created.body["rank"];
    for (Vertex start : ints(created.body["legal_moves"])) {
      auto s = svc.create_session({{"preset", preset}, {"k", k}});
      const std::string id = s.body["id"];
      auto view = svc.robber_action(id, {{"vertex", start}}).body;
      int robber_moves = 0;
      std::optional<int> last_rank;
      while (view["status"] == "robber_turn") {
        const int rank = view["rank"];
        if (last_rank) CHECK(rank < *last_rank);
        last_rank = rank;
        // A fixed robber policy: always the largest legal vertex.
        const auto legal = ints(view["legal_moves"]);
        view = svc.robber_action(id, {{"vertex", legal.back()}}).body;
        ++robber_moves;
      }
      CHECK(view["status"] == "captured");
      CHECK(robber_moves < initial_rank);
      CHECK(replay_matches(view));
    }
  }
}

TEST_CASE("fuzzed clients never diverge from the rules") {
  GameService svc;
  SplitMix64 rng(2024);
  const std::vector<std::string> presets = {"cycle-4", "cycle-6", "cycle-8", "petersen", "grid-3x3",
                                            "path-7", "wheel-6", "double-wheel", "torus-4x4"};
  int games = 0, divergences = 0, optimal_failures = 0;
  for (; games < 1000; ++games) {
    const auto& preset = presets[rng.below(presets.size())];
    const int k = 1 + static_cast<int>(rng.below(3));
    json speed = rng.below(2) ? json("inf") : json(1 + static_cast<int>(rng.below(3)));
    auto created = svc.create_session({{"preset", preset}, {"k", k}, {"robber_speed", speed},
                                       {"cop_speed", 1 + static_cast<int>(rng.below(2))}});
    REQUIRE(created.status == 201);
    const std::string id = created.body["id"];
    const bool winning = created.body["theoretically_winning"];
    const int rank = winning ? created.body["rank"].get<int>() : 0;
    json view = created.body;
    int robber_moves = 0;
    for (int step = 0; step < 40 && (view["status"] == "placement" || view["status"] == "robber_turn"); ++step) {
      const auto legal = ints(view["legal_moves"]);
      // Occasionally send an illegal vertex; it must be rejected without changing state.
      if (rng.below(10) == 0) {
        auto r = svc.robber_action(id, {{"vertex", static_cast<int>(view["graph"]["n"]) + 3}});
        CHECK(r.status == 422);
      }
      const Vertex pick = legal[rng.below(legal.size())];
      const bool is_move = view["status"] == "robber_turn";
      auto r = svc.robber_action(id, {{"vertex", pick}, {"turn", view["turn_token"]}});
      REQUIRE(r.status == 200);
      view = r.body;
      robber_moves += is_move;
    }
    if (!replay_matches(svc.get_session(id).body)) ++divergences;
    if (winning && (view["status"] != "captured" || robber_moves >= rank)) ++optimal_failures;
  }
  CHECK(games == 1000);
  CHECK(divergences == 0);
  CHECK(optimal_failures == 0);
}

TEST_CASE("idle sessions expire") {
  ServiceOptions opts;
  opts.idle_expiry = std::chrono::seconds(60);
  GameService svc(opts);
  auto now = Clock::now();
  svc.set_clock([&] { return now; });
  const std::string a = svc.create_session({{"preset", "cycle-4"}, {"k", 2}}).body["id"];
  now += std::chrono::seconds(30);
  const std::string b = svc.create_session({{"preset", "cycle-4"}, {"k", 2}}).body["id"];
  now += std::chrono::seconds(40);
  CHECK(svc.get_session(b).status == 200);
  CHECK(svc.get_session(a).status == 404);
  CHECK(svc.session_count() == 1);
  now += std::chrono::seconds(61);
  CHECK(svc.expire_idle(now) == 1);
}

TEST_CASE("http interface") {
  GameService svc;
  HttpServer server(svc);
  const int port = server.bind("127.0.0.1", 0);
  std::thread runner([&] { server.serve(); });
  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);
  for (int i = 0; i < 100; ++i) {
    if (auto r = client.Get("/api/presets")) break;
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }

  auto presets = client.Get("/api/presets");
  REQUIRE(presets);
  CHECK(presets->status == 200);
  CHECK(json::parse(presets->body)["presets"].size() >= 5);
  auto graph = client.Get("/api/graphs/petersen");
  REQUIRE(graph);
  CHECK(json::parse(graph->body)["n"] == 10);
  CHECK(client.Get("/api/graphs/unknown")->status == 404);
  CHECK(client.Get("/")->status == 200);
  CHECK(client.Get("/api/sessions/0000")->status == 404);
  CHECK(client.Post("/api/sessions", "{not json", "application/json")->status == 400);
  CHECK(client.Post("/api/sessions", R"({"preset":"cycle-6","k":0})", "application/json")->status == 400);

  auto created = client.Post("/api/sessions", R"({"preset":"cycle-6","k":1})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const auto body = json::parse(created->body);
  const std::string id = body["id"];
  const Vertex cop = body["cops"][0];
  const std::string robber_path = "/api/sessions/" + id + "/robber";
  CHECK(client.Post(robber_path, json{{"vertex", cop}}.dump(), "application/json")->status == 422);
  auto placed = client.Post(robber_path, json{{"vertex", (cop + 3) % 6}}.dump(), "application/json");
  REQUIRE(placed);
  CHECK(placed->status == 200);
  CHECK(client.Get("/api/sessions/" + id)->status == 200);

  SUBCASE("concurrent conflicting moves") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto fresh = json::parse(
          client.Post("/api/sessions", R"({"preset":"cycle-8","k":1})", "application/json")->body);
      const std::string sid = fresh["id"];
      const Vertex c = fresh["cops"][0];
      const auto path = "/api/sessions/" + sid + "/robber";
      const auto view = json::parse(client.Post(path, json{{"vertex", (c + 4) % 8}}.dump(), "application/json")->body);
      const auto legal = ints(view["legal_moves"]);
      const json move = {{"vertex", legal.front()}, {"turn", view["turn_token"]}};
      int statuses[2] = {0, 0};
      std::thread t1([&] { statuses[0] = httplib::Client("127.0.0.1", port).Post(path, move.dump(), "application/json")->status; });
      std::thread t2([&] { statuses[1] = httplib::Client("127.0.0.1", port).Post(path, move.dump(), "application/json")->status; });
      t1.join();
      t2.join();
      std::sort(std::begin(statuses), std::end(statuses));
      CHECK(statuses[0] == 200);
      CHECK(statuses[1] == 409);
    }
  }

  server.stop();
  runner.join();
}

TEST_CASE("bind failure") {
  GameService svc;
  HttpServer first(svc);
  const int port = first.bind("127.0.0.1", 0);
  HttpServer second(svc);
  CHECK_THROWS_AS(second.bind("127.0.0.1", port), EnvironmentError);
  CHECK_THROWS_AS(second.bind("127.0.0.1", 70000), EnvironmentError);
}
