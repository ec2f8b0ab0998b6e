#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "copsrobber/bounds.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/one_cop.hpp"
#include "copsrobber/service.hpp"
#include "copsrobber/verify.hpp"

namespace copsrobber::cli {

namespace {

using nlohmann::json;

std::string braces(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    os << (first ? "" : " ") << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string joined(std::span<const Vertex> vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

json speed_json(Speed s) { return s.is_infinite() ? json("inf") : json(s.value()); }

std::string cop_number_label(Speed a, int b) {
  if (b == 1) return "c_" + a.to_string();
  return "c_{" + a.to_string() + "," + std::to_string(b) + "}";
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ------------------------------------------------------------ copnumber

struct CopNumberArgs {
  std::string file;
  std::string robber_speed = "inf";
  int cop_speed = 1;
  int max_cops = 4;
  std::uint64_t max_states = SolveOptions{}.max_states;
  bool json = false;
};

int cmd_copnumber(const CopNumberArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.file);
  const Speed speed = Speed::parse(a.robber_speed);
  SolveOptions opts;
  opts.max_states = a.max_states;
  const auto r = cop_number(g, speed, a.cop_speed, a.max_cops, opts);
  const std::string label = cop_number_label(speed, a.cop_speed);
  if (a.json) {
    print_json(out, {{"command", "copnumber"},
                     {"n", g.n()},
                     {"m", g.m()},
                     {"robber_speed", speed_json(speed)},
                     {"cop_speed", a.cop_speed},
                     {"max_cops", a.max_cops},
                     {"label", label},
                     {"cop_number", r.value ? json(*r.value) : json(nullptr)},
                     {"placement", r.placement},
                     {"states", r.states},
                     {"rounds", r.rounds}});
    return kOk;
  }
  if (r.value) {
    out << label << " = " << *r.value << '\n';
    out << "placement: " << joined(r.placement) << '\n';
  } else {
    out << label << " > " << a.max_cops << '\n';
  }
  out << "states: " << r.states << '\n';
  out << "rounds: " << r.rounds << '\n';
  return kOk;
}

// ------------------------------------------------------------ copwin1

json hole_json(const BlockDecomposition& dec, const DirectedHole& h) {
  return {{"block_index", h.block_index},
          {"block", dec.blocks[h.block_index].to_vector()},
          {"cut_vertex", h.cut_vertex}};
}

int cmd_copwin1(const std::string& file, bool as_json, std::ostream& out) {
  const Graph g = read_edge_list_file(file);
  const auto verdict = decide_one_cop(g);
  const auto& dec = verdict.decomposition;
  json witness = nullptr;
  std::string text;
  if (const auto* bad = std::get_if<BadBlock>(&verdict.witness)) {
    const auto& block = dec.blocks[bad->block_index];
    witness = {{"type", "bad_block"}, {"block_index", bad->block_index}, {"block", block.to_vector()}};
    text = "witness: block " + std::to_string(bad->block_index) + " " + braces(block) +
           " has no dominating vertex";
  } else if (const auto* hall = std::get_if<Hallway>(&verdict.witness)) {
    witness = {{"type", "hallway"}, {"holes", {hole_json(dec, hall->first), hole_json(dec, hall->second)}}};
    text = "witness: hallway from block " + std::to_string(hall->first.block_index) + " " +
           braces(dec.blocks[hall->first.block_index]) + " via cut vertex " +
           std::to_string(hall->first.cut_vertex) + " to block " + std::to_string(hall->second.block_index) +
           " " + braces(dec.blocks[hall->second.block_index]) + " via cut vertex " +
           std::to_string(hall->second.cut_vertex);
  }
  if (as_json) {
    print_json(out, {{"command", "copwin1"},
                     {"n", g.n()},
                     {"m", g.m()},
                     {"copwin", verdict.is_copwin},
                     {"witness", witness}});
    return kOk;
  }
  out << (verdict.is_copwin ? "YES" : "NO") << '\n';
  if (!text.empty()) out << text << '\n';
  return kOk;
}

// ------------------------------------------------------------ bounds

BoundsOptions bounds_options(std::uint64_t max_subsets) {
  BoundsOptions o;
  o.max_subset_vertices = max_subsets == 0 ? 0 : static_cast<int>(std::bit_width(max_subsets)) - 1;
  o.max_subsets = max_subsets;
  return o;
}

int cmd_bounds(const std::string& file, std::uint64_t max_subsets, bool as_json, std::ostream& out) {
  const Graph g = read_edge_list_file(file);
  const auto opts = bounds_options(max_subsets);
  const auto ie = edge_isoperimetric_exact(g, opts);
  const auto iv = vertex_isoperimetric_exact(g, opts);
  const auto dom = domination_number_exact(g, opts);
  const auto rep = isoperimetric_bounds(g, ie.value, iv.value, dom.size);
  const double degree_bound = alon_spencer_domination_bound(g);
  const bool connected = is_connected(g);

  if (as_json) {
    print_json(out, {{"command", "bounds"},
                     {"n", g.n()},
                     {"m", g.m()},
                     {"connected", connected},
                     {"max_degree", rep.max_degree},
                     {"iota_e", {{"value", to_string(ie.value)}, {"witness", ie.witness.to_vector()}}},
                     {"iota_v", {{"value", to_string(iv.value)}, {"witness", iv.witness.to_vector()}}},
                     {"gamma", {{"value", dom.size}, {"witness", dom.witness.to_vector()}}},
                     {"lower_bounds",
                      {{"edge_sharp", to_string(rep.lower_edge_sharp)},
                       {"edge_relaxed", to_string(rep.lower_edge_relaxed)},
                       {"vertex_b", to_string(rep.lower_vertex_b)},
                       {"vertex_c", to_string(rep.lower_vertex_c)}}},
                     {"best_lower", to_string(rep.best_lower())},
                     {"upper_bound", rep.upper_domination},
                     {"degree_domination_bound", degree_bound}});
    return kOk;
  }
  out << "n = " << g.n() << ", m = " << g.m() << ", max degree = " << rep.max_degree << '\n';
  out << "iota_e = " << to_string(ie.value) << "  witness " << braces(ie.witness) << '\n';
  out << "iota_v = " << to_string(iv.value) << "  witness " << braces(iv.witness) << '\n';
  out << "gamma = " << dom.size << "  witness " << braces(dom.witness) << '\n';
  out << "lower (a) = " << to_string(rep.lower_edge_sharp) << '\n';
  out << "lower (a, relaxed) = " << to_string(rep.lower_edge_relaxed) << '\n';
  out << "lower (b) = " << to_string(rep.lower_vertex_b) << '\n';
  out << "lower (c) = " << to_string(rep.lower_vertex_c) << '\n';
  out << "degree domination bound = " << degree_bound << '\n';
  if (connected) {
    out << "sandwich: " << to_string(rep.best_lower()) << " <= c_inf <= " << rep.upper_domination << '\n';
  } else {
    out << "sandwich: not defined, graph is disconnected\n";
  }
  return kOk;
}

// ------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite;
  VerifyOptions options;
  bool json = false;
};

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = verify_suite_names();
  } else {
    names.push_back(a.suite);
  }
  std::vector<VerifySuiteReport> reports;
  for (const auto& name : names) reports.push_back(run_verify_suite(name, a.options));
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  if (a.json) {
    if (a.suite == "all") {
      json suites = json::array();
      for (const auto& r : reports) suites.push_back(to_json(r));
      print_json(out, {{"suites", suites}, {"passed", passed}});
    } else {
      print_json(out, to_json(reports.front()));
    }
    return passed ? kOk : kVerifyFailed;
  }
  for (const auto& r : reports) {
    out << r.suite << ": " << r.checked << " checked, " << r.failures.size() << " failures";
    if (a.options.timing) out << ", " << r.elapsed_ms << " ms";
    out << '\n';
    for (const auto& f : r.failures) {
      out << "  FAIL " << f.detail << ": expected " << f.expected << ", got " << f.actual << '\n';
      if (!f.graph.empty()) out << "    graph: " << one_line(f.graph) << '\n';
    }
  }
  out << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? kOk : kVerifyFailed;
}

// ------------------------------------------------------------ random-stats

struct RandomStatsArgs {
  int n = 20;
  std::optional<double> p;
  std::optional<int> regular;
  int samples = 10;
  Seed seed = 1;
  bool connected = false;
  std::uint64_t max_states = 5'000'000;
  std::uint64_t max_subsets = std::uint64_t{1} << 24;
  double b = 0.001;
  bool json = false;
};

struct SampleRow {
  int index = 0;
  Seed seed = 0;
  int attempts = 1;
  int m = 0;
  bool connected = false;
  int min_degree = 0;
  int max_degree = 0;
  int gamma = 0;
  bool gamma_exact = true;
  double degree_bound = 0;
  std::optional<Rational> iota_e, iota_v;
  std::optional<BoundReport> bounds;
  std::optional<int> c_inf;
  // "exact", "budget" or "disconnected"
  std::string c_inf_status;
};

SampleRow sample_row(const RandomStatsArgs& a, int index, SplitMix64& seeds) {
  SampleRow row;
  row.index = index;
  constexpr int kMaxResample = 1000;
  Graph g;
  for (int attempt = 1;; ++attempt) {
    row.seed = seeds.next();
    row.attempts = attempt;
    g = a.regular ? random_regular(a.n, *a.regular, row.seed) : gnp(a.n, *a.p, row.seed);
    if (!a.connected || is_connected(g)) break;
    if (attempt == kMaxResample) throw RetryLimit("no connected sample after 1000 draws");
  }
  row.m = g.m();
  row.connected = is_connected(g);
  row.min_degree = g.min_degree();
  row.max_degree = g.max_degree();
  row.degree_bound = alon_spencer_domination_bound(g);

  const auto opts = bounds_options(a.max_subsets);
  if (g.n() <= opts.max_domination_vertices) {
    row.gamma = domination_number_exact(g, opts).size;
  } else {
    row.gamma = greedy_dominating_set(g).size();
    row.gamma_exact = false;
  }
  if (g.n() >= 2 && g.n() <= opts.max_subset_vertices) {
    row.iota_e = edge_isoperimetric_exact(g, opts).value;
    row.iota_v = vertex_isoperimetric_exact(g, opts).value;
    if (g.m() > 0) row.bounds = isoperimetric_bounds(g, *row.iota_e, *row.iota_v, row.gamma);
  }
  if (!row.connected) {
    row.c_inf_status = "disconnected";
    return row;
  }
  SolveOptions solve;
  solve.max_states = a.max_states;
  try {
    row.c_inf = cop_number(g, Speed::infinite(), 1, row.gamma, solve).value;
    row.c_inf_status = "exact";
  } catch (const BudgetExceeded&) {
    row.c_inf_status = "budget";
  }
  return row;
}

json opt_rational(const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); }

std::string cell(const std::optional<Rational>& q) { return q ? to_string(*q) : "-"; }

int cmd_random_stats(const RandomStatsArgs& a, std::ostream& out) {
  if (a.p.has_value() == a.regular.has_value()) throw CLI::ValidationError("exactly one of --p and --regular is required");
  if (a.p && !(*a.p >= 0.0 && *a.p <= 1.0)) throw CLI::ValidationError("--p must lie in [0, 1]");

  SplitMix64 seeds(a.seed);
  std::vector<SampleRow> rows;
  for (int i = 0; i < a.samples; ++i) rows.push_back(sample_row(a, i, seeds));

  int iota_v_known = 0, iota_v_ok = 0, exact = 0, violations = 0, degree_violations = 0;
  for (const auto& r : rows) {
    if (r.iota_v) {
      ++iota_v_known;
      if (to_double(*r.iota_v) >= a.b) ++iota_v_ok;
    }
    if (r.c_inf) {
      ++exact;
      if (r.bounds && Rational(*r.c_inf) < r.bounds->lower_edge_sharp) ++violations;
      if (*r.c_inf > r.gamma) ++violations;
    }
    if (r.gamma_exact && r.degree_bound + 1e-9 < r.gamma) ++degree_violations;
  }
  std::optional<bool> threshold;
  if (a.p) threshold = a.n * *a.p >= 4.2 * std::log(static_cast<double>(a.n));

  if (a.json) {
    json samples = json::array();
    for (const auto& r : rows) {
      json b = nullptr;
      if (r.bounds) {
        b = {{"edge_sharp", to_string(r.bounds->lower_edge_sharp)},
             {"edge_relaxed", to_string(r.bounds->lower_edge_relaxed)},
             {"vertex_b", to_string(r.bounds->lower_vertex_b)},
             {"vertex_c", to_string(r.bounds->lower_vertex_c)}};
      }
      samples.push_back({{"index", r.index},
                         {"seed", r.seed},
                         {"attempts", r.attempts},
                         {"m", r.m},
                         {"connected", r.connected},
                         {"min_degree", r.min_degree},
                         {"max_degree", r.max_degree},
                         {"gamma", r.gamma},
                         {"gamma_exact", r.gamma_exact},
                         {"degree_domination_bound", r.degree_bound},
                         {"iota_e", opt_rational(r.iota_e)},
                         {"iota_v", opt_rational(r.iota_v)},
                         {"lower_bounds", b},
                         {"c_inf", r.c_inf ? json(*r.c_inf) : json(nullptr)},
                         {"c_inf_status", r.c_inf_status}});
    }
    json model = a.p ? json{{"type", "gnp"}, {"n", a.n}, {"p", *a.p}}
                     : json{{"type", "regular"}, {"n", a.n}, {"d", *a.regular}};
    print_json(out, {{"command", "random-stats"},
                     {"model", model},
                     {"seed", a.seed},
                     {"connected_only", a.connected},
                     {"samples", samples},
                     {"aggregate",
                      {{"samples", rows.size()},
                       {"iota_v_threshold", a.b},
                       {"iota_v_computed", iota_v_known},
                       {"iota_v_at_least_threshold", iota_v_ok},
                       {"iota_v_fraction", iota_v_known ? json(double(iota_v_ok) / iota_v_known) : json(nullptr)},
                       {"np_at_least_4_2_log_n", threshold ? json(*threshold) : json(nullptr)},
                       {"c_inf_exact", exact},
                       {"sandwich_violations", violations},
                       {"degree_bound_violations", degree_violations}}}});
    return kOk;
  }

  std::vector<std::vector<std::string>> table{
      {"#", "m", "conn", "dmin", "dmax", "gamma", "deg_bd", "iota_e", "iota_v", "low_a", "low_b", "low_c", "c_inf"}};
  for (const auto& r : rows) {
    std::ostringstream bd;
    bd << std::fixed << std::setprecision(2) << r.degree_bound;
    table.push_back({
        std::to_string(r.index),
        std::to_string(r.m),
        r.connected ? "yes" : "no",
        std::to_string(r.min_degree),
        std::to_string(r.max_degree),
        std::to_string(r.gamma) + (r.gamma_exact ? "" : "*"),
        bd.str(),
        cell(r.iota_e),
        cell(r.iota_v),
        r.bounds ? to_string(r.bounds->lower_edge_sharp) : "-",
        r.bounds ? to_string(r.bounds->lower_vertex_b) : "-",
        r.bounds ? to_string(r.bounds->lower_vertex_c) : "-",
        r.c_inf ? std::to_string(*r.c_inf) : r.c_inf_status == "budget" ? "budget" : "-",
    });
  }
  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& line : table)
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "  " : "") << std::setw(int(widths[i])) << line[i];
    out << '\n';
  }
  out << "samples: " << rows.size() << '\n';
  if (iota_v_known) {
    out << "iota_v >= " << a.b << ": " << iota_v_ok << "/" << iota_v_known;
    if (threshold) out << (*threshold ? " (np >= 4.2 log n)" : " (np < 4.2 log n)");
    out << '\n';
  }
  out << "exact c_inf: " << exact << ", sandwich violations: " << violations
      << ", degree bound violations: " << degree_violations << '\n';
  if (std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.gamma_exact; })) {
    out << "* greedy dominating set size, an upper bound on gamma\n";
  }
  return kOk;
}

// ------------------------------------------------------------ serve

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> preset_dir, static_dir;
  std::uint64_t max_states = service::ServiceOptions{}.solve.max_states;
};

int cmd_serve(const ServeArgs& a, std::ostream& out) {
  service::ServiceOptions options;
  options.solve.max_states = a.max_states;
  if (a.preset_dir) options.preset_dir = *a.preset_dir;
  service::GameService svc(options);
  std::optional<std::filesystem::path> static_dir;
  if (a.static_dir) static_dir = *a.static_dir;
  service::HttpServer server(svc, static_dir);
  const int port = server.bind(a.host, a.port);
  out << "serving on http://" << a.host << ":" << port << '\n' << std::flush;
  server.serve();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cops and robber toolkit: exact cop numbers, bounds and verification suites", "copsrobber"};
  app.require_subcommand(1);

  CopNumberArgs cn;
  auto* copnumber = app.add_subcommand("copnumber", "Exact cop number of a graph");
  copnumber->add_option("file", cn.file, "Edge-list file")->required();
  copnumber->add_option("--robber-speed", cn.robber_speed, "Robber speed: positive integer or inf")->capture_default_str();
  copnumber->add_option("--cop-speed", cn.cop_speed, "Cop speed")->check(CLI::PositiveNumber)->capture_default_str();
  copnumber->add_option("--max-cops", cn.max_cops, "Largest cop count tried")->check(CLI::PositiveNumber)->capture_default_str();
  copnumber->add_option("--max-states", cn.max_states, "Solver state budget")->capture_default_str();
  copnumber->add_flag("--json", cn.json, "JSON output");

  std::string copwin_file;
  bool copwin_json = false;
  auto* copwin1 = app.add_subcommand("copwin1", "Decide c_inf = 1 by the block characterization");
  copwin1->add_option("file", copwin_file, "Edge-list file")->required();
  copwin1->add_flag("--json", copwin_json, "JSON output");

  std::string bounds_file;
  std::uint64_t bounds_max_subsets = std::uint64_t{1} << 24;
  bool bounds_json = false;
  auto* bounds = app.add_subcommand("bounds", "Isoperimetric numbers, domination number and the bounds they give");
  bounds->add_option("file", bounds_file, "Edge-list file")->required();
  bounds->add_option("--max-subsets", bounds_max_subsets, "Subset budget of the exhaustive scans")->capture_default_str();
  bounds->add_flag("--json", bounds_json, "JSON output");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over the small-graph corpus");
  std::vector<std::string> suites = verify_suite_names();
  suites.push_back("all");
  verify->add_option("suite", va.suite, "Suite name or all")->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-n", va.options.max_n, "Largest corpus graph order")->check(CLI::Range(2, 7))->capture_default_str();
  verify->add_option("--sample7", va.options.sample7, "Extra random 7-vertex graphs (characterization)")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", va.options.seed, "Seed for sampled cases")->capture_default_str();
  verify->add_option("--threads", va.options.threads, "Worker threads, 0 for all cores")->capture_default_str();
  verify->add_option("--max-states", va.options.solve.max_states, "Solver state budget")->capture_default_str();
  verify->add_flag("--timing", va.options.timing, "Record elapsed_ms");
  verify->add_flag("--json", va.json, "JSON output");

  RandomStatsArgs ra;
  double p = 0;
  int regular = 0;
  auto* random_stats = app.add_subcommand("random-stats", "Statistics over seeded random graphs");
  random_stats->add_option("--n", ra.n, "Vertex count")->check(CLI::PositiveNumber)->capture_default_str();
  auto* p_opt = random_stats->add_option("--p", p, "Edge probability of G(n, p)");
  auto* d_opt = random_stats->add_option("--regular", regular, "Degree of a random regular graph")->check(CLI::PositiveNumber);
  p_opt->excludes(d_opt);
  random_stats->add_option("--samples", ra.samples, "Number of samples")->check(CLI::NonNegativeNumber)->capture_default_str();
  random_stats->add_option("--seed", ra.seed, "Master seed")->capture_default_str();
  random_stats->add_flag("--connected", ra.connected, "Resample until connected");
  random_stats->add_option("--max-states", ra.max_states, "Solver state budget per sample")->capture_default_str();
  random_stats->add_option("--max-subsets", ra.max_subsets, "Subset budget of the exhaustive scans")->capture_default_str();
  random_stats->add_option("--b", ra.b, "Threshold for the iota_v fraction")->capture_default_str();
  random_stats->add_flag("--json", ra.json, "JSON output");

  ServeArgs sa;
  auto* serve = app.add_subcommand("serve", "Start the HTTP play service");
  serve->add_option("--port", sa.port, "TCP port, 0 picks a free one")->capture_default_str();
  serve->add_option("--host", sa.host, "Listen address")->capture_default_str();
  serve->add_option("--preset-dir", sa.preset_dir, "Directory of extra *.g presets");
  serve->add_option("--static-dir", sa.static_dir, "Directory of UI assets served at /");
  serve->add_option("--max-states", sa.max_states, "Per-session solver state budget")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (p_opt->count()) ra.p = p;
    if (d_opt->count()) ra.regular = regular;

    if (*copnumber) return cmd_copnumber(cn, out);
    if (*copwin1) return cmd_copwin1(copwin_file, copwin_json, out);
    if (*bounds) return cmd_bounds(bounds_file, bounds_max_subsets, bounds_json, out);
    if (*verify) return cmd_verify(va, out);
    if (*random_stats) return cmd_random_stats(ra, out);
    if (*serve) return cmd_serve(sa, out);
    return kUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidEdge& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const RetryLimit& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const NotConnected& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const SingleVertex& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const EnvironmentError& e) {
    err << "environment error: " << e.what() << '\n';
    return kEnvironment;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

}  // namespace copsrobber::cli
