#include "copsrobber/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "copsrobber/bounds.hpp"
#include "copsrobber/one_cop.hpp"
#include "parallel.hpp"

namespace copsrobber {

namespace {

struct CorpusEntry {
  int n;
  std::uint64_t mask;
};

std::vector<CorpusEntry> corpus(int max_n) {
  std::vector<CorpusEntry> out;
  for (int n = 2; n <= max_n; ++n)
    for (auto mask : connected_masks(n)) out.push_back({n, mask});
  return out;
}

std::string show(const std::optional<int>& v, int k_max) {
  return v ? std::to_string(*v) : "> " + std::to_string(k_max);
}

// Runs `check` over items in parallel and concatenates failures in item order.
template <typename Item, typename Check>
void run_checks(VerifySuiteReport& report, const std::vector<Item>& items, unsigned threads,
                Check&& check) {
  auto results = detail::parallel_map<std::vector<VerifyFailure>>(
      items.size(), threads, [&](std::size_t i) { return check(items[i]); });
  report.checked += items.size();
  for (auto& fs : results)
    for (auto& f : fs) report.failures.push_back(std::move(f));
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    if (!enabled_) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

int c_inf_upper(const Graph& g) { return domination_number_exact(g).size; }

}  // namespace

// ----------------------------------------------------------- Suites

VerifySuiteReport verify_characterization(const VerifyOptions& options) {
  Stopwatch clock(options.timing);
  VerifySuiteReport report;
  report.suite = "characterization";

  for (int n = 2; n <= options.max_n; ++n) {
    const auto found = connected_masks(n).size();
    const auto expected = connected_labeled_count(n);
    if (found != expected) {
      report.failures.push_back({"", std::to_string(expected), std::to_string(found),
                                 "connected labelled graph count for n = " + std::to_string(n)});
    }
  }

  std::vector<Graph> graphs;
  for (const auto& e : corpus(options.max_n)) graphs.push_back(graph_from_mask(e.n, e.mask));
  SplitMix64 rng(options.seed);
  for (int found = 0; found < options.sample7;) {
    Graph g = gnp(7, 0.5, rng.next());
    if (!is_connected(g)) continue;
    graphs.push_back(std::move(g));
    ++found;
  }

  run_checks(report, graphs, options.threads, [&](const Graph& g) {
    std::vector<VerifyFailure> fs;
    const auto verdict = decide_one_cop(g);
    const bool one_cop = cop_number(g, Speed::infinite(), 1, 1, options.solve).value.has_value();
    if (verdict.is_copwin != one_cop) {
      fs.push_back({to_edge_list(g), one_cop ? "c_inf = 1" : "c_inf > 1",
                    verdict.is_copwin ? "decider: YES" : "decider: NO", "characterization mismatch"});
    }
    return fs;
  });
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerifySuiteReport verify_sandwich(const VerifyOptions& options) {
  Stopwatch clock(options.timing);
  VerifySuiteReport report;
  report.suite = "sandwich";
  run_checks(report, corpus(options.max_n), options.threads, [&](const CorpusEntry& e) {
    std::vector<VerifyFailure> fs;
    const Graph g = graph_from_mask(e.n, e.mask);
    const int gamma = c_inf_upper(g);
    const auto c_inf = cop_number(g, Speed::infinite(), 1, gamma, options.solve).value;
    if (!c_inf) {
      fs.push_back({to_edge_list(g), "c_inf <= " + std::to_string(gamma), show(c_inf, gamma), "c_inf > gamma"});
      return fs;
    }
    const auto c_1 = cop_number(g, Speed::steps(1), 1, *c_inf, options.solve).value;
    if (!c_1) {
      fs.push_back({to_edge_list(g), "c_1 <= " + std::to_string(*c_inf), show(c_1, *c_inf), "c_1 > c_inf"});
    }
    return fs;
  });
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerifySuiteReport verify_bounds(const VerifyOptions& options) {
  Stopwatch clock(options.timing);
  VerifySuiteReport report;
  report.suite = "bounds";
  std::vector<Graph> graphs;
  for (const auto& e : corpus(options.max_n)) graphs.push_back(graph_from_mask(e.n, e.mask));
  graphs.push_back(petersen_graph());
  graphs.push_back(cycle_graph(8));
  {
    const int a[] = {4, 3};
    graphs.push_back(grid(a));
    const int b[] = {4, 4};
    graphs.push_back(torus(b));
  }

  run_checks(report, graphs, options.threads, [&](const Graph& g) {
    std::vector<VerifyFailure> fs;
    const auto ie = edge_isoperimetric_exact(g).value;
    const auto iv = vertex_isoperimetric_exact(g).value;
    const int gamma = c_inf_upper(g);
    const auto rep = isoperimetric_bounds(g, ie, iv, gamma);
    Rational target(gamma);
    std::string what = "gamma";
    try {
      if (auto c = cop_number(g, Speed::infinite(), 1, gamma, options.solve).value) {
        target = Rational(*c);
        what = "c_inf";
      } else {
        fs.push_back({to_edge_list(g), "c_inf <= gamma", "c_inf > gamma", "domination upper bound"});
      }
    } catch (const BudgetExceeded&) {
      // Only the weaker comparison against gamma is available.
    }
    const std::pair<const char*, Rational> lowers[] = {{"(a) sharp", rep.lower_edge_sharp},
                                                       {"(a) relaxed", rep.lower_edge_relaxed},
                                                       {"(b)", rep.lower_vertex_b},
                                                       {"(c)", rep.lower_vertex_c}};
    for (const auto& [name, value] : lowers) {
      if (value > target) {
        fs.push_back({to_edge_list(g), std::string("lower ") + name + " <= " + what + " = " + to_string(target),
                      to_string(value), "isoperimetric lower bound violated"});
      }
    }
    if (rep.lower_edge_relaxed > rep.lower_edge_sharp) {
      fs.push_back({to_edge_list(g), "relaxed <= sharp", to_string(rep.lower_edge_relaxed), "bound (a) ordering"});
    }
    const double as = alon_spencer_domination_bound(g);
    if (as + 1e-9 < gamma) {
      fs.push_back({to_edge_list(g), "gamma <= " + std::to_string(as), std::to_string(gamma),
                    "degree-based domination bound violated"});
    }
    return fs;
  });
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerifySuiteReport verify_escape(const VerifyOptions& options) {
  Stopwatch clock(options.timing);
  VerifySuiteReport report;
  report.suite = "escape";

  const Graph c8 = cycle_graph(8);
  ++report.checked;
  if (!escape_certificate(c8, 1)) {
    report.failures.push_back({to_edge_list(c8), "certificate(C_8, 1) = true", "false", "C_8 certificate"});
  }
  if (auto c = cop_number(c8, Speed::infinite(), 1, 3, options.solve).value; c != 2) {
    report.failures.push_back({to_edge_list(c8), "c_inf = 2", show(c, 3), "C_8 cop number"});
  }

  run_checks(report, corpus(options.max_n), options.threads, [&](const CorpusEntry& e) {
    std::vector<VerifyFailure> fs;
    const Graph g = graph_from_mask(e.n, e.mask);
    for (int m = 1; m <= 2; ++m) {
      if (!escape_certificate(g, m)) continue;
      if (auto c = cop_number(g, Speed::infinite(), 1, m, options.solve).value) {
        fs.push_back({to_edge_list(g), "c_inf > " + std::to_string(m), std::to_string(*c),
                      "escape certificate true at m = " + std::to_string(m)});
      }
    }
    return fs;
  });
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerifySuiteReport verify_powergraph(const VerifyOptions& options) {
  Stopwatch clock(options.timing);
  VerifySuiteReport report;
  report.suite = "powergraph";

  {
    const Graph p5 = path_graph(5);
    ++report.checked;
    const auto lhs = cop_number(p5, Speed::steps(2), 2, 5, options.solve).value;
    const auto rhs = cop_number(power_graph(p5, 2), Speed::steps(1), 1, 5, options.solve).value;
    if (lhs != 1 || rhs != 1) {
      report.failures.push_back({to_edge_list(p5), "c_{2,2} = c_{1,1}(G_2) = 1",
                                 show(lhs, 5) + " / " + show(rhs, 5), "P_5 instance"});
    }
  }

  run_checks(report, corpus(options.max_n), options.threads, [&](const CorpusEntry& e) {
    std::vector<VerifyFailure> fs;
    const Graph g = graph_from_mask(e.n, e.mask);
    for (int t : {2, 3}) {
      const auto lhs = cop_number(g, Speed::steps(t), t, g.n(), options.solve).value;
      const auto rhs = cop_number(power_graph(g, t), Speed::steps(1), 1, g.n(), options.solve).value;
      if (lhs != rhs) {
        fs.push_back({to_edge_list(g), "c_{1,1}(G_" + std::to_string(t) + ") = " + show(rhs, g.n()),
                      "c_{t,t}(G) = " + show(lhs, g.n()), "power graph equality, t = " + std::to_string(t)});
      }
    }
    return fs;
  });
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerifySuiteReport verify_products(const VerifyOptions& options) {
  Stopwatch clock(options.timing);
  VerifySuiteReport report;
  report.suite = "products";
  auto fail = [&](const Graph& g, std::string expected, std::string actual, std::string detail) {
    report.failures.push_back({to_edge_list(g), std::move(expected), std::move(actual), std::move(detail)});
  };

  // Exact isoperimetric values of small grids and tori.
  {
    const int a[] = {4, 3};
    const Graph g = grid(a);
    ++report.checked;
    if (auto v = edge_isoperimetric_exact(g).value; v != Rational(1, 2)) fail(g, "1/2", to_string(v), "iota_e(P_4 x P_3)");
    const int b[] = {4, 4};
    const Graph h = torus(b);
    ++report.checked;
    if (auto v = edge_isoperimetric_exact(h).value; v != Rational(1)) fail(h, "1", to_string(v), "iota_e(C_4 x C_4)");
  }

  // Edge-isoperimetric product inequality on small factor pairs.
  std::vector<Graph> factors = {path_graph(2), path_graph(3), path_graph(4),
                                cycle_graph(3), cycle_graph(4), cycle_graph(5)};
  // C_5 x C_5 has 25 vertices, one past the default scan limit.
  BoundsOptions product_scan;
  product_scan.max_subset_vertices = 25;
  for (const auto& f1 : factors) {
    for (const auto& f2 : factors) {
      const Graph pair[] = {f1, f2};
      const Graph g = cartesian_product(pair);
      ++report.checked;
      const auto lhs = edge_isoperimetric_exact(g, product_scan).value;
      const auto rhs = std::min(edge_isoperimetric_exact(f1).value, edge_isoperimetric_exact(f2).value) / 2;
      if (lhs < rhs) fail(g, ">= " + to_string(rhs), to_string(lhs), "product isoperimetric inequality");
    }
  }

  // Cop-number sandwiches for grids and tori.
  struct Case {
    std::vector<int> dims;
    bool is_torus;
  };
  std::vector<Case> cases;
  for (int a : {2, 3, 4})
    for (int b : {2, 3, 4}) cases.push_back({{a, b}, false});
  for (int a : {3, 4})
    for (int b : {3, 4})
      if (std::max(a, b) % 2 == 0) cases.push_back({{a, b}, true});

  auto results = detail::parallel_map<std::vector<VerifyFailure>>(cases.size(), options.threads, [&](std::size_t i) {
    const auto& c = cases[i];
    std::vector<VerifyFailure> fs;
    const Graph g = c.is_torus ? torus(c.dims) : grid(c.dims);
    const long long n = g.n();
    const long long n1 = *std::max_element(c.dims.begin(), c.dims.end());
    const long long m = static_cast<long long>(c.dims.size());
    std::ostringstream label;
    label << (c.is_torus ? "torus " : "grid ") << c.dims[0] << "x" << c.dims[1];
    const int gamma = domination_number_exact(g).size;
    const auto cinf = cop_number(g, Speed::infinite(), 1, gamma, options.solve).value;
    if (!cinf) {
      fs.push_back({to_edge_list(g), "c_inf <= gamma", "> gamma", label.str()});
      return fs;
    }
    const Rational value(*cinf);
    const Rational lower = c.is_torus ? Rational(n, 2 * n1 * m * m) : Rational(n, 4 * n1 * m * m);
    const Rational upper = c.is_torus ? Rational(2 * n, n1) : Rational(n, n1);
    if (value < lower || value > upper) {
      fs.push_back({to_edge_list(g), "[" + to_string(lower) + ", " + to_string(upper) + "]", to_string(value),
                    label.str() + " product cop-number sandwich"});
    }
    // General product bound: min iota_e(G_i) n / (4 (sum Delta_i)^2) <= c_inf <= n c_inf(G_1) / n_1.
    std::vector<Graph> fs_graphs;
    for (int d : c.dims) fs_graphs.push_back(c.is_torus ? cycle_graph(d) : path_graph(d));
    Rational min_iota(1000);
    long long delta_sum = 0;
    for (const auto& f : fs_graphs) {
      min_iota = std::min(min_iota, edge_isoperimetric_exact(f).value);
      delta_sum += f.max_degree();
    }
    const Rational general_lower = min_iota * Rational(n) / Rational(4 * delta_sum * delta_sum);
    if (general_lower > value) {
      fs.push_back({to_edge_list(g), "<= " + to_string(value), to_string(general_lower), label.str() + " general lower bound"});
    }
    for (std::size_t first = 0; first < fs_graphs.size(); ++first) {
      const auto c1 = cop_number(fs_graphs[first], Speed::infinite(), 1, 3, options.solve).value;
      if (!c1) continue;
      const Rational general_upper(n * *c1, fs_graphs[first].n());
      if (value > general_upper) {
        fs.push_back({to_edge_list(g), "<= " + to_string(general_upper), to_string(value), label.str() + " general upper bound"});
      }
    }
    return fs;
  });
  report.checked += cases.size();
  for (auto& fs : results)
    for (auto& f : fs) report.failures.push_back(std::move(f));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

namespace {

// Exhaustive 2^m oracle: does any sub-multiset sum land in the window?
bool window_feasible(const std::vector<int>& sizes, long long t, int n, PickMode mode) {
  const std::size_t m = sizes.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    long long sum = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) sum += sizes[i];
    if (in_pick_window(sum, t, n, mode)) return true;
  }
  return false;
}

std::optional<VerifyFailure> check_pick(const std::vector<int>& sizes, int n, PickMode mode) {
  long long t = 0;
  for (int s : sizes) t += s;
  auto describe = [&] {
    std::ostringstream out;
    out << "sizes=[";
    for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
    out << "] n=" << n << " mode=" << (mode == PickMode::A ? "A" : "B");
    return out.str();
  };
  if (!window_feasible(sizes, t, n, mode)) {
    return VerifyFailure{"", "feasible window", "oracle found no subset", describe()};
  }
  std::vector<int> picked;
  try {
    picked = subset_pick(sizes, n, mode);
  } catch (const Error& e) {
    return VerifyFailure{"", "subset in window", std::string("error: ") + e.what(), describe()};
  }
  long long sum = 0;
  std::vector<char> used(sizes.size(), 0);
  for (int i : picked) {
    if (i < 0 || i >= static_cast<int>(sizes.size()) || used[i]) {
      return VerifyFailure{"", "distinct valid indices", "bad index", describe()};
    }
    used[i] = 1;
    sum += sizes[i];
  }
  if (picked.empty() || !in_pick_window(sum, t, n, mode)) {
    return VerifyFailure{"", "sum in window", std::to_string(sum), describe()};
  }
  return std::nullopt;
}

bool pick_preconditions(const std::vector<int>& sizes, int n, PickMode mode) {
  long long t = 0;
  for (int s : sizes) {
    if (2 * s > n) return false;
    t += s;
  }
  if (t > n || t < 1) return false;
  return mode == PickMode::A || 4 * t >= n;
}

}  // namespace

VerifySuiteReport verify_subsetpick(const VerifyOptions& options) {
  Stopwatch clock(options.timing);
  VerifySuiteReport report;
  report.suite = "subsetpick";
  auto run_case = [&](const std::vector<int>& sizes, int n, PickMode mode) {
    ++report.checked;
    if (auto f = check_pick(sizes, n, mode)) report.failures.push_back(*f);
  };

  // Every multiset of 1..6 items with sizes in 1..6, every admissible n up to 4t.
  std::function<void(std::vector<int>&, int)> extend = [&](std::vector<int>& sizes, int smallest) {
    if (!sizes.empty()) {
      int t = 0, largest = 0;
      for (int s : sizes) t += s, largest = std::max(largest, s);
      for (int n = std::max(t, 2 * largest); n <= 4 * t; ++n)
        for (PickMode mode : {PickMode::A, PickMode::B})
          if (pick_preconditions(sizes, n, mode)) run_case(sizes, n, mode);
    }
    if (sizes.size() == 6) return;
    for (int s = smallest; s <= 6; ++s) {
      sizes.push_back(s);
      extend(sizes, s);
      sizes.pop_back();
    }
  };
  std::vector<int> scratch;
  extend(scratch, 1);

  // Random cases with 7..12 items in shuffled order.
  SplitMix64 rng(options.seed ^ 0x5EED5EEDULL);
  for (int done = 0; done < options.subset_random_cases;) {
    const int m = 7 + static_cast<int>(rng.below(6));
    const int max_size = 1 + static_cast<int>(rng.below(12));
    std::vector<int> sizes(m);
    long long t = 0;
    int largest = 0;
    for (auto& s : sizes) {
      s = 1 + static_cast<int>(rng.below(max_size));
      t += s;
      largest = std::max(largest, s);
    }
    const int lo = static_cast<int>(std::max<long long>(t, 2 * largest));
    const int n = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(4 * t - lo + 1)));
    const PickMode mode = rng.below(2) == 0 ? PickMode::A : PickMode::B;
    if (!pick_preconditions(sizes, n, mode)) continue;
    run_case(sizes, n, mode);
    ++done;
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// ----------------------------------------------------------- Dispatch

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"characterization", "sandwich", "bounds",    "escape",
                                                 "powergraph",       "products", "subsetpick"};
  return names;
}

VerifySuiteReport run_verify_suite(const std::string& name, const VerifyOptions& options) {
  static const std::map<std::string, std::function<VerifySuiteReport(const VerifyOptions&)>> suites = {
      {"characterization", verify_characterization},
      {"sandwich", verify_sandwich},
      {"bounds", verify_bounds},
      {"escape", verify_escape},
      {"powergraph", verify_powergraph},
      {"products", verify_products},
      {"subsetpick", verify_subsetpick},
  };
  auto it = suites.find(name);
  if (it == suites.end()) throw PreconditionError("unknown verify suite '" + name + "'");
  return it->second(options);
}

nlohmann::json to_json(const VerifySuiteReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"graph", f.graph}, {"expected", f.expected}, {"actual", f.actual}, {"detail", f.detail}});
  }
  return {{"suite", report.suite},
          {"checked", report.checked},
          {"failures", std::move(failures)},
          {"elapsed_ms", report.elapsed_ms}};
}

}  // namespace copsrobber
