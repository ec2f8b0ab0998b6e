#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "copsrobber/errors.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/service.hpp"

namespace copsrobber::service {

namespace {

void normalize(std::vector<Point>& pts) {
  if (pts.empty()) return;
  double lx = pts[0].x, hx = pts[0].x, ly = pts[0].y, hy = pts[0].y;
  for (const auto& p : pts) {
    lx = std::min(lx, p.x), hx = std::max(hx, p.x);
    ly = std::min(ly, p.y), hy = std::max(hy, p.y);
  }
  const double span = std::max({hx - lx, hy - ly, 1e-12});
  for (auto& p : pts) {
    p.x = 0.05 + 0.9 * (p.x - lx) / span;
    p.y = 0.05 + 0.9 * (p.y - ly) / span;
  }
}

Preset make(std::string name, std::string description, Graph g, std::vector<Point> layout) {
  return {std::move(name), std::move(description), std::move(g), std::move(layout)};
}

}  // namespace

std::vector<Point> circular_layout(int n) {
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * i / std::max(n, 1) - std::numbers::pi / 2;
    pts[i] = {0.5 + 0.45 * std::cos(a), 0.5 + 0.45 * std::sin(a)};
  }
  return pts;
}

std::vector<Point> grid_layout(std::span<const int> dims) {
  int rows = 1, cols = 1;
  if (dims.size() == 1) {
    cols = dims[0];
  } else {
    rows = dims[0];
    for (std::size_t i = 1; i < dims.size(); ++i) cols *= dims[i];
  }
  std::vector<Point> pts(static_cast<std::size_t>(rows) * cols);
  for (int v = 0; v < rows * cols; ++v) {
    const int r = v / cols, c = v % cols;
    pts[v] = {cols == 1 ? 0.5 : 0.05 + 0.9 * c / (cols - 1), rows == 1 ? 0.5 : 0.05 + 0.9 * r / (rows - 1)};
  }
  return pts;
}

std::vector<Point> petersen_layout() {
  std::vector<Point> pts(10);
  for (int i = 0; i < 5; ++i) {
    const double a = 2 * std::numbers::pi * i / 5 - std::numbers::pi / 2;
    pts[i] = {0.5 + 0.45 * std::cos(a), 0.5 + 0.45 * std::sin(a)};
    pts[i + 5] = {0.5 + 0.22 * std::cos(a), 0.5 + 0.22 * std::sin(a)};
  }
  return pts;
}

std::vector<Point> spring_layout(const Graph& g, int iterations) {
  const int n = g.n();
  auto pts = circular_layout(n);
  if (n <= 2) return pts;
  const double k = std::sqrt(1.0 / n);
  double temperature = 0.1;
  for (int it = 0; it < iterations; ++it) {
    std::vector<Point> disp(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        double dx = pts[u].x - pts[v].x, dy = pts[u].y - pts[v].y;
        const double d = std::max(std::hypot(dx, dy), 1e-6);
        const double f = k * k / d;
        dx /= d, dy /= d;
        disp[u].x += dx * f, disp[u].y += dy * f;
        disp[v].x -= dx * f, disp[v].y -= dy * f;
      }
    for (auto [u, v] : g.edges()) {
      double dx = pts[u].x - pts[v].x, dy = pts[u].y - pts[v].y;
      const double d = std::max(std::hypot(dx, dy), 1e-6);
      const double f = d * d / k;
      dx /= d, dy /= d;
      disp[u].x -= dx * f, disp[u].y -= dy * f;
      disp[v].x += dx * f, disp[v].y += dy * f;
    }
    for (int v = 0; v < n; ++v) {
      const double len = std::max(std::hypot(disp[v].x, disp[v].y), 1e-9);
      const double step = std::min(len, temperature);
      pts[v].x += disp[v].x / len * step;
      pts[v].y += disp[v].y / len * step;
    }
    temperature *= 0.98;
  }
  normalize(pts);
  return pts;
}

PresetCatalog::PresetCatalog() : PresetCatalog(std::nullopt) {}

PresetCatalog::PresetCatalog(const std::optional<std::filesystem::path>& dir) {
  auto add = [&](Preset p) { presets_.insert_or_assign(p.name, std::move(p)); };
  add(make("petersen", "Petersen graph (3 cops needed)", petersen_graph(), petersen_layout()));
  for (int n : {4, 6, 8}) {
    add(make("cycle-" + std::to_string(n), "Cycle on " + std::to_string(n) + " vertices", cycle_graph(n),
             circular_layout(n)));
  }
  {
    const int d[] = {7};
    add(make("path-7", "Path on 7 vertices", path_graph(7), grid_layout(d)));
  }
  for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {4, 4}}) {
    const int d[] = {a, b};
    add(make("grid-" + std::to_string(a) + "x" + std::to_string(b),
             std::to_string(a) + " by " + std::to_string(b) + " grid", grid(d), grid_layout(d)));
  }
  {
    const int d[] = {4, 4};
    add(make("torus-4x4", "4 by 4 torus", torus(d), grid_layout(d)));
  }
  {
    const Graph dw = double_wheel_graph();
    add(make("double-wheel", "Two wheels joined by a hallway (not one-cop-win)", dw, spring_layout(dw)));
  }
  {
    const Graph w = wheel_graph(6);
    auto layout = circular_layout(5);
    layout.push_back({0.5, 0.5});
    add(make("wheel-6", "Wheel with 5 rim vertices", w, std::move(layout)));
  }

  if (!dir) return;
  std::error_code ec;
  if (!std::filesystem::is_directory(*dir, ec)) {
    throw EnvironmentError("preset directory not found: " + dir->string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(*dir))
    if (entry.is_regular_file() && entry.path().extension() == ".g") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::string description, line;
    std::istringstream lines(text);
    while (std::getline(lines, line)) {
      if (!line.empty() && line[0] == '#') {
        const auto start = line.find_first_not_of("# ");
        if (start != std::string::npos) description = line.substr(start);
        break;
      }
      if (!line.empty()) break;
    }
    Graph g = from_edge_list(text);
    auto layout = spring_layout(g);
    add(make(path.stem().string(), description, std::move(g), std::move(layout)));
  }
}

const Preset* PresetCatalog::find(const std::string& name) const {
  auto it = presets_.find(name);
  return it == presets_.end() ? nullptr : &it->second;
}

std::vector<const Preset*> PresetCatalog::list() const {
  std::vector<const Preset*> out;
  for (const auto& [name, p] : presets_) out.push_back(&p);
  return out;
}

}  // namespace copsrobber::service
