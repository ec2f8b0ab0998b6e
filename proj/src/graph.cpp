#include "copsrobber/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace copsrobber {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) {
    if (v < 0 || v >= universe) throw PreconditionError("vertex id out of range");
    insert(v);
  }
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::optional<Vertex> VertexSet::min() const {
  auto it = begin();
  if (it == end()) return std::nullopt;
  return *it;
}

void VertexSet::iterator::advance() {
  const int n = set_->universe_;
  while (pos_ < n) {
    std::uint64_t word = set_->words_[pos_ >> 6] >> (pos_ & 63);
    if (word != 0) {
      pos_ += std::countr_zero(word);
      if (pos_ > n) pos_ = n;
      return;
    }
    pos_ = ((pos_ >> 6) + 1) << 6;
  }
  pos_ = n;
}

VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

// -------------------------------------------------------------------- Speed

Speed Speed::steps(int k) {
  if (k < 1) throw PreconditionError("speed must be a positive integer or infinite");
  return Speed(k);
}

std::string Speed::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

Speed Speed::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "\xE2\x88\x9E" || text == "oo") return infinite();
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("invalid speed '" + std::string(text) + "'");
  }
  return steps(value);
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidEdge("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    }
    if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    m_ += static_cast<int>(list.size());
  }
  m_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  int best = n();
  for (const auto& list : adjacency_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  for (const auto& list : adjacency_) out.push_back(static_cast<int>(list.size()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- Edge list

namespace {

// Parses exactly two non-negative integers separated by a single space.
std::optional<std::pair<long long, long long>> parse_pair(std::string_view line) {
  auto space = line.find(' ');
  if (space == std::string_view::npos) return std::nullopt;
  auto first = line.substr(0, space);
  auto second = line.substr(space + 1);
  long long a = 0, b = 0;
  auto r1 = std::from_chars(first.data(), first.data() + first.size(), a);
  auto r2 = std::from_chars(second.data(), second.data() + second.size(), b);
  if (first.empty() || second.empty() || r1.ec != std::errc() || r2.ec != std::errc() ||
      r1.ptr != first.data() + first.size() || r2.ptr != second.data() + second.size()) {
    return std::nullopt;
  }
  return std::pair{a, b};
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::optional<std::pair<long long, long long>> header;
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long declared = 0;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto pair = parse_pair(line);
    if (!pair) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers, got '" +
                       std::string(line) + "'");
    }
    if (!header) {
      if (pair->first > (1 << 24) || pair->second > (1LL << 32)) throw ParseError("header too large");
      header = pair;
      declared = pair->second;
      continue;
    }
    if (static_cast<long long>(edges.size()) >= declared) {
      throw ParseError("line " + std::to_string(line_no) + ": more edge lines than declared");
    }
    auto [u, v] = *pair;
    const auto n = header->first;
    if (u >= n || v >= n) {
      throw InvalidEdge("line " + std::to_string(line_no) + ": vertex id out of range");
    }
    if (u == v) throw InvalidEdge("line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!header) throw ParseError("missing 'n m' header");
  if (static_cast<long long>(edges.size()) != declared) {
    throw ParseError("declared " + std::to_string(declared) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(header->first), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EnvironmentError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_edge_list(buffer.str());
}

// --------------------------------------------------------------- Structure

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v)) out.insert(w);
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.n());
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v)) out.insert(w);
  return out;
}

std::vector<VertexSet> removal_components(const Graph& g, const VertexSet& forbidden) {
  std::vector<VertexSet> out;
  VertexSet seen = forbidden;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.n(); ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp(g.n());
    stack.push_back(start);
    seen.insert(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return removal_components(g, VertexSet(g.n())).size() == 1;
}

VertexSet reachable_within(const Graph& g, Vertex src, Speed steps, const VertexSet& forbidden) {
  if (forbidden.contains(src)) throw SourceForbidden("source vertex is forbidden");
  const int limit = steps.capped(g.n());
  VertexSet out(g.n());
  out.insert(src);
  std::vector<Vertex> frontier{src}, next;
  for (int depth = 0; depth < limit && !frontier.empty(); ++depth) {
    next.clear();
    for (Vertex v : frontier) {
      for (Vertex w : g.neighbors(v)) {
        if (!out.contains(w) && !forbidden.contains(w)) {
          out.insert(w);
          next.push_back(w);
        }
      }
    }
    std::swap(frontier, next);
  }
  return out;
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.n()), dist_(static_cast<std::size_t>(g.n()) * g.n(), -1) {
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n_; ++s) {
    int* row = &dist_[static_cast<std::size_t>(s) * n_];
    row[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int d : dist_) best = std::max(best, d);
  return best;
}

// Hopcroft-Tarjan articulation points with an explicit edge stack.
BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.n();
  if (!is_connected(g)) throw NotConnected("block decomposition requires a connected graph");
  BlockDecomposition dec;
  dec.cut_vertices = VertexSet(n);
  if (n <= 1) return dec;

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  int root_children = 0;

  auto pop_block = [&](Vertex u, Vertex v) {
    VertexSet block(n);
    while (!edge_stack.empty()) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      block.insert(e.first);
      block.insert(e.second);
      if (e == std::pair{u, v}) break;
    }
    dec.blocks.push_back(std::move(block));
  };

  disc[0] = low[0] = timer++;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      Vertex w = nbrs[f.next++];
      if (disc[w] < 0) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = timer++;
        if (f.v == 0) ++root_children;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Vertex child = f.v;
    stack.pop_back();
    if (stack.empty()) break;
    Vertex parent = stack.back().v;
    low[parent] = std::min(low[parent], low[child]);
    if (low[child] >= disc[parent]) {
      if (parent != 0) dec.cut_vertices.insert(parent);
      pop_block(parent, child);
    }
  }
  if (root_children > 1) dec.cut_vertices.insert(0);

  std::sort(dec.blocks.begin(), dec.blocks.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.to_vector() < b.to_vector(); });
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b)
    for (Vertex v : dec.blocks[b])
      if (dec.cut_vertices.contains(v)) dec.tree_edges.emplace_back(b, v);
  return dec;
}

Graph power_graph(const Graph& g, int t) {
  if (t < 1) throw PreconditionError("power must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex s = 0; s < g.n(); ++s) {
    auto ball = reachable_within(g, s, Speed::steps(t), VertexSet(g.n()));
    for (Vertex v : ball)
      if (v > s) edges.emplace_back(s, v);
  }
  return Graph(g.n(), edges);
}

Graph cartesian_product(std::span<const Graph> factors) {
  if (factors.empty()) throw EmptyFactor("cartesian product of an empty list");
  long long total = 1;
  for (const auto& f : factors) {
    if (f.n() == 0) throw EmptyFactor("cartesian product factor has no vertices");
    total *= f.n();
    if (total > (1LL << 26)) throw TooLarge("cartesian product too large");
  }
  const int n = static_cast<int>(total);
  // stride[i] = product of sizes of factors after i.
  std::vector<int> stride(factors.size(), 1);
  for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
    stride[i] = stride[i + 1] * factors[i + 1].n();

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      int coord = (x / stride[i]) % factors[i].n();
      for (Vertex w : factors[i].neighbors(coord)) {
        if (w > coord) edges.emplace_back(x, x + (w - coord) * stride[i]);
      }
    }
  }
  return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> index(g.n(), -1);
  int next = 0;
  for (Vertex v : keep) index[v] = next++;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v : keep)
    for (Vertex w : g.neighbors(v))
      if (v < w && index[w] >= 0) edges.emplace_back(index[v], index[w]);
  return Graph(next, edges);
}

}  // namespace copsrobber
