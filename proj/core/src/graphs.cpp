#include "triolab/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "triolab/parallel.hpp"

namespace triolab {

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  return it != edges.end() && *it == std::make_pair(u, v) ? static_cast<int>(it - edges.begin()) : -1;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name) {
  if (n <= 0 || n > 64) throw GroupError("graphs are limited to 1..64 vertices");
  Graph g;
  g.name = std::move(name);
  g.n = n;
  g.adj.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u == v) throw GroupError("loops are not allowed");
    if (u < 0 || v < 0 || u >= n || v >= n) throw GroupError("edge endpoint out of range");
    if (has(g.adj[u], v)) throw GroupError("parallel edges are not allowed");
    g.adj[u] |= bit(v);
    g.adj[v] |= bit(u);
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

Graph complete(int n, const std::string& name) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e, name);
}

}  // namespace

Graph cycle_graph(int n) {
  if (n < 3) throw GroupError("cycles need at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e, "C" + std::to_string(n));
}

Graph line_graph(const Graph& g) {
  const int m = static_cast<int>(g.edges.size());
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = g.edges[i];
      auto [c, d] = g.edges[j];
      if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
    }
  return make_graph(m, e, "L(" + g.name + ")");
}

std::vector<std::string> named_graph_list() {
  return {"Tetrahedron", "Cube", "Octahedron", "K33", "K4", "K5", "K6", "Prism", "Petersen", "Dodecahedron", "Icosahedron"};
}

Graph named_graph(const std::string& name) {
  if (name.size() > 3 && name.rfind("L(", 0) == 0 && name.back() == ')')
    return line_graph(named_graph(name.substr(2, name.size() - 3)));
  if (name == "Tetrahedron") return complete(4, name);
  if (name == "K4" || name == "K5" || name == "K6") return complete(name[1] - '0', name);
  if (name.size() > 1 && name[0] == 'C' && std::all_of(name.begin() + 1, name.end(), ::isdigit))
    return cycle_graph(std::stoi(name.substr(1)));
  std::vector<std::pair<int, int>> e;
  if (name == "Cube") {
    for (int v = 0; v < 8; ++v)
      for (int b = 0; b < 3; ++b)
        if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
    return make_graph(8, e, name);
  }
  if (name == "Octahedron") {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (i / 2 != j / 2) e.emplace_back(i, j);
    return make_graph(6, e, name);
  }
  if (name == "K33") {
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
    return make_graph(6, e, name);
  }
  if (name == "Prism") {
    for (int i = 0; i < 3; ++i) {
      e.emplace_back(i, (i + 1) % 3);
      e.emplace_back(3 + i, 3 + (i + 1) % 3);
      e.emplace_back(i, i + 3);
    }
    return make_graph(6, e, name);
  }
  if (name == "Petersen") {
    // vertices are the 2-subsets of {0..4} in lex order; disjoint pairs adjacent
    std::vector<int> sub;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) sub.push_back((1 << a) | (1 << b));
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j)
        if (!(sub[i] & sub[j])) e.emplace_back(i, j);
    return make_graph(10, e, name);
  }
  if (name == "Dodecahedron") {
    // generalized Petersen graph GP(10,2)
    for (int i = 0; i < 10; ++i) {
      e.emplace_back(i, (i + 1) % 10);
      e.emplace_back(i, 10 + i);
      e.emplace_back(10 + i, 10 + (i + 2) % 10);
    }
    return make_graph(20, e, name);
  }
  if (name == "Icosahedron") {
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    for (int i = 0; i < 5; ++i) {
      const int up = 1 + i, upn = 1 + (i + 1) % 5, lo = 6 + i, lon = 6 + (i + 1) % 5;
      e.emplace_back(0, up);
      e.emplace_back(up, upn);
      e.emplace_back(lo, lon);
      e.emplace_back(lo, 11);
      e.emplace_back(up, lo);
      e.emplace_back(upn, lo);
    }
    return make_graph(12, e, name);
  }
  throw GroupError("unknown graph: " + name);
}

bool is_connected(const Graph& g) {
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (int v : elements_of(frontier)) next |= g.adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return popcount(seen) == g.n;
}

std::optional<int> regular_degree(const Graph& g) {
  const int d = g.degree(0);
  for (int v = 1; v < g.n; ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

int girth(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (size_t q = 0; q < queue.size(); ++q) {
      const int u = queue[q];
      for (int v : elements_of(g.adj[u])) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          const int len = dist[u] + dist[v] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  return best;
}

namespace {

// Backtracking over vertex images in BFS order; calls `found` for each full
// isomorphism a -> b and stops when it returns false.
void search_isomorphisms(const Graph& a, const Graph& b, const std::function<bool(const Perm&)>& found) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return;
  const int n = a.n;
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (size_t q = order.size() - 1; q < order.size(); ++q)
      for (int v : elements_of(a.adj[order[q]]))
        if (!seen[v]) {
          seen[v] = 1;
          order.push_back(v);
        }
  }
  Perm map(n, -1);
  Mask used = 0;
  bool stop = false;
  auto rec = [&](auto&& self, int k) -> void {
    if (stop) return;
    if (k == n) {
      if (!found(map)) stop = true;
      return;
    }
    const int v = order[k];
    for (int c = 0; c < n && !stop; ++c) {
      if (has(used, c) || b.degree(c) != a.degree(v)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int u = order[j];
        ok = has(a.adj[v], u) == has(b.adj[c], map[u]);
      }
      if (!ok) continue;
      map[v] = c;
      used |= bit(c);
      self(self, k + 1);
      used &= ~bit(c);
      map[v] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Perm> graph_automorphisms(const Graph& g) {
  if (g.n > 24) throw GroupError("automorphism search is limited to 24 vertices");
  std::vector<Perm> out;
  search_isomorphisms(g, g, [&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Perm> graph_isomorphism(const Graph& a, const Graph& b) {
  std::optional<Perm> out;
  search_isomorphisms(a, b, [&](const Perm& p) {
    out = p;
    return false;
  });
  return out;
}

AutInfo automorphism_info(const Graph& g, const std::vector<Perm>& aut) {
  AutInfo info;
  info.order = static_cast<long>(aut.size());
  Mask vorbit = 0;
  std::vector<char> eorbit(g.edges.size(), 0);
  std::set<std::pair<int, int>> arcs;
  long vstab = 0, estab = 0;
  const auto [e0u, e0v] = g.edges.empty() ? std::make_pair(0, 0) : g.edges[0];
  for (const auto& p : aut) {
    vorbit |= bit(p[0]);
    vstab += p[0] == 0;
    if (!g.edges.empty()) {
      const int a = p[e0u], b = p[e0v];
      eorbit[g.edge_index(a, b)] = 1;
      arcs.emplace(a, b);
      estab += std::min(a, b) == e0u && std::max(a, b) == e0v;
    }
  }
  info.vertex_transitive = popcount(vorbit) == g.n;
  info.edge_transitive = std::all_of(eorbit.begin(), eorbit.end(), [](char c) { return c; });
  info.arc_transitive = info.vertex_transitive && arcs.size() == 2 * g.edges.size();
  info.vertex_stabilizer = vstab;
  info.edge_stabilizer = estab;
  return info;
}

FiniteGroup permutation_group(const std::vector<Perm>& perms, const std::string& label) {
  std::map<Perm, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // (p_i p_j)(v) = p_i(p_j(v))
      Perm c(perms[i].size());
      for (size_t v = 0; v < c.size(); ++v) c[v] = perms[i][perms[j][v]];
      auto it = index.find(c);
      if (it == index.end()) throw GroupError("permutations are not closed under composition");
      table[i][j] = it->second;
    }
  return FiniteGroup(table, {}, label);
}

std::vector<GraphObject> vertex_objects(const Graph& g) {
  std::vector<GraphObject> out;
  for (int v = 0; v < g.n; ++v) out.push_back({{v}, bit(v), 0});
  return out;
}

std::vector<GraphObject> edge_objects(const Graph& g) {
  if (g.edges.size() > 64) throw GroupError("edge sets are limited to 64 edges");
  std::vector<GraphObject> out;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    out.push_back({{u, v}, bit(u) | bit(v), bit(static_cast<int>(i))});
  }
  return out;
}

namespace {

GraphObject object_from_walk(const Graph& g, const std::vector<int>& seq, bool closed) {
  GraphObject o{seq, 0, 0};
  for (int v : seq) o.vmask |= bit(v);
  for (size_t i = 0; i + 1 < seq.size(); ++i) o.emask |= bit(g.edge_index(seq[i], seq[i + 1]));
  if (closed) o.emask |= bit(g.edge_index(seq.back(), seq.front()));
  return o;
}

}  // namespace

std::vector<GraphObject> paths(const Graph& g, int m) {
  if (m < 1) throw GroupError("paths need at least one vertex");
  if (m == 1) return vertex_objects(g);
  if (g.edges.size() > 64) throw GroupError("edge sets are limited to 64 edges");
  std::vector<GraphObject> out;
  std::vector<int> seq;
  auto rec = [&](auto&& self, Mask used) -> void {
    if (static_cast<int>(seq.size()) == m) {
      if (seq.front() < seq.back()) out.push_back(object_from_walk(g, seq, false));
      return;
    }
    for (int v : elements_of(g.adj[seq.back()] & ~used)) {
      seq.push_back(v);
      self(self, used | bit(v));
      seq.pop_back();
    }
  };
  for (int s = 0; s < g.n; ++s) {
    seq = {s};
    rec(rec, bit(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GraphObject> cycles(const Graph& g, int m) {
  if (m < 3) throw GroupError("cycles need at least three vertices");
  if (g.edges.size() > 64) throw GroupError("edge sets are limited to 64 edges");
  std::vector<GraphObject> out;
  std::vector<int> seq;
  auto rec = [&](auto&& self, Mask used) -> void {
    const int s = seq.front();
    if (static_cast<int>(seq.size()) == m) {
      if (has(g.adj[seq.back()], s) && seq[1] < seq.back()) out.push_back(object_from_walk(g, seq, true));
      return;
    }
    for (int v : elements_of(g.adj[seq.back()] & ~used)) {
      if (v < s) continue;
      seq.push_back(v);
      self(self, used | bit(v));
      seq.pop_back();
    }
  };
  for (int s = 0; s < g.n; ++s) {
    seq = {s};
    rec(rec, bit(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<GraphObject>> face_sets(const Graph& g) {
  static const std::map<std::string, int> euler{{"Cube", 2},     {"Octahedron", 2}, {"Dodecahedron", 2},
                                               {"Icosahedron", 2}, {"Petersen", 1}, {"K6", 1}};
  auto it = euler.find(g.name);
  if (it == euler.end()) return {};
  const auto cyc = cycles(g, girth(g));
  const int want = static_cast<int>(g.edges.size()) - g.n + it->second;
  if (it->second == 2) {
    if (static_cast<int>(cyc.size()) != want) throw GroupError("unexpected girth cycle count");
    return {cyc};
  }
  // projective maps: lexicographically first family covering each edge twice
  std::vector<int> cover(g.edges.size(), 0), chosen;
  std::vector<GraphObject> first;
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (static_cast<int>(chosen.size()) == want)
      return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 2; });
    if (i == cyc.size() || static_cast<int>(chosen.size() + (cyc.size() - i)) < want) return false;
    bool ok = true;
    for (int e : elements_of(cyc[i].emask)) ok = ok && cover[e] < 2;
    if (ok) {
      for (int e : elements_of(cyc[i].emask)) ++cover[e];
      chosen.push_back(static_cast<int>(i));
      if (self(self, i + 1)) return true;
      chosen.pop_back();
      for (int e : elements_of(cyc[i].emask)) --cover[e];
    }
    return self(self, i + 1);
  };
  if (!rec(rec, 0)) throw GroupError("no face set found");
  std::vector<GraphObject> a, b;
  for (size_t i = 0; i < cyc.size(); ++i)
    (std::find(chosen.begin(), chosen.end(), static_cast<int>(i)) != chosen.end() ? a : b).push_back(cyc[i]);
  return {a, b};
}

std::vector<GraphObject> objects(const Graph& g, const std::string& op) {
  if (op == "V") return vertex_objects(g);
  if (op == "E") return edge_objects(g);
  if (op == "F") {
    auto fs = face_sets(g);
    if (fs.empty()) throw GroupError("graph " + g.name + " has no catalogued faces");
    return fs[0];
  }
  if (op.size() > 1 && (op[0] == 'P' || op[0] == 'C')) {
    const int m = std::stoi(op.substr(1));
    return op[0] == 'P' ? paths(g, m) : cycles(g, m);
  }
  throw GroupError("unknown object operator: " + op);
}

int cut_size(const Graph& g, Mask a) {
  int c = 0;
  for (int v : elements_of(a)) c += popcount(g.adj[v] & ~a);
  return c;
}

const char* cut_outcome_name(CutOutcome o) {
  switch (o) {
    case CutOutcome::Large: return "large";
    case CutOutcome::Singleton: return "singleton";
    case CutOutcome::Edge: return "edge";
    case CutOutcome::PathInCycle: return "path-in-cycle";
    case CutOutcome::TwoPath: return "two-edge-path";
    case CutOutcome::TriangleLC: return "triangle-in-LC";
    case CutOutcome::ShortestCycle: return "shortest-cycle";
    case CutOutcome::None: return "none";
  }
  return "?";
}

bool in_lc(const Graph& g) {
  const auto d = regular_degree(g);
  if (!d || *d != 4) return false;
  const auto tri = cycles(g, 3);
  std::vector<std::pair<int, int>> e;
  for (size_t i = 0; i < tri.size(); ++i)
    for (size_t j = i + 1; j < tri.size(); ++j)
      if (tri[i].vmask & tri[j].vmask) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  if (tri.empty() || tri.size() > 64) return false;
  const Graph up = make_graph(static_cast<int>(tri.size()), e);
  const auto du = regular_degree(up);
  if (!du || *du != 3) return false;
  const int gu = girth(up);
  if (gu != 0 && gu < 4) return false;
  return graph_isomorphism(line_graph(up), g).has_value();
}

namespace {

struct Induced {
  int vertices = 0, edges = 0, max_degree = 0;
  bool connected = false;
};

Induced induced(const Graph& g, Mask a) {
  Induced s;
  s.vertices = popcount(a);
  for (int v : elements_of(a)) {
    const int d = popcount(g.adj[v] & a);
    s.edges += d;
    s.max_degree = std::max(s.max_degree, d);
  }
  s.edges /= 2;
  if (!a) return s;
  Mask seen = a & (~a + 1), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (int v : elements_of(frontier)) next |= g.adj[v] & a;
    frontier = next & ~seen;
    seen |= next;
  }
  s.connected = seen == a;
  return s;
}

bool is_path(const Induced& s) { return s.connected && s.edges == s.vertices - 1 && s.max_degree <= 2; }

bool is_special(const Graph& g) {
  static const std::vector<std::string> names{"Cube", "Octahedron", "Dodecahedron", "Icosahedron", "Petersen", "K6"};
  static std::mutex mu;
  static std::map<std::pair<std::string, std::vector<Mask>>, bool> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(g.name, g.adj);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool out = false;
  for (const auto& nm : names) {
    const Graph h = named_graph(nm);
    if (h.n == g.n && h.edges.size() == g.edges.size() && graph_isomorphism(h, g)) out = true;
  }
  cache[key] = out;
  return out;
}

struct GraphFacts {
  int d = 0, girth = 0;
  bool cycle = false, cubic = false, lc = false, special = false;
};

GraphFacts facts(const Graph& g) {
  GraphFacts f;
  const auto d = regular_degree(g);
  if (!d || !is_connected(g)) throw GroupError("cut classification needs a connected regular graph");
  f.d = *d;
  f.girth = girth(g);
  f.cycle = f.d == 2;
  f.cubic = f.d == 3;
  f.lc = in_lc(g);
  f.special = is_special(g);
  return f;
}

std::vector<CutOutcome> outcomes_with(const Graph& g, const GraphFacts& f, Mask a) {
  std::vector<CutOutcome> out;
  if (cut_size(g, a) >= 2 * f.d) return {CutOutcome::Large};
  const Induced s = induced(g, a);
  if (s.vertices == 1) out.push_back(CutOutcome::Singleton);
  if (s.vertices == 2 && s.edges == 1) out.push_back(CutOutcome::Edge);
  // paths on one or two vertices are already outcomes 1 and 2
  if (f.cycle && s.vertices >= 3 && is_path(s)) out.push_back(CutOutcome::PathInCycle);
  if (f.cubic && s.vertices == 3 && is_path(s)) out.push_back(CutOutcome::TwoPath);
  if (f.lc && s.vertices == 3 && s.edges == 3) out.push_back(CutOutcome::TriangleLC);
  if (f.special && s.vertices == f.girth && s.connected && s.edges == s.vertices && s.max_degree == 2)
    out.push_back(CutOutcome::ShortestCycle);
  return out;
}

void require_transitive(const Graph& g) {
  const auto info = automorphism_info(g, graph_automorphisms(g));
  if (!info.vertex_transitive || !info.edge_transitive)
    throw GroupError("cut classification needs a vertex- and edge-transitive graph");
}

}  // namespace

std::vector<CutOutcome> cut_outcomes_all(const Graph& g, Mask a) {
  if (!a || 2 * popcount(a) > g.n) throw GroupError("cut side must be nonempty with |A| <= |V|/2");
  return outcomes_with(g, facts(g), a);
}

CutOutcome cut_classify(const Graph& g, Mask a) {
  require_transitive(g);
  const auto all = cut_outcomes_all(g, a);
  return all.empty() ? CutOutcome::None : all.front();
}

std::vector<SmallCut> enumerate_small_cuts(const Graph& g, int workers) {
  if (g.n > 24) throw GroupError("small-cut census is limited to 24 vertices");
  require_transitive(g);
  const GraphFacts f = facts(g);
  const int prefix_bits = std::min(g.n, 6);
  const int low = g.n - prefix_bits;
  std::vector<std::vector<SmallCut>> parts(1 << prefix_bits);
  parallel_for(1 << prefix_bits, workers, [&](int p) {
    for (Mask rest = 0; rest < (Mask{1} << low); ++rest) {
      const Mask a = (static_cast<Mask>(p) << low) | rest;
      if (!a || 2 * popcount(a) > g.n) continue;
      const int c = cut_size(g, a);
      if (c >= 2 * f.d) continue;
      const auto o = outcomes_with(g, f, a);
      parts[p].push_back({a, c, o.size() == 1 ? o[0] : CutOutcome::None});
    }
  });
  std::vector<SmallCut> out;
  for (auto& v : parts) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), [](const SmallCut& x, const SmallCut& y) { return x.set < y.set; });
  return out;
}

Equitable is_equitable(const Graph& g) {
  Equitable out;
  const auto d = regular_degree(g);
  if (!d) return out;
  out.regular = true;
  out.degree = *d;
  out.girth = girth(g);
  if (!out.girth) return out;
  std::vector<int> count(g.edges.size(), 0);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto [u, v] = g.edges[i];
    // simple paths u -> v with girth vertices that avoid the edge uv
    auto rec = [&](auto&& self, int cur, Mask used, int len) -> int {
      if (len == out.girth) return cur == v ? 1 : 0;
      int k = 0;
      for (int w : elements_of(g.adj[cur] & ~used)) {
        if (w == v && len + 1 != out.girth) continue;
        k += self(self, w, used | bit(w), len + 1);
      }
      return k;
    };
    int k = 0;
    for (int w : elements_of(g.adj[u])) {
      if (w == v) continue;
      k += rec(rec, w, bit(u) | bit(w), 2);
    }
    count[i] = k;
  }
  for (size_t i = 1; i < count.size(); ++i)
    if (count[i] != count[0]) {
      out.witness = {0, static_cast<int>(i)};
      return out;
    }
  out.s = count.empty() ? 0 : count[0];
  return out;
}

namespace {

bool contained(const GraphObject& x, const GraphObject& y) {
  return (x.vmask & ~y.vmask) == 0 && (x.emask & ~y.emask) == 0;
}

bool related(const GraphObject& x, const GraphObject& y) { return contained(x, y) || contained(y, x); }

GraphGeometry build_geometry(const Graph& g, const std::vector<std::string>& ops, bool video) {
  GraphGeometry out;
  for (const auto& op : ops) out.points.push_back(objects(g, op));
  const int r = static_cast<int>(ops.size());
  std::vector<int> sizes;
  for (const auto& p : out.points) {
    if (p.empty() || p.size() > 64) throw GroupError("object family must have 1..64 members");
    sizes.push_back(static_cast<int>(p.size()));
  }
  // action: automorphisms preserving every family
  std::vector<std::map<std::pair<Mask, Mask>, int>> index(r);
  for (int t = 0; t < r; ++t)
    for (size_t i = 0; i < out.points[t].size(); ++i)
      index[t][{out.points[t][i].vmask, out.points[t][i].emask}] = static_cast<int>(i);
  std::vector<std::vector<std::vector<int>>> gens;
  for (const auto& p : graph_automorphisms(g)) {
    std::vector<int> emap(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) emap[e] = g.edge_index(p[g.edges[e].first], p[g.edges[e].second]);
    std::vector<std::vector<int>> act(r);
    bool ok = true;
    for (int t = 0; t < r && ok; ++t)
      for (const auto& o : out.points[t]) {
        Mask vm = 0, em = 0;
        for (int v : elements_of(o.vmask)) vm |= bit(p[v]);
        for (int e : elements_of(o.emask)) em |= bit(emap[e]);
        auto it = index[t].find({vm, em});
        if (it == index[t].end()) {
          ok = false;
          break;
        }
        act[t].push_back(it->second);
      }
    if (!ok) continue;
    out.action.push_back(p);
    gens.push_back(std::move(act));
  }
  out.chorus = empty_chorus(sizes, static_cast<long>(gens.size()));
  out.chorus.gens = std::move(gens);
  auto link = [&](int i, int j) {
    for (int x = 0; x < sizes[i]; ++x)
      for (int y = 0; y < sizes[j]; ++y)
        if (related(out.points[i][x], out.points[j][y])) add_incidence(out.chorus, i, x, j, y);
  };
  if (!video) {
    link(0, 1);
  } else {
    link(0, 1);
    link(1, 2);
    for (int x = 0; x < sizes[0]; ++x)
      for (int z = 0; z < sizes[2]; ++z)
        if (!(out.chorus.nbr[0][1][x] & out.chorus.nbr[2][1][z])) add_incidence(out.chorus, 0, x, 2, z);
  }
  return out;
}

}  // namespace

GraphGeometry graph_duet(const Graph& g, const std::string& x, const std::string& y) {
  return build_geometry(g, {x, y}, false);
}

GraphGeometry graph_video(const Graph& g, const std::string& a, const std::string& b, const std::string& c) {
  return build_geometry(g, {a, b, c}, true);
}

const char* video_kind_name(VideoKind k) {
  switch (k) {
    case VideoKind::EVE: return "EVE";
    case VideoKind::P3VE: return "P3VE";
    case VideoKind::P3EV: return "P3EV";
    case VideoKind::CubeOct_VEF: return "CubeOct_VEF";
    case VideoKind::Dodec_FVE: return "Dodec_FVE";
    case VideoKind::DodecIcos_VEF: return "DodecIcos_VEF";
    case VideoKind::Icos_FVE: return "Icos_FVE";
    case VideoKind::Petersen_C5EV: return "Petersen_C5EV";
    case VideoKind::PetersenK6_FEV: return "PetersenK6_FEV";
    case VideoKind::K6_C3EV: return "K6_C3EV";
  }
  return "?";
}

std::vector<VideoKind> all_video_kinds() {
  return {VideoKind::EVE,           VideoKind::P3VE,     VideoKind::P3EV,          VideoKind::CubeOct_VEF,
          VideoKind::Dodec_FVE,     VideoKind::DodecIcos_VEF, VideoKind::Icos_FVE, VideoKind::Petersen_C5EV,
          VideoKind::PetersenK6_FEV, VideoKind::K6_C3EV};
}

bool is_standard(VideoKind k) { return k == VideoKind::EVE || k == VideoKind::P3VE || k == VideoKind::P3EV; }

namespace {

void require_graphic(const Graph& g) {
  if (!is_connected(g) || !regular_degree(g)) throw GroupError("video needs a connected regular graph");
  const auto info = automorphism_info(g, graph_automorphisms(g));
  if (!info.vertex_transitive || !info.edge_transitive)
    throw GroupError("video needs a vertex- and edge-transitive graph");
}

}  // namespace

GraphGeometry build_video(VideoKind kind, const Graph& g) {
  const int d = regular_degree(g).value_or(-1);
  switch (kind) {
    case VideoKind::EVE:
      if (d < 3 || g.n < 5) throw GroupError("E~V~E needs degree >= 3 and at least 5 vertices");
      require_graphic(g);
      return graph_video(g, "E", "V", "E");
    case VideoKind::P3VE:
    case VideoKind::P3EV:
      if (d != 3 || g.n < 6) throw GroupError("P3 videos need degree 3 and at least 6 vertices");
      require_graphic(g);
      return kind == VideoKind::P3VE ? graph_video(g, "P3", "V", "E") : graph_video(g, "P3", "E", "V");
    default: break;
  }
  static const std::map<VideoKind, std::pair<std::string, std::array<const char*, 3>>> table{
      {VideoKind::CubeOct_VEF, {"Cube", {"V", "E", "F"}}},
      {VideoKind::Dodec_FVE, {"Dodecahedron", {"F", "V", "E"}}},
      {VideoKind::DodecIcos_VEF, {"Dodecahedron", {"V", "E", "F"}}},
      {VideoKind::Icos_FVE, {"Icosahedron", {"F", "V", "E"}}},
      {VideoKind::Petersen_C5EV, {"Petersen", {"C5", "E", "V"}}},
      {VideoKind::PetersenK6_FEV, {"Petersen", {"F", "E", "V"}}},
      {VideoKind::K6_C3EV, {"K6", {"C3", "E", "V"}}}};
  const auto& [gname, ops] = table.at(kind);
  if (g.name != gname) throw GroupError(std::string(video_kind_name(kind)) + " is defined on " + gname);
  return graph_video(g, ops[0], ops[1], ops[2]);
}

GraphGeometry build_exceptional_video(VideoKind kind) {
  static const std::map<VideoKind, std::string> graph{
      {VideoKind::CubeOct_VEF, "Cube"},        {VideoKind::Dodec_FVE, "Dodecahedron"},
      {VideoKind::DodecIcos_VEF, "Dodecahedron"}, {VideoKind::Icos_FVE, "Icosahedron"},
      {VideoKind::Petersen_C5EV, "Petersen"},  {VideoKind::PetersenK6_FEV, "Petersen"},
      {VideoKind::K6_C3EV, "K6"}};
  auto it = graph.find(kind);
  if (it == graph.end()) throw GroupError("not an exceptional video kind");
  return build_video(kind, named_graph(it->second));
}

}  // namespace triolab
