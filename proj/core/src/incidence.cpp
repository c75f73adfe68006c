#include "triolab/incidence.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace triolab {

namespace {

Mask map_mask(const std::vector<int>& perm, Mask m) {
  Mask out = 0;
  for (; m; m &= m - 1) out |= bit(perm[__builtin_ctzll(m)]);
  return out;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

Mask Chorus::neighbourhood(int i, Mask a, int j) const {
  Mask out = 0;
  for (; a; a &= a - 1) out |= nbr[i][j][__builtin_ctzll(a)];
  return out;
}

long Chorus::incidences(int i, int j) const {
  long k = 0;
  for (Mask m : nbr[i][j]) k += popcount(m);
  return k;
}

Chorus empty_chorus(const std::vector<int>& sizes, long group_order) {
  Chorus c;
  c.sizes = sizes;
  c.group_order = group_order;
  for (int s : sizes)
    if (s <= 0 || s > 64) throw GroupError("ground sets must have 1..64 points");
  const int r = static_cast<int>(sizes.size());
  c.nbr.assign(r, std::vector<std::vector<Mask>>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c.nbr[i][j].assign(sizes[i], 0);
  return c;
}

void add_incidence(Chorus& c, int i, int x, int j, int y) {
  if (i == j) throw GroupError("incidence inside one ground set");
  c.nbr[i][j][x] |= bit(y);
  c.nbr[j][i][y] |= bit(x);
}

void validate_chorus(const Chorus& c) {
  const int r = c.rank();
  for (int i = 0; i < r; ++i) {
    for (int x = 0; x < c.sizes[i]; ++x)
      if (c.nbr[i][i][x]) throw GroupError("chorus has an intra-type incidence");
    for (int j = 0; j < r; ++j)
      for (int x = 0; x < c.sizes[i]; ++x)
        for (int y : elements_of(c.nbr[i][j][x]))
          if (!c.incident(j, y, i, x)) throw GroupError("chorus incidence is not symmetric");
  }
  for (const auto& g : c.gens)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int x = 0; x < c.sizes[i]; ++x)
          if (map_mask(g[j], c.nbr[i][j][x]) != c.nbr[i][j][g[i][x]])
            throw GroupError("group action does not preserve incidence");
}

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  Mask cur = 1;
  for (int a = 0; a < g.order() && cur != g.full(); ++a)
    if (!has(cur, a)) {
      gens.push_back(a);
      cur = g.generated(cur | bit(a));
    }
  return gens;
}

Chorus cayley_chorus(const FiniteGroup& g, const std::vector<std::vector<Mask>>& m) {
  const int r = static_cast<int>(m.size());
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(m[i].size()) != r) throw GroupError("Cayley matrix is not square");
    if (m[i][i]) throw GroupError("Cayley matrix has a nonempty diagonal entry");
    for (int j = 0; j < r; ++j)
      if (m[i][j] != g.inverse(m[j][i])) throw GroupError("Cayley matrix violates M_ij = M_ji^-1");
  }
  Chorus c = empty_chorus(std::vector<int>(r, g.order()), g.order());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j)
        for (int x = 0; x < g.order(); ++x) c.nbr[i][j][x] = g.left(x, m[i][j]);
  for (int s : generating_set(g)) {
    std::vector<int> perm(g.order());
    for (int x = 0; x < g.order(); ++x) perm[x] = g.mul(s, x);
    c.gens.push_back(std::vector<std::vector<int>>(r, perm));
  }
  return c;
}

Chorus cayley_duet(const FiniteGroup& g, Mask a) {
  return cayley_chorus(g, {{0, a}, {g.inverse(a), 0}});
}

Chorus cayley_trio(const FiniteGroup& g, Mask a, Mask b, Mask c) {
  return cayley_chorus(g, {{0, a, g.inverse(c)}, {g.inverse(a), 0, b}, {c, g.inverse(b), 0}});
}

std::vector<std::vector<std::vector<int>>> cayley_element_action(const FiniteGroup& g, int rank) {
  std::vector<std::vector<std::vector<int>>> out;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> perm(g.order());
    for (int x = 0; x < g.order(); ++x) perm[x] = g.mul(s, x);
    out.push_back(std::vector<std::vector<int>>(rank, perm));
  }
  return out;
}

bool transitive_on(const Chorus& c, int t) {
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (const auto& g : c.gens) next |= map_mask(g[t], frontier);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == c.all(t);
}

bool connected_pair(const Chorus& c, int i, int j) {
  Mask si = 1, sj = 0;
  for (;;) {
    const Mask nj = sj | c.neighbourhood(i, si, j);
    const Mask ni = si | c.neighbourhood(j, nj, i);
    if (ni == si && nj == sj) break;
    si = ni;
    sj = nj;
  }
  return si == c.all(i) && sj == c.all(j);
}

CloneQuotient clone_quotient(const Chorus& c) {
  const int r = c.rank();
  CloneQuotient q;
  q.cls.resize(r);
  std::vector<int> sizes(r);
  for (int i = 0; i < r; ++i) {
    std::map<std::vector<Mask>, int> index;
    q.cls[i].resize(c.sizes[i]);
    for (int x = 0; x < c.sizes[i]; ++x) {
      std::vector<Mask> key;
      for (int j = 0; j < r; ++j) key.push_back(c.nbr[i][j][x]);
      auto it = index.emplace(key, static_cast<int>(index.size())).first;
      q.cls[i][x] = it->second;
    }
    sizes[i] = static_cast<int>(index.size());
  }
  q.quotient = empty_chorus(sizes, c.group_order);
  q.quotient.partition = c.partition;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int x = 0; x < c.sizes[i]; ++x)
        for (int y : elements_of(c.nbr[i][j][x])) q.quotient.nbr[i][j][q.cls[i][x]] |= bit(q.cls[j][y]);
  for (const auto& g : c.gens) {
    std::vector<std::vector<int>> h(r);
    for (int i = 0; i < r; ++i) {
      h[i].assign(sizes[i], 0);
      for (int x = 0; x < c.sizes[i]; ++x) h[i][q.cls[i][x]] = q.cls[i][g[i][x]];
    }
    q.quotient.gens.push_back(std::move(h));
  }
  return q;
}

long point_weight(const Chorus& c, int t) {
  if (c.group_order % c.sizes[t]) throw GroupError("ground set size does not divide |G|");
  return c.group_order / c.sizes[t];
}

DuetWeights weights(const Chorus& c, int x, int y) {
  if (!transitive_on(c, x) || !transitive_on(c, y)) throw GroupError("weights need a transitive action");
  DuetWeights w;
  w.point_x = point_weight(c, x);
  w.point_y = point_weight(c, y);
  w.d = popcount(c.nbr[x][y][0]);
  w.dbar = c.sizes[y] - w.d;
  w.w = w.d * w.point_y;
  w.wbar = w.dbar * w.point_y;
  return w;
}

std::optional<std::array<int, 3>> find_collision(const Chorus& c, int x, int y, int z) {
  for (int a = 0; a < c.sizes[x]; ++a)
    for (int b : elements_of(c.nbr[x][y][a])) {
      const Mask common = c.nbr[y][z][b] & c.nbr[x][z][a];
      if (common) return std::array<int, 3>{a, b, __builtin_ctzll(common)};
    }
  return std::nullopt;
}

long trio_deficiency_inc(const Chorus& c, int x, int y, int z) {
  if (auto col = find_collision(c, x, y, z))
    throw GroupError("trio has a collision at (" + std::to_string((*col)[0]) + "," +
                     std::to_string((*col)[1]) + "," + std::to_string((*col)[2]) + ")");
  return weights(c, x, y).w + weights(c, y, z).w + weights(c, x, z).w - c.group_order;
}

bool is_cross(const Chorus& c, int x, int y, const Cross& k) {
  return (c.neighbourhood(x, k.a, y) & k.b) == 0;
}

long cross_deficiency(const Chorus& c, int x, int y, const Cross& k) {
  const DuetWeights w = weights(c, x, y);
  return popcount(k.a) * w.point_x + popcount(k.b) * w.point_y - w.wbar;
}

Cross cross_of_point(const Chorus& c, int x, int y, int z, int point) {
  return {c.nbr[z][x][point], c.nbr[z][y][point]};
}

long set_deficiency_x(const Chorus& c, int x, int y, Mask a) {
  return cross_deficiency(c, x, y, {a, c.all(y) & ~c.neighbourhood(x, a, y)});
}

long set_deficiency_y(const Chorus& c, int x, int y, Mask b) {
  return cross_deficiency(c, x, y, {c.all(x) & ~c.neighbourhood(y, b, x), b});
}

long duet_deficiency(const Chorus& c, int x, int y) {
  int side = x, other = y;
  if (c.sizes[x] > 16) std::swap(side, other);
  if (c.sizes[side] > 16) throw GroupError("duet deficiency refused: both sides exceed 16 points");
  const DuetWeights w = weights(c, side, other);
  long best = std::numeric_limits<long>::min();
  for (Mask a = 1; a <= c.all(side); ++a) {
    const Mask na = c.neighbourhood(side, a, other);
    if (na == c.all(other)) continue;
    const long d = popcount(a) * w.point_x + (c.sizes[other] - popcount(na)) * w.point_y - w.wbar;
    best = std::max(best, d);
  }
  if (best == std::numeric_limits<long>::min()) throw GroupError("duet is not partial");
  return best;
}

std::pair<Cross, Cross> uncross(const Cross& p, const Cross& q) {
  return {{p.a & q.a, p.b | q.b}, {p.a | q.a, p.b & q.b}};
}

bool is_maximal_cross(const Chorus& c, int x, int y, const Cross& k) {
  return k.b == (c.all(y) & ~c.neighbourhood(x, k.a, y)) &&
         k.a == (c.all(x) & ~c.neighbourhood(y, k.b, x));
}

Mask block_closure(const Chorus& c, int t, Mask a) {
  if (!a) throw GroupError("closure of the empty set");
  UnionFind uf(c.sizes[t]);
  const int p0 = __builtin_ctzll(a);
  std::deque<std::pair<int, int>> queue;
  for (int q : elements_of(a))
    if (uf.unite(p0, q)) queue.emplace_back(p0, q);
  while (!queue.empty()) {
    const auto [u, v] = queue.front();
    queue.pop_front();
    for (const auto& g : c.gens) {
      const int ru = uf.find(g[t][u]), rv = uf.find(g[t][v]);
      if (ru != rv) {
        uf.unite(ru, rv);
        queue.emplace_back(ru, rv);
      }
    }
  }
  Mask out = 0;
  const int root = uf.find(p0);
  for (int q = 0; q < c.sizes[t]; ++q)
    if (uf.find(q) == root) out |= bit(q);
  return out;
}

std::vector<Mask> blocks_containing(const Chorus& c, int t, int point) {
  std::set<Mask> found{bit(point)};
  for (int q = 0; q < c.sizes[t]; ++q) found.insert(block_closure(c, t, bit(point) | bit(q)));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        const Mask u = cur[i] | cur[j];
        if (found.count(u)) continue;
        if (found.insert(block_closure(c, t, u)).second) grew = true;
      }
  }
  std::vector<Mask> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

std::vector<Mask> all_blocks(const Chorus& c, int t) {
  std::set<Mask> out;
  for (Mask b : blocks_containing(c, t, 0)) {
    std::deque<Mask> queue{b};
    out.insert(b);
    while (!queue.empty()) {
      const Mask cur = queue.front();
      queue.pop_front();
      for (const auto& g : c.gens) {
        const Mask im = map_mask(g[t], cur);
        if (out.insert(im).second) queue.push_back(im);
      }
    }
  }
  return {out.begin(), out.end()};
}

Purification purify(const Chorus& c, int x, int y, const Cross& k, Mask p) {
  if (!p || block_closure(c, x, p) != p) throw GroupError("purification needs a block of imprimitivity");
  if (set_deficiency_x(c, x, y, p) <= 0) throw GroupError("purification needs a critical block");
  if (!(p & k.a) || !(p & ~k.a)) throw GroupError("purification needs a boundary block");
  const Mask b1 = k.b & ~c.neighbourhood(x, p, y);
  Purification out;
  out.weak = {k.a | p, b1};
  out.strong = {c.all(x) & ~c.neighbourhood(y, b1, x), b1};
  return out;
}

std::optional<HamidouneBlock> hamidoune_block(const Chorus& c, int x, int y) {
  const long target = duet_deficiency(c, x, y);
  for (Mask t : blocks_containing(c, x, 0)) {
    if (c.neighbourhood(x, t, y) == c.all(y)) continue;
    const long d = set_deficiency_x(c, x, y, t);
    if (d == target && d > 0) return HamidouneBlock{0, t, d};
  }
  for (Mask t : blocks_containing(c, y, 0)) {
    if (c.neighbourhood(y, t, x) == c.all(x)) continue;
    const long d = set_deficiency_y(c, x, y, t);
    if (d == target && d > 0) return HamidouneBlock{1, t, d};
  }
  return std::nullopt;
}

Realization sabidussi_realize(const FiniteGroup& g,
                              const std::vector<std::vector<std::vector<int>>>& act,
                              const Chorus& c, const std::vector<int>& base) {
  const int r = c.rank();
  if (static_cast<int>(base.size()) != r) throw GroupError("one basepoint per ground set required");
  Realization out;
  out.matrix.assign(r, std::vector<Mask>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j)
        for (int h = 0; h < g.order(); ++h)
          if (c.incident(i, base[i], j, act[h][j][base[j]])) out.matrix[i][j] |= bit(h);
  // representative h_p with h_p b_i = p
  std::vector<std::vector<int>> rep(r);
  for (int i = 0; i < r; ++i) {
    rep[i].assign(c.sizes[i], -1);
    for (int h = g.order() - 1; h >= 0; --h) rep[i][act[h][i][base[i]]] = h;
    for (int v : rep[i])
      if (v < 0) throw GroupError("action is not transitive");
  }
  bool ok = true;
  for (int i = 0; i < r && ok; ++i)
    for (int j = 0; j < r && ok; ++j)
      if (i != j)
        for (int p = 0; p < c.sizes[i] && ok; ++p)
          for (int q = 0; q < c.sizes[j] && ok; ++q) {
            const int hk = g.mul(g.inv(rep[i][p]), rep[j][q]);
            ok = c.incident(i, p, j, q) == has(out.matrix[i][j], hk);
          }
  out.strong_isomorphism = ok;
  return out;
}

Chorus restrict_types(const Chorus& c, const std::vector<int>& types) {
  std::vector<int> sizes;
  for (int t : types) sizes.push_back(c.sizes[t]);
  Chorus out = empty_chorus(sizes, c.group_order);
  const int r = static_cast<int>(types.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.nbr[i][j] = c.nbr[types[i]][types[j]];
  for (const auto& g : c.gens) {
    std::vector<std::vector<int>> h;
    for (int t : types) h.push_back(g[t]);
    out.gens.push_back(std::move(h));
  }
  return out;
}

std::optional<std::vector<std::vector<int>>> find_isomorphism(const Chorus& a, const Chorus& b,
                                                              const std::vector<int>& tm) {
  const int r = a.rank();
  if (b.rank() != r) return std::nullopt;
  for (int i = 0; i < r; ++i)
    if (a.sizes[i] != b.sizes[tm[i]]) return std::nullopt;
  auto profile = [](const Chorus& c, int i, int x, const std::vector<int>& order) {
    std::vector<int> p;
    for (int j : order) p.push_back(popcount(c.nbr[i][j][x]));
    return p;
  };
  std::vector<int> ident(r);
  std::iota(ident.begin(), ident.end(), 0);

  // BFS order over the points of `a`
  std::vector<std::pair<int, int>> order;
  std::vector<std::vector<char>> placed(r);
  for (int i = 0; i < r; ++i) placed[i].assign(a.sizes[i], 0);
  for (int i0 = 0; i0 < r; ++i0)
    for (int x0 = 0; x0 < a.sizes[i0]; ++x0) {
      if (placed[i0][x0]) continue;
      std::deque<std::pair<int, int>> q{{i0, x0}};
      placed[i0][x0] = 1;
      while (!q.empty()) {
        auto [i, x] = q.front();
        q.pop_front();
        order.emplace_back(i, x);
        for (int j = 0; j < r; ++j)
          for (int y : elements_of(a.nbr[i][j][x]))
            if (!placed[j][y]) {
              placed[j][y] = 1;
              q.emplace_back(j, y);
            }
      }
    }

  std::vector<std::vector<int>> map(r), inv(r);
  for (int i = 0; i < r; ++i) {
    map[i].assign(a.sizes[i], -1);
    inv[i].assign(a.sizes[i], -1);
  }
  std::vector<std::vector<std::vector<int>>> prof_a(r), prof_b(r);
  for (int i = 0; i < r; ++i) {
    for (int x = 0; x < a.sizes[i]; ++x) prof_a[i].push_back(profile(a, i, x, ident));
    for (int x = 0; x < b.sizes[tm[i]]; ++x) prof_b[i].push_back(profile(b, tm[i], x, tm));
  }
  const size_t total = order.size();
  std::vector<int> choice(total, -1);
  size_t k = 0;
  while (true) {
    if (k == total) return map;
    auto [i, x] = order[k];
    const int ti = tm[i];
    int start = choice[k] + 1;
    if (choice[k] >= 0) {
      inv[i][choice[k]] = -1;
      map[i][x] = -1;
    }
    int found = -1;
    for (int y = start; y < b.sizes[ti] && found < 0; ++y) {
      if (inv[i][y] >= 0 || prof_a[i][x] != prof_b[i][y]) continue;
      bool ok = true;
      for (int j = 0; j < r && ok; ++j) {
        const int tj = tm[j];
        for (int x2 = 0; x2 < a.sizes[j] && ok; ++x2) {
          const int y2 = map[j][x2];
          if (y2 < 0) continue;
          ok = a.incident(i, x, j, x2) == b.incident(ti, y, tj, y2);
        }
      }
      if (ok) found = y;
    }
    if (found >= 0) {
      choice[k] = found;
      map[i][x] = found;
      inv[i][found] = x;
      ++k;
    } else {
      choice[k] = -1;
      if (k == 0) return std::nullopt;
      --k;
    }
  }
}

bool trio_maximal_by_probes(const Chorus& c) {
  if (c.rank() != 3) throw GroupError("maximality probes need a rank-3 chorus");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::vector<Mask> done(c.sizes[i], 0);
      for (int x = 0; x < c.sizes[i]; ++x)
        for (int y = 0; y < c.sizes[j]; ++y) {
          if (c.incident(i, x, j, y) || has(done[x], y)) continue;
          Chorus probe = c;
          std::deque<std::pair<int, int>> q{{x, y}};
          done[x] |= bit(y);
          while (!q.empty()) {
            auto [u, v] = q.front();
            q.pop_front();
            add_incidence(probe, i, u, j, v);
            for (const auto& g : c.gens) {
              const int gu = g[i][u], gv = g[j][v];
              if (!has(done[gu], gv)) {
                done[gu] |= bit(gv);
                q.emplace_back(gu, gv);
              }
            }
          }
          if (!find_collision(probe, 0, 1, 2)) return false;
        }
    }
  return true;
}

}  // namespace triolab
