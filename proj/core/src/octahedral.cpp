#include "triolab/octahedral.hpp"

#include <algorithm>
#include <mutex>

#include "triolab/parallel.hpp"
#include "triolab/setops.hpp"

namespace triolab {

const char* oct_type_name(OctType t) {
  switch (t) {
    case OctType::Minus1: return "-1";
    case OctType::Zero: return "0";
    case OctType::One: return "1";
    case OctType::TwoA: return "2A";
    case OctType::TwoB: return "2B";
    case OctType::Unclassified: return "unclassified";
  }
  return "?";
}

namespace {

bool triangle_ok(const FiniteGroup& h, const OctConfig& c, const std::array<int, 3>& t) {
  const Mask p = h.product(h.product(c.labels[t[0]], c.labels[t[1]]), c.labels[t[2]]);
  return !has(p, 0);
}

// triangles through each edge
const std::array<std::array<int, 2>, 12>& edge_triangles() {
  static const auto table = [] {
    std::array<std::array<int, 2>, 12> out{};
    std::array<int, 12> fill{};
    for (int t = 0; t < 8; ++t)
      for (int e : kTriangles[t]) out[e][fill[e]++] = t;
    return out;
  }();
  return table;
}

bool edge_ok(const FiniteGroup& h, const OctConfig& c, int e) {
  for (int t : edge_triangles()[e])
    if (!triangle_ok(h, c, kTriangles[t])) return false;
  return true;
}

std::array<int, 3> rotate_to(const std::array<int, 3>& t, int e) {
  for (int i = 0; i < 3; ++i)
    if (t[i] == e) return {t[i], t[(i + 1) % 3], t[(i + 2) % 3]};
  return t;
}

std::vector<Mask> proper_subgroups(const FiniteGroup& h) {
  std::vector<Mask> out;
  for (const auto& s : subgroups(h))
    if (s.mask != h.full()) out.push_back(s.mask);
  return out;
}

bool try_2a(const FiniteGroup& h, const OctConfig& c, const std::array<int, 3>& t1,
            const std::array<int, 3>& t2, OctClassification& out) {
  const Mask a = c.labels[t1[0]];
  const Trio first{a, c.labels[t1[1]], c.labels[t1[2]]};
  const int x = __builtin_ctzll(a);
  const auto subs = proper_subgroups(h);
  for (Mask k1 : subs) {
    if (a & ~h.left(x, k1)) continue;
    const auto inner = find_impure_beat(h, first, k1);
    if (!inner) continue;
    for (Mask k2 : subs) {
      if ((k1 & ~k2) != 0) continue;
      const Trio second{h.left(x, k2), c.labels[t2[1]], c.labels[t2[2]]};
      const auto outer = find_pure_beat(h, second, k2);
      if (!outer) continue;
      out.type = OctType::TwoA;
      out.tri1 = t1;
      out.tri2 = t2;
      out.k1 = k1;
      out.k2 = k2;
      out.x = x;
      out.inner = *inner;
      out.pure2 = *outer;
      out.continuation = first;
      return true;
    }
  }
  return false;
}

bool try_2b(const FiniteGroup& h, const OctConfig& c, const std::array<int, 3>& t1,
            const std::array<int, 3>& t2, OctClassification& out) {
  const Mask a = c.labels[t1[0]];
  const int x = __builtin_ctzll(a);
  const Mask core = h.left(h.inv(x), a);
  const auto subs = proper_subgroups(h);
  for (Mask k1 : subs) {
    if ((core & ~k1) != 0) continue;
    const auto p1 = find_pure_beat(h, {h.left(x, k1), c.labels[t1[1]], c.labels[t1[2]]}, k1);
    if (!p1) continue;
    for (Mask k2 : subs) {
      if ((k1 & k2) != core) continue;
      const auto p2 = find_pure_beat(h, {h.left(x, k2), c.labels[t2[1]], c.labels[t2[2]]}, k2);
      if (!p2) continue;
      out.type = OctType::TwoB;
      out.tri1 = t1;
      out.tri2 = t2;
      out.k1 = k1;
      out.k2 = k2;
      out.x = x;
      out.pure1 = *p1;
      out.pure2 = *p2;
      return true;
    }
  }
  return false;
}

}  // namespace

bool validate_config(const FiniteGroup& h, const OctConfig& c) {
  for (const auto& t : kTriangles)
    if (!triangle_ok(h, c, t)) return false;
  return true;
}

int config_deficiency(const FiniteGroup& h, const OctConfig& c) {
  int s = 0;
  for (Mask m : c.labels) s += popcount(m);
  return s - 6 * h.order();
}

OctConfig maximalize_config(const FiniteGroup& h, OctConfig c) {
  if (!validate_config(h, c)) throw GroupError("maximalize needs a valid configuration");
  // validity only gets harder as labels grow, so one pass is enough
  for (int e = 0; e < 12; ++e)
    for (int x = 0; x < h.order(); ++x) {
      if (has(c.labels[e], x)) continue;
      c.labels[e] |= bit(x);
      if (!edge_ok(h, c, e)) c.labels[e] &= ~bit(x);
    }
  return c;
}

bool is_maximal_config(const FiniteGroup& h, const OctConfig& c) {
  for (int e = 0; e < 12; ++e)
    for (int x = 0; x < h.order(); ++x) {
      if (has(c.labels[e], x)) continue;
      OctConfig d = c;
      d.labels[e] |= bit(x);
      if (edge_ok(h, d, e)) return false;
    }
  return true;
}

std::array<EdgeState, 12> edge_states(const FiniteGroup& h, const OctConfig& c) {
  std::array<EdgeState, 12> s{};
  for (int e = 0; e < 12; ++e)
    s[e] = c.labels[e] == 0 ? EdgeState::Empty
           : c.labels[e] == h.full() ? EdgeState::Full
                                     : EdgeState::Grey;
  return s;
}

OctClassification classify_config(const FiniteGroup& h, const OctConfig& c) {
  OctClassification out;
  out.states = edge_states(h, c);
  int grey = 0;
  for (int e = 0; e < 12; ++e)
    if (out.states[e] == EdgeState::Grey) grey |= 1 << e;
  std::vector<int> grey_tris;
  for (int t = 0; t < 8; ++t) {
    int m = 0;
    for (int e : kTriangles[t]) m |= 1 << e;
    if ((grey & m) == m) grey_tris.push_back(t);
  }
  if (!grey) {
    std::array<int, 3> full{};
    for (int e = 0; e < 12; ++e)
      if (out.states[e] == EdgeState::Full) ++full[e / 4];
    std::sort(full.begin(), full.end());
    out.type = full == std::array<int, 3>{1, 3, 3} ? OctType::Zero : OctType::Minus1;
    return out;
  }
  const int ngrey = __builtin_popcount(grey);
  if (ngrey == 3 && grey_tris.size() == 1) {
    out.type = OctType::One;
    out.tri1 = kTriangles[grey_tris[0]];
    out.continuation = {c.labels[out.tri1[0]], c.labels[out.tri1[1]], c.labels[out.tri1[2]]};
    return out;
  }
  if (ngrey == 5 && grey_tris.size() == 2) {
    const auto& ta = kTriangles[grey_tris[0]];
    const auto& tb = kTriangles[grey_tris[1]];
    int shared = -1;
    for (int e : ta)
      if (std::find(tb.begin(), tb.end(), e) != tb.end()) shared = e;
    const auto t1 = rotate_to(ta, shared), t2 = rotate_to(tb, shared);
    if (try_2a(h, c, t1, t2, out) || try_2a(h, c, t2, t1, out) || try_2b(h, c, t1, t2, out))
      return out;
    out.reason = "type 2 pattern without a 2A/2B witness";
    return out;
  }
  out.reason = "grey edges match no known pattern";
  return out;
}

bool verify_oct_classification(const FiniteGroup& h, const OctConfig& c, const OctClassification& k,
                               std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (!validate_config(h, c)) return fail("configuration is invalid");
  const auto st = edge_states(h, c);
  auto is_grey = [&](int e) { return st[e] == EdgeState::Grey; };
  int ngrey = 0;
  for (int e = 0; e < 12; ++e) ngrey += is_grey(e);
  switch (k.type) {
    case OctType::Unclassified: return fail("unclassified");
    case OctType::Minus1:
    case OctType::Zero: {
      if (ngrey) return fail("grey edge present");
      std::array<int, 3> full{};
      for (int e = 0; e < 12; ++e) full[e / 4] += st[e] == EdgeState::Full;
      std::sort(full.begin(), full.end());
      const bool zero = full == std::array<int, 3>{1, 3, 3};
      if (zero != (k.type == OctType::Zero)) return fail("square pattern mismatch");
      return true;
    }
    case OctType::One: {
      if (ngrey != 3) return fail("type 1 needs exactly three grey edges");
      for (int e : k.tri1)
        if (!is_grey(e)) return fail("continuation edge is not grey");
      if (std::find(kTriangles.begin(), kTriangles.end(), k.tri1) == kTriangles.end())
        return fail("continuation edges are not a directed triangle");
      const Trio t{c.labels[k.tri1[0]], c.labels[k.tri1[1]], c.labels[k.tri1[2]]};
      if (t != k.continuation) return fail("continuation labels differ");
      if (is_trivial(t) || !is_trio(h, t)) return fail("continuation is not a nontrivial trio");
      if (trio_deficiency(h, t) != config_deficiency(h, c)) return fail("continuation deficiency differs");
      return true;
    }
    case OctType::TwoA:
    case OctType::TwoB: {
      if (ngrey != 5) return fail("type 2 needs five grey edges");
      if (k.tri1[0] != k.tri2[0]) return fail("triangles do not share their first edge");
      for (int e : k.tri1)
        if (!is_grey(e)) return fail("edge of first triangle not grey");
      for (int e : k.tri2)
        if (!is_grey(e)) return fail("edge of second triangle not grey");
      const Mask a = c.labels[k.tri1[0]];
      if (!has(a, k.x)) return fail("x not in A'");
      if (k.k1 == h.full() || k.k2 == h.full() || !is_subgroup(h, k.k1) || !is_subgroup(h, k.k2))
        return fail("K', K'' must be proper subgroups");
      const Trio s1{a, c.labels[k.tri1[1]], c.labels[k.tri1[2]]};
      if (k.type == OctType::TwoA) {
        if ((k.k1 & ~k.k2) != 0) return fail("K' not inside K''");
        if (a & ~h.left(k.x, k.k1)) return fail("A' not inside xK'");
        if (k.inner.h != k.k1 || !impure_beat_clauses(h, apply_transform(h, s1, k.inner.transform), k.k1))
          return fail("(A',B',C') is not an impure beat relative to K'");
        const Trio s2{h.left(k.x, k.k2), c.labels[k.tri2[1]], c.labels[k.tri2[2]]};
        if (k.pure2.h != k.k2 || !pure_beat_clauses(h, apply_transform(h, s2, k.pure2.transform), k.k2))
          return fail("(xK'',B'',C'') is not a pure beat relative to K''");
        if (k.continuation != s1) return fail("2A continuation differs");
        return true;
      }
      if (a != h.left(k.x, k.k1 & k.k2)) return fail("A' is not xK' n xK''");
      const Trio p1{h.left(k.x, k.k1), c.labels[k.tri1[1]], c.labels[k.tri1[2]]};
      const Trio p2{h.left(k.x, k.k2), c.labels[k.tri2[1]], c.labels[k.tri2[2]]};
      if (k.pure1.h != k.k1 || !pure_beat_clauses(h, apply_transform(h, p1, k.pure1.transform), k.k1))
        return fail("(xK',B',C') is not a pure beat relative to K'");
      if (k.pure2.h != k.k2 || !pure_beat_clauses(h, apply_transform(h, p2, k.pure2.transform), k.k2))
        return fail("(xK'',B'',C'') is not a pure beat relative to K''");
      return true;
    }
  }
  return fail("unknown type");
}

Chorus to_cayley_oct_chorus(const FiniteGroup& h, const OctConfig& c) {
  std::vector<std::vector<Mask>> m(6, std::vector<Mask>(6, 0));
  for (int e = 0; e < 12; ++e) {
    m[kEdgeFrom[e]][kEdgeTo[e]] = c.labels[e];
    m[kEdgeTo[e]][kEdgeFrom[e]] = h.inverse(c.labels[e]);
  }
  Chorus out = cayley_chorus(h, m);
  out.partition = {{0, 1}, {2, 3}, {4, 5}};
  return out;
}

long oct_chorus_deficiency(const Chorus& c) {
  for (const auto& t : kTriangles)
    if (find_collision(c, kEdgeFrom[t[0]], kEdgeFrom[t[1]], kEdgeFrom[t[2]]))
      throw GroupError("octahedral chorus has a collision");
  long s = 0;
  for (int e = 0; e < 12; ++e) s += c.incidences(kEdgeFrom[e], kEdgeTo[e]) / c.sizes[kEdgeFrom[e]] *
                                    point_weight(c, kEdgeTo[e]);
  return s - 6 * c.group_order;
}

bool oct_chorus_maximal_by_probes(const Chorus& c) {
  for (int e = 0; e < 12; ++e) {
    const int i = kEdgeFrom[e], j = kEdgeTo[e];
    std::vector<Mask> done(c.sizes[i], 0);
    for (int x = 0; x < c.sizes[i]; ++x)
      for (int y = 0; y < c.sizes[j]; ++y) {
        if (c.incident(i, x, j, y) || has(done[x], y)) continue;
        Chorus probe = c;
        std::vector<std::pair<int, int>> stack{{x, y}};
        done[x] |= bit(y);
        while (!stack.empty()) {
          auto [u, v] = stack.back();
          stack.pop_back();
          add_incidence(probe, i, u, j, v);
          for (const auto& g : c.gens)
            if (!has(done[g[i][u]], g[j][v])) {
              done[g[i][u]] |= bit(g[j][v]);
              stack.emplace_back(g[i][u], g[j][v]);
            }
        }
        bool clean = true;
        for (int t : edge_triangles()[e]) {
          const auto& tr = kTriangles[t];
          if (find_collision(probe, kEdgeFrom[tr[0]], kEdgeFrom[tr[1]], kEdgeFrom[tr[2]])) clean = false;
        }
        if (clean) return false;
      }
  }
  return true;
}

std::vector<OctConfig> enumerate_maximal_critical(const FiniteGroup& h, int workers) {
  if (h.order() > 3) throw GroupError("exhaustive configuration search is limited to |H| <= 3");
  const int n = h.order();
  const int labels = 1 << n;
  // triangles that become fully assigned at each edge
  std::array<std::vector<int>, 12> closing;
  for (int t = 0; t < 8; ++t) {
    const auto& tr = kTriangles[t];
    closing[*std::max_element(tr.begin(), tr.end())].push_back(t);
  }
  std::vector<std::vector<OctConfig>> parts(labels);
  parallel_for(labels, workers, [&](int first) {
    OctConfig c;
    c.labels[0] = static_cast<Mask>(first);
    std::vector<OctConfig>& out = parts[first];
    auto rec = [&](auto&& self, int e, int sum) -> void {
      if (sum + (12 - e) * n <= 6 * n) return;  // cannot become critical
      if (e == 12) {
        if (is_maximal_config(h, c)) out.push_back(c);
        return;
      }
      for (int m = labels - 1; m >= 0; --m) {
        c.labels[e] = static_cast<Mask>(m);
        bool ok = true;
        for (int t : closing[e])
          if (!triangle_ok(h, c, kTriangles[t])) {
            ok = false;
            break;
          }
        if (ok) self(self, e + 1, sum + popcount(static_cast<Mask>(m)));
      }
      c.labels[e] = 0;
    };
    bool ok0 = true;
    for (int t : closing[0]) ok0 = ok0 && triangle_ok(h, c, kTriangles[t]);
    if (ok0) rec(rec, 1, popcount(c.labels[0]));
  });
  std::vector<OctConfig> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<OctSymmetry> oct_symmetries() {
  std::vector<OctSymmetry> out;
  std::array<int, 3> pairs{0, 1, 2};
  do {
    for (int flips = 0; flips < 8; ++flips) {
      OctSymmetry s;
      for (int p = 0; p < 3; ++p)
        for (int b = 0; b < 2; ++b) s.vertex[2 * p + b] = 2 * pairs[p] + (b ^ ((flips >> p) & 1));
      for (int e = 0; e < 12; ++e) {
        const int f = s.vertex[kEdgeFrom[e]], t = s.vertex[kEdgeTo[e]];
        for (int d = 0; d < 12; ++d) {
          if (kEdgeFrom[d] == f && kEdgeTo[d] == t) s.edge[e] = d, s.invert[e] = false;
          if (kEdgeFrom[d] == t && kEdgeTo[d] == f) s.edge[e] = d, s.invert[e] = true;
        }
      }
      out.push_back(s);
    }
  } while (std::next_permutation(pairs.begin(), pairs.end()));
  return out;
}

OctConfig apply_symmetry(const FiniteGroup& h, const OctConfig& c, const OctSymmetry& s) {
  OctConfig out;
  for (int e = 0; e < 12; ++e) out.labels[s.edge[e]] = s.invert[e] ? h.inverse(c.labels[e]) : c.labels[e];
  return out;
}

}  // namespace triolab
