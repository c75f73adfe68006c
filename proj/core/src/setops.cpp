#include "triolab/setops.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace triolab {

GroupSubset product_set(const GroupSubset& a, const GroupSubset& b) {
  if (a.group != b.group) throw GroupError("product of subsets of different groups");
  return {a.group, a.group->product(a.bits, b.bits)};
}

int deficiency_pair(const FiniteGroup& g, Mask a, Mask b) {
  if (!a || !b) throw GroupError("pair deficiency needs nonempty sets");
  return popcount(a) + popcount(b) - popcount(g.product(a, b));
}

int trio_deficiency(const FiniteGroup& g, const Trio& t) {
  return popcount(t.a) + popcount(t.b) + popcount(t.c) - g.order();
}

bool is_trio(const FiniteGroup& g, const Trio& t) {
  return (g.inverse(g.product(t.a, t.b)) & t.c) == 0;
}

bool is_trivial(const Trio& t) { return !t.a || !t.b || !t.c; }

Mask complete_third(const FiniteGroup& g, Mask a, Mask b) {
  return g.complement(g.inverse(g.product(a, b)));
}

bool is_maximal(const FiniteGroup& g, const Trio& t) {
  return t.c == complete_third(g, t.a, t.b) && t.a == complete_third(g, t.b, t.c) &&
         t.b == complete_third(g, t.c, t.a);
}

SubsetTrio trio_from_pair(const FiniteGroup& g, Mask a, Mask b) {
  if (!a || !b) throw GroupError("trio_from_pair needs nonempty sets");
  SubsetTrio s;
  s.sets = Trio{a, b, complete_third(g, a, b)};
  s.deficiency = trio_deficiency(g, s.sets);
  return s;
}

Trio trio_close(const FiniteGroup& g, const Trio& t, const std::string& order) {
  if (order.size() != 3) throw GroupError("update order must name three sets");
  Trio cur = t;
  for (;;) {
    const Trio before = cur;
    for (char ch : order) {
      switch (ch) {
        case 'A': cur.a = complete_third(g, cur.b, cur.c); break;
        case 'B': cur.b = complete_third(g, cur.c, cur.a); break;
        case 'C': cur.c = complete_third(g, cur.a, cur.b); break;
        default: throw GroupError("bad update order");
      }
    }
    if (cur == before) return cur;
  }
}

Mask translate(const FiniteGroup& g, int x, Mask a, int y) {
  return g.left(x, g.right(a, g.inv(y)));
}

Trio permuted(const FiniteGroup& g, const Trio& t, int perm) {
  switch (perm) {
    case 0: return t;
    case 1: return {t.b, t.c, t.a};
    case 2: return {t.c, t.a, t.b};
    case 3: return {g.inverse(t.c), g.inverse(t.b), g.inverse(t.a)};
    case 4: return {g.inverse(t.b), g.inverse(t.a), g.inverse(t.c)};
    case 5: return {g.inverse(t.a), g.inverse(t.c), g.inverse(t.b)};
  }
  throw GroupError("bad permutation index");
}

Trio apply_transform(const FiniteGroup& g, const Trio& t, const Transform& tr) {
  const Trio p = permuted(g, t, tr.perm);
  return {translate(g, tr.x, p.a, tr.y), translate(g, tr.y, p.b, tr.z),
          translate(g, tr.z, p.c, tr.x)};
}

Canonical similarity_canonical(const FiniteGroup& g, const Trio& t) {
  const int n = g.order();
  Mask best_a = std::numeric_limits<Mask>::max();
  std::vector<Transform> ties;
  std::array<Trio, 6> perms;
  for (int p = 0; p < 6; ++p) {
    perms[p] = permuted(g, t, p);
    for (int y = 0; y < n; ++y) {
      const Mask ay = g.right(perms[p].a, g.inv(y));
      for (int x = 0; x < n; ++x) {
        const Mask a = g.left(x, ay);
        if (a < best_a) {
          best_a = a;
          ties.clear();
        }
        if (a == best_a) ties.push_back({p, x, y, 0});
      }
    }
  }
  Canonical best{{best_a, std::numeric_limits<Mask>::max(), std::numeric_limits<Mask>::max()}, {}};
  for (const auto& tr : ties) {
    const Trio& p = perms[tr.perm];
    for (int z = 0; z < n; ++z) {
      const Mask b = translate(g, tr.y, p.b, z);
      if (b > best.trio.b) continue;
      const Mask c = translate(g, z, p.c, tr.x);
      if (b < best.trio.b || c < best.trio.c) {
        best.trio.b = b;
        best.trio.c = c;
        best.transform = {tr.perm, tr.x, tr.y, z};
      }
    }
  }
  return best;
}

std::set<Trio> similarity_orbit_bfs(const FiniteGroup& g, const Trio& t) {
  std::set<Trio> seen{t};
  std::deque<Trio> queue{t};
  while (!queue.empty()) {
    const Trio cur = queue.front();
    queue.pop_front();
    std::vector<Trio> next;
    for (int p = 1; p < 6; ++p) next.push_back(permuted(g, cur, p));
    for (int x = 0; x < g.order(); ++x) {
      const int xi = g.inv(x);
      next.push_back({g.right(cur.a, x), g.left(xi, cur.b), cur.c});
      next.push_back({cur.a, g.right(cur.b, x), g.left(xi, cur.c)});
      next.push_back({g.left(xi, cur.a), cur.b, g.right(cur.c, x)});
    }
    for (const Trio& nx : next)
      if (seen.insert(nx).second) queue.push_back(nx);
  }
  return seen;
}

Mask stab_left(const FiniteGroup& g, Mask a) {
  Mask s = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.left(x, a) == a) s |= bit(x);
  return s;
}

Mask stab_right(const FiniteGroup& g, Mask a) {
  Mask s = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.right(a, x) == a) s |= bit(x);
  return s;
}

std::pair<Subgroup, Subgroup> stabilizers(const FiniteGroup& g, Mask a) {
  if (!a) throw GroupError("stabilizers of the empty set");
  return {make_subgroup(g, stab_left(g, a)), make_subgroup(g, stab_right(g, a))};
}

int rep_count(const FiniteGroup& g, Mask a, Mask b, int z) {
  int k = 0;
  for (Mask m = a; m; m &= m - 1)
    if (has(b, g.mul(g.inv(__builtin_ctzll(m)), z))) ++k;
  return k;
}

int rep_min(const FiniteGroup& g, Mask a, Mask b) {
  if (!a || !b) throw GroupError("rep_min needs nonempty sets");
  int best = std::numeric_limits<int>::max();
  for (Mask m = g.product(a, b); m; m &= m - 1)
    best = std::min(best, rep_count(g, a, b, __builtin_ctzll(m)));
  return best;
}

CosetEnvelope coset_envelope(const FiniteGroup& g, Mask a) {
  if (!a) throw GroupError("coset envelope of the empty set");
  const int x = __builtin_ctzll(a);
  const Mask h = g.generated(g.left(g.inv(x), a));
  return {Subgroup{h, elements_of(h)}, x};
}

bool conj_stable(const FiniteGroup& g, Mask a, Mask h) {
  std::vector<Mask> conjugates;
  for (int x = 0; x < g.order(); ++x) {
    const Mask k = g.conj(h, x);
    if (std::find(conjugates.begin(), conjugates.end(), k) == conjugates.end())
      conjugates.push_back(k);
  }
  for (Mask m = a; m; m &= m - 1) {
    const int y = __builtin_ctzll(m);
    bool ok = false;
    for (Mask k : conjugates)
      if ((g.left(y, k) & ~a) == 0) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

}  // namespace triolab
