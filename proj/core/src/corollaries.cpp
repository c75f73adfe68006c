#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "triolab/classify.hpp"
#include "triolab/progressions.hpp"

namespace triolab {

namespace {

int delta_pair(const FiniteGroup& g, Mask a, Mask b) { return popcount(a) + popcount(b) - popcount(g.product(a, b)); }

bool in_proper_coset(const FiniteGroup& g, Mask a) {
  if (!a) return true;
  return coset_envelope(g, a).h.mask != g.full();
}

// s * {1, r, ..., r^(len-1)} for some s
bool is_progression(const FiniteGroup& q, Mask set, int r) {
  const int len = popcount(set);
  if (!len) return false;
  for (int s : elements_of(set))
    if (geometric_set(q, r, s, len) == set) return true;
  return false;
}

std::vector<Subgroup> sorted_subgroups(const FiniteGroup& g) {
  auto subs = subgroups(g);
  std::sort(subs.begin(), subs.end(), [](const Subgroup& x, const Subgroup& y) {
    return x.order() != y.order() ? x.order() < y.order() : x.mask < y.mask;
  });
  return subs;
}

// Outcome "cyclic quotient" shared by the structure corollaries: H normal in g,
// g/H cyclic of order >= 4, images of a and b progressions with a common ratio.
struct CyclicHit {
  Mask h = 0;
  bool a_case = false, b_case = false;
};

std::vector<CyclicHit> cyclic_quotients(const FiniteGroup& g, Mask a, Mask b, int delta) {
  std::vector<CyclicHit> out;
  for (const auto& h : normal_subgroups(g)) {
    const auto q = quotient(g, h);
    if (q.image.order() < 4 || !is_cyclic(q.image)) continue;
    const Mask qa = q.project(a), qb = q.project(b);
    bool common = false;
    for (int r = 1; r < q.image.order() && !common; ++r)
      common = is_progression(q.image, qa, r) && is_progression(q.image, qb, r);
    if (!common) continue;
    const int hs = h.order();
    const int ea = popcount(g.product(a, h.mask) & ~a), eb = popcount(g.product(h.mask, b) & ~b);
    CyclicHit hit{h.mask, false, false};
    hit.a_case = 2 * delta <= hs && std::max(ea, eb) + delta <= hs;
    hit.b_case = g.product(g.product(a, h.mask), b) == g.product(a, b) && delta + ea + eb == hs;
    out.push_back(hit);
  }
  return out;
}

struct DihedralHit {
  Mask h = 0, a_plus = 0, b_plus = 0;
  char sub = 0;  // 'a', 'b', 'c'
};

// Dihedral progressions s {1..r^k}{1,f} in q containing `set`.
std::vector<Mask> dihedral_supersets(const FiniteGroup& q, const DihedralInfo& info, int r, Mask set) {
  std::vector<Mask> out;
  for (int f : info.flips)
    for (int k = 0; k < info.n; ++k) {
      const Mask base = dihedral_set(q, r, f, k);
      for (int s = 0; s < q.order(); ++s) {
        const Mask p = q.left(s, base);
        if (!(set & ~p)) out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<DihedralHit> dihedral_quotients(const FiniteGroup& g, Mask a, Mask b, int delta) {
  const Mask ab = g.product(a, b);
  for (const auto& h : normal_subgroups(g)) {
    const auto q = quotient(g, h);
    if (q.image.order() < 8) continue;
    const auto info = dihedral_structure(q.image);
    if (!info) continue;
    const int hs = h.order();
    const int ea = popcount(g.product(a, h.mask) & ~a), eb = popcount(g.product(h.mask, b) & ~b);
    const Mask ah = g.product(a, h.mask), hb = g.product(h.mask, b);
    for (int r : info->rotation_generators) {
      const auto pa = dihedral_supersets(q.image, *info, r, q.project(a));
      const auto pb = dihedral_supersets(q.image, *info, r, q.project(b));
      for (Mask xa : pa)
        for (Mask xb : pb) {
          const Mask ap = q.preimage(xa), bp = q.preimage(xb);
          const int da = popcount(ap & ~a), db = popcount(bp & ~b);
          if (2 * delta <= hs && std::max(da, db) + delta <= 2 * hs) return DihedralHit{h.mask, ap, bp, 'a'};
          if (g.product(ah, b) == ab && popcount(bp & ~hb) == hs && popcount(ap & ~ah) == hs &&
              delta + ea + eb == hs)
            return DihedralHit{h.mask, ap, bp, 'b'};
          if (g.product(ap, bp) == ab && delta + da + db == 2 * hs) return DihedralHit{h.mask, ap, bp, 'c'};
        }
    }
  }
  return std::nullopt;
}

// Largest extension (A*, B*) with A* B* = AB.
std::pair<Mask, Mask> closure_pair(const FiniteGroup& g, Mask a, Mask b) {
  const Mask c = complete_third(g, a, b);
  const Mask as = complete_third(g, b, c);
  const Mask bs = complete_third(g, c, as);
  return {as, bs};
}

// Subgroup of g of the given order inside `in`, smallest mask first.
std::optional<Mask> subgroup_of_order(const std::vector<Subgroup>& subs, Mask in, int order) {
  for (const auto& s : subs)
    if (s.order() == order && !(s.mask & ~in)) return s.mask;
  return std::nullopt;
}

struct StableRow {
  std::vector<const char*> quotients;
  std::vector<std::array<int, 3>> shapes;  // {|G|/|A*|, |G|/|B*|, |G|/|C|} scaled by 6, sorted
};

// Rows reachable with at most 64 elements; the larger quotients cannot occur.
const std::vector<StableRow>& stable_table() {
  static const std::vector<StableRow> rows{
      {{"C2xS4", "C2xA4", "S4"}, {{12, 18, 24}}},
      {{"A5"}, {{9, 24, 60}, {8, 36, 60}, {10, 24, 36}, {12, 18, 30}}}};
  return rows;
}

bool quotient_matches(const FiniteGroup& q, const char* name) {
  static std::mutex mu;
  static std::map<std::string, std::vector<int>> cache;
  std::vector<int> census;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, order_census(parse_group(name))).first;
    census = it->second;
  }
  return static_cast<int>(census.size()) == q.order() && census == order_census(q);
}

}  // namespace

Report weak_structure(const FiniteGroup& g, Mask a, Mask b) {
  Report r;
  if (!a || !b) {
    r.rejected = "sets must be nonempty";
    return r;
  }
  const int delta = delta_pair(g, a, b);
  if (delta <= 0) {
    r.rejected = "pair is not critical";
    return r;
  }
  r.hypotheses = true;
  const Mask c = complete_third(g, a, b);
  auto note = [&](const std::string& o) {
    r.all_outcomes.push_back(o);
    if (r.outcome.empty()) r.outcome = o;
  };
  if (in_proper_coset(g, a) || in_proper_coset(g, b) || in_proper_coset(g, c)) note("1");
  for (const auto& hit : cyclic_quotients(g, a, b, delta)) {
    if (hit.a_case || hit.b_case) {
      if (r.outcome.empty()) r.h = hit.h;
      note(hit.a_case ? "2a" : "2b");
      break;
    }
  }
  if (auto d = dihedral_quotients(g, a, b, delta)) {
    if (r.outcome.empty()) {
      r.h = d->h;
      r.a_plus = d->a_plus;
      r.b_plus = d->b_plus;
    }
    note(std::string("3") + d->sub);
  }
  const auto [as, bs] = closure_pair(g, a, b);
  const int excess = delta + popcount(as & ~a) + popcount(bs & ~b);
  const std::array<std::pair<Mask, Mask>, 3> sides{{{as, bs}, {bs, c}, {c, as}}};
  const auto subs = sorted_subgroups(g);
  for (const auto& [s, t] : sides) {
    if (!s || !t || popcount(s) % 2 || popcount(s) != popcount(t)) continue;
    const Mask l1 = stab_left(g, s), m2 = stab_right(g, s) & stab_left(g, t), l3 = stab_right(g, t);
    const int n2 = popcount(s) / 2;
    if (excess >= n2) continue;
    const auto h2 = subgroup_of_order(subs, m2, n2);
    const auto h1 = subgroup_of_order(subs, l1, excess), h3 = subgroup_of_order(subs, l3, excess);
    if (h1 && h2 && h3) {
      if (r.outcome.empty()) r.h1 = *h1, r.h2 = *h2, r.h3 = *h3, r.a_plus = as, r.b_plus = bs;
      note("4a");
      break;
    }
  }
  if (std::find(r.all_outcomes.begin(), r.all_outcomes.end(), "4a") == r.all_outcomes.end())
    for (const auto& [s, t] : sides) {
      if (!s || !t) continue;
      const int rs = popcount(s), rt = popcount(t);
      const int lo = std::min(rs, rt), hi = std::max(rs, rt);
      if (lo % 2 || 2 * hi != 3 * lo) continue;
      const int n2 = lo / 2;
      if (excess >= n2) continue;
      const Mask l1 = stab_left(g, s), m2 = stab_right(g, s) & stab_left(g, t), l3 = stab_right(g, t);
      const auto h2 = subgroup_of_order(subs, m2, n2);
      if (!h2) continue;
      // one side of order exactly `excess`, the other at least that
      std::optional<Mask> h1, h3;
      if (auto e1 = subgroup_of_order(subs, l1, excess); e1 && popcount(l3) >= excess) h1 = e1, h3 = l3;
      else if (auto e3 = subgroup_of_order(subs, l3, excess); e3 && popcount(l1) >= excess) h1 = l1, h3 = e3;
      if (h1) {
        if (r.outcome.empty()) r.h1 = *h1, r.h2 = *h2, r.h3 = *h3, r.a_plus = as, r.b_plus = bs;
        note("4b");
        break;
      }
    }
  if (as && bs && c) {
    // H_i from the stabilizers of the closure; A* = H1 A H2 and B* = H2 B H3 then multiply to AB
    const Mask h1 = stab_left(g, as), h2 = stab_right(g, as) & stab_left(g, bs), h3 = stab_right(g, bs);
    const Mask a5 = g.product(g.product(h1, a), h2), b5 = g.product(g.product(h2, b), h3);
    const Mask h = normal_core(g, h1 & h2 & h3, g.full());
    const int ex5 = delta + popcount(a5 & ~a) + popcount(b5 & ~b);
    const int n = g.order();
    std::array<int, 3> shape{};
    bool integral = true;
    int i = 0;
    for (Mask x : {a5, b5, c}) {
      integral = integral && (6 * n) % popcount(x) == 0;
      shape[i++] = integral ? 6 * n / popcount(x) : 0;
    }
    std::sort(shape.begin(), shape.end());
    if (integral && g.product(a5, b5) == g.product(a, b) &&
        ex5 <= std::min({popcount(h1), popcount(h2), popcount(h3)})) {
      const auto q = quotient(g, make_subgroup(g, h));
      bool hit = false;
      for (const auto& row : stable_table()) {
        if (std::find(row.shapes.begin(), row.shapes.end(), shape) == row.shapes.end()) continue;
        for (const char* name : row.quotients) hit = hit || quotient_matches(q.image, name);
      }
      if (hit) {
        if (r.outcome.empty()) r.h = h, r.h1 = h1, r.h2 = h2, r.h3 = h3, r.a_plus = a5, r.b_plus = b5;
        note("5");
      }
    }
  }
  return r;
}

Report def_vs_disp(const FiniteGroup& g, Mask a, Mask b) {
  Report r;
  if (!a || !b) {
    r.rejected = "sets must be nonempty";
    return r;
  }
  const Mask ab = g.product(a, b);
  if (popcount(ab) >= 2 * std::min(popcount(a), popcount(b))) {
    r.rejected = "|AB| < 2 min(|A|, |B|) fails";
    return r;
  }
  r.hypotheses = true;
  const int x = elements_of(a).front(), y = elements_of(b).front();
  const Mask h = g.generated(g.left(g.inv(x), a));
  r.h = h;
  r.x = x;
  r.y = y;
  if (b & ~g.right(h, y)) {
    r.outcome = "";
    r.rejected = "B is not inside Hy";
    r.hypotheses = false;
    return r;
  }
  const int delta = delta_pair(g, a, b);
  const auto sub = embed_subgroup(g, make_subgroup(g, h));
  const FiniteGroup& hg = sub.group;
  const Mask la = sub.restrict_to(g.left(g.inv(x), a)), lb = sub.restrict_to(g.right(b, g.inv(y)));
  const Mask lab = hg.product(la, lb);
  auto note = [&](const std::string& o) {
    r.all_outcomes.push_back(o);
    if (r.outcome.empty()) r.outcome = o;
  };
  // 1: AB = xHy, or x(H \ zK)y inside AB
  bool one = lab == hg.full();
  for (const auto& k : sorted_subgroups(hg)) {
    if (one || k.mask == hg.full()) break;
    for (int z = 0; z < hg.order() && !one; ++z)
      if (!((hg.full() & ~hg.left(z, k.mask)) & ~lab)) {
        one = true;
        r.k = sub.lift(k.mask);
        r.z = sub.to_parent[z];
      }
  }
  if (one) note("1");
  for (const auto& hit : cyclic_quotients(hg, la, lb, delta))
    if (hit.a_case || hit.b_case) {
      if (r.outcome.empty()) r.k = sub.lift(hit.h);
      note(hit.a_case ? "2a" : "2b");
      break;
    }
  if (auto d = dihedral_quotients(hg, la, lb, delta)) {
    if (r.outcome.empty()) {
      r.k = sub.lift(d->h);
      r.a_plus = g.left(x, sub.lift(d->a_plus));
      r.b_plus = g.right(sub.lift(d->b_plus), y);
    }
    note(std::string("3") + d->sub);
  }
  if (a != b) {
    // 4: K1 A K2 B K3 = AB with |AK2| = 2|K2| = |K2 B| and the deficiency relation
    const auto hs = sorted_subgroups(hg);
    bool four = false;
    for (const auto& k2 : hs) {
      const Mask k2p = sub.lift(k2.mask);
      const Mask ak = g.product(a, k2p), kb = g.product(k2p, b);
      const int n2 = k2.order();
      if (popcount(ak) != 2 * n2 || popcount(kb) != 2 * n2) continue;
      const int excess = delta + popcount(ak & ~a) + popcount(kb & ~b);
      if (excess >= n2) continue;
      const Mask mid = g.product(ak, b);
      for (const auto& k1 : hs) {
        if (k1.order() != excess || four) continue;
        const Mask left = g.product(sub.lift(k1.mask), mid);
        for (const auto& k3 : hs) {
          if (k3.order() != excess) continue;
          if (g.product(left, sub.lift(k3.mask)) == ab) {
            four = true;
            r.h1 = sub.lift(k1.mask);
            r.h2 = k2p;
            r.h3 = sub.lift(k3.mask);
            break;
          }
        }
      }
      if (four) break;
    }
    if (four) note("4");
  }
  return r;
}

Report a_squared(const FiniteGroup& g, Mask a) {
  Report r;
  const Mask a2 = g.product(a, a);
  if (popcount(a) < 2 || popcount(a2) >= 2 * popcount(a)) {
    r.rejected = "needs |A| >= 2 and |A^2| < 2|A|";
    return r;
  }
  r.hypotheses = true;
  const int x = elements_of(a).front();
  const Mask h = g.generated(g.left(g.inv(x), a));
  r.h = h;
  r.x = x;
  if (g.left(x, h) != g.right(h, x)) {
    r.rejected = "xH != Hx";
    r.hypotheses = false;
    return r;
  }
  const int delta = 2 * popcount(a) - popcount(a2);
  const int x2 = g.mul(x, x);
  auto note = [&](const std::string& o, Mask k, int y) {
    r.all_outcomes.push_back(o);
    if (r.outcome.empty()) {
      r.outcome = o;
      r.k = k;
      r.y = y;
    }
  };
  std::vector<Subgroup> ks;
  for (const auto& s : sorted_subgroups(g))
    if ((s.mask & ~h) == 0 && s.mask != h) ks.push_back(s);
  for (const auto& k : ks) {
    bool found = false;
    for (int y : elements_of(h)) {
      const Mask hole = g.left(x2, g.left(y, k.mask));
      if (!((g.left(x2, h) & ~hole) & ~a2)) {
        note("1", k.mask, y);
        found = true;
        break;
      }
    }
    if (found) break;
  }
  const auto sub = embed_subgroup(g, make_subgroup(g, h));
  for (const auto& k : ks) {
    const Mask kl = sub.restrict_to(k.mask);
    if (!is_normal(sub.group, kl)) continue;
    const auto q = quotient(sub.group, make_subgroup(sub.group, kl));
    const int extra = popcount(g.product(a, k.mask) & ~a);
    if (q.image.order() >= 4 && is_cyclic(q.image) && delta + extra <= k.order()) {
      note("2", k.mask, -1);
      break;
    }
  }
  for (const auto& k : ks) {
    const Mask kl = sub.restrict_to(k.mask);
    if (!is_normal(sub.group, kl)) continue;
    const auto q = quotient(sub.group, make_subgroup(sub.group, kl));
    const int extra = popcount(g.product(a, k.mask) & ~a);
    if (q.image.order() >= 8 && dihedral_structure(q.image) && delta + extra <= 2 * k.order()) {
      note("3", k.mask, -1);
      break;
    }
  }
  return r;
}

Report struc_or_stable(const FiniteGroup& g, Mask a, Mask b) {
  Report r;
  if (!a || !b) {
    r.rejected = "sets must be nonempty";
    return r;
  }
  r.hypotheses = true;
  const Mask ab = g.product(a, b);
  const int delta = delta_pair(g, a, b);
  auto note = [&](const std::string& o) {
    r.all_outcomes.push_back(o);
    if (r.outcome.empty()) r.outcome = o;
  };
  if (in_proper_coset(g, a) || in_proper_coset(g, b) || in_proper_coset(g, g.complement(ab))) note("1");
  for (const auto& h : normal_subgroups(g)) {
    if (h.mask == g.full() || 2 * delta > h.order()) continue;
    const auto q = quotient(g, h);
    const int e = std::max(popcount(g.product(a, h.mask) & ~a), popcount(g.product(b, h.mask) & ~b));
    if (q.image.order() >= 4 && is_cyclic(q.image) && e + delta <= h.order()) {
      if (r.outcome.empty()) r.h = h.mask;
      note("2a");
      break;
    }
    if (q.image.order() >= 8 && dihedral_structure(q.image) && e + delta <= 2 * h.order()) {
      if (r.outcome.empty()) r.h = h.mask;
      note("2b");
      break;
    }
  }
  const Mask h1 = stab_left(g, ab), h3 = stab_right(g, ab);
  Mask best = 0;
  for (const auto& s : subgroups(g))
    if (g.product(g.product(a, s.mask), b) == ab && popcount(s.mask) > popcount(best)) best = s.mask;
  if (delta <= std::min({popcount(h1), popcount(best), popcount(h3)})) {
    if (r.outcome.empty()) r.h1 = h1, r.h2 = best, r.h3 = h3;
    note("3");
  }
  return r;
}

namespace {

bool cyclic_or_dihedral(const FiniteGroup& q) {
  if (is_cyclic(q)) return true;
  if (q.order() == 4) return true;  // the Klein group is dihedral of order 4
  return dihedral_structure(q).has_value();
}

}  // namespace

Report appendix_prop(const FiniteGroup& g, Mask b, Mask k) {
  Report r;
  if (!is_subgroup(g, k)) {
    r.rejected = "K is not a subgroup";
    return r;
  }
  if (g.product(g.product(k, b), k) != b || popcount(b) != 2 * popcount(k) ||
      popcount(g.product(b, b)) >= 2 * popcount(b)) {
    r.rejected = "needs KBK = B, |B| = 2|K|, |B^2| < 2|B|";
    return r;
  }
  r.hypotheses = true;
  const int x = elements_of(b).front();
  const Mask h = g.generated(g.left(g.inv(x), b));
  r.x = x;
  r.h = h;
  r.k = k;
  // largest L <= K normal in H with [K:L] <= 2 and H/L cyclic or dihedral
  const auto sub = embed_subgroup(g, make_subgroup(g, h));
  Mask best = 0;
  bool any = false;
  for (const auto& l : sorted_subgroups(g)) {
    if (l.mask & ~k) continue;
    if (popcount(k) > 2 * l.order()) continue;
    const Mask ll = sub.restrict_to(l.mask);
    if (!is_normal(sub.group, ll)) continue;
    if (!cyclic_or_dihedral(quotient(sub.group, make_subgroup(sub.group, ll)).image)) continue;
    if (!any || popcount(l.mask) > popcount(best)) best = l.mask;
    any = true;
  }
  if (!any) {
    r.outcome = "";
    return r;
  }
  r.l = best;
  r.outcome = "found";
  return r;
}

bool check_appendix(const FiniteGroup& g, Mask b, Mask k, const Report& r, std::string* why) {
  auto fail = [&](const char* m) {
    if (why) *why = m;
    return false;
  };
  if (!r.hypotheses) return fail("hypotheses rejected");
  if (r.outcome != "found") return fail("no (L, H, x) returned");
  const Mask h = r.h, l = r.l;
  if (!is_subgroup(g, h) || !is_subgroup(g, l)) return fail("H or L is not a subgroup");
  if ((l & ~k) || (k & ~h)) return fail("L <= K <= H fails");
  const Mask xh = g.left(r.x, h);
  if (xh != g.right(h, r.x)) return fail("xH != Hx");
  if (b & ~xh) return fail("B not inside xH");
  if (popcount(k) > 2 * popcount(l)) return fail("[K:L] > 2");
  const auto sub = embed_subgroup(g, make_subgroup(g, h));
  const Mask ll = sub.restrict_to(l);
  if (!is_normal(sub.group, ll)) return fail("L not normal in H");
  if (!cyclic_or_dihedral(quotient(sub.group, make_subgroup(sub.group, ll)).image)) return fail("H/L neither cyclic nor dihedral");
  return true;
}

}  // namespace triolab
