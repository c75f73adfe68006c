#include "triolab/beats.hpp"

namespace triolab {

bool pure_beat_clauses(const FiniteGroup& g, const Trio& t, Mask h) {
  if (h == g.full() || !is_subgroup(g, h)) return false;
  return t.a == h && stab_left(g, t.b) == h && t.c == complete_third(g, t.a, t.b);
}

bool impure_beat_clauses(const FiniteGroup& g, const Trio& t, Mask h) {
  if (h == g.full() || !is_subgroup(g, h)) return false;
  if (t.a & ~h) return false;
  const Mask outer_b = t.b & ~h;
  for (int x : elements_of(h))
    if (g.left(x, outer_b) != outer_b) return false;
  if ((t.c & ~h) != (complete_third(g, t.a, t.b) & ~h)) return false;
  return (t.b & h) && (t.c & h);
}

namespace {

std::vector<Mask> candidate_subgroups(const FiniteGroup& g, std::optional<Mask> rel) {
  std::vector<Mask> out;
  if (rel) {
    if (*rel != g.full()) out.push_back(*rel);
    return out;
  }
  for (const auto& s : subgroups(g))
    if (s.mask != g.full()) out.push_back(s.mask);
  return out;
}

}  // namespace

std::optional<BeatWitness> find_pure_beat(const FiniteGroup& g, const Trio& t,
                                          std::optional<Mask> rel) {
  if (is_trivial(t)) return std::nullopt;
  for (int p = 0; p < 6; ++p) {
    const Trio q = permuted(g, t, p);
    if (q.c != complete_third(g, q.a, q.b)) continue;
    const int a0 = __builtin_ctzll(q.a);
    const Mask k = g.left(g.inv(a0), q.a);
    if (k == g.full() || !is_subgroup(g, k)) continue;
    if (stab_left(g, q.b) != k) continue;
    for (int y = 0; y < g.order(); ++y) {
      const Mask h = g.conj(k, g.inv(y));  // y K y^-1
      if (rel && h != *rel) continue;
      BeatWitness w{{p, g.mul(y, g.inv(a0)), y, 0}, h};
      if (pure_beat_clauses(g, apply_transform(g, t, w.transform), h)) return w;
      if (!rel) break;
    }
  }
  return std::nullopt;
}

std::optional<BeatWitness> find_impure_beat(const FiniteGroup& g, const Trio& t,
                                            std::optional<Mask> rel) {
  if (is_trivial(t)) return std::nullopt;
  const auto hs = candidate_subgroups(g, rel);
  for (int p = 0; p < 6; ++p) {
    const Trio q = permuted(g, t, p);
    const int a0 = __builtin_ctzll(q.a);
    for (Mask h : hs) {
      if (popcount(h) < popcount(q.a) || popcount(h) == 1) continue;
      for (int y = 0; y < g.order(); ++y) {
        const int x = g.mul(y, g.inv(a0));
        const Mask a = translate(g, x, q.a, y);
        if (a & ~h) continue;
        for (int z = 0; z < g.order(); ++z) {
          const Trio cand{a, translate(g, y, q.b, z), translate(g, z, q.c, x)};
          if (impure_beat_clauses(g, cand, h)) return BeatWitness{{p, x, y, z}, h};
        }
      }
    }
  }
  return std::nullopt;
}

Continuation impure_beat_continuation(const FiniteGroup& g, const Trio& t, const BeatWitness& w) {
  const Trio s = apply_transform(g, t, w.transform);
  Continuation c{embed_subgroup(g, make_subgroup(g, w.h)), {}};
  c.trio = {c.sub.restrict_to(s.a), c.sub.restrict_to(s.b & w.h), c.sub.restrict_to(s.c & w.h)};
  return c;
}

}  // namespace triolab
