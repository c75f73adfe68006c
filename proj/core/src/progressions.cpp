#include "triolab/progressions.hpp"

#include "triolab/setops.hpp"

namespace triolab {

Mask geometric_set(const FiniteGroup& g, int ratio, int offset, int length) {
  Mask m = 0;
  int cur = offset;
  for (int i = 0; i < length; ++i) {
    m |= bit(cur);
    cur = g.mul(cur, ratio);
  }
  return m;
}

std::vector<GeometricProgression> detect_geometric(const FiniteGroup& g, Mask a) {
  std::vector<GeometricProgression> out;
  const int len = popcount(a);
  if (!len) return out;
  for (int h : elements_of(a))
    for (int r = 1; r < g.order(); ++r) {
      if (geometric_set(g, r, h, len) != a) continue;
      if (has(a, g.mul(h, power(g, r, len)))) continue;  // improper
      out.push_back({r, h, len});
    }
  return out;
}

bool basic_geometric(const FiniteGroup& g, Mask a, int ratio, int* length) {
  const int len = popcount(a);
  if (!has(a, 0) || geometric_set(g, ratio, 0, len) != a) return false;
  if (length) *length = len;
  return true;
}

int power(const FiniteGroup& g, int a, int e) {
  if (e < 0) {
    a = g.inv(a);
    e = -e;
  }
  int out = 0;
  for (int i = 0; i < e; ++i) out = g.mul(out, a);
  return out;
}

Mask dihedral_set(const FiniteGroup& g, int r, int f, int k) {
  const Mask rot = geometric_set(g, r, 0, k + 1);
  return g.product(rot, bit(0) | bit(f));
}

DihedralProgression make_dihedral(const FiniteGroup& g, int r, int f, int k) {
  DihedralProgression p{r, f, k, {}};
  p.ends = {0, f, power(g, r, k), g.mul(f, power(g, r, -k))};
  return p;
}

bool dihedral_proper(const FiniteGroup& g, const DihedralProgression& p) {
  return !has(dihedral_set(g, p.ratio, p.flip, p.k), power(g, p.ratio, p.k + 1));
}

DihedralProgression dihedral_product(const FiniteGroup& g, const DihedralProgression& a,
                                     const DihedralProgression& b) {
  if (a.ratio != b.ratio) throw GroupError("dihedral product: ratio mismatch");
  if (a.k < 1 || b.k < 1) throw GroupError("dihedral product: progressions must be nontrivial");
  const Mask sa = dihedral_set(g, a.ratio, a.flip, a.k);
  const Mask sb = dihedral_set(g, b.ratio, b.flip, b.k);
  if (stab_right(g, sa) != stab_left(g, sb))
    throw GroupError("dihedral product: stab_R(A) != stab_L(B)");
  return make_dihedral(g, a.ratio, b.flip, a.k + b.k);
}

const char* edge_name(int e) {
  static const char* names[12] = {"a1", "a2", "a3", "a4", "b1", "b2",
                                  "b3", "b4", "c1", "c2", "c3", "c4"};
  return names[e];
}

DihedralPrechord build_prechord(const FiniteGroup& g, const DihedralProgression& a,
                                const DihedralProgression& b) {
  if (g.order() < 8 || !dihedral_structure(g)) throw GroupError("prechord needs a dihedral group of order >= 8");
  const DihedralProgression x = dihedral_product(g, a, b);
  DihedralPrechord pc;
  pc.a = dihedral_set(g, a.ratio, a.flip, a.k);
  pc.b = dihedral_set(g, b.ratio, b.flip, b.k);
  const Mask xs = g.product(pc.a, pc.b);
  if (xs == g.full()) throw GroupError("prechord: AB = G");
  if (xs != dihedral_set(g, x.ratio, x.flip, x.k)) throw GroupError("prechord: AB is not the expected progression");
  pc.c = g.complement(g.inverse(xs));
  for (int e : x.ends) pc.c |= bit(g.inv(e));
  // B in the (1, f r^l, r^l, f) labelling, where f = stab_R(A) flip
  const int f = a.flip, l = b.k;
  const std::array<int, 4> bends{0, g.mul(f, power(g, a.ratio, l)), power(g, a.ratio, l), f};
  const std::array<int, 4> cends{g.inv(x.ends[0]), g.inv(x.ends[3]), g.inv(x.ends[2]),
                                 g.inv(x.ends[1])};
  for (int i = 0; i < 4; ++i) {
    pc.labels[i] = a.ends[i];
    pc.labels[4 + i] = bends[i];
    pc.labels[8 + i] = cends[i];
  }
  pc.potential = {0, cends[1], 0, a.ends[1], 0, bends[1]};
  return pc;
}

int count_trivial_triples(const FiniteGroup& g, Mask a, Mask b, Mask c) {
  int k = 0;
  for (int x : elements_of(a))
    for (int y : elements_of(b))
      if (has(c, g.inv(g.mul(x, y)))) ++k;
  return k;
}

}  // namespace triolab
