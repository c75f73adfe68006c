#include "triolab/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "triolab/incidence.hpp"
#include "triolab/parallel.hpp"
#include "triolab/progressions.hpp"

namespace triolab {

const char* cert_tag_name(CertTag t) {
  switch (t) {
    case CertTag::Trivial: return "Trivial";
    case CertTag::PureBeat: return "PureBeat";
    case CertTag::ImpureBeat: return "ImpureBeat";
    case CertTag::PureCyclicChord: return "PureCyclicChord";
    case CertTag::ImpureCyclicChord: return "ImpureCyclicChord";
    case CertTag::PureDihedralChord: return "PureDihedralChord";
    case CertTag::ImpureDihedralChord: return "ImpureDihedralChord";
    case CertTag::Video: return "Video";
    case CertTag::Unclassified: return "Unclassified";
  }
  return "?";
}

namespace {

int lowest_index(Mask m) { return __builtin_ctzll(m); }

struct Normal {
  Subgroup h;
  QuotientMap q;
};

std::vector<Normal> proper_normals(const FiniteGroup& g) {
  std::vector<Normal> out;
  for (const auto& h : normal_subgroups(g))
    if (h.mask != g.full()) out.push_back({h, quotient(g, h)});
  return out;
}

bool coset_rep(const QuotientMap& q, int x) { return lowest_index(q.cosets[q.projection[x]]) == x; }

bool h_stable(const QuotientMap& q, Mask a) { return q.preimage(q.project(a)) == a; }

Certificate base_cert(const FiniteGroup& g, const Trio& t, CertTag tag) {
  Certificate c;
  c.tag = tag;
  c.trio = t;
  c.delta = trio_deficiency(g, t);
  return c;
}

// ---- cyclic chords -------------------------------------------------------

std::optional<Certificate> find_cyclic_chord(const FiniteGroup& g, const Trio& t, bool pure,
                                             const std::vector<Normal>& normals) {
  const int n = g.order();
  for (const auto& [h, q] : normals) {
    const FiniteGroup& qg = q.image;
    if (qg.order() < (pure ? 5 : 4) || !is_cyclic(qg)) continue;
    const auto gens = cyclic_generators(qg);
    for (int p = 0; p < 6; ++p) {
      const Trio pt = permuted(g, t, p);
      if (pure && !(h_stable(q, pt.a) && h_stable(q, pt.b) && h_stable(q, pt.c))) continue;
      for (int x = 0; x < n; ++x) {
        if (pure && !coset_rep(q, x)) continue;
        for (int y = 0; y < n; ++y) {
          if (pure && !coset_rep(q, y)) continue;
          const Mask a = translate(g, x, pt.a, y), b = translate(g, y, pt.b, 0), c = translate(g, 0, pt.c, x);
          if (!pure && !(h_stable(q, a | h.mask) && h_stable(q, b | h.mask))) continue;
          const Mask qa = q.project(a), qb = q.project(b);
          const int la = popcount(qa), lb = popcount(qb);
          if (la < 2 || lb < 2 || !has(qa, 0) || !has(qb, 0)) continue;
          int ratio = -1;
          for (int s : gens)
            if (geometric_set(qg, s, 0, la) == qa && geometric_set(qg, s, 0, lb) == qb) {
              ratio = s;
              break;
            }
          if (ratio < 0) continue;
          const Mask full_c = complete_third(g, a, b);
          if (pure) {
            if (c != full_c || popcount(q.project(c)) < 2) continue;
          } else {
            const Mask out_h = ~h.mask;
            if ((c & out_h) != (full_c & out_h) || !(c & out_h) || !(c & h.mask)) continue;
          }
          Certificate cert = base_cert(g, t, pure ? CertTag::PureCyclicChord : CertTag::ImpureCyclicChord);
          cert.transform = {p, x, y, 0};
          cert.h = h.mask;
          cert.ratio = lowest_index(q.cosets[ratio]);
          cert.len_a = la;
          cert.len_b = lb;
          return cert;
        }
      }
    }
  }
  return std::nullopt;
}

// ---- dihedral chords -----------------------------------------------------

std::optional<Certificate> find_pure_dihedral(const FiniteGroup& g, const Trio& t, const std::vector<Normal>& normals) {
  const int n = g.order();
  for (const auto& [h, q] : normals) {
    const FiniteGroup& qg = q.image;
    if (qg.order() < 10) continue;
    const auto info = dihedral_structure(qg);
    if (!info) continue;
    for (int p = 0; p < 6; ++p) {
      const Trio pt = permuted(g, t, p);
      if (!(h_stable(q, pt.a) && h_stable(q, pt.b) && h_stable(q, pt.c))) continue;
      for (int x = 0; x < n; ++x) {
        if (!coset_rep(q, x)) continue;
        for (int y = 0; y < n; ++y) {
          if (!coset_rep(q, y)) continue;
          const Mask a = translate(g, x, pt.a, y), b = translate(g, y, pt.b, 0), c = translate(g, 0, pt.c, x);
          const Mask qa = q.project(a), qb = q.project(b);
          const int ka = popcount(qa) / 2 - 1, kb = popcount(qb) / 2 - 1;
          if (ka < 1 || kb < 1 || popcount(qa) % 2 || popcount(qb) % 2) continue;
          if (c != complete_third(g, a, b) || popcount(c) <= 2 * h.order()) continue;
          if (stab_right(g, a) != stab_left(g, b)) continue;
          for (int s : info->rotation_generators)
            for (int fa : info->flips) {
              if (dihedral_set(qg, s, fa, ka) != qa) continue;
              for (int fb : info->flips) {
                if (dihedral_set(qg, s, fb, kb) != qb) continue;
                Certificate cert = base_cert(g, t, CertTag::PureDihedralChord);
                cert.transform = {p, x, y, 0};
                cert.h = h.mask;
                cert.ratio = lowest_index(q.cosets[s]);
                cert.flip_a = lowest_index(q.cosets[fa]);
                cert.flip_b = lowest_index(q.cosets[fb]);
                cert.k_a = ka;
                cert.k_b = kb;
                return cert;
              }
            }
        }
      }
    }
  }
  return std::nullopt;
}

struct DihedralMatch {
  Certificate cert;
  OctClassification oct;
};

// A+ = preimage(alpha) must contain `a`, with the missing part inside the end cosets.
bool impure_fit(const QuotientMap& q, Mask a, Mask alpha, const std::array<int, 4>& ends, int hsize) {
  const Mask plus = q.preimage(alpha);
  if (a & ~plus) return false;
  Mask end_cosets = 0;
  for (int e : ends) end_cosets |= q.cosets[e];
  const Mask miss = plus & ~a;
  return miss && !(miss & ~end_cosets) && popcount(miss) < 4 * hsize;
}

std::optional<DihedralMatch> find_impure_dihedral(const FiniteGroup& g, const Trio& t,
                                                  const std::vector<Normal>& normals) {
  const int n = g.order();
  for (const auto& [h, q] : normals) {
    const FiniteGroup& qg = q.image;
    if (qg.order() < 8) continue;
    const auto info = dihedral_structure(qg);
    if (!info) continue;
    const int m = info->n;
    const int hs = h.order();
    for (int p = 0; p < 6; ++p) {
      const Trio pt = permuted(g, t, p);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const Mask a = translate(g, x, pt.a, y), b = translate(g, y, pt.b, 0), c = translate(g, 0, pt.c, x);
          const Mask qa = q.project(a), qb = q.project(b);
          for (int s : info->rotation_generators)
            for (int fa : info->flips)
              for (int ka = 1; ka + 1 < m; ++ka) {
                const Mask alpha = dihedral_set(qg, s, fa, ka);
                if (qa & ~alpha) continue;
                const auto pa = make_dihedral(qg, s, fa, ka);
                if (!impure_fit(q, a, alpha, pa.ends, hs)) continue;
                for (int fb : info->flips)
                  for (int kb = 1; kb + 1 < m; ++kb) {
                    const Mask beta = dihedral_set(qg, s, fb, kb);
                    if (qb & ~beta) continue;
                    if (stab_left(qg, beta) != stab_right(qg, alpha)) continue;
                    if (qg.product(alpha, beta) == qg.full()) continue;
                    DihedralPrechord pc;
                    try {
                      pc = build_prechord(qg, pa, make_dihedral(qg, s, fb, kb));
                    } catch (const GroupError&) {
                      continue;
                    }
                    const std::array<int, 4> be{pc.labels[4], pc.labels[5], pc.labels[6], pc.labels[7]};
                    const std::array<int, 4> ce{pc.labels[8], pc.labels[9], pc.labels[10], pc.labels[11]};
                    if (!impure_fit(q, b, beta, be, hs) || !impure_fit(q, c, pc.c, ce, hs)) continue;
                    DihedralMatch dm;
                    Certificate& cert = dm.cert;
                    cert = base_cert(g, t, CertTag::ImpureDihedralChord);
                    cert.transform = {p, x, y, 0};
                    cert.h = h.mask;
                    cert.ratio = lowest_index(q.cosets[s]);
                    cert.flip_a = lowest_index(q.cosets[fa]);
                    cert.flip_b = lowest_index(q.cosets[fb]);
                    cert.k_a = ka;
                    cert.k_b = kb;
                    for (int v = 0; v < 6; ++v) cert.potential[v] = lowest_index(q.cosets[pc.potential[v]]);
                    const std::array<Mask, 3> sets{a, b, c};
                    const auto sub = embed_subgroup(g, h);
                    OctConfig local;
                    for (int e = 0; e < 12; ++e) {
                      const Mask part = sets[e / 4] & q.cosets[pc.labels[e]];
                      cert.config.labels[e] =
                          translate(g, cert.potential[kEdgeFrom[e]], part, cert.potential[kEdgeTo[e]]);
                      local.labels[e] = sub.restrict_to(cert.config.labels[e]);
                    }
                    dm.oct = classify_config(sub.group, local);
                    cert.oct_type = dm.oct.type;
                    return dm;
                  }
              }
        }
    }
  }
  return std::nullopt;
}

// ---- videos --------------------------------------------------------------

struct VideoCase {
  int which = 0;
  Mask h = 0, h1 = 0, h2 = 0, h3 = 0;
};

// Rows of the exceptional table: |G/H| choices, then |G|/|H1|, |G|/|H2|,
// |G|/|H3|, |G|/|A|, |G|/|B|, |G|/|C| as num/den.
struct TableRow {
  std::vector<int> quotient_orders;
  std::array<std::pair<int, int>, 6> ratios;
};
const std::vector<TableRow>& video_table() {
  static const std::vector<TableRow> rows{
      {{48, 24}, {{{8, 1}, {12, 1}, {6, 1}, {4, 1}, {3, 1}, {2, 1}}}},
      {{120, 60}, {{{12, 1}, {20, 1}, {30, 1}, {4, 1}, {10, 1}, {3, 2}}}},
      {{120, 60}, {{{20, 1}, {30, 1}, {12, 1}, {10, 1}, {6, 1}, {4, 3}}}},
      {{120, 60}, {{{20, 1}, {12, 1}, {30, 1}, {4, 1}, {6, 1}, {5, 3}}}},
      {{120}, {{{12, 1}, {15, 1}, {10, 1}, {3, 1}, {5, 1}, {2, 1}}}},
      {{60}, {{{6, 1}, {15, 1}, {10, 1}, {3, 1}, {5, 1}, {2, 1}}}},
      {{720, 360, 120}, {{{20, 1}, {15, 1}, {6, 1}, {5, 1}, {3, 1}, {2, 1}}}}};
  return rows;
}

// Which numeric relation holds for (A,B,C) with the given H, H1, H2, H3 (0 if none).
int video_relation(const FiniteGroup& g, const Trio& t, int hh, int h1, int h2, int h3) {
  const int a = popcount(t.a), b = popcount(t.b), c = popcount(t.c);
  const int d = trio_deficiency(g, t);
  const bool div16 = h1 % hh == 0 && 16 % (h1 / hh) == 0;
  if (a == 2 * h2 && b == 2 * h2 && d == h1 && h1 == h3 && h1 < h2) return 1;
  if (9 * h1 == a && a == 3 * h2 && 2 * h2 == b && b == 3 * h3 && d == h1 && div16) return 2;
  if (4 * h1 == a && a == 2 * h2 && 3 * h2 == b && b == 2 * h3 && d == h1 && div16) return 3;
  const int n = g.order();
  const std::array<int, 6> sz{h1, h2, h3, a, b, c};
  for (const auto& row : video_table()) {
    if (std::find(row.quotient_orders.begin(), row.quotient_orders.end(), n / hh) == row.quotient_orders.end())
      continue;
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i) ok = n * row.ratios[i].second == row.ratios[i].first * sz[i];
    if (ok) return 4;
  }
  return 0;
}

std::optional<VideoCase> video_case_of(const FiniteGroup& g, const Trio& t) {
  const Mask h1 = stab_left(g, t.a), h2 = stab_right(g, t.a), h3 = stab_right(g, t.b);
  if (stab_right(g, t.c) != h1 || stab_left(g, t.b) != h2 || stab_left(g, t.c) != h3) return std::nullopt;
  const Mask h = normal_core(g, h1 & h2 & h3, g.full());
  const int w = video_relation(g, t, popcount(h), popcount(h1), popcount(h2), popcount(h3));
  if (!w) return std::nullopt;
  return VideoCase{w, h, h1, h2, h3};
}

std::vector<Graph> graphs_from_quotient(const Chorus& q) {
  std::vector<Graph> out;
  for (int vt = 0; vt < 3; ++vt)
    for (int et = 0; et < 3; ++et) {
      if (vt == et || q.sizes[vt] > 24) continue;
      std::vector<std::pair<int, int>> edges;
      std::set<std::pair<int, int>> seen;
      bool ok = true;
      for (int e = 0; e < q.sizes[et] && ok; ++e) {
        const Mask nb = q.nbr[et][vt][e];
        if (popcount(nb) != 2) {
          ok = false;
          break;
        }
        const auto ends = elements_of(nb);
        ok = seen.insert({ends[0], ends[1]}).second;
        edges.emplace_back(ends[0], ends[1]);
      }
      if (!ok) continue;
      Graph gr = make_graph(q.sizes[vt], edges, "quotient");
      if (is_connected(gr)) out.push_back(std::move(gr));
    }
  return out;
}

struct VideoMatch {
  std::string kind, graph;
};

std::optional<VideoMatch> match_video(const Chorus& q) {
  static std::mutex mu;
  static std::map<VideoKind, GraphGeometry> exceptional;
  std::vector<int> qs = q.sizes;
  std::sort(qs.begin(), qs.end());
  auto try_iso = [&](const Chorus& v) {
    std::vector<int> vs = v.sizes;
    std::sort(vs.begin(), vs.end());
    if (vs != qs) return false;
    std::vector<int> perm{0, 1, 2};
    do {
      if (q.sizes[0] != v.sizes[perm[0]] || q.sizes[1] != v.sizes[perm[1]] || q.sizes[2] != v.sizes[perm[2]])
        continue;
      if (find_isomorphism(q, v, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  const auto candidates = graphs_from_quotient(q);
  for (VideoKind k : all_video_kinds()) {
    if (is_standard(k)) {
      for (const auto& gr : candidates) {
        GraphGeometry v;
        try {
          v = build_video(k, gr);
        } catch (const GroupError&) {
          continue;
        }
        if (try_iso(v.chorus)) return VideoMatch{video_kind_name(k), gr.name};
      }
    } else {
      const GraphGeometry* v;
      {
        std::lock_guard<std::mutex> lock(mu);
        auto it = exceptional.find(k);
        if (it == exceptional.end()) it = exceptional.emplace(k, build_exceptional_video(k)).first;
        v = &it->second;
      }
      if (try_iso(v->chorus)) return VideoMatch{video_kind_name(k), v->points.empty() ? "" : "exceptional"};
    }
  }
  return std::nullopt;
}

std::optional<Certificate> find_video(const FiniteGroup& g, const Trio& t) {
  const Chorus theta = cayley_trio(g, t.a, t.b, t.c);
  const auto cq = clone_quotient(theta);
  const auto m = match_video(cq.quotient);
  if (!m) return std::nullopt;
  for (int p = 0; p < 6; ++p) {
    const auto vc = video_case_of(g, permuted(g, t, p));
    if (!vc) continue;
    Certificate cert = base_cert(g, t, CertTag::Video);
    cert.transform = {p, 0, 0, 0};
    cert.h = vc->h;
    cert.h1 = vc->h1;
    cert.h2 = vc->h2;
    cert.h3 = vc->h3;
    cert.video_case = vc->which;
    cert.video_kind = m->kind;
    cert.video_graph = m->graph;
    return cert;
  }
  return std::nullopt;
}

std::string label_of(const Certificate& c) {
  std::string s = cert_tag_name(c.tag);
  if (c.tag == CertTag::ImpureDihedralChord) s += std::string("(") + oct_type_name(c.oct_type) + ")";
  if (c.tag == CertTag::Video) s += "(" + c.video_kind + ")";
  return s;
}

}  // namespace

Certificate classify_trio(const FiniteGroup& g, const Trio& t, const ClassifyOptions& opt) {
  if (!is_trio(g, t)) throw GroupError("not a subset trio: 1 lies in ABC");
  if (is_trivial(t)) {
    Certificate c = base_cert(g, t, CertTag::Trivial);
    c.labels = {"Trivial"};
    return c;
  }
  if (!is_maximal(g, t)) throw GroupError("classification needs a maximal trio");
  if (trio_deficiency(g, t) <= 0) throw GroupError("classification needs a critical trio");

  std::optional<Certificate> first;
  std::vector<std::string> labels;
  auto offer = [&](std::optional<Certificate> c) {
    if (!c) return;
    labels.push_back(label_of(*c));
    if (!first) first = std::move(c);
  };
  auto done = [&] { return first.has_value() && !opt.all_labels; };

  if (auto w = find_pure_beat(g, t)) {
    Certificate c = base_cert(g, t, CertTag::PureBeat);
    c.transform = w->transform;
    c.h = w->h;
    offer(c);
  }
  if (!done())
    if (auto w = find_impure_beat(g, t)) {
      Certificate c = base_cert(g, t, CertTag::ImpureBeat);
      c.transform = w->transform;
      c.h = w->h;
      offer(c);
    }
  const auto normals = proper_normals(g);
  if (!done()) offer(find_cyclic_chord(g, t, true, normals));
  if (!done()) offer(find_cyclic_chord(g, t, false, normals));
  if (!done()) offer(find_pure_dihedral(g, t, normals));
  if (!done())
    if (auto dm = find_impure_dihedral(g, t, normals)) offer(dm->cert);
  if (!done()) offer(find_video(g, t));

  if (!first) {
    Certificate c = base_cert(g, t, CertTag::Unclassified);
    c.reason = "no recognizer fired (beats, cyclic chords, dihedral chords, videos)";
    return c;
  }
  first->labels = std::move(labels);
  return *first;
}

// ---- independent verification ------------------------------------------

namespace {

struct V {
  const FiniteGroup& g;
  std::string failed;

  bool fail(const std::string& why) {
    if (failed.empty()) failed = why;
    return false;
  }

  Mask lmul(int x, Mask a) const {
    Mask out = 0;
    for (int e : elements_of(a)) out |= bit(g.mul(x, e));
    return out;
  }
  Mask rmul(Mask a, int x) const {
    Mask out = 0;
    for (int e : elements_of(a)) out |= bit(g.mul(e, x));
    return out;
  }
  Mask prod(Mask a, Mask b) const {
    Mask out = 0;
    for (int x : elements_of(a)) out |= lmul(x, b);
    return out;
  }
  Mask inv(Mask a) const {
    Mask out = 0;
    for (int e : elements_of(a)) out |= bit(g.inv(e));
    return out;
  }
  Mask full() const { return g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1; }
  Mask third(Mask a, Mask b) const { return full() & ~inv(prod(a, b)); }
  bool subgroup(Mask h) const { return has(h, 0) && prod(h, h) == h; }
  bool normal(Mask h) const {
    for (int x = 0; x < g.order(); ++x)
      if (rmul(lmul(g.inv(x), h), x) != h) return false;
    return true;
  }
  Mask stab_l(Mask a) const {
    Mask s = 0;
    for (int x = 0; x < g.order(); ++x)
      if (lmul(x, a) == a) s |= bit(x);
    return s;
  }
  Mask stab_r(Mask a) const {
    Mask s = 0;
    for (int x = 0; x < g.order(); ++x)
      if (rmul(a, x) == a) s |= bit(x);
    return s;
  }
  bool h_stable(Mask a, Mask h) const { return prod(h, a) == a && prod(a, h) == a; }
  int pw(int a, int e) const {
    int r = 0;
    const int base = e < 0 ? g.inv(a) : a;
    for (int i = 0; i < std::abs(e); ++i) r = g.mul(r, base);
    return r;
  }
  Mask coset(int x, Mask h) const { return lmul(x, h); }
  // {S^0 H, ..., S^(len-1) H}
  Mask geometric(int s, int len, Mask h) const {
    Mask out = 0;
    for (int i = 0; i < len; ++i) out |= coset(pw(s, i), h);
    return out;
  }
  // {1..S^k}{1,F} H
  Mask dihedral(int s, int f, int k, Mask h) const {
    Mask out = 0;
    for (int i = 0; i <= k; ++i) out |= coset(pw(s, i), h) | coset(g.mul(pw(s, i), f), h);
    return out;
  }
  // S generates G/H (cyclic of order m): S^i H distinct for i < m, S^m in H
  bool generates_cyclic(int s, Mask h, int m) const {
    Mask seen = 0;
    for (int i = 0; i < m; ++i) {
      const Mask c = coset(pw(s, i), h);
      if (c & seen) return false;
      seen |= c;
    }
    return seen == full();
  }
  // G/H dihedral of order 2m with rotation coset S and flip coset F
  bool dihedral_quotient(int s, int f, Mask h, int m) const {
    Mask rot = 0;
    for (int i = 0; i < m; ++i) {
      const Mask c = coset(pw(s, i), h);
      if (c & rot) return false;
      rot |= c;
    }
    if (!has(coset(pw(s, m), h), 0)) return false;
    if (has(rot, f)) return false;
    if (!has(h, g.mul(f, f))) return false;
    if (!has(h, g.mul(g.mul(f, s), g.mul(g.inv(f), s)))) return false;
    return (rot | prod(rot, coset(f, h))) == full();
  }
};

bool has_tag_label(const Certificate& c) {
  return std::find(c.labels.begin(), c.labels.end(), label_of(c)) != c.labels.end();
}

}  // namespace

VerifyResult verify_certificate(const FiniteGroup& g, const Trio& t, const Certificate& c) {
  V v{g, {}};
  auto result = [&](bool ok) { return VerifyResult{ok && v.failed.empty(), v.failed}; };
  if (c.trio != t) return result(v.fail("certificate is for a different trio"));
  if (v.prod(v.prod(t.a, t.b), t.c) & 1) return result(v.fail("1 lies in ABC"));
  const int delta = popcount(t.a) + popcount(t.b) + popcount(t.c) - g.order();
  if (c.delta != delta) return result(v.fail("deficiency mismatch"));
  if (c.tag == CertTag::Trivial) return result((!t.a || !t.b || !t.c) || v.fail("trivial: all sides nonempty"));
  if (!t.a || !t.b || !t.c) return result(v.fail("trio is trivial"));
  if (t.c != v.third(t.a, t.b) || t.a != v.third(t.b, t.c) || t.b != v.third(t.c, t.a))
    return result(v.fail("maximality"));
  if (delta <= 0) return result(v.fail("not critical"));
  if (!c.labels.empty() && !has_tag_label(c)) return result(v.fail("labels omit the tag"));
  if (c.tag == CertTag::Unclassified) return result(v.fail("unclassified"));

  const Trio tt = apply_transform(g, t, c.transform);
  const Mask a = tt.a, b = tt.b, cc = tt.c, h = c.h;
  const int hs = popcount(h);
  const Mask out_h = v.full() & ~h;

  switch (c.tag) {
    case CertTag::PureBeat:
      if (!v.subgroup(h) || h == v.full()) return result(v.fail("pure beat: H is not a proper subgroup"));
      if (a != h) return result(v.fail("pure beat: A != H"));
      if (v.stab_l(b) != h) return result(v.fail("pure beat: stab_L(B) != H"));
      if (cc != v.third(a, b)) return result(v.fail("pure beat: C != complement of (AB)^-1"));
      if (delta != hs) return result(v.fail("pure beat: delta != |H|"));
      return result(true);
    case CertTag::ImpureBeat:
      if (!v.subgroup(h) || h == v.full() || hs < 2) return result(v.fail("impure beat: H is not a nontrivial proper subgroup"));
      if (a & ~h) return result(v.fail("impure beat: A not inside H"));
      if ((v.stab_l(b & out_h) & h) != h) return result(v.fail("impure beat: H not in stab_L(B \\ H)"));
      if ((cc & out_h) != (v.third(a, b) & out_h)) return result(v.fail("impure beat: C \\ H clause"));
      if (!(b & h) || !(cc & h)) return result(v.fail("impure beat: B or C misses H"));
      return result(true);
    case CertTag::PureCyclicChord:
    case CertTag::ImpureCyclicChord: {
      const bool pure = c.tag == CertTag::PureCyclicChord;
      if (!v.subgroup(h) || !v.normal(h)) return result(v.fail("cyclic chord: H not normal"));
      const int m = g.order() / hs;
      if (m < (pure ? 5 : 4)) return result(v.fail("cyclic chord: |G/H| too small"));
      if (!v.generates_cyclic(c.ratio, h, m)) return result(v.fail("cyclic chord: S does not generate G/H"));
      if (c.len_a < 2 || c.len_b < 2) return result(v.fail("cyclic chord: trivial progression"));
      const Mask pa = v.geometric(c.ratio, c.len_a, h), pb = v.geometric(c.ratio, c.len_b, h);
      if (pure) {
        if (!v.h_stable(a, h) || !v.h_stable(b, h) || !v.h_stable(cc, h))
          return result(v.fail("pure cyclic chord: not H-stable"));
        if (a != pa || b != pb) return result(v.fail("pure cyclic chord: progressions"));
        if (cc != v.third(a, b)) return result(v.fail("pure cyclic chord: C clause"));
        bool one_coset = false;
        for (int x : elements_of(cc)) one_coset = one_coset || (cc & ~v.coset(x, h)) == 0;
        if (one_coset) return result(v.fail("pure cyclic chord: C inside one coset"));
        if (delta != hs) return result(v.fail("pure cyclic chord: delta != |H|"));
      } else {
        if (!v.h_stable(a | h, h) || !v.h_stable(b | h, h))
          return result(v.fail("impure cyclic chord: A u H or B u H not H-stable"));
        if ((a | h) != (pa | h) || (b | h) != (pb | h) || !(a & h) || !(b & h))
          return result(v.fail("impure cyclic chord: progressions"));
        const Mask ref = v.third(a, b) & out_h;
        if ((cc & out_h) != ref || !ref) return result(v.fail("impure cyclic chord: C \\ H clause"));
        if (!(cc & h)) return result(v.fail("impure cyclic chord: C misses H"));
      }
      return result(true);
    }
    case CertTag::PureDihedralChord:
    case CertTag::ImpureDihedralChord: {
      const bool pure = c.tag == CertTag::PureDihedralChord;
      if (!v.subgroup(h) || !v.normal(h)) return result(v.fail("dihedral chord: H not normal"));
      const int m = g.order() / hs / 2;
      if (2 * m < (pure ? 10 : 8)) return result(v.fail("dihedral chord: |G/H| too small"));
      if (!v.dihedral_quotient(c.ratio, c.flip_a, h, m) || !v.dihedral_quotient(c.ratio, c.flip_b, h, m))
        return result(v.fail("dihedral chord: G/H not dihedral with the given rotation"));
      if (c.k_a < 1 || c.k_b < 1) return result(v.fail("dihedral chord: trivial progression"));
      const Mask alpha = v.dihedral(c.ratio, c.flip_a, c.k_a, h);
      const Mask beta = v.dihedral(c.ratio, c.flip_b, c.k_b, h);
      if (pure) {
        if (!v.h_stable(a, h) || !v.h_stable(b, h) || !v.h_stable(cc, h))
          return result(v.fail("pure dihedral chord: not H-stable"));
        if (a != alpha || b != beta) return result(v.fail("pure dihedral chord: progressions"));
        if (v.stab_r(a) != v.stab_l(b)) return result(v.fail("pure dihedral chord: stab_R(A) != stab_L(B)"));
        if (cc != v.third(a, b) || popcount(cc) <= 2 * hs) return result(v.fail("pure dihedral chord: C clause"));
        return result(true);
      }
      // impure: prechord in G/H from the two progressions
      if (v.stab_r(alpha) != v.stab_l(beta)) return result(v.fail("impure dihedral chord: end flips differ"));
      const Mask x = v.prod(alpha, beta);
      if (x == v.full()) return result(v.fail("impure dihedral chord: AB = G"));
      const int s = c.ratio, f = c.flip_a, k = c.k_a, l = c.k_b;
      const std::array<int, 4> ea{0, f, v.pw(s, k), g.mul(f, v.pw(s, -k))};
      const std::array<int, 4> eb{0, g.mul(f, v.pw(s, l)), v.pw(s, l), f};
      const std::array<int, 4> ex{0, g.mul(f, v.pw(s, l)), v.pw(s, k + l), g.mul(f, v.pw(s, -k))};
      const std::array<int, 4> ec{g.inv(ex[0]), g.inv(ex[3]), g.inv(ex[2]), g.inv(ex[1])};
      Mask cplus = v.full() & ~v.inv(x);
      for (int e : ec) cplus |= v.coset(e, h);
      auto fits = [&](Mask set, Mask plus, const std::array<int, 4>& ends) {
        Mask endset = 0;
        for (int e : ends) endset |= v.coset(e, h);
        const Mask miss = plus & ~set;
        return !(set & ~plus) && miss && !(miss & ~endset) && popcount(miss) < 4 * hs;
      };
      if (!fits(a, alpha, ea) || !fits(b, beta, eb) || !fits(cc, cplus, ec))
        return result(v.fail("impure dihedral chord: A+, B+, C+ clauses"));
      std::array<int, 12> lab{};
      for (int i = 0; i < 4; ++i) {
        lab[i] = ea[i];
        lab[4 + i] = eb[i];
        lab[8 + i] = ec[i];
      }
      const std::array<Mask, 3> sets{a, b, cc};
      OctConfig local;
      const auto sub = embed_subgroup(g, make_subgroup(g, h));
      int total = 0;
      for (int e = 0; e < 12; ++e) {
        const int pf = c.potential[kEdgeFrom[e]], pt = c.potential[kEdgeTo[e]];
        // label coset must be tau(from)^-1 tau(to) H
        if (v.coset(g.mul(g.inv(pf), pt), h) != v.coset(lab[e], h))
          return result(v.fail("impure dihedral chord: potential mismatch on edge " + std::string(edge_name(e))));
        const Mask part = sets[e / 4] & v.coset(lab[e], h);
        const Mask star = v.rmul(v.lmul(pf, part), g.inv(pt));
        if (star != c.config.labels[e] || (star & ~h))
          return result(v.fail("impure dihedral chord: configuration label " + std::string(edge_name(e))));
        total += popcount(star);
        local.labels[e] = sub.restrict_to(star);
      }
      if (total - 6 * hs != delta) return result(v.fail("impure dihedral chord: configuration deficiency"));
      const auto oc = classify_config(sub.group, local);
      if (oc.type != c.oct_type) return result(v.fail("impure dihedral chord: octahedral type"));
      if (oc.type != OctType::Zero && oc.type != OctType::One && oc.type != OctType::TwoA && oc.type != OctType::TwoB)
        return result(v.fail("impure dihedral chord: type not in {0,1,2A,2B}"));
      std::string why;
      if (!verify_oct_classification(sub.group, local, oc, &why))
        return result(v.fail("impure dihedral chord: octahedral witness: " + why));
      return result(true);
    }
    case CertTag::Video: {
      if (v.stab_l(a) != c.h1 || v.stab_r(cc) != c.h1) return result(v.fail("video: H1 clause"));
      if (v.stab_r(a) != c.h2 || v.stab_l(b) != c.h2) return result(v.fail("video: H2 clause"));
      if (v.stab_r(b) != c.h3 || v.stab_l(cc) != c.h3) return result(v.fail("video: H3 clause"));
      if (!v.subgroup(h) || !v.normal(h) || (h & ~c.h1) || (h & ~c.h2) || (h & ~c.h3))
        return result(v.fail("video: H not a normal subgroup of H1, H2, H3"));
      if (video_relation(g, tt, hs, popcount(c.h1), popcount(c.h2), popcount(c.h3)) != c.video_case || !c.video_case)
        return result(v.fail("video: numeric relation"));
      const auto cq = clone_quotient(cayley_trio(g, t.a, t.b, t.c));
      const auto m = match_video(cq.quotient);
      if (!m || m->kind != c.video_kind) return result(v.fail("video: clone quotient is not the claimed video"));
      return result(true);
    }
    default: break;
  }
  return result(v.fail("unknown tag"));
}

std::optional<Continuation> certificate_continuation(const FiniteGroup& g, const Trio& t, const Certificate& c) {
  switch (c.tag) {
    case CertTag::ImpureBeat: return impure_beat_continuation(g, t, BeatWitness{c.transform, c.h});
    case CertTag::ImpureCyclicChord: {
      const Trio tt = apply_transform(g, t, c.transform);
      Continuation k{embed_subgroup(g, make_subgroup(g, c.h)), {}};
      k.trio = {k.sub.restrict_to(tt.a), k.sub.restrict_to(tt.b), k.sub.restrict_to(tt.c)};
      return k;
    }
    case CertTag::ImpureDihedralChord: {
      if (c.oct_type != OctType::One && c.oct_type != OctType::TwoA) return std::nullopt;
      Continuation k{embed_subgroup(g, make_subgroup(g, c.h)), {}};
      OctConfig local;
      for (int e = 0; e < 12; ++e) local.labels[e] = k.sub.restrict_to(c.config.labels[e]);
      k.trio = classify_config(k.sub.group, local).continuation;
      return k;
    }
    default: return std::nullopt;
  }
}

Song song_decompose(const FiniteGroup& g, const Trio& t) {
  Song song;
  FiniteGroup cur = g;
  Trio trio = t;
  std::vector<int> to_top(g.order());
  for (int i = 0; i < g.order(); ++i) to_top[i] = i;
  for (;;) {
    SongStep step;
    step.group_order = cur.order();
    step.to_top = to_top;
    step.trio = trio;
    step.cert = classify_trio(cur, trio);
    const auto cont = certificate_continuation(cur, trio, step.cert);
    const bool unclassified = step.cert.tag == CertTag::Unclassified;
    song.steps.push_back(step);
    if (!cont) {
      song.complete = !unclassified;
      return song;
    }
    if (cont->sub.group.order() >= cur.order()) throw GroupError("continuation did not shrink the group");
    std::vector<int> next(cont->sub.group.order());
    for (size_t i = 0; i < next.size(); ++i) next[i] = to_top[cont->sub.to_parent[i]];
    to_top = std::move(next);
    cur = cont->sub.group;
    trio = cont->trio;
  }
}

std::vector<Trio> brute_maximal_critical_trios(const FiniteGroup& g, int workers) {
  const int n = g.order();
  if (n > 16) throw GroupError("exhaustive trio census is limited to |G| <= 16");
  const int free_bits = n - 1;  // element 0 is forced into A and B
  const int split = std::min(free_bits, 6);
  const int chunks = 1 << split;
  std::vector<std::vector<Trio>> found(chunks);
  parallel_for(chunks, workers, [&](int chunk) {
    std::unordered_set<Trio, TrioHash> seen;
    const Mask hi = static_cast<Mask>(chunk) << (free_bits - split + 1);
    for (Mask lo = 0; lo < (Mask{1} << (free_bits - split)); ++lo) {
      const Mask a = 1 | hi | (lo << 1);
      for (Mask rb = 0; rb < (Mask{1} << free_bits); ++rb) {
        const Mask b = 1 | (rb << 1);
        const Mask c = complete_third(g, a, b);
        if (!c) continue;
        if (popcount(a) + popcount(b) + popcount(c) <= n) continue;
        if (complete_third(g, b, c) != a || complete_third(g, c, a) != b) continue;
        const Trio t{a, b, c};
        if (seen.count(t)) continue;
        Trio best = t;
        for (int p = 0; p < 6; ++p) {
          const Trio pt = permuted(g, t, p);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              const Mask ta = translate(g, x, pt.a, y);
              for (int z = 0; z < n; ++z) {
                const Trio u{ta, translate(g, y, pt.b, z), translate(g, z, pt.c, x)};
                if (u < best) best = u;
                if ((u.a & 1) && (u.b & 1)) seen.insert(u);
              }
            }
        }
        found[chunk].push_back(best);
      }
    }
  });
  std::vector<Trio> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_controlled_by(const FiniteGroup& g, const Trio& t, Mask h) {
  return trio_deficiency(g, t) <= popcount(h) && conj_stable(g, t.a, h) && conj_stable(g, t.b, h) &&
         conj_stable(g, t.c, h);
}

std::optional<Subgroup> controlled_witness(const FiniteGroup& g, const Trio& t) {
  auto subs = subgroups(g);
  std::sort(subs.begin(), subs.end(), [](const Subgroup& x, const Subgroup& y) {
    return x.order() != y.order() ? x.order() < y.order() : x.mask < y.mask;
  });
  for (const auto& s : subs)
    if (is_controlled_by(g, t, s.mask)) return s;
  return std::nullopt;
}

}  // namespace triolab
