#include "triolab/suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "triolab/classify.hpp"
#include "triolab/graphs.hpp"
#include "triolab/incidence.hpp"
#include "triolab/octahedral.hpp"
#include "triolab/parallel.hpp"
#include "triolab/progressions.hpp"

namespace triolab {

namespace {

std::string mask_str(Mask m) {
  std::string s;
  for (int e : elements_of(m)) s += (s.empty() ? "" : ",") + std::to_string(e);
  return s;
}

struct Tally {
  SuiteResult& r;
  void fail(std::map<std::string, std::string> w, const std::string& why) {
    if (r.witness.empty()) {
      r.witness = std::move(w);
      r.witness["failed"] = why;
    }
    ++r.counts["failures"];
  }
};

void finish(SuiteResult& r) {
  r.pass = r.counts["failures"] == 0 && r.checked > 0;
  if (r.counts["failures"] == 0) r.counts.erase("failures");
}

std::vector<FiniteGroup> groups_upto(int max_order, const std::vector<std::string>& names) {
  std::vector<FiniteGroup> out;
  for (const auto& n : names) {
    auto g = parse_group(n);
    if (g.order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

// --- 1 -------------------------------------------------------------------

// Sumset in Z_p by rotating bitmasks; independent of the group tables.
Mask cyclic_sum(int p, Mask a, Mask b) {
  const Mask full = (Mask{1} << p) - 1;
  Mask out = 0;
  for (int i = 0; i < p; ++i)
    if ((a >> i) & 1) out |= ((b << i) | (b >> (p - i))) & full;
  return out;
}

SuiteResult cauchy_davenport(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  std::vector<int> primes{2, 3, 5, 7, 11, 13};
  if (opt.p) {
    if (opt.p < 2 || opt.p > 13 || std::find(primes.begin(), primes.end(), opt.p) == primes.end())
      throw std::invalid_argument("--p must be one of 2, 3, 5, 7, 11, 13");
    primes = {opt.p};
  }
  for (int p : primes) {
    const Mask full = (Mask{1} << p) - 1;
    std::vector<long> checked(full + 1, 0);
    std::vector<std::pair<Mask, Mask>> bad(full + 1, {0, 0});
    parallel_for(static_cast<int>(full), opt.workers, [&](int i) {
      const Mask a = static_cast<Mask>(i) + 1;
      const int na = popcount(a);
      for (Mask b = 1; b <= full; ++b) {
        const int s = popcount(cyclic_sum(p, a, b));
        ++checked[a];
        if (s < std::min(p, na + popcount(b) - 1) && !bad[a].first) bad[a] = {a, b};
      }
    });
    long n = 0;
    for (Mask a = 1; a <= full; ++a) {
      n += checked[a];
      if (bad[a].first) t.fail({{"p", std::to_string(p)}, {"A", mask_str(bad[a].first)}, {"B", mask_str(bad[a].second)}},
                              "|A+B| < min(p, |A|+|B|-1)");
    }
    r.counts["pairs.C" + std::to_string(p)] = n;
    r.checked += n;
  }
  return r;
}

// --- 2 -------------------------------------------------------------------

SuiteResult vosper(const SuiteOptions&) {
  SuiteResult r;
  Tally t{r};
  for (int p : {5, 7}) {
    const auto g = cyclic_group(p);
    long critical = 0, small = 0, prog = 0;
    for (Mask a = 1; a <= g.full(); ++a)
      for (Mask b = 1; b <= g.full(); ++b) {
        const Mask c = complete_third(g, a, b);
        if (!c) continue;
        const Trio tr{a, b, c};
        if (trio_deficiency(g, tr) <= 0) continue;
        ++critical;
        ++r.checked;
        if (std::min({popcount(a), popcount(b), popcount(c)}) == 1) {
          ++small;
          continue;
        }
        auto ratios = [&](Mask m) {
          std::set<int> out;
          for (const auto& gp : detect_geometric(g, m)) out.insert(gp.ratio);
          return out;
        };
        const auto ra = ratios(a), rb = ratios(b), rc = ratios(c);
        bool common = false;
        for (int x : ra) common = common || (rb.count(x) && rc.count(x));
        if (common) ++prog;
        else t.fail({{"group", "C" + std::to_string(p)}, {"A", mask_str(a)}, {"B", mask_str(b)}, {"C", mask_str(c)}},
                    "no singleton and no common ratio");
      }
    const std::string k = "C" + std::to_string(p);
    r.counts[k + ".critical"] = critical;
    r.counts[k + ".min_size_1"] = small;
    r.counts[k + ".progressions"] = prog;
  }
  return r;
}

// --- 3 -------------------------------------------------------------------

SuiteResult kneser(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const int cap = opt.max_order ? opt.max_order : 12;
  for (const auto& g : groups_upto(cap, abelian_catalog_upto12())) {
    // translates of A and B give the same |AB| and stabilizer, so 0 is fixed in both
    const int n = g.order();
    const Mask half = n > 1 ? (Mask{1} << (n - 1)) : 1;
    std::vector<long> cnt(half, 0);
    std::vector<std::pair<Mask, Mask>> bad(half, {0, 0});
    parallel_for(static_cast<int>(half), opt.workers, [&](int i) {
      const Mask a = (static_cast<Mask>(i) << 1) | 1;
      for (Mask j = 0; j < half; ++j) {
        const Mask b = (j << 1) | 1;
        const Mask ab = g.product(a, b);
        const Mask h = stab_left(g, ab);
        ++cnt[i];
        const bool ok = g.product(ab, h) == ab && popcount(ab) >= popcount(a) + popcount(b) - popcount(h);
        if (!ok && !bad[i].first) bad[i] = {a, b};
      }
    });
    long total = 0;
    for (Mask i = 0; i < half; ++i) {
      total += cnt[i];
      if (bad[i].first) t.fail({{"group", g.label()}, {"A", mask_str(bad[i].first)}, {"B", mask_str(bad[i].second)}},
                              "Kneser bound fails for H = stab(AB)");
    }
    r.counts["pairs." + g.label()] = total;
    r.checked += total;
  }
  return r;
}

// --- 4 -------------------------------------------------------------------

SuiteResult rep_cor(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const int cap = opt.max_order ? opt.max_order : 8;
  for (const auto& g : groups_upto(cap, catalog_upto12())) {
    long n = 0;
    for (Mask a = 1; a <= g.full(); ++a)
      for (Mask b = 1; b <= g.full(); ++b) {
        ++n;
        if (deficiency_pair(g, a, b) > rep_min(g, a, b))
          t.fail({{"group", g.label()}, {"A", mask_str(a)}, {"B", mask_str(b)}}, "delta exceeds the minimum representation count");
      }
    r.counts["pairs." + g.label()] = n;
    r.checked += n;
  }
  return r;
}

// --- 5 -------------------------------------------------------------------

SuiteResult sweep_suite(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const int cap = opt.max_order ? opt.max_order : 12;
  for (const auto& g : groups_upto(cap, catalog_upto12())) {
    const auto trios = brute_maximal_critical_trios(g, opt.workers);
    std::vector<Certificate> certs(trios.size());
    std::vector<std::string> errors(trios.size());
    parallel_for(static_cast<int>(trios.size()), opt.workers, [&](int i) {
      try {
        certs[i] = classify_trio(g, trios[i]);
        const auto v = verify_certificate(g, trios[i], certs[i]);
        if (!v.ok) errors[i] = "certificate rejected: " + v.failed;
        else if (certs[i].tag == CertTag::Unclassified) errors[i] = "unclassified: " + certs[i].reason;
      } catch (const std::exception& e) {
        errors[i] = std::string("classification threw: ") + e.what();
      }
    });
    for (size_t i = 0; i < trios.size(); ++i) {
      ++r.checked;
      ++r.counts[std::string("tag.") + cert_tag_name(certs[i].tag)];
      if (!errors[i].empty())
        t.fail({{"group", g.label()}, {"A", mask_str(trios[i].a)}, {"B", mask_str(trios[i].b)}, {"C", mask_str(trios[i].c)}},
               errors[i]);
    }
    r.counts["trios." + g.label()] = static_cast<long>(trios.size());
  }
  return r;
}

// --- 6 -------------------------------------------------------------------

SuiteResult controlled_suite(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const int cap = opt.max_order ? opt.max_order : 12;
  for (const auto& g : groups_upto(cap, catalog_upto12())) {
    // conj-stability and sizes are invariant under A -> xA, B -> By, so 0 is fixed in both
    const int n = g.order();
    const Mask half = n > 1 ? (Mask{1} << (n - 1)) : 1;
    struct Part {
      long pairs = 0;
      std::map<std::string, std::string> bad;
      std::string why;
    };
    std::vector<Part> parts(half);
    parallel_for(static_cast<int>(half), opt.workers, [&](int i) {
      std::unordered_map<Trio, Mask, TrioHash> cache;
      Part& part = parts[i];
      const Mask a = (static_cast<Mask>(i) << 1) | 1;
      for (Mask j = 0; j < half; ++j) {
        const Mask b = (j << 1) | 1;
        ++part.pairs;
        const Mask ab = g.product(a, b);
        const Trio closed = trio_close(g, {a, b, complete_third(g, a, b)});
        auto it = cache.find(closed);
        if (it == cache.end()) {
          const auto w = controlled_witness(g, closed);
          it = cache.emplace(closed, w ? w->mask : Mask{0}).first;
        }
        const Mask h = it->second;
        std::string why;
        if (!h) why = "no controlling subgroup";
        else if (g.product(closed.a, closed.b) != ab) why = "closure changed AB";
        else if (popcount(ab) < popcount(closed.a) + popcount(closed.b) - popcount(h)) why = "|AB| < |A*|+|B*|-|H|";
        else if (popcount(ab) < popcount(a) + popcount(b) - popcount(h)) why = "|AB| < |A|+|B|-|H|";
        else if (!conj_stable(g, ab, h) || !conj_stable(g, closed.c, h) || !conj_stable(g, closed.a, h) ||
                 !conj_stable(g, closed.b, h))
          why = "not H-conj-stable";
        if (!why.empty() && part.bad.empty()) {
          part.bad = {{"group", g.label()}, {"A", mask_str(a)}, {"B", mask_str(b)}, {"H", mask_str(h)}};
          part.why = why;
        }
      }
    });
    long total = 0;
    for (auto& p : parts) {
      total += p.pairs;
      if (!p.bad.empty()) t.fail(p.bad, p.why);
    }
    r.counts["pairs." + g.label()] = total;
    r.checked += total;
  }
  return r;
}

// --- 7 -------------------------------------------------------------------

SuiteResult cuts_suite(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  for (const auto& [name, frozen] : frozen_cut_census()) {
    const Graph g = named_graph(name);
    std::map<std::string, long> got;
    for (const auto& c : enumerate_small_cuts(g, opt.workers)) {
      ++r.checked;
      ++got[cut_outcome_name(c.outcome)];
      if (c.outcome == CutOutcome::None)
        t.fail({{"graph", name}, {"A", mask_str(c.set)}, {"cut", std::to_string(c.cut)}}, "not exactly one outcome");
    }
    for (const auto& [k, v] : got) r.counts[name + "." + k] = v;
    if (got != frozen) {
      std::ostringstream os;
      for (const auto& [k, v] : got) os << k << "=" << v << " ";
      t.fail({{"graph", name}, {"census", os.str()}}, "census differs from the frozen constants");
    }
  }
  return r;
}

// --- 8 -------------------------------------------------------------------

struct Frac {
  long num = 0, den = 1;
  Frac operator+(const Frac& o) const {
    Frac f{num * o.den + o.num * den, den * o.den};
    const long d = std::gcd(f.num, f.den);
    return {f.num / d, f.den / d};
  }
  bool operator==(const Frac&) const = default;
};

Frac density(const Chorus& c, int i, int j) {
  Frac f{c.incidences(i, j), static_cast<long>(c.sizes[i]) * c.sizes[j]};
  const long d = std::gcd(f.num, f.den);
  return {f.num / d, f.den / d};
}

void check_video(SuiteResult& r, Tally& t, const std::string& label, const Graph& g, const GraphGeometry& v) {
  ++r.checked;
  auto fail = [&](const std::string& why) { t.fail({{"video", label}}, why); };
  const Chorus& c = v.chorus;
  try {
    validate_chorus(c);
  } catch (const std::exception& e) {
    return fail(std::string("invalid chorus: ") + e.what());
  }
  if (find_collision(c, 0, 1, 2)) return fail("collision");
  const long delta = trio_deficiency_inc(c, 0, 1, 2);
  if (delta <= 0) return fail("not critical");
  if (!trio_maximal_by_probes(c)) return fail("an incidence orbit can be added");
  // the object type with the largest vertex sets determines the cut
  int ty = 0;
  for (int i = 1; i < 3; ++i)
    if (v.points[i][0].seq.size() > v.points[ty][0].seq.size()) ty = i;
  const int d = *regular_degree(g);
  const long cut = cut_size(g, v.points[ty][0].vmask);
  const long edges = static_cast<long>(g.edges.size());
  if (2 * delta * edges != c.group_order * (2 * d - cut)) return fail("deficiency differs from the cut formula");
  r.counts["delta." + label] = delta;
}

SuiteResult videos_suite(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  for (VideoKind k : all_video_kinds()) {
    if (is_standard(k)) {
      for (const auto& name : named_graph_list()) {
        const Graph g = named_graph(name);
        GraphGeometry v;
        try {
          v = build_video(k, g);
        } catch (const GroupError&) {
          continue;
        }
        check_video(r, t, std::string(video_kind_name(k)) + ":" + name, g, v);
      }
    } else {
      static const std::map<VideoKind, std::string> host{
          {VideoKind::CubeOct_VEF, "Cube"},        {VideoKind::Dodec_FVE, "Dodecahedron"},
          {VideoKind::DodecIcos_VEF, "Dodecahedron"}, {VideoKind::Icos_FVE, "Icosahedron"},
          {VideoKind::Petersen_C5EV, "Petersen"},  {VideoKind::PetersenK6_FEV, "Petersen"},
          {VideoKind::K6_C3EV, "K6"}};
      check_video(r, t, video_kind_name(k), named_graph(host.at(k)), build_exceptional_video(k));
    }
  }
  // graphic duets: delta(A) against the cut formula
  std::mt19937_64 rng(opt.seed);
  for (const auto& name : named_graph_list()) {
    const Graph g = named_graph(name);
    const auto d = regular_degree(g);
    if (!d) continue;
    const auto info = automorphism_info(g, graph_automorphisms(g));
    if (!info.vertex_transitive || !info.edge_transitive) continue;
    const auto duet = graph_duet(g, "V", "E");
    const long wE = duet.chorus.group_order / static_cast<long>(g.edges.size());
    const Mask full = g.n == 64 ? ~Mask{0} : bit(g.n) - 1;
    const long tries = g.n <= 12 ? static_cast<long>(full) : 4096;
    for (long i = 1; i <= tries; ++i) {
      const Mask a = g.n <= 12 ? static_cast<Mask>(i) : (rng() & full);
      if (!a || a == full) continue;
      ++r.checked;
      const long lhs = 2 * set_deficiency_x(duet.chorus, 0, 1, a);
      if (lhs != wE * (2 * *d - cut_size(g, a)))
        t.fail({{"graph", name}, {"A", mask_str(a)}}, "graphic duet deficiency differs from the cut formula");
    }
  }
  // Cube V~E~F densities
  const auto cube = build_exceptional_video(VideoKind::CubeOct_VEF);
  const Frac sum = density(cube.chorus, 0, 1) + density(cube.chorus, 1, 2) + density(cube.chorus, 0, 2);
  const long V = cube.chorus.sizes[0], E = cube.chorus.sizes[1], F = cube.chorus.sizes[2];
  const Frac formula = Frac{1, 1} + Frac{2 * (V - E + F), V * F};
  r.counts["cube.density.num"] = sum.num;
  r.counts["cube.density.den"] = sum.den;
  if (!(sum == Frac{13, 12}) || !(formula == sum))
    t.fail({{"video", "CubeOct_VEF"}, {"density", std::to_string(sum.num) + "/" + std::to_string(sum.den)}},
           "density sum is not 13/12");
  return r;
}

// --- 9 -------------------------------------------------------------------

SuiteResult octahedral_suite(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const auto h = cyclic_group(2);
  const auto syms = oct_symmetries();
  for (const auto& cfg : enumerate_maximal_critical(h, opt.workers)) {
    ++r.checked;
    auto lbl = [&] {
      std::string s;
      for (Mask m : cfg.labels) s += std::to_string(m);
      return std::map<std::string, std::string>{{"labels", s}};
    };
    if (!is_maximal_config(h, cfg) || config_deficiency(h, cfg) <= 0) {
      t.fail(lbl(), "enumerated configuration is not maximal critical");
      continue;
    }
    const auto k = classify_config(h, cfg);
    std::string why;
    if (k.type == OctType::Unclassified) {
      t.fail(lbl(), "unclassified: " + k.reason);
      continue;
    }
    if (!verify_oct_classification(h, cfg, k, &why)) {
      t.fail(lbl(), "witness rejected: " + why);
      continue;
    }
    ++r.counts[std::string("type.") + oct_type_name(k.type)];
    for (const auto& s : syms)
      if (classify_config(h, apply_symmetry(h, cfg, s)).type != k.type) {
        t.fail(lbl(), "type changes under an octahedron symmetry");
        break;
      }
  }
  return r;
}

// --- 10 ------------------------------------------------------------------

SuiteResult dihedral_law(const SuiteOptions&) {
  SuiteResult r;
  Tally t{r};
  for (int n = 3; n <= 12; ++n) {
    const auto g = dihedral_group(n);
    const auto info = dihedral_structure(g);
    if (!info) {
      t.fail({{"n", std::to_string(n)}}, "dihedral structure not found");
      continue;
    }
    long prechords = 0;
    for (int rr : info->rotation_generators)
      for (int f : info->flips)
        for (int k = 1; k + 1 <= n - 1; ++k)
          for (int l = 1; k + l <= n - 2; ++l) {
            ++r.checked;
            const auto pa = make_dihedral(g, rr, f, k);
            const auto pb = make_dihedral(g, rr, g.mul(f, power(g, rr, l)), l);
            const Mask a = dihedral_set(g, rr, f, k), b = dihedral_set(g, rr, pb.flip, l);
            std::map<std::string, std::string> w{{"group", g.label()}, {"r", std::to_string(rr)}, {"f", std::to_string(f)},
                                                 {"k", std::to_string(k)}, {"l", std::to_string(l)}};
            if (popcount(a) != 2 * (k + 1) || popcount(b) != 2 * (l + 1)) {
              t.fail(w, "progression is not proper");
              continue;
            }
            if (popcount(g.product(a, b)) != popcount(a) + popcount(b) - 2) {
              t.fail(w, "|AB| != |A|+|B|-2");
              continue;
            }
            if (g.order() < 8) continue;
            const auto pc = build_prechord(g, pa, pb);
            ++prechords;
            if (popcount(pc.a) + popcount(pc.b) - popcount(g.complement(pc.c)) != 6)
              t.fail(w, "|A|+|B|-|comp C| != 6");
            else if (count_trivial_triples(g, pc.a, pc.b, pc.c) != 8)
              t.fail(w, "trivial triple products != 8");
          }
    r.counts["prechords." + g.label()] = prechords;
  }
  return r;
}

// --- 11 ------------------------------------------------------------------

struct RandomDuets {
  std::vector<FiniteGroup> groups;
  std::mt19937_64 rng;
  explicit RandomDuets(std::uint64_t seed) : rng(seed) {
    for (const auto& n : catalog_upto12())
      if (parse_group(n).order() >= 2) groups.push_back(parse_group(n));
  }
  const FiniteGroup& group() { return groups[rng() % groups.size()]; }
  Mask subset(const FiniteGroup& g) { return rng() & g.full(); }
  Mask nonempty(const FiniteGroup& g) {
    for (;;)
      if (Mask m = subset(g)) return m;
  }
  // Cayley duet on G, or its clone quotient after making the connection set H1 A H2.
  Chorus duet(const FiniteGroup& g) {
    Mask a = nonempty(g);
    if (rng() & 1) {
      const auto subs = subgroups(g);
      const Mask h1 = subs[rng() % subs.size()].mask, h2 = subs[rng() % subs.size()].mask;
      a = g.product(g.product(h1, a), h2);
      return clone_quotient(cayley_duet(g, a)).quotient;
    }
    return cayley_duet(g, a);
  }
  bool partial(const Chorus& c) {
    const long e = c.incidences(0, 1);
    return e > 0 && e < static_cast<long>(c.sizes[0]) * c.sizes[1];
  }
};

std::string chorus_brief(const FiniteGroup& g, const Chorus& c) {
  std::ostringstream os;
  os << g.label() << " sizes " << c.sizes[0] << "," << c.sizes[1] << " nbr0 " << mask_str(c.nbr[0][1][0]);
  return os.str();
}

SuiteResult incidence_suite(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  RandomDuets rd(opt.seed);
  const long cases = opt.cases;
  const long max_tries = 200 * cases;

  // uncrossing
  for (long i = 0; i < cases; ++i) {
    const auto& g = rd.group();
    const Chorus c = rd.duet(g);
    auto cross = [&] {
      const Mask a = rd.rng() & c.all(0);
      return Cross{a, (rd.rng() & c.all(1)) & ~c.neighbourhood(0, a, 1)};
    };
    const Cross p = cross(), q = cross();
    const auto [u, v] = uncross(p, q);
    ++r.checked;
    if (!is_cross(c, 0, 1, u) || !is_cross(c, 0, 1, v) ||
        cross_deficiency(c, 0, 1, p) + cross_deficiency(c, 0, 1, q) !=
            cross_deficiency(c, 0, 1, u) + cross_deficiency(c, 0, 1, v))
      t.fail({{"identity", "uncrossing"}, {"duet", chorus_brief(g, c)}, {"P", mask_str(p.a) + "|" + mask_str(p.b)},
              {"Q", mask_str(q.a) + "|" + mask_str(q.b)}},
             "uncrossing equality fails");
  }
  r.counts["uncrossing"] = cases;

  // purification
  long done = 0;
  for (long tries = 0; done < cases && tries < max_tries; ++tries) {
    const auto& g = rd.group();
    const Chorus c = rd.duet(g);
    if (!rd.partial(c) || c.sizes[0] < 2) continue;
    Mask a = rd.rng() & c.all(0);
    if (!a) continue;
    Mask b = c.all(1) & ~c.neighbourhood(0, a, 1);
    const bool make_max = rd.rng() & 1;
    if (make_max) a = c.all(0) & ~c.neighbourhood(1, b, 0);
    const Cross k{a, b};
    if (!k.a || !k.b || cross_deficiency(c, 0, 1, k) <= 0) continue;
    std::vector<Mask> blocks;
    for (Mask p : all_blocks(c, 0))
      if ((p & a) && (p & ~a) && set_deficiency_x(c, 0, 1, p) > 0) blocks.push_back(p);
    if (blocks.empty()) continue;
    const Mask p = blocks[rd.rng() % blocks.size()];
    const auto pur = purify(c, 0, 1, k, p);
    ++done;
    ++r.checked;
    const long wy = point_weight(c, 1), wx = point_weight(c, 0);
    const long d0 = cross_deficiency(c, 0, 1, k), d1 = cross_deficiency(c, 0, 1, pur.weak),
               d2 = cross_deficiency(c, 0, 1, pur.strong);
    std::string why;
    if (!is_cross(c, 0, 1, pur.weak) || !is_cross(c, 0, 1, pur.strong)) why = "purification is not a cross";
    else if (!(d2 >= d1 && d1 >= d0)) why = "deficiency decreased";
    else if (is_maximal_cross(c, 0, 1, k) && !is_maximal_cross(c, 0, 1, pur.strong)) why = "maximality lost";
    else if (popcount(b & ~pur.weak.b) != popcount(b & ~pur.strong.b) ||
             popcount(b & ~pur.weak.b) * wy >= popcount(p) * wx)
      why = "w(B \\ B') bound fails";
    if (!why.empty())
      t.fail({{"identity", "purification"}, {"duet", chorus_brief(g, c)}, {"A", mask_str(a)}, {"B", mask_str(b)},
              {"P", mask_str(p)}},
             why);
  }
  r.counts["purification"] = done;
  if (done < cases) t.fail({{"identity", "purification"}}, "too few purification cases found");

  // duet identity
  for (long i = 0; i < cases; ++i) {
    const auto& g = rd.group();
    const Chorus c = rd.duet(g);
    ++r.checked;
    const auto xy = weights(c, 0, 1), yx = weights(c, 1, 0);
    if (xy.w != yx.w || xy.wbar != yx.wbar)
      t.fail({{"identity", "duet"}, {"duet", chorus_brief(g, c)}}, "w(X,Y) != w(Y,X)");
  }
  r.counts["duet_identity"] = cases;

  // nontrivial trio bound
  done = 0;
  for (long tries = 0; done < cases && tries < max_tries; ++tries) {
    const auto& g = rd.group();
    Trio tr{rd.nonempty(g), rd.nonempty(g), 0};
    tr.c = complete_third(g, tr.a, tr.b) & rd.subset(g);
    if (rd.rng() & 1) tr = trio_close(g, tr);
    if (is_trivial(tr)) continue;
    const Chorus c = cayley_trio(g, tr.a, tr.b, tr.c);
    ++done;
    ++r.checked;
    const std::array<std::array<int, 3>, 6> orders{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
    for (const auto& o : orders) {
      const long d = trio_deficiency_inc(c, o[0], o[1], o[2]);
      const long w = weights(c, o[0], o[1]).w, wb = weights(c, o[1], o[2]).wbar;
      if (!(d <= w && w <= wb && 2 * d <= g.order())) {
        t.fail({{"identity", "nontrivial-bound"}, {"group", g.label()}, {"A", mask_str(tr.a)}, {"B", mask_str(tr.b)},
                {"C", mask_str(tr.c)}},
               "delta <= w(X,Y) <= wbar(Y,Z) or delta <= |G|/2 fails");
        break;
      }
    }
  }
  r.counts["nontrivial_bound"] = done;

  // Olson bound and Hamidoune block
  long olson = 0, blocks = 0;
  for (long tries = 0; (olson < cases || blocks < cases) && tries < max_tries; ++tries) {
    const auto& g = rd.group();
    const Chorus c = rd.duet(g);
    if (!rd.partial(c)) continue;
    const long d = duet_deficiency(c, 0, 1);
    const long w = weights(c, 0, 1).w;
    std::map<std::string, std::string> wit{{"duet", chorus_brief(g, c)}, {"delta", std::to_string(d)}};
    if (blocks < cases) {
      ++blocks;
      ++r.checked;
      const auto hb = hamidoune_block(c, 0, 1);
      if (!hb || hb->deficiency != d) {
        wit["identity"] = "hamidoune";
        t.fail(wit, "no block attains the duet deficiency");
      } else if (block_closure(c, hb->side == 0 ? 0 : 1, hb->block) != hb->block) {
        wit["identity"] = "hamidoune";
        t.fail(wit, "returned set is not a block");
      }
    }
    if (olson < cases && connected_pair(c, 0, 1)) {
      ++olson;
      ++r.checked;
      if (2 * d > w || 3 * d > g.order()) {
        wit["identity"] = "olson";
        t.fail(wit, "delta > min(w/2, |G|/3)");
      }
    }
  }
  r.counts["olson"] = olson;
  r.counts["hamidoune"] = blocks;
  if (olson < cases) t.fail({{"identity", "olson"}}, "too few connected duets sampled");
  return r;
}

// --- 12 ------------------------------------------------------------------

SuiteResult appendix_suite(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const int cap = opt.max_order ? opt.max_order : 16;
  const auto groups = groups_upto(cap, catalog_upto16());
  std::vector<SuiteResult> parts(groups.size());
  parallel_for(static_cast<int>(groups.size()), opt.workers, [&](int gi) {
    const auto& g = groups[gi];
    SuiteResult& part = parts[gi];
    Tally pt{part};
    std::set<std::pair<Mask, Mask>> seen;
    for (const auto& k : subgroups(g)) {
      // double cosets K x K
      std::vector<Mask> dc;
      Mask covered = 0;
      for (int x = 0; x < g.order(); ++x) {
        if (has(covered, x)) continue;
        const Mask d = g.product(g.product(k.mask, bit(x)), k.mask);
        covered |= d;
        dc.push_back(d);
      }
      const int target = 2 * k.order();
      std::vector<Mask> bs;
      for (size_t i = 0; i < dc.size(); ++i) {
        if (popcount(dc[i]) == target) bs.push_back(dc[i]);
        for (size_t j = i + 1; j < dc.size(); ++j)
          if (popcount(dc[i]) + popcount(dc[j]) == target) bs.push_back(dc[i] | dc[j]);
      }
      for (Mask b : bs) {
        if (popcount(g.product(b, b)) >= 2 * popcount(b)) continue;
        if (!seen.insert({b, k.mask}).second) continue;
        ++part.checked;
        const Report rep = appendix_prop(g, b, k.mask);
        std::string why;
        if (!check_appendix(g, b, k.mask, rep, &why))
          pt.fail({{"group", g.label()}, {"B", mask_str(b)}, {"K", mask_str(k.mask)}}, why);
      }
    }
    part.counts["instances." + g.label()] = part.checked;
  });
  for (auto& p : parts) {
    r.checked += p.checked;
    for (const auto& [k, v] : p.counts)
      if (k != "failures") r.counts[k] = v;
    if (!p.witness.empty()) {
      auto w = p.witness;
      const std::string why = w["failed"];
      w.erase("failed");
      t.fail(w, why);
    }
  }
  return r;
}

// --- extra: corollary reports ---------------------------------------------

SuiteResult corollaries_suite(const SuiteOptions& opt) {
  SuiteResult r;
  Tally t{r};
  const int cap = opt.max_order ? opt.max_order : 6;
  for (const auto& g : groups_upto(cap, catalog_upto12())) {
    for (Mask a = 1; a <= g.full(); ++a)
      for (Mask b = 1; b <= g.full(); ++b) {
        std::map<std::string, std::string> w{{"group", g.label()}, {"A", mask_str(a)}, {"B", mask_str(b)}};
        const auto ws = weak_structure(g, a, b);
        if (ws.hypotheses) {
          ++r.checked;
          ++r.counts["weak_structure." + ws.outcome];
          if (ws.outcome.empty()) t.fail(w, "weak_structure: no outcome");
        }
        const auto dv = def_vs_disp(g, a, b);
        if (dv.hypotheses) {
          ++r.checked;
          ++r.counts["def_vs_disp." + dv.outcome];
          if (dv.outcome.empty() || (a == b && dv.outcome == "4")) t.fail(w, "def_vs_disp: no outcome");
        }
        const auto ss = struc_or_stable(g, a, b);
        ++r.checked;
        ++r.counts["struc_or_stable." + ss.outcome];
        if (ss.outcome.empty()) t.fail(w, "struc_or_stable: no outcome");
        if (a == b) {
          const auto sq = a_squared(g, a);
          if (sq.hypotheses) {
            ++r.checked;
            ++r.counts["a_squared." + sq.outcome];
            if (sq.outcome.empty()) t.fail(w, "a_squared: no outcome");
          }
        }
      }
  }
  return r;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

struct Entry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {{"cauchy-davenport", 1, "|A+B| >= min(p, |A|+|B|-1) over C_p, p <= 13"}, cauchy_davenport},
      {{"vosper", 2, "critical trios in C_5, C_7: a singleton or common-ratio progressions"}, vosper},
      {{"kneser", 3, "abelian groups of order <= 12, H = stab(AB)"}, kneser},
      {{"rep-cor", 4, "delta(A,B) <= min representation count, |G| <= 8"}, rep_cor},
      {{"sweep", 5, "classify and verify every maximal critical trio, |G| <= 12"}, sweep_suite},
      {{"controlled", 6, "controlling subgroup for every pair, |G| <= 12"}, controlled_suite},
      {{"cuts", 7, "small edge cuts of the catalog graphs"}, cuts_suite},
      {{"videos", 8, "video trios: collision-free, critical, maximal, cut formula, cube density"}, videos_suite},
      {{"octahedral", 9, "maximal critical configurations over C_2"}, octahedral_suite},
      {{"dihedral-law", 10, "dihedral progression products and prechords in D_3..D_12"}, dihedral_law},
      {{"incidence", 11, "randomized incidence identities over Cayley duets"}, incidence_suite},
      {{"appendix", 12, "KBK = B, |B| = 2|K| instances, |G| <= 16"}, appendix_suite},
      {{"corollaries", 0, "structure corollaries on every pair, |G| <= 6"}, corollaries_suite}};
  return e;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return out;
}

bool has_suite(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& e : entries())
    if (e.info.name == name) {
      SuiteResult r = e.fn(opt);
      r.suite = name;
      r.criterion = e.info.criterion;
      finish(r);
      return r;
    }
  throw std::invalid_argument("unknown suite: " + name);
}

const std::map<std::string, std::map<std::string, long>>& frozen_cut_census() {
  static const std::map<std::string, std::map<std::string, long>> census{
      {"Cube", {{"singleton", 8}, {"edge", 12}, {"two-edge-path", 24}, {"shortest-cycle", 6}}},
      {"Octahedron", {{"singleton", 6}, {"edge", 12}, {"shortest-cycle", 8}}},
      {"K4", {{"singleton", 4}, {"edge", 6}}},
      {"K5", {{"singleton", 5}, {"edge", 10}}},
      {"K6", {{"singleton", 6}, {"edge", 15}, {"shortest-cycle", 20}}},
      {"K33", {{"singleton", 6}, {"edge", 9}, {"two-edge-path", 18}}},
      {"Petersen", {{"singleton", 10}, {"edge", 15}, {"two-edge-path", 30}, {"shortest-cycle", 12}}},
      {"Dodecahedron", {{"singleton", 20}, {"edge", 30}, {"two-edge-path", 60}, {"shortest-cycle", 12}}},
      {"Icosahedron", {{"singleton", 12}, {"edge", 30}, {"shortest-cycle", 20}}},
      {"L(Cube)", {{"singleton", 12}, {"edge", 24}, {"triangle-in-LC", 8}}},
      {"L(K33)", {{"singleton", 9}, {"edge", 18}, {"triangle-in-LC", 6}}},
      {"L(Petersen)", {{"singleton", 15}, {"edge", 30}, {"triangle-in-LC", 10}}},
      {"C7", {{"singleton", 7}, {"edge", 7}, {"path-in-cycle", 7}}}};
  return census;
}

}  // namespace triolab
