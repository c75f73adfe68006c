#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "triolab/graphs.hpp"
#include "triolab/incidence.hpp"
#include "triolab/octahedral.hpp"
#include "triolab/parallel.hpp"

namespace triolab::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json transform_json(const Transform& t) { return {{"perm", t.perm}, {"x", t.x}, {"y", t.y}, {"z", t.z}}; }

json trio_json(const FiniteGroup& g, const Trio& t) {
  return {{"A", mask_json(g, t.a)}, {"B", mask_json(g, t.b)}, {"C", mask_json(g, t.c)}};
}

json song_json(const FiniteGroup& g, const Song& s) {
  json steps = json::array();
  for (const auto& st : s.steps) {
    auto lift = [&](Mask m) {
      json a = json::array();
      for (int e : elements_of(m)) a.push_back(st.to_top[e]);
      return a;
    };
    steps.push_back({{"group_order", st.group_order},
                     {"trio", {{"A", lift(st.trio.a)}, {"B", lift(st.trio.b)}, {"C", lift(st.trio.c)}}},
                     {"tag", cert_tag_name(st.cert.tag)},
                     {"delta", st.cert.delta}});
  }
  (void)g;
  return {{"steps", steps}, {"complete", s.complete}};
}

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v ? v : "";
}

void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "text") out << render_text(j);
  else out << j.dump(2) << "\n";
}

json envelope(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

void check_order(const FiniteGroup& g) {
  if (g.order() > max_order_cap())
    throw UsageError("group order " + std::to_string(g.order()) + " exceeds the cap " + std::to_string(max_order_cap()) +
                     " (set TRIOLAB_MAX_ORDER to override)");
}

}  // namespace

FiniteGroup group_from_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    const json j = json::parse(arg);
    const int n = j.at("order").get<int>();
    const auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n) throw GroupError("table size differs from order");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroup(table, names, "table" + std::to_string(n));
  }
  return parse_group(arg);
}

Mask subset_from_arg(const FiniteGroup& g, const std::string& arg) {
  Mask m = 0;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int idx = -1;
    for (int e = 0; e < g.order(); ++e)
      if (g.name(e) == tok) idx = e;
    if (idx < 0) {
      size_t used = 0;
      try {
        idx = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || idx < 0 || idx >= g.order()) throw UsageError("unknown element '" + tok + "'");
    }
    m |= bit(idx);
  }
  return m;
}

json mask_json(const FiniteGroup&, Mask m) {
  json a = json::array();
  for (int e : elements_of(m)) a.push_back(e);
  return a;
}

json certificate_json(const FiniteGroup& g, const Certificate& c) {
  json w = {{"transform", transform_json(c.transform)}};
  switch (c.tag) {
    case CertTag::Trivial: break;
    case CertTag::PureBeat:
    case CertTag::ImpureBeat: w["H"] = mask_json(g, c.h); break;
    case CertTag::PureCyclicChord:
    case CertTag::ImpureCyclicChord:
      w["H"] = mask_json(g, c.h);
      w["ratio"] = c.ratio;
      w["len_a"] = c.len_a;
      w["len_b"] = c.len_b;
      break;
    case CertTag::PureDihedralChord:
    case CertTag::ImpureDihedralChord: {
      w["H"] = mask_json(g, c.h);
      w["ratio"] = c.ratio;
      w["flip_a"] = c.flip_a;
      w["flip_b"] = c.flip_b;
      w["k_a"] = c.k_a;
      w["k_b"] = c.k_b;
      if (c.tag == CertTag::ImpureDihedralChord) {
        w["type"] = oct_type_name(c.oct_type);
        w["potential"] = c.potential;
        json labels = json::object();
        for (int e = 0; e < 12; ++e) labels[edge_name(e)] = mask_json(g, c.config.labels[e]);
        w["config"] = labels;
      }
      break;
    }
    case CertTag::Video:
      w["kind"] = c.video_kind;
      w["graph"] = c.video_graph;
      w["H"] = mask_json(g, c.h);
      w["H1"] = mask_json(g, c.h1);
      w["H2"] = mask_json(g, c.h2);
      w["H3"] = mask_json(g, c.h3);
      w["case"] = c.video_case;
      break;
    case CertTag::Unclassified: w["reason"] = c.reason; break;
  }
  return {{"tag", cert_tag_name(c.tag)}, {"witness", w}, {"labels", c.labels}, {"delta", c.delta}};
}

json suite_json(const SuiteResult& r) {
  json j = {{"suite", r.suite},     {"criterion", r.criterion}, {"pass", r.pass},
            {"checked", r.checked}, {"counts", r.counts}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json report_json(const FiniteGroup& g, const Report& r) {
  json j = {{"hypotheses", r.hypotheses}};
  if (!r.hypotheses) {
    j["rejected"] = r.rejected;
    return j;
  }
  j["outcome"] = r.outcome;
  j["all_outcomes"] = r.all_outcomes;
  json w = json::object();
  auto put = [&](const char* k, Mask m) {
    if (m) w[k] = mask_json(g, m);
  };
  put("H", r.h);
  put("K", r.k);
  put("L", r.l);
  put("A_plus", r.a_plus);
  put("B_plus", r.b_plus);
  put("H1", r.h1);
  put("H2", r.h2);
  put("H3", r.h3);
  if (r.x >= 0) w["x"] = r.x;
  if (r.y >= 0) w["y"] = r.y;
  if (r.z >= 0) w["z"] = r.z;
  j["witness"] = w;
  return j;
}

namespace {

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& v = it.value();
      const bool flat = !v.is_structured() || (v.is_array() && std::none_of(v.begin(), v.end(), [](const json& e) {
                                                  return e.is_structured();
                                                }));
      if (flat) {
        os << pad << it.key() << ": ";
        if (v.is_array()) {
          os << "{";
          bool first = true;
          for (const auto& e : v) {
            os << (first ? "" : ", ") << (e.is_string() ? e.get<std::string>() : e.dump());
            first = false;
          }
          os << "}\n";
        } else {
          os << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
      } else {
        os << pad << it.key() << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& e : j) {
      os << pad << "- [" << i++ << "]\n";
      render(os, e, indent + 2);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

namespace {

struct Common {
  int workers = 1;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::string format = "json";
};

int cmd_classify(const Common& co, const std::string& group, const std::string& sa, const std::string& sb,
                 const std::string& sc, bool with_c, std::ostream& out) {
  const FiniteGroup g = group_from_arg(group);
  check_order(g);
  const Mask a = subset_from_arg(g, sa), b = subset_from_arg(g, sb);
  Trio input{a, b, with_c ? subset_from_arg(g, sc) : complete_third(g, a, b)};
  if (!is_trio(g, input)) throw UsageError("the sets do not form a subset trio (1 lies in ABC)");
  json j = envelope("classify");
  j["group"] = g.label();
  j["order"] = g.order();
  j["elements"] = g.names();
  j["input"] = trio_json(g, input);
  const Trio t = trio_close(g, input);
  j["closed"] = trio_json(g, t);
  const int delta = trio_deficiency(g, t);
  j["delta"] = delta;
  if (delta <= 0 || is_trivial(t)) {
    j["critical"] = delta > 0;
    j["certificate"] = nullptr;
    j["note"] = is_trivial(t) ? "maximal closure is trivial" : "maximal closure is not critical";
    emit(out, j, co.format);
    return kOk;
  }
  j["critical"] = true;
  const Certificate c = classify_trio(g, t);
  const VerifyResult v = verify_certificate(g, t, c);
  j["certificate"] = certificate_json(g, c);
  j["verified"] = v.ok;
  if (!v.ok) j["failed_clause"] = v.failed;
  j["song"] = song_json(g, song_decompose(g, t));
  emit(out, j, co.format);
  return v.ok && c.tag != CertTag::Unclassified ? kOk : kVerifyFailed;
}

int cmd_sweep(const Common& co, int max_order, const std::string& path, std::ostream& out) {
  if (max_order < 1 || max_order > 48) throw UsageError("--max-order must lie in 1..48");
  if (max_order > max_order_cap())
    throw UsageError("--max-order exceeds the cap " + std::to_string(max_order_cap()) + " (set TRIOLAB_MAX_ORDER)");
  if (max_order > 12) throw UsageError("exhaustive trio enumeration is limited to order 12");
  json j = envelope("sweep");
  j["max_order"] = max_order;
  json groups = json::array();
  json unclassified = json::array();
  bool ok = true;
  long total = 0;
  for (const auto& name : catalog_upto16()) {
    const FiniteGroup g = parse_group(name);
    if (g.order() > max_order) continue;
    const auto trios = brute_maximal_critical_trios(g, co.workers);
    std::vector<json> rows(trios.size());
    std::vector<char> good(trios.size(), 0);
    parallel_for(static_cast<int>(trios.size()), co.workers, [&](int i) {
      const Certificate c = classify_trio(g, trios[i]);
      const VerifyResult v = verify_certificate(g, trios[i], c);
      good[i] = v.ok && c.tag != CertTag::Unclassified;
      rows[i] = {{"trio", trio_json(g, trios[i])}, {"certificate", certificate_json(g, c)}, {"verified", v.ok}};
      if (!v.ok) rows[i]["failed_clause"] = v.failed;
    });
    json tags = json::object();
    for (size_t i = 0; i < rows.size(); ++i) {
      const std::string tag = rows[i]["certificate"]["tag"];
      tags[tag] = tags.value(tag, 0) + 1;
      if (!good[i]) {
        ok = false;
        json u = rows[i];
        u["group"] = name;
        unclassified.push_back(u);
      }
    }
    total += static_cast<long>(trios.size());
    groups.push_back({{"group", name}, {"order", g.order()}, {"count", trios.size()}, {"tags", tags}, {"trios", rows}});
  }
  j["groups"] = groups;
  j["unclassified"] = unclassified;
  j["total"] = total;
  j["ok"] = ok;
  if (!path.empty()) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << j.dump(2) << "\n";
    json summary = envelope("sweep");
    summary["max_order"] = max_order;
    summary["out"] = path;
    summary["total"] = total;
    summary["ok"] = ok;
    json counts = json::object();
    for (const auto& gr : groups) counts[gr["group"].get<std::string>()] = gr["count"];
    summary["counts"] = counts;
    emit(out, summary, co.format);
  } else {
    emit(out, j, co.format);
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const Common& co, const std::string& suite, int p, long cases, int max_order, std::ostream& out) {
  SuiteOptions opt;
  opt.workers = co.workers;
  opt.seed = co.seed;
  opt.p = p;
  opt.cases = cases;
  opt.max_order = max_order;
  std::vector<std::string> names;
  if (suite == "all") {
    for (const auto& s : suite_list())
      if (s.criterion > 0) names.push_back(s.name);
  } else {
    if (!has_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
    names.push_back(suite);
  }
  json j = envelope("verify");
  json results = json::array();
  bool ok = true;
  for (const auto& n : names) {
    SuiteResult r;
    try {
      r = run_suite(n, opt);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    ok = ok && r.pass;
    results.push_back(suite_json(r));
  }
  j["seed"] = co.seed;
  j["results"] = results;
  j["ok"] = ok;
  emit(out, j, co.format);
  return ok ? kOk : kVerifyFailed;
}

int cmd_cuts(const Common& co, const std::string& name, std::ostream& out) {
  Graph g;
  try {
    g = named_graph(name);
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  }
  json j = envelope("cuts");
  j["graph"] = name;
  j["vertices"] = g.n;
  j["edges"] = g.edges.size();
  const auto aut = graph_automorphisms(g);
  const auto info = automorphism_info(g, aut);
  j["automorphisms"] = info.order;
  j["vertex_transitive"] = info.vertex_transitive;
  j["edge_transitive"] = info.edge_transitive;
  const auto eq = is_equitable(g);
  j["equitable_s"] = eq.s;
  if (!info.vertex_transitive || !info.edge_transitive || !is_connected(g)) {
    j["note"] = "small-cut census needs a connected vertex- and edge-transitive graph";
    emit(out, j, co.format);
    return kOk;
  }
  json cuts = json::array();
  std::map<std::string, long> counts;
  bool ok = true;
  for (const auto& c : enumerate_small_cuts(g, co.workers)) {
    cuts.push_back({{"A", elements_of(c.set)}, {"cut", c.cut}, {"outcome", cut_outcome_name(c.outcome)}});
    ++counts[cut_outcome_name(c.outcome)];
    ok = ok && c.outcome != CutOutcome::None;
  }
  j["degree"] = *regular_degree(g);
  j["counts"] = counts;
  j["cuts"] = cuts;
  const auto& frozen = frozen_cut_census();
  if (auto it = frozen.find(name); it != frozen.end()) {
    j["matches_frozen"] = it->second == counts;
    ok = ok && it->second == counts;
  }
  j["ok"] = ok;
  emit(out, j, co.format);
  return ok ? kOk : kVerifyFailed;
}

int cmd_video(const Common& co, const std::string& kind, const std::string& graph, std::ostream& out) {
  std::optional<VideoKind> k;
  for (VideoKind v : all_video_kinds())
    if (video_kind_name(v) == kind) k = v;
  if (!k) {
    std::string names;
    for (VideoKind v : all_video_kinds()) names += std::string(names.empty() ? "" : ", ") + video_kind_name(v);
    throw UsageError("unknown video kind '" + kind + "' (one of " + names + ")");
  }
  GraphGeometry v;
  try {
    if (is_standard(*k)) {
      if (graph.empty()) throw UsageError("standard videos need --graph");
      v = build_video(*k, named_graph(graph));
    } else {
      v = build_exceptional_video(*k);
    }
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  }
  const Chorus& c = v.chorus;
  json j = envelope("video");
  j["kind"] = kind;
  if (!graph.empty()) j["graph"] = graph;
  j["sizes"] = c.sizes;
  j["group_order"] = c.group_order;
  const bool collision_free = !find_collision(c, 0, 1, 2);
  j["collision_free"] = collision_free;
  long delta = 0;
  if (collision_free) delta = trio_deficiency_inc(c, 0, 1, 2);
  j["delta"] = delta;
  const bool maximal = trio_maximal_by_probes(c);
  j["maximal"] = maximal;
  json dens = json::object();
  for (auto [i, jj] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
    const long num = c.incidences(i, jj), den = static_cast<long>(c.sizes[i]) * c.sizes[jj];
    const long gg = std::gcd(num, den);
    dens[std::to_string(i) + std::to_string(jj)] = std::to_string(num / gg) + "/" + std::to_string(den / gg);
  }
  j["densities"] = dens;
  const bool ok = collision_free && delta > 0 && maximal;
  j["ok"] = ok;
  emit(out, j, co.format);
  return ok ? kOk : kVerifyFailed;
}

int cmd_report(const Common& co, std::string kind, const std::string& group, const std::string& sa,
               const std::string& sb, const std::string& sk, std::ostream& out) {
  const FiniteGroup g = group_from_arg(group);
  check_order(g);
  const Mask a = subset_from_arg(g, sa);
  std::replace(kind.begin(), kind.end(), '_', '-');
  json j = envelope("report");
  j["kind"] = kind;
  j["group"] = g.label();
  Report r;
  bool refuted = false;
  if (kind == "weak-structure") {
    r = weak_structure(g, a, subset_from_arg(g, sb));
    refuted = r.hypotheses && r.outcome.empty();
  } else if (kind == "def-vs-disp") {
    r = def_vs_disp(g, a, subset_from_arg(g, sb));
    refuted = r.hypotheses && r.outcome.empty();
  } else if (kind == "a-squared") {
    r = a_squared(g, a);
    refuted = r.hypotheses && r.outcome.empty();
  } else if (kind == "struc-or-stable") {
    r = struc_or_stable(g, a, subset_from_arg(g, sb));
    refuted = r.outcome.empty();
  } else if (kind == "appendix") {
    const Mask k = subset_from_arg(g, sk);
    r = appendix_prop(g, a, k);
    std::string why;
    if (r.hypotheses && !check_appendix(g, a, k, r, &why)) {
      refuted = true;
      j["failed"] = why;
    }
  } else {
    throw UsageError("unknown report kind '" + kind +
                     "' (weak-structure, def-vs-disp, a-squared, struc-or-stable, appendix)");
  }
  j["report"] = report_json(g, r);
  j["ok"] = !refuted;
  emit(out, j, co.format);
  return refuted ? kVerifyFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"triolab: critical product sets in finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Common co;
  app.add_option("--workers", co.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", co.seed, "seed for randomized suites");
  app.add_option("--format", co.format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string group, sa, sb, sc, sk, out_path, suite, graph, kind;
  int max_order = 12, p = 0, suite_order = 0;
  long cases = SuiteOptions{}.cases;

  auto* classify = app.add_subcommand("classify", "classify the maximal closure of (A, B[, C])");
  classify->add_option("--group", group, "group descriptor")->required();
  classify->add_option("--a", sa, "set A")->required();
  classify->add_option("--b", sb, "set B")->required();
  auto* copt = classify->add_option("--c", sc, "set C (default: complement of (AB)^-1)");

  auto* sweep = app.add_subcommand("sweep", "classify every maximal critical trio of the catalog");
  sweep->add_option("--max-order", max_order, "largest group order");
  sweep->add_option("--out", out_path, "write the full census here");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--p", p, "prime for cauchy-davenport");
  verify->add_option("--cases", cases, "cases per randomized identity")->check(CLI::PositiveNumber);
  verify->add_option("--max-order", suite_order, "override the suite's group order bound");

  auto* cuts = app.add_subcommand("cuts", "small edge-cut census of a named graph");
  cuts->add_option("--graph", graph, "graph name")->required();

  auto* video = app.add_subcommand("video", "build and check a video");
  video->add_option("--kind", kind, "video kind")->required();
  video->add_option("--graph", graph, "host graph for standard kinds");

  auto* report = app.add_subcommand("report", "structure corollary report");
  report->add_option("--kind", kind, "weak-structure | def-vs-disp | a-squared | struc-or-stable | appendix")
      ->required();
  report->add_option("--group", group, "group descriptor")->required();
  report->add_option("--a", sa, "set A (B for appendix)")->required();
  report->add_option("--b", sb, "set B");
  report->add_option("--k", sk, "subgroup K (appendix)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(co, group, sa, sb, sc, copt->count() > 0, out);
    if (*sweep) return cmd_sweep(co, max_order, out_path, out);
    if (*verify) return cmd_verify(co, suite, p, cases, suite_order, out);
    if (*cuts) return cmd_cuts(co, graph, out);
    if (*video) return cmd_video(co, kind, graph, out);
    if (*report) return cmd_report(co, kind, group, sa, sb, sk, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: bad JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace triolab::cli
