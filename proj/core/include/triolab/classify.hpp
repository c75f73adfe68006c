#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triolab/beats.hpp"
#include "triolab/graphs.hpp"
#include "triolab/group.hpp"
#include "triolab/octahedral.hpp"
#include "triolab/setops.hpp"

namespace triolab {

enum class CertTag {
  Trivial,
  PureBeat,
  ImpureBeat,
  PureCyclicChord,
  ImpureCyclicChord,
  PureDihedralChord,
  ImpureDihedralChord,
  Video,
  Unclassified
};
const char* cert_tag_name(CertTag t);

// Witness fields are filled according to the tag.  `transform` maps the input
// trio to the similar trio on which the defining clauses hold.
struct Certificate {
  CertTag tag = CertTag::Unclassified;
  Trio trio;
  int delta = 0;
  Transform transform;
  Mask h = 0;  // H (beats, chords); kernel of the action for videos

  // chords: ratio as a representative of the generating coset S
  int ratio = -1;
  int len_a = 0, len_b = 0;  // cyclic: progression lengths in G/H

  // dihedral chords: progressions {1, S, ..., S^k}{1, F} in G/H given by
  // representatives; F for A and for B
  int flip_a = -1, flip_b = -1;
  int k_a = 0, k_b = 0;
  std::array<int, 6> potential{};  // G-representatives of the vertex potentials
  OctConfig config;                // labels as parent-group masks inside H
  OctType oct_type = OctType::Unclassified;

  // videos
  std::string video_kind;
  std::string video_graph;
  Mask h1 = 0, h2 = 0, h3 = 0;
  int video_case = 0;  // 1..4 numeric relation that holds

  std::vector<std::string> labels;  // every recognizer that fires
  std::string reason;               // unclassified: what was tried
};

struct ClassifyOptions {
  bool all_labels = true;  // run every recognizer, not only the first match
};

Certificate classify_trio(const FiniteGroup& g, const Trio& t, const ClassifyOptions& opt = {});

struct VerifyResult {
  bool ok = false;
  std::string failed;  // first failing clause
};
// Re-derives every clause from (G, T, witness) without calling the recognizers.
VerifyResult verify_certificate(const FiniteGroup& g, const Trio& t, const Certificate& c);

// Continuation of an impure certificate: the subgroup H as its own group and the trio there.
std::optional<Continuation> certificate_continuation(const FiniteGroup& g, const Trio& t, const Certificate& c);

struct SongStep {
  int group_order = 0;
  std::vector<int> to_top;  // local element -> element of the input group
  Trio trio;                // in local indices
  Certificate cert;
};
struct Song {
  std::vector<SongStep> steps;
  bool complete = false;  // ends in a terminal structure
};
Song song_decompose(const FiniteGroup& g, const Trio& t);

// Every nontrivial maximal critical trio up to similarity, as canonical forms.
std::vector<Trio> brute_maximal_critical_trios(const FiniteGroup& g, int workers = 1);

// H with A, B, C all H-conj-stable and delta <= |H|; smallest order first.
std::optional<Subgroup> controlled_witness(const FiniteGroup& g, const Trio& t);
bool is_controlled_by(const FiniteGroup& g, const Trio& t, Mask h);

// --- corollary reports ----------------------------------------------------
struct Report {
  bool hypotheses = false;
  std::string rejected;  // why the hypotheses fail
  std::string outcome;   // "1", "2a", ...
  Mask h = 0, k = 0, l = 0;
  int x = -1, y = -1, z = -1;
  Mask a_plus = 0, b_plus = 0;
  Mask h1 = 0, h2 = 0, h3 = 0;
  std::vector<std::string> all_outcomes;
};
Report weak_structure(const FiniteGroup& g, Mask a, Mask b);
Report def_vs_disp(const FiniteGroup& g, Mask a, Mask b);
Report a_squared(const FiniteGroup& g, Mask a);
Report struc_or_stable(const FiniteGroup& g, Mask a, Mask b);
// Hypotheses: KBK = B, |B| = 2|K|, |B^2| < 2|B|.  Returns L, H, x.
Report appendix_prop(const FiniteGroup& g, Mask b, Mask k);
bool check_appendix(const FiniteGroup& g, Mask b, Mask k, const Report& r, std::string* why = nullptr);

}  // namespace triolab
