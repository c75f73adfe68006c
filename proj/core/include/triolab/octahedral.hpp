#pragma once

#include <array>
#include <string>
#include <vector>

#include "triolab/beats.hpp"
#include "triolab/group.hpp"
#include "triolab/incidence.hpp"
#include "triolab/progressions.hpp"

namespace triolab {

// Labels on the 12 octahedron edges (A1..A4, B1..B4, C1..C4), subsets of H.
struct OctConfig {
  std::array<Mask, 12> labels{};
  auto operator<=>(const OctConfig&) const = default;
};

enum class OctType { Minus1, Zero, One, TwoA, TwoB, Unclassified };
const char* oct_type_name(OctType t);

enum class EdgeState { Empty, Grey, Full };

struct OctClassification {
  OctType type = OctType::Unclassified;
  std::array<EdgeState, 12> states{};
  // type 1: the grey triangle; type 2: the two grey triangles, rotated so
  // that the shared edge comes first, with `first` the impure one for 2A.
  std::array<int, 3> tri1{-1, -1, -1}, tri2{-1, -1, -1};
  Trio continuation;  // in H (type 1 and 2A)
  Mask k1 = 0, k2 = 0;  // K', K''
  int x = -1;
  BeatWitness inner;    // 2A: impure beat of (A',B',C') relative to K'
  BeatWitness pure1, pure2;  // pure beats of (xK',B',C') / (xK'',B'',C'')
  std::string reason;
};

bool validate_config(const FiniteGroup& h, const OctConfig& c);
int config_deficiency(const FiniteGroup& h, const OctConfig& c);
OctConfig maximalize_config(const FiniteGroup& h, OctConfig c);
bool is_maximal_config(const FiniteGroup& h, const OctConfig& c);
std::array<EdgeState, 12> edge_states(const FiniteGroup& h, const OctConfig& c);

OctClassification classify_config(const FiniteGroup& h, const OctConfig& c);
// Re-checks the witness data without using the search.
bool verify_oct_classification(const FiniteGroup& h, const OctConfig& c, const OctClassification& k,
                               std::string* why = nullptr);

// Rank-6 Cayley chorus with parts {u',u}, {v',v}, {w',w}.
Chorus to_cayley_oct_chorus(const FiniteGroup& h, const OctConfig& c);
long oct_chorus_deficiency(const Chorus& c);
bool oct_chorus_maximal_by_probes(const Chorus& c);

// Every maximal critical configuration (no symmetry reduction), in label order.
std::vector<OctConfig> enumerate_maximal_critical(const FiniteGroup& h, int workers = 1);

// A vertex automorphism of the octahedron acting on labels: edge e goes to
// edge[e], with its label inverted when the image edge points the other way.
struct OctSymmetry {
  std::array<int, 6> vertex{};
  std::array<int, 12> edge{};
  std::array<bool, 12> invert{};
};
std::vector<OctSymmetry> oct_symmetries();
OctConfig apply_symmetry(const FiniteGroup& h, const OctConfig& c, const OctSymmetry& s);

}  // namespace triolab
