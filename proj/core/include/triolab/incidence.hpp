#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triolab/group.hpp"

namespace triolab {

// Ground sets are small (<= 64 points each), so point subsets of one ground
// set are masks over its local indices.
struct Chorus {
  std::vector<int> sizes;
  std::vector<std::vector<std::vector<Mask>>> nbr;  // [i][j][x] -> neighbours of (x,i) in X_j
  long group_order = 1;
  std::vector<std::vector<std::vector<int>>> gens;  // [g][type][x] -> image
  std::vector<std::vector<int>> partition;          // optional grouping of ground sets

  int rank() const { return static_cast<int>(sizes.size()); }
  Mask all(int t) const { return sizes[t] == 64 ? ~Mask{0} : bit(sizes[t]) - 1; }
  bool incident(int i, int x, int j, int y) const { return has(nbr[i][j][x], y); }
  Mask neighbourhood(int i, Mask a, int j) const;  // N(A) within X_j
  long incidences(int i, int j) const;
};

Chorus empty_chorus(const std::vector<int>& sizes, long group_order);
void add_incidence(Chorus& c, int i, int x, int j, int y);
void validate_chorus(const Chorus& c);  // symmetry, no intra-type, action preserves ~

// (x,i) ~ (y,j) iff y in x M_ij ; requires M_ii empty and M_ij = M_ji^-1.
Chorus cayley_chorus(const FiniteGroup& g, const std::vector<std::vector<Mask>>& m);
Chorus cayley_duet(const FiniteGroup& g, Mask a);
Chorus cayley_trio(const FiniteGroup& g, Mask a, Mask b, Mask c);
std::vector<int> generating_set(const FiniteGroup& g);

bool transitive_on(const Chorus& c, int t);
bool connected_pair(const Chorus& c, int i, int j);

struct CloneQuotient {
  Chorus quotient;
  std::vector<std::vector<int>> cls;  // [type][x] -> class index
};
CloneQuotient clone_quotient(const Chorus& c);

struct DuetWeights {
  long point_x = 0, point_y = 0;  // w°
  long d = 0, dbar = 0;
  long w = 0, wbar = 0;
};
long point_weight(const Chorus& c, int t);
DuetWeights weights(const Chorus& c, int x, int y);

// Returns the first colliding triple if any.
std::optional<std::array<int, 3>> find_collision(const Chorus& c, int x, int y, int z);
long trio_deficiency_inc(const Chorus& c, int x, int y, int z);

struct Cross {
  Mask a = 0, b = 0;
  auto operator<=>(const Cross&) const = default;
};
bool is_cross(const Chorus& c, int x, int y, const Cross& k);
long cross_deficiency(const Chorus& c, int x, int y, const Cross& k);
Cross cross_of_point(const Chorus& c, int x, int y, int z, int point);
long set_deficiency_x(const Chorus& c, int x, int y, Mask a);  // delta(A, Y \ N(A))
long set_deficiency_y(const Chorus& c, int x, int y, Mask b);  // delta(X \ N(B), B)
long duet_deficiency(const Chorus& c, int x, int y);            // |X| <= 16 or |Y| <= 16
std::pair<Cross, Cross> uncross(const Cross& p, const Cross& q);
bool is_maximal_cross(const Chorus& c, int x, int y, const Cross& k);

struct Purification {
  Cross weak, strong;
};
// P a critical boundary block of X with respect to A.
Purification purify(const Chorus& c, int x, int y, const Cross& k, Mask p);

Mask block_closure(const Chorus& c, int t, Mask a);
std::vector<Mask> blocks_containing(const Chorus& c, int t, int point);  // incl. singleton and X
std::vector<Mask> all_blocks(const Chorus& c, int t);

struct HamidouneBlock {
  int side = 0;  // 0: block in X, 1: block in Y
  Mask block = 0;
  long deficiency = 0;
};
std::optional<HamidouneBlock> hamidoune_block(const Chorus& c, int x, int y);

struct Realization {
  std::vector<std::vector<Mask>> matrix;
  bool strong_isomorphism = false;
};
// Requires the action given by all elements of g in index order (as built by
// cayley_chorus with all elements); supplied separately here.
Realization sabidussi_realize(const FiniteGroup& g,
                              const std::vector<std::vector<std::vector<int>>>& element_action,
                              const Chorus& c, const std::vector<int>& basepoints);
std::vector<std::vector<std::vector<int>>> cayley_element_action(const FiniteGroup& g, int rank);

// Incidence-preserving bijection mapping ground set i of `a` to type_map[i] of `b`.
std::optional<std::vector<std::vector<int>>> find_isomorphism(const Chorus& a, const Chorus& b,
                                                              const std::vector<int>& type_map);
// Sub-chorus on the listed ground sets (action restricted).
Chorus restrict_types(const Chorus& c, const std::vector<int>& types);

// Adding any G-orbit of non-incident pairs between distinct ground sets
// creates a collision (checked for the three sides of a rank-3 chorus).
bool trio_maximal_by_probes(const Chorus& c);

}  // namespace triolab
