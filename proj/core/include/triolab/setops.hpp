#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "triolab/group.hpp"

namespace triolab {

// A bitset tied to a group; most code passes raw masks plus the group.
struct GroupSubset {
  const FiniteGroup* group = nullptr;
  Mask bits = 0;
  int size() const { return popcount(bits); }
  GroupSubset complement() const { return {group, group->complement(bits)}; }
  GroupSubset inverse() const { return {group, group->inverse(bits)}; }
};

GroupSubset product_set(const GroupSubset& a, const GroupSubset& b);

int deficiency_pair(const FiniteGroup& g, Mask a, Mask b);  // throws on empty input

struct Trio {
  Mask a = 0, b = 0, c = 0;
  auto operator<=>(const Trio&) const = default;
  Mask& operator[](int i) { return i == 0 ? a : i == 1 ? b : c; }
  Mask operator[](int i) const { return i == 0 ? a : i == 1 ? b : c; }
};

struct TrioHash {
  size_t operator()(const Trio& t) const {
    size_t h = t.a * 0x9E3779B97F4A7C15ull;
    h ^= (t.b + 0x632BE59BD9B4E019ull) * 0xBF58476D1CE4E5B9ull;
    h ^= (t.c + 0x85EBCA77C2B2AE63ull) * 0x94D049BB133111EBull;
    return h ^ (h >> 29);
  }
};

// Trio together with cached deficiency and (lazily filled) maximality.
struct SubsetTrio {
  Trio sets;
  int deficiency = 0;
  int maximal = -1;  // -1 unknown, 0 no, 1 yes
};

int trio_deficiency(const FiniteGroup& g, const Trio& t);
bool is_trio(const FiniteGroup& g, const Trio& t);  // 1 not in ABC
bool is_trivial(const Trio& t);                      // some side empty
bool is_maximal(const FiniteGroup& g, const Trio& t);
Mask complete_third(const FiniteGroup& g, Mask a, Mask b);  // complement of (AB)^-1

SubsetTrio trio_from_pair(const FiniteGroup& g, Mask a, Mask b);

// Update order is a permutation of "CAB"; each step replaces one set by the
// complement of the inverse product of the other two.
Trio trio_close(const FiniteGroup& g, const Trio& t, const std::string& order = "CAB");

// Similarity transform: (x P0 y^-1, y P1 z^-1, z P2 x^-1) where (P0,P1,P2) is
// perm p of the trio:
//   0 (A,B,C)  1 (B,C,A)  2 (C,A,B)  3 (C^-1,B^-1,A^-1)  4 (B^-1,A^-1,C^-1)  5 (A^-1,C^-1,B^-1)
struct Transform {
  int perm = 0;
  int x = 0, y = 0, z = 0;
  auto operator<=>(const Transform&) const = default;
};

Trio permuted(const FiniteGroup& g, const Trio& t, int perm);
Trio apply_transform(const FiniteGroup& g, const Trio& t, const Transform& tr);
Mask translate(const FiniteGroup& g, int x, Mask a, int y);  // x A y^-1

struct Canonical {
  Trio trio;
  Transform transform;  // apply_transform(g, input, transform) == trio
};
// Exact minimum of the similarity orbit (masks compared as integers, A first).
Canonical similarity_canonical(const FiniteGroup& g, const Trio& t);
// Orbit by breadth-first closure under the generating transformations.
std::set<Trio> similarity_orbit_bfs(const FiniteGroup& g, const Trio& t);

Mask stab_left(const FiniteGroup& g, Mask a);
Mask stab_right(const FiniteGroup& g, Mask a);
std::pair<Subgroup, Subgroup> stabilizers(const FiniteGroup& g, Mask a);

int rep_count(const FiniteGroup& g, Mask a, Mask b, int z);
int rep_min(const FiniteGroup& g, Mask a, Mask b);

struct CosetEnvelope {
  Subgroup h;
  int x = 0;
};
CosetEnvelope coset_envelope(const FiniteGroup& g, Mask a);

// every y in A has some x with y (x^-1 H x) contained in A
bool conj_stable(const FiniteGroup& g, Mask a, Mask h);

}  // namespace triolab
