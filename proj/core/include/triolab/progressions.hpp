#pragma once

#include <array>
#include <vector>

#include "triolab/group.hpp"

namespace triolab {

// offset * {ratio^0, ..., ratio^(length-1)}
struct GeometricProgression {
  int ratio = 0;
  int offset = 0;
  int length = 0;
  auto operator<=>(const GeometricProgression&) const = default;
};

Mask geometric_set(const FiniteGroup& g, int ratio, int offset, int length);
// All proper realizations (ratio^length * offset-free end outside the set).
// A singleton is reported once per nonidentity ratio.
std::vector<GeometricProgression> detect_geometric(const FiniteGroup& g, Mask a);
bool basic_geometric(const FiniteGroup& g, Mask a, int ratio, int* length = nullptr);

// {1, r, ..., r^k}{1, f}
struct DihedralProgression {
  int ratio = 0;
  int flip = 0;
  int k = 0;
  std::array<int, 4> ends{};  // (1, f, r^k, f r^-k)
};

int power(const FiniteGroup& g, int a, int e);  // e may be negative
Mask dihedral_set(const FiniteGroup& g, int r, int f, int k);
DihedralProgression make_dihedral(const FiniteGroup& g, int r, int f, int k);
bool dihedral_proper(const FiniteGroup& g, const DihedralProgression& p);

// B given in the same form; requires stab_R(A) = stab_L(B) and equal ratio.
DihedralProgression dihedral_product(const FiniteGroup& g, const DihedralProgression& a,
                                     const DihedralProgression& b);

struct DihedralPrechord {
  Mask a = 0, b = 0, c = 0;
  std::array<int, 12> labels{};   // a1..a4, b1..b4, c1..c4
  std::array<int, 6> potential{};  // vertices 1..6 = u', u, v', v, w', w
};

// Octahedron combinatorics shared with the configuration module.
// Edge e in 0..11 (A1..A4, B1..B4, C1..C4) runs from vertex kEdgeFrom[e] to
// kEdgeTo[e]; vertices 0..5 stand for u', u, v', v, w', w.
inline constexpr std::array<int, 12> kEdgeFrom{0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5};
inline constexpr std::array<int, 12> kEdgeTo{2, 3, 3, 2, 4, 5, 5, 4, 0, 1, 1, 0};
// The eight directed triangles, each as (A_i, B_j, C_k) edge indices.
inline constexpr std::array<std::array<int, 3>, 8> kTriangles{{{0, 4, 8},
                                                                {0, 5, 11},
                                                                {1, 7, 8},
                                                                {1, 6, 11},
                                                                {3, 4, 9},
                                                                {3, 5, 10},
                                                                {2, 7, 9},
                                                                {2, 6, 10}}};
const char* edge_name(int e);

// Requires a dihedral group of order >= 8 with A, B nontrivial, matching flips and AB != G.
DihedralPrechord build_prechord(const FiniteGroup& g, const DihedralProgression& a,
                                const DihedralProgression& b);
int count_trivial_triples(const FiniteGroup& g, Mask a, Mask b, Mask c);

}  // namespace triolab
