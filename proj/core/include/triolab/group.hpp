#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace triolab {

// Subsets of a group of order <= 64 are bit masks; bit i is element i.
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }
std::vector<int> elements_of(Mask m);
Mask mask_of(const std::vector<int>& elems);

class FiniteGroup {
 public:
  // Rows/columns are relabelled so that the identity becomes element 0.
  explicit FiniteGroup(const std::vector<std::vector<int>>& table,
                       std::vector<std::string> names = {},
                       std::string label = "");

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  static constexpr int identity() { return 0; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& label() const { return label_; }
  std::vector<std::vector<int>> table() const;

  bool maskable() const { return n_ <= kMaskBits; }
  Mask full() const;

  // Set arithmetic; requires maskable().
  Mask left(int g, Mask a) const;   // gA
  Mask right(Mask a, int g) const;  // Ag
  Mask product(Mask a, Mask b) const;
  Mask inverse(Mask a) const;
  Mask complement(Mask a) const { return full() & ~a; }
  Mask conj(Mask a, int x) const;   // x^-1 A x
  Mask generated(Mask gens) const;  // subgroup <gens>

  int element_order(int a) const;
  bool is_abelian() const;

 private:
  void build_chunks();
  void require_mask() const;

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::string label_;
  int chunks_ = 0;
  std::vector<Mask> lchunk_;  // [g][chunk][byte] -> g * (elements of byte)
  std::vector<Mask> rchunk_;  // [g][chunk][byte] -> (elements of byte) * g
};

struct Subgroup {
  Mask mask = 0;
  std::vector<int> elements;
  int order() const { return static_cast<int>(elements.size()); }
  bool operator==(const Subgroup& o) const { return mask == o.mask; }
};

Subgroup make_subgroup(const FiniteGroup& g, Mask m);  // validates closure
bool is_subgroup(const FiniteGroup& g, Mask m);

// Safety cap on |G| for lattice work. Default 48; TRIOLAB_MAX_ORDER overrides,
// but never above 64 (masks are 64 bits wide).
int max_order_cap();

std::vector<Subgroup> subgroups(const FiniteGroup& g);
std::vector<Subgroup> subgroups_bruteforce(const FiniteGroup& g);  // |G| <= 16
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

struct SubgroupInfo {
  bool is_normal = false;
  Subgroup conjugate;                   // x^-1 H x
  std::vector<Mask> left_cosets;        // xH, ordered by least element
  std::vector<Mask> right_cosets;       // Hx
};
SubgroupInfo subgroup_predicates(const FiniteGroup& g, const Subgroup& h, int x);
bool is_normal(const FiniteGroup& g, Mask h);
Mask normal_core(const FiniteGroup& g, Mask h, Mask in);  // core of h in subgroup `in`

struct QuotientMap {
  Subgroup kernel;
  FiniteGroup image;
  std::vector<int> projection;      // parent element -> coset index
  std::vector<Mask> cosets;         // coset index -> parent mask
  Mask preimage(Mask image_set) const;
  Mask project(Mask parent_set) const;
};
QuotientMap quotient(const FiniteGroup& g, const Subgroup& h);

// The subgroup H rebuilt as its own group; `to_parent[i]` is the parent index
// of local element i (local 0 is the identity).
struct EmbeddedSubgroup {
  FiniteGroup group;
  std::vector<int> to_parent;
  std::vector<int> to_local;  // parent -> local, -1 outside
  Mask lift(Mask local) const;
  Mask restrict_to(Mask parent) const;  // drops elements outside
};
EmbeddedSubgroup embed_subgroup(const FiniteGroup& g, const Subgroup& h);

bool is_cyclic(const FiniteGroup& g);
std::vector<int> cyclic_generators(const FiniteGroup& g);

struct DihedralInfo {
  int n = 0;            // |G| = 2n
  Mask rotations = 0;
  std::vector<int> rotation_generators;
  std::vector<int> flips;
};
// Dihedral of order 2n with n >= 3, recognised by an element of order n whose
// complement consists of involutions.
std::optional<DihedralInfo> dihedral_structure(const FiniteGroup& g);

// --- constructors -------------------------------------------------------
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);        // order 2n
FiniteGroup symmetric_group(int n);       // n <= 5
FiniteGroup alternating_group(int n);     // n <= 5
FiniteGroup dicyclic_group(int n);        // order 4n; Q8 = Dic2
FiniteGroup semidirect_cyclic(int m, int n, int k);  // C_m x|_k C_n, b a b^-1 = a^k
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Grammar: C12, D6, S4, A5, Q8, Q16, Dic3, SD16, M16, C4:C4, products with 'x'.
FiniteGroup parse_group(const std::string& descriptor);

// Every group of order <= 12 up to isomorphism (24 groups), by descriptor.
std::vector<std::string> catalog_upto12();
// adds all fourteen groups of order 16 and the orders 13..15
std::vector<std::string> catalog_upto16();
std::vector<std::string> abelian_catalog_upto12();

std::vector<int> order_census(const FiniteGroup& g);  // sorted element orders

}  // namespace triolab
