#pragma once

// Naive reference computations used to cross-check the library. They only
// touch the multiplication table and never call the mask helpers.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "triolab/group.hpp"
#include "triolab/setops.hpp"

namespace oracle {

using triolab::FiniteGroup;
using triolab::Mask;

inline std::vector<int> elems(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if ((m >> i) & 1) out.push_back(i);
  return out;
}

inline Mask from(const std::vector<int>& v) {
  Mask m = 0;
  for (int e : v) m |= Mask{1} << e;
  return m;
}

inline Mask all(const FiniteGroup& g) { return g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1; }

inline Mask product(const FiniteGroup& g, Mask a, Mask b) {
  Mask out = 0;
  for (int x : elems(a))
    for (int y : elems(b)) out |= Mask{1} << g.mul(x, y);
  return out;
}

inline Mask inverse(const FiniteGroup& g, Mask a) {
  Mask out = 0;
  for (int x : elems(a))
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == 0) out |= Mask{1} << y;
  return out;
}

inline Mask third(const FiniteGroup& g, Mask a, Mask b) { return all(g) & ~inverse(g, product(g, a, b)); }

inline int size(Mask m) { return static_cast<int>(elems(m).size()); }

inline Mask element(const FiniteGroup& g, const std::string& name) {
  for (int i = 0; i < g.order(); ++i)
    if (g.name(i) == name) return Mask{1} << i;
  return 0;
}

inline int index(const FiniteGroup& g, const std::string& name) {
  for (int i = 0; i < g.order(); ++i)
    if (g.name(i) == name) return i;
  return -1;
}

inline bool closed(const FiniteGroup& g, Mask h) {
  return ((h & 1) != 0) && product(g, h, h) == h;
}

// every subgroup, by testing closure of every subset containing 1
inline std::vector<Mask> subgroups(const FiniteGroup& g) {
  std::vector<Mask> out;
  const int n = g.order();
  for (Mask m = 1; m < (Mask{1} << n); m += 2)
    if (closed(g, m)) out.push_back(m);
  return out;
}

inline Mask stab_left(const FiniteGroup& g, Mask a) {
  Mask out = 0;
  for (int x = 0; x < g.order(); ++x)
    if (product(g, Mask{1} << x, a) == a) out |= Mask{1} << x;
  return out;
}

inline int deficiency(const FiniteGroup& g, const triolab::Trio& t) {
  return size(t.a) + size(t.b) + size(t.c) - g.order();
}

inline bool maximal(const FiniteGroup& g, const triolab::Trio& t) {
  return t.c == third(g, t.a, t.b) && t.a == third(g, t.b, t.c) && t.b == third(g, t.c, t.a);
}

// x A y^-1
inline Mask shift(const FiniteGroup& g, int x, Mask a, int y) {
  return product(g, product(g, Mask{1} << x, a), inverse(g, Mask{1} << y));
}

// Number of similarity classes of nontrivial maximal critical trios, via
// union-find over generators of the transformation group.
inline int critical_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<triolab::Trio> trios;
  for (Mask a = 1; a < (Mask{1} << n); ++a)
    for (Mask b = 1; b < (Mask{1} << n); ++b) {
      const Mask c = third(g, a, b);
      if (!c) continue;
      const triolab::Trio t{a, b, c};
      if (deficiency(g, t) > 0 && maximal(g, t)) trios.push_back(t);
    }
  std::sort(trios.begin(), trios.end());
  auto find_index = [&](const triolab::Trio& t) {
    return static_cast<int>(std::lower_bound(trios.begin(), trios.end(), t) - trios.begin());
  };
  std::vector<int> parent(trios.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto join = [&](int i, const triolab::Trio& u) { parent[root(i)] = root(find_index(u)); };
  for (size_t i = 0; i < trios.size(); ++i) {
    const auto& t = trios[i];
    join(static_cast<int>(i), {t.b, t.c, t.a});
    join(static_cast<int>(i), {inverse(g, t.c), inverse(g, t.b), inverse(g, t.a)});
    for (int x = 0; x < n; ++x) {
      join(static_cast<int>(i), {shift(g, x, t.a, 0), t.b, shift(g, 0, t.c, x)});
      join(static_cast<int>(i), {shift(g, 0, t.a, x), shift(g, x, t.b, 0), t.c});
    }
  }
  std::set<int> roots;
  for (size_t i = 0; i < trios.size(); ++i) roots.insert(root(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

}  // namespace oracle
