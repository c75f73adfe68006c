#include "triolab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <regex>
#include <set>

namespace triolab {

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) {
    if (e < 0 || e >= kMaskBits) throw GroupError("element index out of mask range");
    m |= bit(e);
  }
  return m;
}

FiniteGroup::FiniteGroup(const std::vector<std::vector<int>>& table, std::vector<std::string> names,
                         std::string label)
    : label_(std::move(label)) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw GroupError("group of order 0");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw GroupError("table is not square");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n) throw GroupError("table entry out of range");
      if (seen[v]++) throw GroupError("table is not a Latin square (row)");
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r)
      if (seen[table[r][c]]++) throw GroupError("table is not a Latin square (column)");
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[a][x] == x && table[x][a] == x;
    if (ok) e = a;
  }
  if (e < 0) throw GroupError("table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = table[a][b];
      for (int c = 0; c < n; ++c)
        if (table[ab][c] != table[a][table[b][c]]) throw GroupError("table is not associative");
    }

  // swap e <-> 0
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::swap(pi[0], pi[e]);
  n_ = n;
  table_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table_[pi[a] * n + pi[b]] = pi[table[a][b]];
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) inv_[a] = b;

  if (names.empty()) {
    for (int a = 0; a < n; ++a) names.push_back(std::to_string(a));
  } else if (static_cast<int>(names.size()) != n) {
    throw GroupError("names length differs from order");
  }
  names_.assign(n, "");
  for (int a = 0; a < n; ++a) names_[pi[a]] = names[a];
  if (maskable()) build_chunks();
}

void FiniteGroup::build_chunks() {
  chunks_ = (n_ + 7) / 8;
  lchunk_.assign(static_cast<size_t>(n_) * chunks_ * 256, 0);
  rchunk_.assign(static_cast<size_t>(n_) * chunks_ * 256, 0);
  for (int g = 0; g < n_; ++g)
    for (int c = 0; c < chunks_; ++c) {
      Mask* L = &lchunk_[(static_cast<size_t>(g) * chunks_ + c) * 256];
      Mask* R = &rchunk_[(static_cast<size_t>(g) * chunks_ + c) * 256];
      for (int byte = 1; byte < 256; ++byte) {
        const int e = c * 8 + __builtin_ctz(byte);
        const int rest = byte & (byte - 1);
        L[byte] = L[rest];
        R[byte] = R[rest];
        if (e < n_) {
          L[byte] |= bit(mul(g, e));
          R[byte] |= bit(mul(e, g));
        }
      }
    }
}

void FiniteGroup::require_mask() const {
  if (!maskable()) throw GroupError("set arithmetic needs |G| <= 64");
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

Mask FiniteGroup::full() const {
  require_mask();
  return n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
}

Mask FiniteGroup::left(int g, Mask a) const {
  Mask out = 0;
  const Mask* base = &lchunk_[static_cast<size_t>(g) * chunks_ * 256];
  for (int c = 0; c < chunks_ && a; ++c, a >>= 8) out |= base[c * 256 + (a & 255)];
  return out;
}

Mask FiniteGroup::right(Mask a, int g) const {
  Mask out = 0;
  const Mask* base = &rchunk_[static_cast<size_t>(g) * chunks_ * 256];
  for (int c = 0; c < chunks_ && a; ++c, a >>= 8) out |= base[c * 256 + (a & 255)];
  return out;
}

Mask FiniteGroup::product(Mask a, Mask b) const {
  Mask out = 0;
  if (popcount(a) <= popcount(b)) {
    for (Mask m = a; m; m &= m - 1) out |= left(__builtin_ctzll(m), b);
  } else {
    for (Mask m = b; m; m &= m - 1) out |= right(a, __builtin_ctzll(m));
  }
  return out;
}

Mask FiniteGroup::inverse(Mask a) const {
  Mask out = 0;
  for (Mask m = a; m; m &= m - 1) out |= bit(inv_[__builtin_ctzll(m)]);
  return out;
}

Mask FiniteGroup::conj(Mask a, int x) const { return right(left(inv_[x], a), x); }

Mask FiniteGroup::generated(Mask gens) const {
  Mask s = gens | 1u;
  for (;;) {
    const Mask t = s | product(s, s);
    if (t == s) return s;
    s = t;
  }
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool is_subgroup(const FiniteGroup& g, Mask m) {
  return (m & 1u) && g.product(m, m) == m;
}

Subgroup make_subgroup(const FiniteGroup& g, Mask m) {
  if (!is_subgroup(g, m)) throw GroupError("set is not a subgroup");
  if (g.order() % popcount(m) != 0) throw GroupError("Lagrange violated");
  return Subgroup{m, elements_of(m)};
}

int max_order_cap() {
  int cap = 48;
  if (const char* env = std::getenv("TRIOLAB_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) cap = static_cast<int>(std::min<long>(v, kMaskBits));
  }
  return cap;
}

static void sort_subgroups(std::vector<Subgroup>& v) {
  std::sort(v.begin(), v.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
}

std::vector<Subgroup> subgroups(const FiniteGroup& g) {
  if (g.order() > max_order_cap())
    throw GroupError("subgroup enumeration refused: |G| = " + std::to_string(g.order()) +
                     " exceeds cap " + std::to_string(max_order_cap()));
  std::set<Mask> cyc;
  for (int a = 0; a < g.order(); ++a) cyc.insert(g.generated(bit(a)));
  std::set<Mask> all = cyc;
  std::vector<Mask> frontier(cyc.begin(), cyc.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask h : frontier)
      for (Mask c : cyc) {
        if ((c & ~h) == 0) continue;
        const Mask j = g.generated(h | c);
        if (all.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (Mask m : all) out.push_back(Subgroup{m, elements_of(m)});
  sort_subgroups(out);
  return out;
}

std::vector<Subgroup> subgroups_bruteforce(const FiniteGroup& g) {
  if (g.order() > 16) throw GroupError("brute-force subgroup search limited to |G| <= 16");
  std::vector<Subgroup> out;
  const int n = g.order();
  for (Mask rest = 0; rest < (Mask{1} << (n - 1)); ++rest) {
    const Mask m = (rest << 1) | 1u;
    if (g.product(m, m) == m) out.push_back(Subgroup{m, elements_of(m)});
  }
  sort_subgroups(out);
  return out;
}

bool is_normal(const FiniteGroup& g, Mask h) {
  for (int x = 0; x < g.order(); ++x)
    if (g.conj(h, x) != h) return false;
  return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& h : subgroups(g))
    if (is_normal(g, h.mask)) out.push_back(h);
  return out;
}

Mask normal_core(const FiniteGroup& g, Mask h, Mask in) {
  Mask core = h;
  for (Mask m = in; m; m &= m - 1) core &= g.conj(h, __builtin_ctzll(m));
  return core;
}

SubgroupInfo subgroup_predicates(const FiniteGroup& g, const Subgroup& h, int x) {
  SubgroupInfo info;
  info.is_normal = is_normal(g, h.mask);
  info.conjugate = Subgroup{g.conj(h.mask, x), elements_of(g.conj(h.mask, x))};
  Mask seenL = 0, seenR = 0;
  for (int a = 0; a < g.order(); ++a) {
    if (!has(seenL, a)) {
      const Mask c = g.left(a, h.mask);
      info.left_cosets.push_back(c);
      seenL |= c;
    }
    if (!has(seenR, a)) {
      const Mask c = g.right(h.mask, a);
      info.right_cosets.push_back(c);
      seenR |= c;
    }
  }
  return info;
}

Mask QuotientMap::preimage(Mask image_set) const {
  Mask out = 0;
  for (Mask m = image_set; m; m &= m - 1) out |= cosets[__builtin_ctzll(m)];
  return out;
}

Mask QuotientMap::project(Mask parent_set) const {
  Mask out = 0;
  for (Mask m = parent_set; m; m &= m - 1) out |= bit(projection[__builtin_ctzll(m)]);
  return out;
}

static FiniteGroup build_quotient_image(const FiniteGroup& g, const std::vector<int>& proj,
                                        const std::vector<int>& reps, bool trivial_kernel) {
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  std::vector<std::string> names;
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) t[i][j] = proj[g.mul(reps[i], reps[j])];
    names.push_back(trivial_kernel ? g.name(reps[i]) : "[" + g.name(reps[i]) + "]");
  }
  return FiniteGroup(t, names, g.label() + "/H");
}

QuotientMap quotient(const FiniteGroup& g, const Subgroup& h) {
  if (!is_normal(g, h.mask)) throw GroupError("quotient by a non-normal subgroup");
  std::vector<int> proj(g.order(), -1), reps;
  std::vector<Mask> cosets;
  for (int a = 0; a < g.order(); ++a) {
    if (proj[a] >= 0) continue;
    const Mask c = g.left(a, h.mask);
    for (int e : elements_of(c)) proj[e] = static_cast<int>(reps.size());
    reps.push_back(a);
    cosets.push_back(c);
  }
  return QuotientMap{h, build_quotient_image(g, proj, reps, h.order() == 1), proj, cosets};
}

Mask EmbeddedSubgroup::lift(Mask local) const {
  Mask out = 0;
  for (Mask m = local; m; m &= m - 1) out |= bit(to_parent[__builtin_ctzll(m)]);
  return out;
}

Mask EmbeddedSubgroup::restrict_to(Mask parent) const {
  Mask out = 0;
  for (Mask m = parent; m; m &= m - 1) {
    const int l = to_local[__builtin_ctzll(m)];
    if (l >= 0) out |= bit(l);
  }
  return out;
}

EmbeddedSubgroup embed_subgroup(const FiniteGroup& g, const Subgroup& h) {
  const auto& el = h.elements;
  const int k = static_cast<int>(el.size());
  std::vector<int> to_local(g.order(), -1);
  for (int i = 0; i < k; ++i) to_local[el[i]] = i;
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) t[i][j] = to_local[g.mul(el[i], el[j])];
    names.push_back(g.name(el[i]));
  }
  return EmbeddedSubgroup{FiniteGroup(t, names, g.label() + "<" + std::to_string(k) + ">"), el,
                          to_local};
}

std::vector<int> cyclic_generators(const FiniteGroup& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a)
    if (g.element_order(a) == g.order()) out.push_back(a);
  return out;
}

bool is_cyclic(const FiniteGroup& g) { return !cyclic_generators(g).empty(); }

std::optional<DihedralInfo> dihedral_structure(const FiniteGroup& g) {
  if (g.order() % 2 || g.order() < 6) return std::nullopt;
  const int n = g.order() / 2;
  for (int r = 0; r < g.order(); ++r) {
    if (g.element_order(r) != n) continue;
    const Mask rot = g.generated(bit(r));
    DihedralInfo info;
    info.n = n;
    info.rotations = rot;
    bool ok = true;
    for (int a = 0; a < g.order() && ok; ++a) {
      if (has(rot, a)) {
        if (g.element_order(a) == n) info.rotation_generators.push_back(a);
      } else {
        ok = g.element_order(a) == 2;
        info.flips.push_back(a);
      }
    }
    if (ok) return info;
  }
  return std::nullopt;
}

// --- constructors -----------------------------------------------------------

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw GroupError("cyclic group needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    names.push_back(std::to_string(i));
  }
  return FiniteGroup(t, names, "C" + std::to_string(n));
}

static std::string power_name(const std::string& base, const std::string& sym, int e) {
  if (e == 0) return base.empty() ? "1" : base;
  return base + sym + (e == 1 ? "" : "^" + std::to_string(e));
}

FiniteGroup dihedral_group(int n) {
  if (n <= 0) throw GroupError("dihedral group needs n >= 1");
  // index s*n + i  <->  f^s r^i
  const int N = 2 * n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> names(N);
  for (int a = 0; a < N; ++a) {
    const int s1 = a / n, i1 = a % n;
    names[a] = power_name(s1 ? "f" : "", "r", i1);
    for (int b = 0; b < N; ++b) {
      const int s2 = b / n, i2 = b % n;
      const int i = ((s2 ? -i1 : i1) + i2 + n) % n;
      t[a][b] = ((s1 + s2) % 2) * n + i;
    }
  }
  return FiniteGroup(t, names, "D" + std::to_string(n));
}

static std::vector<std::vector<int>> perms_lex(int n, bool even_only) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    if (!even_only || inversions % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

static FiniteGroup perm_group(int n, bool even_only, const std::string& label) {
  if (n < 1 || n > 5) throw GroupError("permutation groups supported for 1 <= n <= 5");
  const auto perms = perms_lex(n, even_only);
  const int N = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> names;
  for (int a = 0; a < N; ++a) {
    std::string s;
    for (int v : perms[a]) s += static_cast<char>('0' + v);
    names.push_back(s);
    for (int b = 0; b < N; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // a o b
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(t, names, label + std::to_string(n));
}

FiniteGroup symmetric_group(int n) { return perm_group(n, false, "S"); }
FiniteGroup alternating_group(int n) { return perm_group(n, true, "A"); }

FiniteGroup dicyclic_group(int n) {
  if (n < 1) throw GroupError("dicyclic group needs n >= 1");
  // a^i x^j, index j*2n + i; x^2 = a^n, x a x^-1 = a^-1
  const int m = 2 * n, N = 4 * n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> names(N);
  for (int p = 0; p < N; ++p) {
    const int j = p / m, i = p % m;
    names[p] = power_name("", "a", i);
    if (j) names[p] = (i ? names[p] : std::string()) + "x";
    for (int q = 0; q < N; ++q) {
      const int l = q / m, k = q % m;
      int e = i + (j ? -k : k);
      int x = j + l;
      if (x == 2) {
        e += n;
        x = 0;
      }
      t[p][q] = x * m + ((e % m) + m) % m;
    }
  }
  std::string label = n == 2 ? "Q8" : n == 4 ? "Q16" : "Dic" + std::to_string(n);
  return FiniteGroup(t, names, label);
}

FiniteGroup semidirect_cyclic(int m, int n, int k) {
  // a^i b^j with b a b^-1 = a^k; requires k^n = 1 mod m
  long kk = 1;
  for (int i = 0; i < n; ++i) kk = kk * k % m;
  if (kk != 1 % m) throw GroupError("semidirect product: k^n != 1 mod m");
  std::vector<int> kp(n, 1);
  for (int j = 1; j < n; ++j) kp[j] = kp[j - 1] * k % m;
  const int N = m * n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> names(N);
  for (int p = 0; p < N; ++p) {
    const int j = p / m, i = p % m;
    std::string s = i ? power_name("", "a", i) : "";
    if (j) s += power_name("", "b", j);
    names[p] = s.empty() ? "1" : s;
    for (int q = 0; q < N; ++q) {
      const int l = q / m, s2 = q % m;
      t[p][q] = ((j + l) % n) * m + (i + s2 * kp[j]) % m;
    }
  }
  return FiniteGroup(t, names, "C" + std::to_string(m) + ":" + std::to_string(k) + "C" +
                                   std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int p = a.order(), q = b.order(), N = p * q;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> names(N);
  for (int x = 0; x < N; ++x) {
    names[x] = "(" + a.name(x / q) + "," + b.name(x % q) + ")";
    for (int y = 0; y < N; ++y) t[x][y] = a.mul(x / q, y / q) * q + b.mul(x % q, y % q);
  }
  return FiniteGroup(t, names, a.label() + "x" + b.label());
}

// (C4 x C2) : C2 with c a c^-1 = ab; elements a^i b^j c^k as (i, j, k)
static FiniteGroup small_group_16_3() {
  std::vector<std::vector<int>> t(16, std::vector<int>(16));
  std::vector<std::string> names(16);
  auto enc = [](int i, int j, int k) { return (k * 2 + j) * 4 + i; };
  for (int p = 0; p < 16; ++p) {
    const int i = p % 4, j = (p / 4) % 2, k = p / 8;
    std::string nm = (i ? power_name("", "a", i) : "") + (j ? "b" : "") + (k ? "c" : "");
    names[p] = nm.empty() ? "1" : nm;
    for (int q = 0; q < 16; ++q) {
      int i2 = q % 4, j2 = (q / 4) % 2;
      const int k2 = q / 8;
      if (k) j2 = (j2 + i2) % 2;  // conjugating a^i2 b^j2 by c
      t[p][q] = enc((i + i2) % 4, (j + j2) % 2, (k + k2) % 2);
    }
  }
  return FiniteGroup(t, names, "SG16_3");
}

// i^s X^x Z^z with Z X = -X Z
static FiniteGroup pauli_group() {
  std::vector<std::vector<int>> t(16, std::vector<int>(16));
  std::vector<std::string> names(16);
  static const char* ph[4] = {"", "i", "-", "-i"};
  for (int p = 0; p < 16; ++p) {
    const int s = p % 4, x = (p / 4) % 2, z = p / 8;
    std::string body = std::string(x ? "X" : "") + (z ? "Z" : "");
    names[p] = ph[s] + (body.empty() ? std::string("1") : body);
    for (int q = 0; q < 16; ++q) {
      const int s2 = q % 4, x2 = (q / 4) % 2, z2 = q / 8;
      const int phase = (s + s2 + 2 * (z * x2)) % 4;
      t[p][q] = ((z ^ z2) * 2 + (x ^ x2)) * 4 + phase;
    }
  }
  return FiniteGroup(t, names, "Pauli");
}

static FiniteGroup parse_factor(const std::string& tok) {
  static const std::regex re(R"(^(C|D|S|A|Dic)(\d+)$)");
  std::smatch m;
  if (tok == "Q8") return dicyclic_group(2);
  if (tok == "Q16") return dicyclic_group(4);
  if (tok == "SG16_3") return small_group_16_3();
  if (tok == "Pauli") return pauli_group();
  if (tok == "SD16") {
    auto g = semidirect_cyclic(8, 2, 3);
    return FiniteGroup(g.table(), g.names(), "SD16");
  }
  if (tok == "M16") {
    auto g = semidirect_cyclic(8, 2, 5);
    return FiniteGroup(g.table(), g.names(), "M16");
  }
  if (tok == "C4:C4") {
    auto g = semidirect_cyclic(4, 4, 3);
    return FiniteGroup(g.table(), g.names(), "C4:C4");
  }
  if (!std::regex_match(tok, m, re)) throw GroupError("unrecognised group descriptor '" + tok + "'");
  const std::string kind = m[1];
  const int n = std::stoi(m[2]);
  if (n <= 0 || n > 64) throw GroupError("group parameter out of range in '" + tok + "'");
  if (kind == "C") return cyclic_group(n);
  if (kind == "D") return dihedral_group(n);
  if (kind == "S") return symmetric_group(n);
  if (kind == "A") return alternating_group(n);
  return dicyclic_group(n);
}

FiniteGroup parse_group(const std::string& descriptor) {
  if (descriptor.empty()) throw GroupError("empty group descriptor");
  std::vector<std::string> toks;
  size_t start = 0;
  for (size_t i = 0; i <= descriptor.size(); ++i) {
    if (i == descriptor.size() || descriptor[i] == 'x') {
      toks.push_back(descriptor.substr(start, i - start));
      start = i + 1;
    }
  }
  FiniteGroup g = parse_factor(toks[0]);
  for (size_t i = 1; i < toks.size(); ++i) g = direct_product(g, parse_factor(toks[i]));
  long total = g.order();
  if (total > 720) throw GroupError("group too large");
  return toks.size() == 1 ? g : FiniteGroup(g.table(), g.names(), descriptor);
}

std::vector<std::string> catalog_upto12() {
  return {"C1",  "C2",  "C3",     "C4",  "C2xC2", "C5",  "C6",     "D3",
          "C7",  "C8",  "C2xC4",  "C2xC2xC2", "D4", "Q8", "C9",     "C3xC3",
          "C10", "D5",  "C11",    "C12", "C2xC6", "D6",  "A4",     "Dic3"};
}

std::vector<std::string> catalog_upto16() {
  auto out = catalog_upto12();
  for (const char* s : {"C13", "C14", "D7", "C15", "C16", "C2xC8", "C4xC4", "C2xC2xC4", "C2xC2xC2xC2", "D8", "Q16",
                        "SD16", "M16", "C4:C4", "C2xD4", "C2xQ8", "SG16_3", "Pauli"})
    out.push_back(s);
  return out;
}

std::vector<std::string> abelian_catalog_upto12() {
  std::vector<std::string> out;
  for (int n = 1; n <= 12; ++n) out.push_back("C" + std::to_string(n));
  for (const char* s : {"C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6"}) out.push_back(s);
  return out;
}

std::vector<int> order_census(const FiniteGroup& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) out.push_back(g.element_order(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace triolab
