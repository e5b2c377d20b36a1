#include "wdl/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wdl {

Congruence delta(int n) {
  Congruence c;
  c.block_of.resize(n);
  std::iota(c.block_of.begin(), c.block_of.end(), 0);
  c.block_count = n;
  return c;
}

Congruence nabla(int n) {
  Congruence c;
  c.block_of.assign(n, 0);
  c.block_count = n > 0 ? 1 : 0;
  return c;
}

bool is_delta(const Congruence& c) {
  return c.block_count == static_cast<int>(c.block_of.size());
}

Congruence normalize_partition(const std::vector<int>& raw) {
  Congruence c;
  c.block_of.assign(raw.size(), -1);
  std::vector<int> rename;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int id = raw[i];
    int found = -1;
    for (std::size_t k = 0; k < rename.size(); ++k)
      if (rename[k] == id) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(rename.size());
      rename.push_back(id);
    }
    c.block_of[i] = found;
  }
  c.block_count = static_cast<int>(rename.size());
  return c;
}

std::vector<std::vector<int>> blocks_of(const Congruence& c) {
  std::vector<std::vector<int>> b(c.block_count);
  for (std::size_t i = 0; i < c.block_of.size(); ++i)
    b[c.block_of[i]].push_back(static_cast<int>(i));
  return b;
}

namespace {

// Single-variable compatibility suffices: the two-variable form follows by
// transitivity through the mixed term.
bool compatible(const Lattice& L, const int* weak, const int* dual,
                const Congruence& c) {
  const int n = L.n;
  const auto& b = c.block_of;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (b[x] != b[y]) continue;
      for (int z = 0; z < n; ++z) {
        if (b[L.meet(x, z)] != b[L.meet(y, z)]) return false;
        if (b[L.join(x, z)] != b[L.join(y, z)]) return false;
      }
      if (weak && b[weak[x]] != b[weak[y]]) return false;
      if (dual && b[dual[x]] != b[dual[y]]) return false;
    }
  return true;
}

}  // namespace

bool is_lattice_congruence(const Lattice& L, const Congruence& c) {
  if (c.block_of.size() != static_cast<std::size_t>(L.n))
    throw CarrierMismatch();
  return compatible(L, nullptr, nullptr, c);
}

bool is_algebra_congruence(const DicompAlgebra& A, const Congruence& c) {
  if (c.block_of.size() != static_cast<std::size_t>(A.lattice.n))
    throw CarrierMismatch();
  return compatible(A.lattice, A.weak.img.data(),
                    A.dual ? A.dual->img.data() : nullptr, c);
}

namespace {

void require_wdn_interior(const DicompAlgebra& A, int c) {
  if (!A.dual || A.weak.img != A.dual->img)
    throw NotWdn("the two unary tables must coincide");
  if (c < 0 || c >= A.lattice.n)
    throw OutOfRange("element " + std::to_string(c) + " outside the carrier");
  if (c == A.lattice.bottom || c == A.lattice.top) throw BoundaryElement(c);
}

void verify_lattice_hom(const Homomorphism& h, const char* name) {
  const Lattice& L = *h.parent;
  const auto& mem = h.source_members;
  const int k = static_cast<int>(mem.size());
  std::vector<int> local(L.n, -1);
  for (int i = 0; i < k; ++i) local[mem[i]] = i;
  for (int v : h.map)
    if (!L.leq(h.target.lo, v) || !L.leq(v, h.target.hi))
      throw NotAHomomorphism(std::string(name) +
                             " image leaves the target interval");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int m = local[L.meet(mem[i], mem[j])];
      int s = local[L.join(mem[i], mem[j])];
      if (m < 0 || s < 0)
        throw NotAHomomorphism(std::string(name) +
                               " source is not meet/join closed");
      if (L.meet(h.map[i], h.map[j]) != h.map[m] ||
          L.join(h.map[i], h.map[j]) != h.map[s])
        throw NotAHomomorphism(
            std::string(name) + " does not preserve meet/join at (" +
            std::to_string(mem[i]) + "," + std::to_string(mem[j]) + ")");
    }
}

Homomorphism whole_carrier_map(const DicompAlgebra& A, int hi_of_target,
                               int (*f)(const Lattice&, int, int), int c) {
  const Lattice& L = A.lattice;
  Homomorphism h;
  h.parent = &L;
  h.source_members.resize(L.n);
  std::iota(h.source_members.begin(), h.source_members.end(), 0);
  h.target = interval(L, L.bottom, hi_of_target);
  h.map.resize(L.n);
  for (int x = 0; x < L.n; ++x) h.map[x] = f(L, x, c);
  return h;
}

}  // namespace

std::pair<Homomorphism, Homomorphism> projection_maps(const DicompAlgebra& A,
                                                      int c) {
  require_wdn_interior(A, c);
  const int wc = A.weak(c);
  auto meet_with = [](const Lattice& L, int x, int z) { return L.meet(x, z); };
  Homomorphism f1 = whole_carrier_map(A, c, meet_with, c);
  Homomorphism f2 = whole_carrier_map(A, wc, meet_with, wc);
  verify_lattice_hom(f1, "f1");
  verify_lattice_hom(f2, "f2");
  return {std::move(f1), std::move(f2)};
}

std::pair<Homomorphism, Homomorphism> interval_isomorphism_pair(
    const DicompAlgebra& A, int c) {
  require_wdn_interior(A, c);
  const Lattice& L = A.lattice;
  const int wc = A.weak(c);

  Homomorphism u;
  u.parent = &L;
  u.source_members = interval(L, c, L.top).members;
  u.target = interval(L, L.bottom, wc);
  for (int x : u.source_members) u.map.push_back(L.meet(x, wc));

  Homomorphism v;
  v.parent = &L;
  v.source_members = u.target.members;
  v.target = interval(L, c, L.top);
  for (int x : v.source_members) v.map.push_back(L.join(x, c));

  verify_lattice_hom(u, "u");
  verify_lattice_hom(v, "v");

  // v(u(x)) = x on [c,1] and u(v(x)) = x on [0,~c].
  std::vector<int> pos_u(L.n, -1), pos_v(L.n, -1);
  for (std::size_t i = 0; i < u.source_members.size(); ++i)
    pos_u[u.source_members[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < v.source_members.size(); ++i)
    pos_v[v.source_members[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < u.source_members.size(); ++i)
    if (v.map[pos_v[u.map[i]]] != u.source_members[i])
      throw NotAHomomorphism("v after u is not the identity on [c,1]");
  for (std::size_t i = 0; i < v.source_members.size(); ++i)
    if (u.map[pos_u[v.map[i]]] != v.source_members[i])
      throw NotAHomomorphism("u after v is not the identity on [0,~c]");
  return {std::move(u), std::move(v)};
}

Congruence kernel(const Homomorphism& h) {
  const int k = static_cast<int>(h.source_members.size());
  std::vector<int> raw(k);
  for (int i = 0; i < k; ++i) raw[i] = h.map[i];
  Congruence c = normalize_partition(raw);

  // The kernel of a verified lattice homomorphism is a congruence of its
  // source; anything else indicates corrupted inputs.
  LatticeView src;
  src.parent = h.parent;
  src.members = h.source_members;
  src.local_of.assign(h.parent->n, -1);
  for (int i = 0; i < k; ++i) src.local_of[src.members[i]] = i;
  const auto& b = c.block_of;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (b[i] != b[j]) continue;
      for (int z = 0; z < k; ++z)
        if (b[src.meet(i, z)] != b[src.meet(j, z)] ||
            b[src.join(i, z)] != b[src.join(j, z)])
          throw std::logic_error("kernel is not a lattice congruence");
    }
  return c;
}

Congruence meet_congruences(const Congruence& p, const Congruence& q) {
  if (p.block_of.size() != q.block_of.size()) throw CarrierMismatch();
  const int n = static_cast<int>(p.block_of.size());
  std::vector<int> raw(n);
  std::vector<std::pair<int, int>> keys;
  for (int i = 0; i < n; ++i) {
    std::pair<int, int> key{p.block_of[i], q.block_of[i]};
    int at = -1;
    for (std::size_t k = 0; k < keys.size(); ++k)
      if (keys[k] == key) {
        at = static_cast<int>(k);
        break;
      }
    if (at < 0) {
      at = static_cast<int>(keys.size());
      keys.push_back(key);
    }
    raw[i] = at;
  }
  return normalize_partition(raw);
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Closes a seeded equivalence under the one-variable translations of every
// operation; the result is the congruence generated by the seed.
Congruence close_under_ops(const DicompAlgebra& A, Dsu dsu) {
  const Lattice& L = A.lattice;
  const int n = L.n;
  const int* w = A.weak.img.data();
  const int* d = A.dual ? A.dual->img.data() : nullptr;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (dsu.find(x) != dsu.find(y)) continue;
        for (int z = 0; z < n; ++z) {
          changed |= dsu.unite(L.meet(x, z), L.meet(y, z));
          changed |= dsu.unite(L.join(x, z), L.join(y, z));
        }
        changed |= dsu.unite(w[x], w[y]);
        if (d) changed |= dsu.unite(d[x], d[y]);
      }
  }
  std::vector<int> raw(n);
  for (int x = 0; x < n; ++x) raw[x] = dsu.find(x);
  return normalize_partition(raw);
}

}  // namespace

Congruence principal_congruence(const DicompAlgebra& A, int a, int b) {
  const int n = A.lattice.n;
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw OutOfRange("principal congruence generators outside the carrier");
  Dsu dsu(n);
  dsu.unite(a, b);
  return close_under_ops(A, dsu);
}

namespace {

std::vector<Congruence> sorted_out(const std::set<std::vector<int>>& found) {
  std::vector<Congruence> out;
  for (const auto& b : found) {
    Congruence c;
    c.block_of = b;
    c.block_count = *std::max_element(b.begin(), b.end()) + 1;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Congruence> all_congruences_by_filtering(const DicompAlgebra& A) {
  const int n = A.lattice.n;
  if (n > kCongruenceBound) throw CarrierTooLarge(n, kCongruenceBound);
  std::set<std::vector<int>> found;

  // Restricted growth strings enumerate every partition exactly once,
  // already in least-member block numbering.
  std::vector<int> rgs(n, 0);
  while (true) {
    Congruence c;
    c.block_of = rgs;
    c.block_count = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (is_algebra_congruence(A, c)) found.insert(rgs);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return sorted_out(found);
}

std::vector<Congruence> all_congruences_by_closure(const DicompAlgebra& A) {
  const int n = A.lattice.n;
  if (n > kCongruenceBound) throw CarrierTooLarge(n, kCongruenceBound);
  std::set<std::vector<int>> found;

  // Principal congruences, closed under pairwise join.
  std::vector<std::vector<int>> work;
  auto add = [&](const Congruence& c) {
    if (found.insert(c.block_of).second) work.push_back(c.block_of);
  };
  add(delta(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) add(principal_congruence(A, a, b));
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Dsu dsu(n);
      for (int x = 1; x < n; ++x) {
        for (int y = 0; y < x; ++y)
          if (work[i][x] == work[i][y]) {
            dsu.unite(x, y);
            break;
          }
        for (int y = 0; y < x; ++y)
          if (work[j][x] == work[j][y]) {
            dsu.unite(x, y);
            break;
          }
      }
      add(close_under_ops(A, dsu));
    }
  return sorted_out(found);
}

std::vector<Congruence> all_congruences(const DicompAlgebra& A, int bound) {
  const int n = A.lattice.n;
  if (n > bound) throw CarrierTooLarge(n, bound);
  return n <= 6 ? all_congruences_by_filtering(A)
                : all_congruences_by_closure(A);
}

bool is_subdirectly_irreducible(const DicompAlgebra& A, int bound) {
  const int n = A.lattice.n;
  if (n == 1) return false;
  std::vector<Congruence> cons = all_congruences(A, bound);
  Congruence acc = nabla(n);
  bool any = false;
  for (const Congruence& c : cons) {
    if (is_delta(c)) continue;
    any = true;
    acc = meet_congruences(acc, c);
  }
  return any && !is_delta(acc);
}

}  // namespace wdl
