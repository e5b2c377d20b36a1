#include "wdl/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace wdl {

namespace {

// Renumbering: repeatedly emit the minimal element of smallest current index.
// A unique bottom therefore lands on index 0, and the result is a linear
// extension of the order.
std::vector<int> linear_extension(int n, const std::vector<std::uint8_t>& leq) {
  std::vector<int> old_to_new(n, -1);
  std::vector<char> placed(n, 0);
  for (int next = 0; next < n; ++next) {
    int pick = -1;
    for (int x = 0; x < n && pick < 0; ++x) {
      if (placed[x]) continue;
      bool minimal = true;
      for (int y = 0; y < n; ++y) {
        if (!placed[y] && y != x && leq[y * n + x]) {
          minimal = false;
          break;
        }
      }
      if (minimal) pick = x;
    }
    assert(pick >= 0);
    placed[pick] = 1;
    old_to_new[pick] = next;
  }
  return old_to_new;
}

Lattice finish_build(int n, const std::vector<std::uint8_t>& leq_in,
                     std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error("labels list must match the carrier size");

  Lattice L;
  L.n = n;
  L.input_to_canonical = linear_extension(n, leq_in);
  const std::vector<int>& perm = L.input_to_canonical;

  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[perm[x]] = x;

  L.leq_tab.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      L.leq_tab[perm[x] * n + perm[y]] = leq_in[x * n + y];

  if (!labels.empty()) {
    L.labels.resize(n);
    for (int x = 0; x < n; ++x) L.labels[perm[x]] = std::move(labels[x]);
  }

  // Meet and join tables. Indices are a linear extension, so if a pair has a
  // greatest lower bound it is the highest-index common lower bound; the
  // candidate just has to dominate every other lower bound.
  L.meet_tab.assign(static_cast<size_t>(n) * n, -1);
  L.join_tab.assign(static_cast<size_t>(n) * n, -1);
  std::vector<int> bounds;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      bounds.clear();
      for (int w = 0; w < n; ++w)
        if (L.leq(w, x) && L.leq(w, y)) bounds.push_back(w);
      if (bounds.empty()) throw NotALattice(inv[x], inv[y], true);
      int g = bounds.back();
      for (int w : bounds)
        if (!L.leq(w, g)) throw NotALattice(inv[x], inv[y], true);
      L.meet_tab[x * n + y] = L.meet_tab[y * n + x] = g;

      bounds.clear();
      for (int w = 0; w < n; ++w)
        if (L.leq(x, w) && L.leq(y, w)) bounds.push_back(w);
      if (bounds.empty()) throw NotALattice(inv[x], inv[y], false);
      int s = bounds.front();
      for (int w : bounds)
        if (!L.leq(s, w)) throw NotALattice(inv[x], inv[y], false);
      L.join_tab[x * n + y] = L.join_tab[y * n + x] = s;
    }
  }

  int b = 0, t = 0;
  for (int x = 1; x < n; ++x) {
    b = L.meet(b, x);
    t = L.join(t, x);
  }
  L.bottom = b;
  L.top = t;
  assert(L.bottom == 0);
  return L;
}

}  // namespace

Lattice build_lattice(int n, const std::vector<std::pair<int, int>>& covers,
                      std::vector<std::string> labels) {
  if (n <= 0) throw EmptyCarrier();
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw OutOfRange("cover pair (" + std::to_string(lo) + "," +
                       std::to_string(hi) + ") outside 0.." +
                       std::to_string(n - 1));
  }

  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) leq[x * n + x] = 1;
  for (auto [lo, hi] : covers) leq[lo * n + hi] = 1;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x) {
      if (!leq[x * n + k]) continue;
      for (int y = 0; y < n; ++y)
        if (leq[k * n + y]) leq[x * n + y] = 1;
    }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (leq[x * n + y] && leq[y * n + x])
        throw NotAPoset("cover relation has a cycle through elements " +
                        std::to_string(x) + " and " + std::to_string(y));

  return finish_build(n, leq, std::move(labels));
}

Lattice build_lattice_from_order(int n, const std::vector<std::uint8_t>& leq,
                                 std::vector<std::string> labels) {
  if (n <= 0) throw EmptyCarrier();
  if (leq.size() != static_cast<size_t>(n) * n)
    throw Error("order relation has the wrong shape");
  for (int x = 0; x < n; ++x)
    if (!leq[x * n + x]) throw NotAPoset("order relation is not reflexive");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && leq[x * n + y] && leq[y * n + x])
        throw NotAPoset("order relation is not antisymmetric at " +
                        std::to_string(x) + "," + std::to_string(y));
      if (!leq[x * n + y]) continue;
      for (int z = 0; z < n; ++z)
        if (leq[y * n + z] && !leq[x * n + z])
          throw NotAPoset("order relation is not transitive at " +
                          std::to_string(x) + "," + std::to_string(y) + "," +
                          std::to_string(z));
    }
  return finish_build(n, leq, std::move(labels));
}

std::vector<std::pair<int, int>> covers_of(const Lattice& L) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y) {
      if (x == y || !L.leq(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < L.n && covered; ++z)
        if (z != x && z != y && L.leq(x, z) && L.leq(z, y)) covered = false;
      if (covered) out.emplace_back(x, y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_distributive(const Lattice& L) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      for (int z = 0; z < L.n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return false;
  return true;
}

bool is_complemented(const Lattice& L) {
  for (int x = 0; x < L.n; ++x)
    if (!find_complement(L, x)) return false;
  return true;
}

std::optional<int> find_complement(const Lattice& L, int x) {
  for (int y = 0; y < L.n; ++y)
    if (L.meet(x, y) == L.bottom && L.join(x, y) == L.top) return y;
  return std::nullopt;
}

IntervalView interval(const Lattice& L, int lo, int hi) {
  if (lo < 0 || lo >= L.n || hi < 0 || hi >= L.n)
    throw OutOfRange("interval bounds outside the carrier");
  if (!L.leq(lo, hi)) throw NotComparable(lo, hi);
  IntervalView iv;
  iv.parent = &L;
  iv.lo = lo;
  iv.hi = hi;
  for (int x = 0; x < L.n; ++x)
    if (L.leq(lo, x) && L.leq(x, hi)) iv.members.push_back(x);
  return iv;
}

LatticeView LatticeView::whole(const Lattice& L) {
  LatticeView v;
  v.parent = &L;
  v.members.resize(L.n);
  std::iota(v.members.begin(), v.members.end(), 0);
  v.local_of = v.members;
  return v;
}

LatticeView LatticeView::of(const IntervalView& iv) {
  LatticeView v;
  v.parent = iv.parent;
  v.members = iv.members;
  v.local_of.assign(iv.parent->n, -1);
  for (int i = 0; i < v.size(); ++i) v.local_of[v.members[i]] = i;
  return v;
}

namespace {

bool extend_isomorphism(const LatticeView& A, const LatticeView& B, int i,
                        std::vector<int>& f, std::vector<char>& used) {
  const int k = A.size();
  if (i == k) {
    // Meets were settled pairwise during assignment; joins with a local index
    // above the assignment point were not visible then, so settle them here.
    for (int p = 0; p < k; ++p)
      for (int q = p; q < k; ++q)
        if (B.join(f[p], f[q]) != f[A.join(p, q)]) return false;
    return true;
  }
  for (int b = 0; b < k; ++b) {
    if (used[b]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      // meet(j,i) sits below both arguments, hence at a lower local index:
      // its image is already fixed.
      if (B.meet(f[j], b) != f[A.meet(j, i)]) ok = false;
      if (ok && A.join(j, i) == i && B.join(f[j], b) != b) ok = false;
    }
    if (!ok) continue;
    f[i] = b;
    used[b] = 1;
    if (extend_isomorphism(A, B, i + 1, f, used)) return true;
    used[b] = 0;
    f[i] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LatticeView& A,
                                                 const LatticeView& B) {
  if (A.size() != B.size()) return std::nullopt;
  const int k = A.size();
  std::vector<int> f(k, -1);
  std::vector<char> used(k, 0);
  if (!extend_isomorphism(A, B, 0, f, used)) return std::nullopt;
  std::vector<int> image(k);
  for (int i = 0; i < k; ++i) image[i] = B.members[f[i]];
  return image;
}

std::optional<std::vector<int>> find_isomorphism(const Lattice& A,
                                                 const Lattice& B) {
  return find_isomorphism(LatticeView::whole(A), LatticeView::whole(B));
}

std::optional<std::vector<int>> find_isomorphism(const IntervalView& A,
                                                 const IntervalView& B) {
  return find_isomorphism(LatticeView::of(A), LatticeView::of(B));
}

}  // namespace wdl
