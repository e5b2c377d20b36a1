#include "wdl/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>
#include <stdexcept>

#include "wdl/scan.hpp"

namespace wdl {

namespace {

// Posets on k elements as k*k reflexive-transitive leq matrices.
using Mat = std::vector<std::uint8_t>;

// Minimum relabeled matrix over all element orders grouped by the invariant
// (|down-set| ascending, |up-set| ascending). x < y forces |down(x)| <
// |down(y)|, so every such order is a linear extension and the certificate
// is reached by permuting only within invariant groups.
Mat canonical_form(int k, const Mat& leq) {
  std::vector<std::pair<std::pair<int, int>, int>> keyed(k);
  for (int x = 0; x < k; ++x) {
    int down = 0, up = 0;
    for (int y = 0; y < k; ++y) {
      if (leq[y * k + x]) ++down;
      if (leq[x * k + y]) ++up;
    }
    keyed[x] = {{down, up}, x};
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::vector<int>> groups;
  for (int i = 0; i < k; ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) groups.emplace_back();
    groups.back().push_back(keyed[i].second);
  }

  Mat best;
  std::vector<int> order;
  order.reserve(k);
  auto dfs = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      Mat m(static_cast<std::size_t>(k) * k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          m[i * k + j] = leq[order[i] * k + order[j]];
      if (best.empty() || m < best) best = std::move(m);
      return;
    }
    std::vector<int> perm = groups[g];
    do {
      order.insert(order.end(), perm.begin(), perm.end());
      self(self, g + 1);
      order.resize(order.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  dfs(dfs, 0);
  return best;
}

bool is_lattice_order(int k, const Mat& leq) {
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y) {
      int glb = -1, lub = -1;
      for (int w = 0; w < k; ++w) {
        if (leq[w * k + x] && leq[w * k + y] && (glb < 0 || leq[glb * k + w]))
          glb = w;
        if (leq[x * k + w] && leq[y * k + w] && (lub < 0 || leq[w * k + lub]))
          lub = w;
      }
      if (glb < 0 || lub < 0) return false;
      for (int w = 0; w < k; ++w) {
        if (leq[w * k + x] && leq[w * k + y] && !leq[w * k + glb]) return false;
        if (leq[x * k + w] && leq[y * k + w] && !leq[lub * k + w]) return false;
      }
    }
  return true;
}

}  // namespace

std::vector<Lattice> enumerate_lattices(int n, int bound) {
  if (n <= 0) throw EmptyCarrier();
  if (n > bound) throw CarrierTooLarge(n, bound);

  // Grow all posets up to isomorphism by adding a maximal element over each
  // order ideal of each smaller poset.
  std::vector<Mat> level{Mat{1}};
  for (int k = 2; k <= n; ++k) {
    std::set<Mat> seen;
    const int p = k - 1;
    for (const Mat& P : level) {
      for (int mask = 0; mask < (1 << p); ++mask) {
        bool ideal = true;
        for (int x = 0; x < p && ideal; ++x) {
          if (!(mask >> x & 1)) continue;
          for (int y = 0; y < p; ++y)
            if (P[y * p + x] && !(mask >> y & 1)) {
              ideal = false;
              break;
            }
        }
        if (!ideal) continue;
        Mat Q(static_cast<std::size_t>(k) * k, 0);
        for (int x = 0; x < p; ++x)
          for (int y = 0; y < p; ++y) Q[x * k + y] = P[x * p + y];
        Q[p * k + p] = 1;
        for (int x = 0; x < p; ++x)
          if (mask >> x & 1) Q[x * k + p] = 1;
        seen.insert(canonical_form(k, Q));
      }
    }
    level.assign(seen.begin(), seen.end());
  }

  std::vector<Lattice> out;
  for (const Mat& m : level)
    if (is_lattice_order(n, m)) out.push_back(build_lattice_from_order(n, m));
  return out;
}

AxiomSubset axioms_from_names(const std::string& comma_list) {
  AxiomSubset s;
  std::string cur;
  for (char ch : comma_list + ",") {
    if (ch != ',') {
      if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
      continue;
    }
    if (!cur.empty()) s.chosen.push_back(axiom_from_name(cur));
    cur.clear();
  }
  return s;
}

namespace {

const std::vector<AxiomId> kWeakSide{AxiomId::A1, AxiomId::A2, AxiomId::A3,
                                     AxiomId::Ddag};
const std::vector<AxiomId> kDualSide{AxiomId::A1p, AxiomId::A2p, AxiomId::A3p};

bool contains(const std::vector<AxiomId>& v, AxiomId a) {
  return std::find(v.begin(), v.end(), a) != v.end();
}

void validate_subset(const AxiomSubset& which, OpSlot slot) {
  if (which.chosen.empty())
    throw InvalidAxiomSet("axiom subset must be nonempty");
  for (AxiomId a : which.chosen) {
    const bool weak_side = contains(kWeakSide, a);
    const bool dual_side = contains(kDualSide, a);
    if (!weak_side && !dual_side && a != AxiomId::Wdn)
      throw InvalidAxiomSet(std::string(axiom_name(a)) +
                            " cannot constrain an enumeration");
    switch (slot) {
      case OpSlot::Weak:
        if (!weak_side)
          throw InvalidAxiomSet(std::string(axiom_name(a)) +
                                " does not apply to a weak-only slot");
        break;
      case OpSlot::Dual:
        if (!dual_side)
          throw InvalidAxiomSet(std::string(axiom_name(a)) +
                                " does not apply to a dual-only slot");
        break;
      case OpSlot::Pair:
        break;
    }
  }
}

std::vector<TableId> filter_side(const Lattice& L,
                                 const std::vector<AxiomId>& axioms,
                                 bool as_dual, int workers, Budget* budget) {
  if (budget) budget->charge(table_space_size(L.n));
  if (axioms.empty()) {
    std::vector<TableId> all(table_space_size(L.n));
    for (TableId i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  auto pred = [&](const int* img) {
    for (AxiomId a : axioms) {
      const int* w = as_dual ? nullptr : img;
      const int* d = as_dual ? img : nullptr;
      if (!check_axiom_raw(L, w, d, a).pass) return false;
    }
    return true;
  };
  return filter_tables(L.n, pred, workers);
}

UnaryOp op_of(TableId id, int n) { return UnaryOp{decode_table(id, n)}; }

}  // namespace

std::vector<UnaryOp> enumerate_ops_satisfying(const Lattice& L,
                                              const AxiomSubset& which,
                                              OpSlot slot, int workers,
                                              Budget* budget) {
  if (slot == OpSlot::Pair)
    throw InvalidAxiomSet("pair enumeration returns pairs; use the pair form");
  validate_subset(which, slot);
  std::vector<TableId> ids =
      filter_side(L, which.chosen, slot == OpSlot::Dual, workers, budget);
  std::vector<UnaryOp> out;
  out.reserve(ids.size());
  for (TableId id : ids) out.push_back(op_of(id, L.n));
  return out;
}

std::vector<std::pair<UnaryOp, UnaryOp>> enumerate_op_pairs_satisfying(
    const Lattice& L, const AxiomSubset& which, int workers, Budget* budget) {
  validate_subset(which, OpSlot::Pair);
  const int n = L.n;

  std::vector<AxiomId> weak_axioms, dual_axioms;
  bool wdn = false;
  for (AxiomId a : which.chosen) {
    if (a == AxiomId::Wdn)
      wdn = true;
    else if (contains(kWeakSide, a))
      weak_axioms.push_back(a);
    else
      dual_axioms.push_back(a);
  }

  std::vector<std::pair<UnaryOp, UnaryOp>> out;
  if (wdn) {
    // Equal tables: one scan checking both sides on the same table.
    if (budget) budget->charge(table_space_size(n));
    auto pred = [&](const int* img) {
      for (AxiomId a : weak_axioms)
        if (!check_axiom_raw(L, img, nullptr, a).pass) return false;
      for (AxiomId a : dual_axioms)
        if (!check_axiom_raw(L, nullptr, img, a).pass) return false;
      return true;
    };
    for (TableId id : filter_tables(n, pred, workers)) {
      UnaryOp t = op_of(id, n);
      out.emplace_back(t, t);
    }
    return out;
  }

  std::vector<TableId> weaks =
      filter_side(L, weak_axioms, false, workers, budget);
  std::vector<TableId> duals =
      filter_side(L, dual_axioms, true, workers, budget);
  if (budget)
    budget->charge(static_cast<std::uint64_t>(weaks.size()) * duals.size());
  for (TableId w : weaks)
    for (TableId d : duals) out.emplace_back(op_of(w, n), op_of(d, n));
  return out;
}

std::vector<DicompAlgebra> enumerate_dicomplementations(const Lattice& L,
                                                        int workers,
                                                        Budget* budget) {
  AxiomSubset six{{AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A1p,
                   AxiomId::A2p, AxiomId::A3p}};
  std::vector<DicompAlgebra> out;
  for (auto& [w, d] : enumerate_op_pairs_satisfying(L, six, workers, budget))
    out.push_back(make_algebra(L, w.img, d.img));
  return out;
}

namespace {

const std::vector<AxiomId> kConclusions{AxiomId::A1, AxiomId::A1p, AxiomId::A2,
                                        AxiomId::A2p};

// First conclusion violated by the pair, in canonical order.
std::optional<std::pair<AxiomId, Witness>> first_violation(const Lattice& L,
                                                           const int* w,
                                                           const int* d) {
  for (AxiomId a : kConclusions) {
    Verdict v = check_axiom_raw(L, w, d, a);
    if (!v.pass) return std::make_pair(a, *v.witness);
  }
  return std::nullopt;
}

Counterexample make_counterexample(const Lattice& L, const UnaryOp& w,
                                   const UnaryOp& d) {
  auto viol = first_violation(L, w.img.data(), d.img.data());
  if (!viol)
    throw std::logic_error("candidate pair violates no conclusion axiom");
  Counterexample ce;
  ce.lattice = L;
  ce.weak = w;
  ce.dual = d;
  ce.violated = viol->first;
  ce.witness = viol->second;
  return ce;
}

std::uint64_t pair_space(int n, bool require_wdn) {
  const std::uint64_t t = table_space_size(n);
  return require_wdn ? t : t * t;
}

std::uint64_t elapsed_since(
    const std::chrono::steady_clock::time_point& start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
}

}  // namespace

void replay_counterexample(const Counterexample& ce) {
  const Lattice& L = ce.lattice;
  const int* w = ce.weak.img.data();
  const int* d = ce.dual.img.data();
  if (!check_axiom_raw(L, w, nullptr, AxiomId::A3).pass)
    throw std::logic_error("counterexample weak table fails A3");
  if (!check_axiom_raw(L, nullptr, d, AxiomId::A3p).pass)
    throw std::logic_error("counterexample dual table fails A3'");
  Verdict v = check_axiom_raw(L, w, d, ce.violated);
  if (v.pass) throw std::logic_error("violated axiom passes on replay");
  if (v.witness->tuple != ce.witness.tuple || v.witness->lhs != ce.witness.lhs ||
      v.witness->rhs != ce.witness.rhs)
    throw std::logic_error("witness does not replay");
  auto first = first_violation(L, w, d);
  if (!first || first->first != ce.violated)
    throw std::logic_error("violated axiom is not the first failure");
}

SearchReport search_open_question(const SearchConfig& cfg) {
  if (cfg.max_n < 1) throw Error("search bound must be at least 1");
  if (cfg.max_n > kEnumerateBound)
    throw CarrierTooLarge(cfg.max_n, kEnumerateBound);
  const auto start = std::chrono::steady_clock::now();

  SearchReport rep;
  rep.max_n = cfg.max_n;
  rep.require_wdn = cfg.require_wdn;
  Budget meter{cfg.budget, 0};

  for (int n = 1; n <= cfg.max_n; ++n) {
    std::uint64_t size_pairs = 0;
    for (const Lattice& L : enumerate_lattices(n)) {
      try {
        meter.charge(cfg.require_wdn ? table_space_size(n)
                                     : 2 * table_space_size(n));
      } catch (const BudgetExceeded& e) {
        throw SearchBudgetExceeded(e.budget, e.needed, rep);
      }
      size_pairs += pair_space(n, cfg.require_wdn);

      if (cfg.require_wdn) {
        auto pred = [&](const int* img) {
          return check_axiom_raw(L, img, nullptr, AxiomId::A3).pass &&
                 check_axiom_raw(L, nullptr, img, AxiomId::A3p).pass;
        };
        for (TableId id : filter_tables(n, pred, cfg.workers)) {
          UnaryOp t = op_of(id, n);
          if (first_violation(L, t.img.data(), t.img.data())) {
            rep.counterexample = make_counterexample(L, t, t);
            replay_counterexample(*rep.counterexample);
            if (cfg.timings) rep.elapsed_ms = elapsed_since(start);
            return rep;
          }
        }
        continue;
      }

      auto wpred = [&](const int* img) {
        return check_axiom_raw(L, img, nullptr, AxiomId::A3).pass;
      };
      auto dpred = [&](const int* img) {
        return check_axiom_raw(L, nullptr, img, AxiomId::A3p).pass;
      };
      std::vector<TableId> weaks = filter_tables(n, wpred, cfg.workers);
      std::vector<TableId> duals = filter_tables(n, dpred, cfg.workers);
      if (weaks.empty() || duals.empty()) continue;

      // A pair violates a conclusion iff its weak side fails A1/A2 or its
      // dual side fails A1'/A2', so the first bad pair in weak-major order
      // is determined by the first bad table on each side.
      auto bad_weak = [&](TableId id) {
        std::vector<int> img = decode_table(id, n);
        return !check_axiom_raw(L, img.data(), nullptr, AxiomId::A1).pass ||
               !check_axiom_raw(L, img.data(), nullptr, AxiomId::A2).pass;
      };
      auto bad_dual = [&](TableId id) {
        std::vector<int> img = decode_table(id, n);
        return !check_axiom_raw(L, nullptr, img.data(), AxiomId::A1p).pass ||
               !check_axiom_raw(L, nullptr, img.data(), AxiomId::A2p).pass;
      };

      std::optional<std::pair<TableId, TableId>> hit;
      if (bad_weak(weaks.front())) {
        hit = {weaks.front(), duals.front()};
      } else {
        for (TableId d : duals)
          if (bad_dual(d)) {
            hit = {weaks.front(), d};
            break;
          }
        if (!hit)
          for (std::size_t i = 1; i < weaks.size(); ++i)
            if (bad_weak(weaks[i])) {
              hit = {weaks[i], duals.front()};
              break;
            }
      }
      if (hit) {
        rep.counterexample =
            make_counterexample(L, op_of(hit->first, n), op_of(hit->second, n));
        replay_counterexample(*rep.counterexample);
        if (cfg.timings) rep.elapsed_ms = elapsed_since(start);
        return rep;
      }
    }
    rep.pairs_by_size.emplace_back(n, size_pairs);
  }
  if (cfg.timings) rep.elapsed_ms = elapsed_since(start);
  return rep;
}

SearchReport search_open_question_serial(const SearchConfig& cfg) {
  if (cfg.max_n < 1) throw Error("search bound must be at least 1");
  if (cfg.max_n > kEnumerateBound)
    throw CarrierTooLarge(cfg.max_n, kEnumerateBound);
  const auto start = std::chrono::steady_clock::now();

  SearchReport rep;
  rep.max_n = cfg.max_n;
  rep.require_wdn = cfg.require_wdn;
  Budget meter{cfg.budget, 0};

  for (int n = 1; n <= cfg.max_n; ++n) {
    std::uint64_t size_pairs = 0;
    for (const Lattice& L : enumerate_lattices(n)) {
      try {
        meter.charge(cfg.require_wdn ? table_space_size(n)
                                     : 2 * table_space_size(n));
      } catch (const BudgetExceeded& e) {
        throw SearchBudgetExceeded(e.budget, e.needed, rep);
      }
      size_pairs += pair_space(n, cfg.require_wdn);

      const TableId total = table_space_size(n);
      std::vector<int> wimg(n), dimg(n);
      for (TableId wid = 0; wid < total; ++wid) {
        decode_table(wid, n, wimg.data());
        if (!check_axiom_raw(L, wimg.data(), nullptr, AxiomId::A3).pass)
          continue;
        for (TableId did = 0; did < total; ++did) {
          if (cfg.require_wdn && did != wid) continue;
          decode_table(did, n, dimg.data());
          if (!check_axiom_raw(L, nullptr, dimg.data(), AxiomId::A3p).pass)
            continue;
          if (first_violation(L, wimg.data(), dimg.data())) {
            rep.counterexample =
                make_counterexample(L, UnaryOp{wimg}, UnaryOp{dimg});
            replay_counterexample(*rep.counterexample);
            if (cfg.timings) rep.elapsed_ms = elapsed_since(start);
            return rep;
          }
        }
      }
    }
    rep.pairs_by_size.emplace_back(n, size_pairs);
  }
  if (cfg.timings) rep.elapsed_ms = elapsed_since(start);
  return rep;
}

}  // namespace wdl
