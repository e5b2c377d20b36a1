#include "wdl/algebra.hpp"

#include <stdexcept>

#include "wdl/scan.hpp"

namespace wdl {

namespace {

Verdict fail_at(std::vector<int> tuple, int lhs, int rhs,
                std::string part = "") {
  Verdict v;
  v.pass = false;
  v.witness = Witness{std::move(tuple), lhs, rhs, std::move(part)};
  return v;
}

const Verdict kPass{};

}  // namespace

const char* axiom_name(AxiomId a) {
  switch (a) {
    case AxiomId::A1: return "A1";
    case AxiomId::A1p: return "A1'";
    case AxiomId::A2: return "A2";
    case AxiomId::A2p: return "A2'";
    case AxiomId::A3: return "A3";
    case AxiomId::A3p: return "A3'";
    case AxiomId::P4: return "P4";
    case AxiomId::P5: return "P5";
    case AxiomId::Cor1: return "COR1";
    case AxiomId::Ddag: return "DDAG";
    case AxiomId::Wdn: return "WDN";
  }
  return "?";
}

AxiomId axiom_from_name(const std::string& name) {
  for (AxiomId a : all_axioms())
    if (name == axiom_name(a)) return a;
  throw UnknownAxiom(name);
}

bool axiom_needs_dual(AxiomId a) {
  switch (a) {
    case AxiomId::A1p:
    case AxiomId::A2p:
    case AxiomId::A3p:
    case AxiomId::P4:
    case AxiomId::P5:
    case AxiomId::Wdn:
      return true;
    default:
      return false;
  }
}

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> v{
      AxiomId::A1, AxiomId::A1p, AxiomId::A2,   AxiomId::A2p,
      AxiomId::A3, AxiomId::A3p, AxiomId::P4,   AxiomId::P5,
      AxiomId::Cor1, AxiomId::Ddag, AxiomId::Wdn};
  return v;
}

const std::vector<AxiomId>& weak_only_axioms() {
  static const std::vector<AxiomId> v{AxiomId::A1, AxiomId::A2, AxiomId::A3,
                                      AxiomId::Cor1, AxiomId::Ddag};
  return v;
}

DicompAlgebra make_algebra(Lattice L, std::vector<int> weak,
                           std::optional<std::vector<int>> dual) {
  const int n = L.n;
  auto validate = [n](const std::vector<int>& t, const char* which) {
    if (static_cast<int>(t.size()) != n)
      throw Error(std::string(which) + " table must list one image per element");
    for (int v : t)
      if (v < 0 || v >= n)
        throw OutOfRange(std::string(which) + " table entry " +
                         std::to_string(v) + " outside 0.." +
                         std::to_string(n - 1));
  };
  validate(weak, "weak");
  if (dual) validate(*dual, "dual");
  DicompAlgebra A;
  A.lattice = std::move(L);
  A.weak.img = std::move(weak);
  if (dual) A.dual = UnaryOp{std::move(*dual)};
  return A;
}

namespace {

Verdict check_p4(const Lattice& L, const int* w, const int* d) {
  const int n = L.n;
  for (int y = 0; y < n; ++y) {
    int l = L.join(y, w[y]);
    if (l != L.top) return fail_at({y}, l, L.top, "y|~y=1");
  }
  if (w[L.bottom] != L.top) return fail_at({}, w[L.bottom], L.top, "~0=1");
  for (int y = 0; y < n; ++y) {
    int l = L.meet(y, d[y]);
    if (l != L.bottom) return fail_at({y}, l, L.bottom, "y&-y=0");
  }
  if (d[L.top] != L.bottom) return fail_at({}, d[L.top], L.bottom, "-1=0");
  for (int y = 0; y < n; ++y)
    if (!L.leq(d[y], w[y])) return fail_at({y}, d[y], w[y], "-y<=~y");
  return kPass;
}

Verdict check_p5(const Lattice& L, const int* w, const int* d) {
  const int n = L.n;
  for (int x = 0; x < n; ++x) {
    int l = w[w[w[x]]];
    if (l != w[x]) return fail_at({x}, l, w[x], "~~~x=~x");
  }
  for (int x = 0; x < n; ++x) {
    int l = d[d[d[x]]];
    if (l != d[x]) return fail_at({x}, l, d[x], "---x=-x");
  }
  auto k = [&](int x) { return w[w[x]]; };
  auto c = [&](int x) { return d[d[x]]; };
  for (int x = 0; x < n; ++x)
    if (!L.leq(k(x), x)) return fail_at({x}, k(x), x, "~~x contractive");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.leq(x, y) && !L.leq(k(x), k(y)))
        return fail_at({x, y}, k(x), k(y), "~~x monotone");
  for (int x = 0; x < n; ++x)
    if (k(k(x)) != k(x)) return fail_at({x}, k(k(x)), k(x), "~~x idempotent");
  for (int x = 0; x < n; ++x)
    if (!L.leq(x, c(x))) return fail_at({x}, c(x), x, "--x extensive");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.leq(x, y) && !L.leq(c(x), c(y)))
        return fail_at({x, y}, c(x), c(y), "--x monotone");
  for (int x = 0; x < n; ++x)
    if (c(c(x)) != c(x)) return fail_at({x}, c(c(x)), c(x), "--x idempotent");
  return kPass;
}

Verdict check_cor1(const Lattice& L, const int* w) {
  const int n = L.n;
  for (int x = 0; x < n; ++x)
    if (w[w[x]] != x) return fail_at({x}, w[w[x]], x, "~~x=x");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.leq(x, y) && !L.leq(w[y], w[x]))
        return fail_at({x, y}, w[y], w[x], "antitone");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int l = L.join(L.meet(x, y), L.meet(x, w[y]));
      if (l != x) return fail_at({x, y}, l, x, "(x&y)|(x&~y)=x");
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int l = L.meet(L.join(x, y), L.join(x, w[y]));
      if (l != x) return fail_at({x, y}, l, x, "(x|y)&(x|~y)=x");
    }
  return kPass;
}

}  // namespace

Verdict check_axiom_raw(const Lattice& L, const int* w, const int* d,
                        AxiomId a) {
  const int n = L.n;
  switch (a) {
    case AxiomId::A1:
      for (int x = 0; x < n; ++x) {
        int l = w[w[x]];
        if (!L.leq(l, x)) return fail_at({x}, l, x);
      }
      return kPass;
    case AxiomId::A1p:
      for (int x = 0; x < n; ++x) {
        int l = d[d[x]];
        if (!L.leq(x, l)) return fail_at({x}, l, x);
      }
      return kPass;
    case AxiomId::A2:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int l = L.meet(w[L.meet(x, y)], w[y]);
          if (l != w[y]) return fail_at({x, y}, l, w[y]);
        }
      return kPass;
    case AxiomId::A2p:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int l = L.meet(d[L.meet(x, y)], d[y]);
          if (l != d[y]) return fail_at({x, y}, l, d[y]);
        }
      return kPass;
    case AxiomId::A3:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int l = L.join(L.meet(x, y), L.meet(x, w[y]));
          if (l != x) return fail_at({x, y}, l, x);
        }
      return kPass;
    case AxiomId::A3p:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int l = L.meet(L.join(x, y), L.join(x, d[y]));
          if (l != x) return fail_at({x, y}, l, x);
        }
      return kPass;
    case AxiomId::P4:
      return check_p4(L, w, d);
    case AxiomId::P5:
      return check_p5(L, w, d);
    case AxiomId::Cor1:
      return check_cor1(L, w);
    case AxiomId::Ddag:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int l = L.join(L.meet(x, y), L.meet(x, w[y]));
          int r = L.meet(L.join(x, y), L.join(x, w[y]));
          if (l != r) return fail_at({x, y}, l, r);
        }
      return kPass;
    case AxiomId::Wdn:
      for (int x = 0; x < n; ++x)
        if (w[x] != d[x]) return fail_at({x}, w[x], d[x]);
      return kPass;
  }
  throw UnknownAxiom("unrecognized identifier value");
}

Verdict check_axiom(const DicompAlgebra& A, AxiomId a) {
  const int* d = nullptr;
  if (axiom_needs_dual(a)) {
    if (!A.dual) throw MissingDualTable(axiom_name(a));
    d = A.dual->img.data();
  } else if (A.dual) {
    d = A.dual->img.data();
  }
  return check_axiom_raw(A.lattice, A.weak.img.data(), d, a);
}

AxiomReport report_for(const DicompAlgebra& A,
                       const std::vector<AxiomId>& axioms) {
  AxiomReport r;
  r.degenerate = (A.lattice.n == 1);
  for (AxiomId a : axioms) r.verdicts.emplace_back(a, check_axiom(A, a));
  return r;
}

AxiomReport full_report(const DicompAlgebra& A) {
  AxiomReport r = report_for(A, A.dual ? all_axioms() : weak_only_axioms());
  if (A.dual) {
    auto passed = [&](AxiomId a) {
      for (const auto& [id, v] : r.verdicts)
        if (id == a) return v.pass;
      return false;
    };
    bool defining = passed(AxiomId::A1) && passed(AxiomId::A1p) &&
                    passed(AxiomId::A2) && passed(AxiomId::A2p) &&
                    passed(AxiomId::A3) && passed(AxiomId::A3p);
    if (defining && (!passed(AxiomId::P4) || !passed(AxiomId::P5)))
      throw std::logic_error(
          "derived properties P4/P5 failed although A1-A3' hold");
  }
  return r;
}

std::vector<int> complementation_table(const Lattice& L) {
  if (!is_distributive(L)) throw NotBoolean("lattice is not distributive");
  std::vector<int> t(L.n);
  for (int x = 0; x < L.n; ++x) {
    auto c = find_complement(L, x);
    if (!c)
      throw NotBoolean("element " + std::to_string(x) + " has no complement");
    t[x] = *c;
  }
  return t;
}

DicompAlgebra make_boolean_wdl(const Lattice& L) {
  std::vector<int> t = complementation_table(L);
  return make_algebra(L, t, t);
}

DicompAlgebra make_trivial_dicomp(const Lattice& L) {
  std::vector<int> w(L.n), d(L.n);
  for (int x = 0; x < L.n; ++x) {
    w[x] = (x == L.top) ? L.bottom : L.top;
    d[x] = (x == L.bottom) ? L.top : L.bottom;
  }
  return make_algebra(L, std::move(w), std::move(d));
}

Verdict satisfies_single_axiom(const Lattice& L, const UnaryOp& op) {
  if (static_cast<int>(op.img.size()) != L.n)
    throw Error("operation table must list one image per element");
  for (int v : op.img)
    if (v < 0 || v >= L.n)
      throw OutOfRange("operation table entry outside the carrier");
  return check_axiom_raw(L, op.img.data(), nullptr, AxiomId::Ddag);
}

RecognizeResult recognize_boolean(const Lattice& L, int bound, int workers) {
  if (L.n > bound) throw CarrierTooLarge(L.n, bound);
  auto pred = [&L](const int* img) {
    return check_axiom_raw(L, img, nullptr, AxiomId::Ddag).pass;
  };
  std::optional<TableId> id = first_table(L.n, pred, workers);
  RecognizeResult res;
  res.boolean = id.has_value();
  res.degenerate = (L.n == 1);
  if (id) res.table = UnaryOp{decode_table(*id, L.n)};
  const bool structural = is_distributive(L) && is_complemented(L);
  if (res.boolean != structural)
    throw std::logic_error(
        "single-equation verdict disagrees with distributive+complemented");
  return res;
}

Verdict verify_bound_construction(const Lattice& L, const UnaryOp& weak) {
  const int* w = weak.img.data();
  std::string failing;
  for (AxiomId a : {AxiomId::A1, AxiomId::A2, AxiomId::A3})
    if (!check_axiom_raw(L, w, nullptr, a).pass) {
      if (!failing.empty()) failing += ", ";
      failing += axiom_name(a);
    }
  if (!failing.empty())
    throw PreconditionViolated("weak table does not satisfy " + failing);
  for (int x = 0; x < L.n; ++x) {
    int l = L.join(x, w[x]);
    if (l != L.top) return fail_at({x}, l, L.top, "x|~x=1");
  }
  for (int x = 0; x < L.n; ++x) {
    int l = w[L.join(x, w[x])];
    if (l != L.bottom) return fail_at({x}, l, L.bottom, "~(x|~x)=0");
  }
  return kPass;
}

}  // namespace wdl
