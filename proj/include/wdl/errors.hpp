#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wdl {

// Base type for every failure this library reports deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyCarrier : Error {
  EmptyCarrier() : Error("lattice carrier must be non-empty") {}
};

struct NotAPoset : Error {
  using Error::Error;
};

// Carries the offending pair in the caller's input indexing.
struct NotALattice : Error {
  int x, y;
  bool missing_meet;  // false means the pair lacks a join
  NotALattice(int x_, int y_, bool missing_meet_)
      : Error("not a lattice: elements " + std::to_string(x_) + " and " +
              std::to_string(y_) + " have no " +
              (missing_meet_ ? "meet" : "join")),
        x(x_),
        y(y_),
        missing_meet(missing_meet_) {}
};

struct NotComparable : Error {
  int lo, hi;
  NotComparable(int lo_, int hi_)
      : Error("interval bounds not comparable: " + std::to_string(lo_) +
              " is not below " + std::to_string(hi_)),
        lo(lo_),
        hi(hi_) {}
};

struct NotBoolean : Error {
  using Error::Error;
};

struct CarrierTooLarge : Error {
  int n, bound;
  CarrierTooLarge(int n_, int bound_)
      : Error("carrier size " + std::to_string(n_) +
              " exceeds the configured bound " + std::to_string(bound_)),
        n(n_),
        bound(bound_) {}
};

struct CarrierMismatch : Error {
  CarrierMismatch() : Error("congruences live on different carriers") {}
};

struct BudgetExceeded : Error {
  std::uint64_t budget, needed;
  BudgetExceeded(std::uint64_t budget_, std::uint64_t needed_)
      : Error("evaluation budget exceeded: would need " +
              std::to_string(needed_) + " of " + std::to_string(budget_)),
        budget(budget_),
        needed(needed_) {}
};

struct UnknownAxiom : Error {
  UnknownAxiom(const std::string& name)
      : Error("unknown axiom identifier: " + name) {}
};

struct InvalidAxiomSet : Error {
  using Error::Error;
};

struct MissingDualTable : Error {
  MissingDualTable(const std::string& what)
      : Error(what + " requires a dual weak complement table") {}
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct NotWdn : Error {
  using Error::Error;
};

struct BoundaryElement : Error {
  int c;
  explicit BoundaryElement(int c_)
      : Error("element " + std::to_string(c_) +
              " is a lattice bound; an interior element is required"),
        c(c_) {}
};

struct NotAHomomorphism : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

// Burmeister context parsing
struct MalformedHeader : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IllegalCell : Error {
  using Error::Error;
};

struct ConceptExplosion : Error {
  std::uint64_t limit;
  explicit ConceptExplosion(std::uint64_t limit_)
      : Error("concept count exceeds the configured limit " +
              std::to_string(limit_)),
        limit(limit_) {}
};

}  // namespace wdl
