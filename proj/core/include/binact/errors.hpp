#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace binact {

using Index = std::uint32_t;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong array shape, out-of-range index, bad file.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  enum class Reason { range, identity, associativity, inverses };

  NotAGroup(Reason reason, std::array<Index, 3> triple, std::string what);

  Reason reason() const noexcept { return reason_; }
  /// First failing (a, b, c); unused trailing slots are zero.
  const std::array<Index, 3>& triple() const noexcept { return triple_; }

 private:
  Reason reason_;
  std::array<Index, 3> triple_;
};

const char* to_string(NotAGroup::Reason reason);

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

/// The first tuple (g, h, x, y) on which a binary-action law fails. For the
/// identity law only (x, y) are meaningful and g = h = 0.
struct AxiomWitness {
  Index g = 0;
  Index h = 0;
  Index x = 0;
  Index y = 0;
};

class AxiomViolation : public Error {
 public:
  enum class Law { identity, composition };

  AxiomViolation(Law law, AxiomWitness witness);

  Law law() const noexcept { return law_; }
  const AxiomWitness& witness() const noexcept { return witness_; }

 private:
  Law law_;
  AxiomWitness witness_;
};

const char* to_string(AxiomViolation::Law law);

/// Two representative pairs of the same cosets whose images land in
/// different cosets: g(g1 H, g2 H) computed from (g1, g2) and from
/// (g1_alt, g2_alt) disagree.
struct CosetWitness {
  Index g = 0;
  Index g1 = 0;
  Index g2 = 0;
  Index g1_alt = 0;
  Index g2_alt = 0;
  Index coset = 0;
  Index coset_alt = 0;
};

class NotNormal : public Error {
 public:
  explicit NotNormal(CosetWitness witness);
  const CosetWitness& witness() const noexcept { return witness_; }

 private:
  CosetWitness witness_;
};

class NotInOrbit : public Error {
 public:
  using Error::Error;
};

/// A required structural predicate (transitive, distributive, free) failed.
class PredicateFailure : public Error {
 public:
  using Error::Error;
};

class NotTransitive : public PredicateFailure {
 public:
  NotTransitive(Index point, std::string what)
      : PredicateFailure(std::move(what)), point_(point) {}
  /// A point x with G(x, x) != X.
  Index point() const noexcept { return point_; }

 private:
  Index point_;
};

class NotDistributive : public PredicateFailure {
 public:
  NotDistributive(std::array<Index, 5> tuple, std::string what)
      : PredicateFailure(std::move(what)), tuple_(tuple) {}
  /// (g, h, x, x', x'') violating g(h(x,x'), h(x,x'')) = h(x, g(x',x'')).
  const std::array<Index, 5>& tuple() const noexcept { return tuple_; }

 private:
  std::array<Index, 5> tuple_;
};

class NotFree : public PredicateFailure {
 public:
  NotFree(Index point, Index element, std::string what)
      : PredicateFailure(std::move(what)), point_(point), element_(element) {}
  Index point() const noexcept { return point_; }
  /// Non-identity element fixing (point, point).
  Index element() const noexcept { return element_; }

 private:
  Index point_;
  Index element_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A result the library is built to confirm was contradicted by a concrete
/// instance. Carries a human-readable description of the evidence.
class RefutedProposition : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class TailNotZero : public Error {
 public:
  using Error::Error;
};

}  // namespace binact
