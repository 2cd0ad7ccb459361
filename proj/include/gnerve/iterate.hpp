#pragma once

// Lifting a monad T along a distributive law TP => PT to a double monad on the nerve of P,
// and the triple category obtained by taking a second nerve of the lifted monad.

#include "gnerve/nerve.hpp"

namespace gnerve {

/// T~ on N1(P): T on objects and horizontal morphisms, whiskering by (T, lam) on cells,
/// with unit and multiplication square families.
struct LiftedDoubleMonad {
  Nerve nerve;
  DistributiveLaw law;
  MonadMorphism lifted;
  DoubleFunctor action;
  DoubleNat unit;
  DoubleNat mult;
};

/// The distributive law or something derived from it failed validation.
class LiftError : public std::runtime_error {
 public:
  explicit LiftError(ValidationReport r) : std::runtime_error("lifting failed:\n" + r.summary()), report(std::move(r)) {}
  ValidationReport report;
};

/// Throws LiftError when the distributive law, (T, lam) or its unit and multiplication
/// 2-cells do not validate.
LiftedDoubleMonad lifted_double_monad(const Theory& t1, const DistributiveLaw& d);
/// Action is a double functor over T, unit and mult are double natural transformations,
/// and the monad laws hold squarewise.
ValidationReport validate_lifted_double_monad(const LiftedDoubleMonad& l);
/// T~ restricted to the cell category of N1(P): a monad whose objects are P-cells.
Monad vertical_monad(const LiftedDoubleMonad& l, const CatPtr& cells);

/// Corners: c00 base, c01 cells of N1(P), c10 cells of N2(T), c11 cells of N2(T~1).
/// Throws ClosureViolation when a piece of the left edge is missing.
TripleCategory triple_from_distributive_law(const Theory& t1, const Theory& t2, const DistributiveLaw& d);

}  // namespace gnerve
