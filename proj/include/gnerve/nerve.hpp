#pragma once

// Nerve double categories of monads and the checks run against them: the theorem
// axioms, closure of cells and 2-cells, faithfulness and bounded fullness of the nerve,
// and the square families attached to monad 2-cells.

#include <map>
#include <vector>

#include "gnerve/double.hpp"
#include "gnerve/enumerate.hpp"
#include "gnerve/theory.hpp"

namespace gnerve {

/// Horizontal category = base, vertical morphisms = cells (index i is cells[i]).
struct Nerve {
  Theory theory;
  MonadPtr monad;
  std::vector<Cell> cells;
  std::map<Cell, MorIx> index;
  DblPtr dbl;

  MorIx find(const Cell& c) const {
    auto it = index.find(c);
    return it == index.end() ? kNoMor : it->second;
  }
};

/// Throws ClosureViolation when an identity or composite cell leaves the theory.
Nerve build_nerve(const Theory& t, const MonadPtr& m);
DoubleCategory nerve_double_category(const Theory& t, const MonadPtr& m);
/// Transpose of the nerve.
DoubleCategory transpose_nerve(const Nerve& n);

/// Double functor N(P) -> N(Q) acting by whiskering with mm.
/// Throws ClosureViolation when a whiskered cell or square is missing from N(Q).
DoubleFunctor whiskering_functor(const Nerve& np, const Nerve& nq, const MonadMorphism& mm);

/// xi_X := phi(F_dbl eps_X), with F the horizontal part of the double functor.
MonadMorphism recover_xi(const Nerve& np, const Nerve& nq, const DoubleFunctor& f);

/// Theorem axioms 2a, 2b, 3a, 3b, projection functoriality, the middle-four identity and
/// the optional functoriality axiom (reported as not required).
std::vector<CheckResult> check_theorem_axioms(const Theory& t, const MonadPtr& m);

/// Vertical composites of cells stay in the theory.
CheckResult check_vertical_closure(const Theory& t, const MonadPtr& m);
/// Whiskering every cell of N(P) by every monad morphism P -> Q stays in the theory.
CheckResult check_whisker_closure(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget);

/// 2-cells between monad morphisms in the shape of the theory: forward components are
/// Kleisli 2-cells F => QF', backward depth-0 components monad 2-cells F' => F, backward
/// depth-1 components Kleisli 2-cells F' => QF.
struct TheoryTwoCell {
  MonadMorphism dom;
  MonadMorphism cod;
  std::vector<std::vector<MorIx>> comps;
};

ValidationReport validate_theory_2cell(const Theory& t, const TheoryTwoCell& a);
TheoryTwoCell identity_theory_2cell(const Theory& t, const MonadMorphism& mm);
Enumeration<TheoryTwoCell> enumerate_theory_2cells(const Theory& t, const MonadMorphism& a,
                                                   const MonadMorphism& b, Budget& budget);
TheoryTwoCell hcompose(const Theory& t, const TheoryTwoCell& a, const TheoryTwoCell& b);
/// Composes every enumerable 2-cell between morphisms P -> Q with every one between
/// morphisms Q -> R and validates the results.
CheckResult check_horizontal_closure(const Theory& t, const MonadPtr& p, const MonadPtr& q, const MonadPtr& r,
                                     Budget& budget);

/// Whiskering double functors are pairwise distinct over all monad morphisms P -> Q.
CheckResult check_faithfulness(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget);
/// recover_xi(whiskering by (F, xi)) = (F, xi) for every monad morphism P -> Q.
CheckResult check_recover_round_trip(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget);
/// Every double functor N(P) -> N(Q) determined on the class {eps_X ; f} u {P f} is a
/// whiskering. With `probe`, also counts double functors not determined on the class
/// (reported only).
CheckResult check_fullness_bounded(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget,
                                   bool probe = false);

/// Square family alpha_rho : (F, xi) rho => (F', xi') rho of a monad 2-cell, as a double
/// natural transformation between whiskering functors.
DoubleNat two_cell_square_family(const Nerve& np, const Nerve& nq, const MonadTwoCell& a);
/// The square family exists and validates for every monad 2-cell between morphisms P -> Q.
CheckResult check_two_cell_families(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget);
/// Same check for several theories, enumerating the 2-cells once.
std::vector<CheckResult> check_two_cell_families(const std::vector<Theory>& ts, const MonadPtr& p, const MonadPtr& q,
                                                 Budget& budget);

}  // namespace gnerve
