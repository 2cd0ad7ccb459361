#pragma once

// Vertical theories: which data makes up a vertical cell X ~> Y of a nerve, and how
// cells compose, whisker and project to Kleisli arrows.
//
// A cell is a list of components. A forward component is a map X -> PY. A backward
// component of depth j is a map Y -> P^j X (j = 0 or 1). Each equation pairs a backward
// component b (depth j) with a forward component f and demands
//   b ; P^j(f) = eta_Y                (j = 0)
//   b ; P(f)   = eta_Y ; eta_PY       (j = 1).
// The projection phi reads off one forward component.

#include <compare>
#include <string>
#include <vector>

#include "gnerve/monad.hpp"

namespace gnerve {

enum class Direction { forward, backward };

struct Component {
  std::string name;
  Direction dir = Direction::forward;
  int depth = 1;
};

struct Equation {
  std::size_t backward = 0;
  std::size_t forward = 0;
};

struct Theory {
  std::string tag;
  std::vector<Component> components;
  std::vector<Equation> equations;
  std::size_t phi = 0;
  bool builtin = true;
};

Theory kleisli_theory();
Theory embedding_theory();
Theory splitepi_theory();
Theory multi_embedding_theory(std::size_t n);
/// "kleisli", "embedding", "splitepi" or "multi:<n>"; throws std::invalid_argument.
Theory theory_from_tag(const std::string& tag);
/// Throws std::invalid_argument when a declared theory is ill-formed.
void check_theory(const Theory& t);

struct Cell {
  ObjIx src = 0;
  ObjIx tgt = 0;
  std::vector<MorIx> c;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Component typing plus every equation.
bool satisfies(const Theory& t, const Monad& m, const Cell& cell);
/// Every cell X ~> Y, in lexicographic order of component choices.
std::vector<Cell> cells(const Theory& t, const Monad& m, ObjIx x, ObjIx y);
/// All cells, grouped by (source, target) in object order.
std::vector<Cell> all_cells(const Theory& t, const Monad& m);

MorIx phi(const Theory& t, const Cell& cell);
Cell identity_cell(const Theory& t, const Monad& m, ObjIx x);
/// c1 : X ~> Y then c2 : Y ~> Z. Not checked against the equations.
Cell vcompose(const Theory& t, const Monad& m, const Cell& c1, const Cell& c2);
/// The cell PY ~> Y whose projection is the identity on PY.
Cell epsilon(const Theory& t, const Monad& m, ObjIx y);
/// top : X -> X', bottom : Y -> Y', left : X ~> Y, right : X' ~> Y'.
/// Throws std::invalid_argument on a boundary mismatch.
bool is_square(const Theory& t, const Monad& m, MorIx top, MorIx bottom, const Cell& left, const Cell& right);
/// Cell FX ~> FY of the codomain monad.
Cell whisker(const Theory& t, const MonadMorphism& mm, const Cell& cell);
/// The cell P f : PX ~> PY, whiskering by (P, mu ; eta P).
Cell p_cell(const Theory& t, const MonadPtr& m, const Cell& cell);
/// (P, mu ; eta P) : m -> m.
MonadMorphism p_monad_morphism(const MonadPtr& m);
std::string cell_name(const Theory& t, const Monad& m, const Cell& cell);

/// Embedding cell from a map L : Y -> X and a P-homomorphism res : PX -> PY with
/// PL ; res = id. Throws std::invalid_argument naming the failed equation.
Cell embedding_from_res(const Monad& m, MorIx L, MorIx res);
/// Inverse of embedding_from_res: (pi, P tau ; mu_Y).
std::pair<MorIx, MorIx> res_from_embedding(const Monad& m, const Cell& cell);

}  // namespace gnerve
