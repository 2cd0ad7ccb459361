#pragma once

// Monads, monad morphisms, monad 2-cells, Kleisli 2-cells and distributive laws on
// finite categories. All composites are diagrammatic ("f then g").

#include <memory>
#include <string>

#include "gnerve/fincat.hpp"

namespace gnerve {

struct Monad {
  CatPtr base;
  Functor endo;   // P : base -> base
  NatTrans unit;  // eta : Id => P
  NatTrans mult;  // mu : P;P => P

  const FinCat& cat() const { return *base; }
  ObjIx obj(ObjIx x) const { return endo.ob[x]; }
  MorIx map(MorIx f) const { return endo.mor[f]; }
  MorIx eta(ObjIx x) const { return unit.comp[x]; }
  MorIx mu(ObjIx x) const { return mult.comp[x]; }
  /// f : X -> PY, g : Y -> PZ; returns f ; Pg ; mu_Z.
  MorIx kleisli_compose(MorIx f, MorIx g, ObjIx z) const;
};

using MonadPtr = std::shared_ptr<const Monad>;

inline MonadPtr share(Monad m) { return std::make_shared<const Monad>(std::move(m)); }

/// Builds a monad from table data, checking only that the shapes fit together.
Monad make_monad(const CatPtr& base, Functor endo, std::vector<MorIx> unit, std::vector<MorIx> mult);
Monad identity_monad(const CatPtr& base);
ValidationReport validate_monad(const Monad& m);

/// (F, xi) : P -> Q with xi : F P => Q F, component at X : F(PX) -> Q(FX).
struct MonadMorphism {
  MonadPtr dom;
  MonadPtr cod;
  Functor F;
  NatTrans xi;

  ObjIx obj(ObjIx x) const { return F.ob[x]; }
  MorIx map(MorIx f) const { return F.mor[f]; }
  MorIx xi_at(ObjIx x) const { return xi.comp[x]; }
  friend bool operator==(const MonadMorphism& a, const MonadMorphism& b) {
    return a.F == b.F && a.xi.comp == b.xi.comp;
  }
};

MonadMorphism make_monad_morphism(const MonadPtr& dom, const MonadPtr& cod, Functor F,
                                  std::vector<MorIx> xi);
ValidationReport validate_monad_morphism(const MonadMorphism& mm);

MonadMorphism identity_monad_morphism(const MonadPtr& m);
/// (F, xi) then (G, phi) = (F;G, G(xi_X) ; phi_FX).
MonadMorphism compose(const MonadMorphism& a, const MonadMorphism& b);
/// (1, eta) : identity monad -> m. `id` must be identity_monad(m.base).
MonadMorphism unit_monad_morphism(const MonadPtr& id, const MonadPtr& m);
/// (P, mu) : m -> identity monad.
MonadMorphism mult_monad_morphism(const MonadPtr& m, const MonadPtr& id);
/// Underlying functor of identity monads: (F, eta_Q F) from identity_monad(C) to Q.
MonadMorphism underlying_monad_morphism(const MonadPtr& id_dom, const MonadPtr& cod, Functor F);

/// alpha : F => F' with xi_X ; Q(alpha_X) = alpha_PX ; xi'_X.
struct MonadTwoCell {
  MonadMorphism dom;
  MonadMorphism cod;
  std::vector<MorIx> alpha;
};

ValidationReport validate_monad_2cell(const MonadTwoCell& a);
MonadTwoCell identity_monad_2cell(const MonadMorphism& mm);

/// alpha_X : FX -> Q F'X with xi_X ; Q(alpha_X) ; mu_F'X = alpha_PX ; Q(xi'_X) ; mu_F'X.
struct KlTwoCell {
  MonadMorphism dom;
  MonadMorphism cod;
  std::vector<MorIx> alpha;
};

ValidationReport validate_kl_2cell(const KlTwoCell& a);
/// Identity in the Kleisli hom-category: eta_Q F.
KlTwoCell kl_identity(const MonadMorphism& mm);
/// alpha_X ; Q(beta_X) ; mu_F''X.
KlTwoCell kl_vcompose(const KlTwoCell& a, const KlTwoCell& b);
/// a between morphisms P -> Q, b between morphisms Q -> R. Component at X:
/// G(alpha_X) ; phi_F'X ; R(beta_F'X) ; mu_G'F'X.
KlTwoCell kl_hcompose(const KlTwoCell& a, const KlTwoCell& b);
/// The plain monad 2-cell composite: G(alpha_X) ; beta_F'X.
MonadTwoCell hcompose(const MonadTwoCell& a, const MonadTwoCell& b);

/// Kleisli category: hom(X, Y) = base(X, PY); morphisms named "X~>Y[f]".
FinCat kleisli_category(const Monad& m);

/// Componentwise monad on arrow_category(m.base).
Monad arrow_monad(const Monad& m);

/// lam : T P => P T, component at X : T(PX) -> P(TX).
struct DistributiveLaw {
  MonadPtr T;
  MonadPtr P;
  std::vector<MorIx> lam;
};

ValidationReport validate_distributive_law(const DistributiveLaw& d);
/// (T, lam) as a monad morphism P -> P.
MonadMorphism lifted_morphism(const DistributiveLaw& d);
/// eta_T : (1, id) => (T, lam) and mu_T : (TT, T lam ; lam T) => (T, lam).
MonadTwoCell lifted_unit_2cell(const DistributiveLaw& d);
MonadTwoCell lifted_mult_2cell(const DistributiveLaw& d);

}  // namespace gnerve
