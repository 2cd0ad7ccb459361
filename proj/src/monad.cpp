#include "gnerve/monad.hpp"

#include <initializer_list>
#include <map>
#include <stdexcept>

namespace gnerve {

namespace {

// Composite of a path, or kNoMor if any step is undefined.
MorIx path(const FinCat& c, std::initializer_list<MorIx> ms) {
  MorIx acc = kNoMor;
  for (MorIx m : ms) {
    if (m == kNoMor || m >= c.num_morphisms()) return kNoMor;
    acc = acc == kNoMor ? m : c.comp_or_none(acc, m);
    if (acc == kNoMor) return kNoMor;
  }
  return acc;
}

bool agree(MorIx a, MorIx b) { return a != kNoMor && a == b; }

NatTrans nat(Functor dom, Functor cod, std::vector<MorIx> comp) {
  return NatTrans{std::move(dom), std::move(cod), std::move(comp)};
}

// Structural checks shared by all validators of transformation-shaped data.
bool check_nat(ValidationReport& r, const NatTrans& a, const std::string& label) {
  ValidationReport sub = validate_nattrans(a);
  r.merge(sub, label);
  return !sub.has_structural();
}

bool monads_parallel(const MonadMorphism& a, const MonadMorphism& b) {
  return same_category(a.dom->base, b.dom->base) && same_category(a.cod->base, b.cod->base);
}

}  // namespace

MorIx Monad::kleisli_compose(MorIx f, MorIx g, ObjIx z) const {
  const FinCat& c = *base;
  return c.compose(c.compose(f, map(g)), mu(z));
}

Monad make_monad(const CatPtr& base, Functor endo, std::vector<MorIx> unit, std::vector<MorIx> mult) {
  Monad m;
  m.base = base;
  m.endo = std::move(endo);
  m.unit = nat(identity_functor(base), m.endo, std::move(unit));
  m.mult = nat(compose(m.endo, m.endo), m.endo, std::move(mult));
  return m;
}

Monad identity_monad(const CatPtr& base) {
  std::vector<MorIx> ids;
  for (ObjIx x = 0; x < base->num_objects(); ++x) ids.push_back(base->identity(x));
  return make_monad(base, identity_functor(base), ids, ids);
}

ValidationReport validate_monad(const Monad& m) {
  ValidationReport r;
  if (!m.base || !same_category(m.endo.dom, m.base) || !same_category(m.endo.cod, m.base)) {
    r.structural("monad shape", "endofunctor is not on the base category");
    return r;
  }
  ValidationReport fr = validate_functor(m.endo);
  r.merge(fr, "endo");
  if (fr.has_structural()) return r;
  // Naturality is judged against the monad's own endofunctor, not the copies carried by the tables.
  bool ok = check_nat(r, nat(identity_functor(m.base), m.endo, m.unit.comp), "unit");
  ok = check_nat(r, nat(compose(m.endo, m.endo), m.endo, m.mult.comp), "mult") && ok;
  if (!ok) return r;
  const FinCat& c = *m.base;
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    ObjIx px = m.obj(x);
    MorIx idp = c.identity(px);
    if (!agree(path(c, {m.eta(px), m.mu(x)}), idp)) r.law("left unit (eta P ; mu = id)", c.object_name(x));
    if (!agree(path(c, {m.map(m.eta(x)), m.mu(x)}), idp)) {
      r.law("right unit (P eta ; mu = id)", c.object_name(x));
    }
    MorIx l = path(c, {m.mu(px), m.mu(x)});
    MorIx rr = path(c, {m.map(m.mu(x)), m.mu(x)});
    if (!agree(l, rr)) r.law("associativity (mu P ; mu = P mu ; mu)", c.object_name(x));
  }
  return r;
}

MonadMorphism make_monad_morphism(const MonadPtr& dom, const MonadPtr& cod, Functor F,
                                  std::vector<MorIx> xi) {
  MonadMorphism mm;
  mm.dom = dom;
  mm.cod = cod;
  mm.F = std::move(F);
  mm.xi = nat(compose(dom->endo, mm.F), compose(mm.F, cod->endo), std::move(xi));
  return mm;
}

ValidationReport validate_monad_morphism(const MonadMorphism& mm) {
  ValidationReport r;
  if (!mm.dom || !mm.cod || !same_category(mm.F.dom, mm.dom->base) ||
      !same_category(mm.F.cod, mm.cod->base)) {
    r.structural("monad morphism shape", "functor does not run between the monad bases");
    return r;
  }
  ValidationReport fr = validate_functor(mm.F);
  r.merge(fr, "F");
  if (fr.has_structural()) return r;
  if (!check_nat(r, nat(compose(mm.dom->endo, mm.F), compose(mm.F, mm.cod->endo), mm.xi.comp), "xi")) return r;
  const Monad& P = *mm.dom;
  const Monad& Q = *mm.cod;
  const FinCat& d = *Q.base;
  for (ObjIx x = 0; x < P.cat().num_objects(); ++x) {
    ObjIx fx = mm.obj(x);
    MorIx tri = path(d, {mm.map(P.eta(x)), mm.xi_at(x)});
    if (!agree(tri, Q.eta(fx))) r.law("triangle (F eta ; xi = eta F)", P.cat().object_name(x));
    MorIx l = path(d, {mm.map(P.mu(x)), mm.xi_at(x)});
    MorIx rr = path(d, {mm.xi_at(P.obj(x)), Q.map(mm.xi_at(x)), Q.mu(fx)});
    if (!agree(l, rr)) r.law("pentagon (F mu ; xi = xi P ; Q xi ; mu F)", P.cat().object_name(x));
  }
  return r;
}

MonadMorphism identity_monad_morphism(const MonadPtr& m) {
  std::vector<MorIx> xi;
  for (ObjIx x = 0; x < m->cat().num_objects(); ++x) xi.push_back(m->cat().identity(m->obj(x)));
  return make_monad_morphism(m, m, identity_functor(m->base), xi);
}

MonadMorphism compose(const MonadMorphism& a, const MonadMorphism& b) {
  const FinCat& e = *b.cod->base;
  std::vector<MorIx> xi;
  for (ObjIx x = 0; x < a.dom->cat().num_objects(); ++x) {
    xi.push_back(e.compose(b.map(a.xi_at(x)), b.xi_at(a.obj(x))));
  }
  return make_monad_morphism(a.dom, b.cod, compose(a.F, b.F), xi);
}

MonadMorphism unit_monad_morphism(const MonadPtr& id, const MonadPtr& m) {
  return make_monad_morphism(id, m, identity_functor(m->base), m->unit.comp);
}

MonadMorphism mult_monad_morphism(const MonadPtr& m, const MonadPtr& id) {
  return make_monad_morphism(m, id, m->endo, m->mult.comp);
}

MonadMorphism underlying_monad_morphism(const MonadPtr& id_dom, const MonadPtr& cod, Functor F) {
  std::vector<MorIx> xi;
  for (ObjIx x = 0; x < id_dom->cat().num_objects(); ++x) xi.push_back(cod->eta(F.ob[x]));
  return make_monad_morphism(id_dom, cod, std::move(F), xi);
}

ValidationReport validate_monad_2cell(const MonadTwoCell& a) {
  ValidationReport r;
  if (!monads_parallel(a.dom, a.cod)) {
    r.structural("2-cell shape", "monad morphisms are not parallel");
    return r;
  }
  if (!check_nat(r, nat(a.dom.F, a.cod.F, a.alpha), "alpha")) return r;
  const Monad& P = *a.dom.dom;
  const Monad& Q = *a.dom.cod;
  const FinCat& d = Q.cat();
  for (ObjIx x = 0; x < P.cat().num_objects(); ++x) {
    MorIx l = path(d, {a.dom.xi_at(x), Q.map(a.alpha[x])});
    MorIx rr = path(d, {a.alpha[P.obj(x)], a.cod.xi_at(x)});
    if (!agree(l, rr)) r.law("2-cell compatibility (xi ; Q alpha = alpha P ; xi')", P.cat().object_name(x));
  }
  return r;
}

MonadTwoCell identity_monad_2cell(const MonadMorphism& mm) {
  std::vector<MorIx> a;
  for (ObjIx x = 0; x < mm.dom->cat().num_objects(); ++x) a.push_back(mm.cod->cat().identity(mm.obj(x)));
  return {mm, mm, a};
}

ValidationReport validate_kl_2cell(const KlTwoCell& a) {
  ValidationReport r;
  if (!monads_parallel(a.dom, a.cod)) {
    r.structural("2-cell shape", "monad morphisms are not parallel");
    return r;
  }
  const Monad& P = *a.dom.dom;
  const Monad& Q = *a.dom.cod;
  if (!check_nat(r, nat(a.dom.F, compose(a.cod.F, Q.endo), a.alpha), "alpha")) return r;
  const FinCat& d = Q.cat();
  for (ObjIx x = 0; x < P.cat().num_objects(); ++x) {
    MorIx m = Q.mu(a.cod.obj(x));
    MorIx l = path(d, {a.dom.xi_at(x), Q.map(a.alpha[x]), m});
    MorIx rr = path(d, {a.alpha[P.obj(x)], Q.map(a.cod.xi_at(x)), m});
    if (!agree(l, rr)) r.law("Kleisli 2-cell condition", P.cat().object_name(x));
  }
  return r;
}

KlTwoCell kl_identity(const MonadMorphism& mm) {
  std::vector<MorIx> a;
  for (ObjIx x = 0; x < mm.dom->cat().num_objects(); ++x) a.push_back(mm.cod->eta(mm.obj(x)));
  return {mm, mm, a};
}

KlTwoCell kl_vcompose(const KlTwoCell& a, const KlTwoCell& b) {
  if (!(a.cod == b.dom)) throw std::invalid_argument("kl_vcompose: codomain of first is not domain of second");
  const Monad& Q = *a.dom.cod;
  const FinCat& d = Q.cat();
  std::vector<MorIx> out;
  for (ObjIx x = 0; x < a.alpha.size(); ++x) {
    out.push_back(d.compose(d.compose(a.alpha[x], Q.map(b.alpha[x])), Q.mu(b.cod.obj(x))));
  }
  return {a.dom, b.cod, out};
}

KlTwoCell kl_hcompose(const KlTwoCell& a, const KlTwoCell& b) {
  if (!same_category(a.dom.cod->base, b.dom.dom->base)) {
    throw std::invalid_argument("kl_hcompose: cells are not horizontally composable");
  }
  const Monad& R = *b.dom.cod;
  const FinCat& e = R.cat();
  const MonadMorphism& G = b.dom;
  std::vector<MorIx> out;
  for (ObjIx x = 0; x < a.alpha.size(); ++x) {
    ObjIx f2x = a.cod.obj(x);
    MorIx m = e.compose(G.map(a.alpha[x]), G.xi_at(f2x));
    m = e.compose(m, R.map(b.alpha[f2x]));
    out.push_back(e.compose(m, R.mu(b.cod.obj(f2x))));
  }
  return {compose(a.dom, b.dom), compose(a.cod, b.cod), out};
}

MonadTwoCell hcompose(const MonadTwoCell& a, const MonadTwoCell& b) {
  const FinCat& e = b.dom.cod->cat();
  std::vector<MorIx> out;
  for (ObjIx x = 0; x < a.alpha.size(); ++x) {
    out.push_back(e.compose(b.dom.map(a.alpha[x]), b.alpha[a.cod.obj(x)]));
  }
  return {compose(a.dom, b.dom), compose(a.cod, b.cod), out};
}

FinCat kleisli_category(const Monad& m) {
  const FinCat& c = m.cat();
  FinCat::Builder b;
  for (ObjIx x = 0; x < c.num_objects(); ++x) b.add_object(c.object_name(x));
  std::map<std::pair<ObjIx, MorIx>, MorIx> ix;  // (Y, f : X -> PY)
  struct K {
    ObjIx x, y;
    MorIx f;
  };
  std::vector<K> ks;
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    for (ObjIx y = 0; y < c.num_objects(); ++y) {
      for (MorIx f : c.hom(x, m.obj(y))) {
        ix[{y, f}] = b.add_morphism(c.object_name(x) + "~>" + c.object_name(y) + "[" + c.morphism_name(f) + "]", x, y);
        ks.push_back({x, y, f});
      }
    }
  }
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    auto it = ix.find({x, m.eta(x)});
    if (it != ix.end()) b.set_identity(x, it->second);
  }
  std::vector<std::vector<MorIx>> from(c.num_objects());
  for (MorIx k = 0; k < ks.size(); ++k) from[ks[k].x].push_back(k);
  for (MorIx k1 = 0; k1 < ks.size(); ++k1) {
    for (MorIx k2 : from[ks[k1].y]) {
      MorIx h = path(c, {ks[k1].f, m.map(ks[k2].f), m.mu(ks[k2].y)});
      auto it = ix.find({ks[k2].y, h});
      if (h != kNoMor && it != ix.end()) b.set_comp(k1, k2, it->second);
    }
  }
  return std::move(b).build();
}

Monad arrow_monad(const Monad& m) {
  const FinCat& c = m.cat();
  auto a = share(arrow_category(c));
  const auto sqs = arrow_squares(c);
  auto find = [&](MorIx f, MorIx f2, MorIx x, MorIx y) {
    auto k = a->find_morphism(arrow_morphism_name(c, f, f2, x, y));
    if (!k) throw std::invalid_argument("arrow_monad: image square missing");
    return *k;
  };
  Functor endo{a, a, {}, {}};
  for (MorIx f = 0; f < c.num_morphisms(); ++f) endo.ob.push_back(m.map(f));
  for (const auto& [f, f2, x, y] : sqs) endo.mor.push_back(find(m.map(f), m.map(f2), m.map(x), m.map(y)));
  std::vector<MorIx> unit, mult;
  for (MorIx f = 0; f < c.num_morphisms(); ++f) {
    unit.push_back(find(f, m.map(f), m.eta(c.src(f)), m.eta(c.tgt(f))));
    mult.push_back(find(m.map(m.map(f)), m.map(f), m.mu(c.src(f)), m.mu(c.tgt(f))));
  }
  return make_monad(a, std::move(endo), unit, mult);
}

ValidationReport validate_distributive_law(const DistributiveLaw& d) {
  ValidationReport r;
  if (!d.T || !d.P || !same_category(d.T->base, d.P->base)) {
    r.structural("distributive law shape", "monads are not on a shared base");
    return r;
  }
  const Monad& T = *d.T;
  const Monad& P = *d.P;
  if (!check_nat(r, nat(compose(P.endo, T.endo), compose(T.endo, P.endo), d.lam), "lambda")) return r;
  const FinCat& c = T.cat();
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    const std::string& n = c.object_name(x);
    ObjIx tx = T.obj(x), px = P.obj(x);
    if (!agree(path(c, {T.map(P.eta(x)), d.lam[x]}), P.eta(tx))) r.law("T eta_P ; lambda = eta_P T", n);
    if (!agree(path(c, {T.eta(px), d.lam[x]}), P.map(T.eta(x)))) r.law("eta_T P ; lambda = P eta_T", n);
    MorIx l3 = path(c, {T.map(P.mu(x)), d.lam[x]});
    MorIx r3 = path(c, {d.lam[px], P.map(d.lam[x]), P.mu(tx)});
    if (!agree(l3, r3)) r.law("T mu_P ; lambda = lambda P ; P lambda ; mu_P T", n);
    MorIx l4 = path(c, {T.mu(px), d.lam[x]});
    MorIx r4 = path(c, {T.map(d.lam[x]), d.lam[tx], P.map(T.mu(x))});
    if (!agree(l4, r4)) r.law("mu_T P ; lambda = T lambda ; lambda T ; P mu_T", n);
  }
  return r;
}

MonadMorphism lifted_morphism(const DistributiveLaw& d) {
  return make_monad_morphism(d.P, d.P, d.T->endo, d.lam);
}

MonadTwoCell lifted_unit_2cell(const DistributiveLaw& d) {
  return {identity_monad_morphism(d.P), lifted_morphism(d), d.T->unit.comp};
}

MonadTwoCell lifted_mult_2cell(const DistributiveLaw& d) {
  MonadMorphism l = lifted_morphism(d);
  return {compose(l, l), l, d.T->mult.comp};
}

}  // namespace gnerve
