#include "gnerve/iterate.hpp"

namespace gnerve {

namespace {

DoubleFunctor then(const DoubleFunctor& f, const DoubleFunctor& g) {
  DoubleFunctor h{f.dom, g.cod, compose(f.h, g.h), compose(f.v, g.v), {}};
  for (SqIx s : f.sq) h.sq.push_back(s == kNoSq ? kNoSq : g.sq[s]);
  return h;
}

}  // namespace

LiftedDoubleMonad lifted_double_monad(const Theory& t1, const DistributiveLaw& d) {
  ValidationReport r;
  r.merge(validate_distributive_law(d), "lambda");
  if (!r.ok()) throw LiftError(std::move(r));
  MonadMorphism lm = lifted_morphism(d);
  r.merge(validate_monad_morphism(lm), "(T, lambda)");
  MonadTwoCell u = lifted_unit_2cell(d);
  MonadTwoCell m = lifted_mult_2cell(d);
  r.merge(validate_monad_2cell(u), "eta_T");
  r.merge(validate_monad_2cell(m), "mu_T");
  if (!r.ok()) throw LiftError(std::move(r));
  Nerve n = build_nerve(t1, d.P);
  DoubleFunctor action = whiskering_functor(n, n, lm);
  DoubleNat un = two_cell_square_family(n, n, u);
  DoubleNat mu = two_cell_square_family(n, n, m);
  return {std::move(n), d, std::move(lm), std::move(action), std::move(un), std::move(mu)};
}

Monad vertical_monad(const LiftedDoubleMonad& l, const CatPtr& cells) {
  std::vector<std::string> missing;
  for (MorIx r = 0; r < l.unit.sq.size(); ++r) {
    if (l.unit.sq[r] == kNoSq) missing.push_back("unit square at " + l.nerve.dbl->vcat->morphism_name(r));
    if (l.mult.sq[r] == kNoSq) missing.push_back("multiplication square at " + l.nerve.dbl->vcat->morphism_name(r));
  }
  if (!missing.empty()) throw ClosureViolation("lifted monad is missing squares", missing);
  Functor endo{cells, cells, l.action.v.mor, l.action.sq};
  return make_monad(cells, std::move(endo), l.unit.sq, l.mult.sq);
}

ValidationReport validate_lifted_double_monad(const LiftedDoubleMonad& l) {
  ValidationReport r;
  r.merge(validate_double_functor(l.action), "action");
  if (!(l.action.h == l.law.T->endo)) r.law("action on the base is T", "horizontal part");
  r.merge(validate_double_nat(l.unit), "unit");
  r.merge(validate_double_nat(l.mult), "mult");
  if (!r.ok()) return r;
  if (!(l.unit.F == identity_double_functor(l.nerve.dbl))) r.law("unit source is the identity", "unit");
  if (!(l.unit.G == l.action)) r.law("unit target is the action", "unit");
  if (!(l.mult.F == then(l.action, l.action))) r.law("mult source is the action twice", "mult");
  if (!(l.mult.G == l.action)) r.law("mult target is the action", "mult");
  if (l.unit.comp != l.law.T->unit.comp) r.law("unit components are eta_T", "unit");
  if (l.mult.comp != l.law.T->mult.comp) r.law("mult components are mu_T", "mult");
  if (!r.ok()) return r;
  CatPtr cells = share(cell_category(*l.nerve.dbl));
  r.merge(validate_monad(vertical_monad(l, cells)), "squarewise");
  return r;
}

TripleCategory triple_from_distributive_law(const Theory& t1, const Theory& t2, const DistributiveLaw& d) {
  LiftedDoubleMonad lm = lifted_double_monad(t1, d);
  TripleCategory t;
  t.c00 = d.P->base;
  t.right = lm.nerve.dbl;
  t.c01 = share(cell_category(*t.right));
  Nerve n2 = build_nerve(t2, d.T);
  t.bottom = n2.dbl;
  t.c10 = share(cell_category(*t.bottom));
  MonadPtr tt = share(vertical_monad(lm, t.c01));
  Nerve n3 = build_nerve(t2, tt);
  t.top = n3.dbl;
  t.c11 = share(cell_category(*t.top));

  const DoubleCategory& R = *t.right;
  const DoubleCategory& B = *t.bottom;
  const FinCat& rv = *R.vcat;
  auto side = [&](const Cell& k, bool source) {
    Cell c{source ? rv.src(k.src) : rv.tgt(k.src), source ? rv.src(k.tgt) : rv.tgt(k.tgt), {}};
    for (MorIx q : k.c) c.c.push_back(source ? R.squares[q].top : R.squares[q].bottom);
    return n2.find(c);
  };

  std::vector<std::string> missing;
  FinCat::Builder vb;
  for (ObjIx x = 0; x < t.c10->num_objects(); ++x) vb.add_object(t.c10->object_name(x));
  std::vector<MorIx> ls, lt;
  for (MorIx k = 0; k < n3.cells.size(); ++k) {
    ls.push_back(side(n3.cells[k], true));
    lt.push_back(side(n3.cells[k], false));
    if (ls.back() == kNoMor || lt.back() == kNoMor) {
      missing.push_back("boundary of " + t.c11->object_name(k));
      ls.back() = lt.back() = 0;
    }
    vb.add_morphism(t.c11->object_name(k), ls.back(), lt.back());
  }
  for (MorIx j = 0; j < n2.cells.size(); ++j) {
    const Cell& c = n2.cells[j];
    Cell k{rv.identity(c.src), rv.identity(c.tgt), {}};
    for (MorIx h : c.c) k.c.push_back(R.vid[h]);
    MorIx ix = n3.find(k);
    if (ix == kNoMor) missing.push_back("vertical identity on " + t.c10->object_name(j));
    else vb.set_identity(j, ix);
  }
  for (MorIx a = 0; a < n3.cells.size(); ++a) {
    for (MorIx b = 0; b < n3.cells.size(); ++b) {
      if (lt[a] != ls[b]) continue;
      const Cell &ka = n3.cells[a], &kb = n3.cells[b];
      Cell k{rv.comp_or_none(ka.src, kb.src), rv.comp_or_none(ka.tgt, kb.tgt), {}};
      bool ok = k.src != kNoMor && k.tgt != kNoMor;
      for (std::size_t i = 0; ok && i < ka.c.size(); ++i) {
        SqIx s = R.vcomp_or_none(ka.c[i], kb.c[i]);
        ok = s != kNoSq;
        k.c.push_back(s);
      }
      MorIx ix = ok ? n3.find(k) : kNoMor;
      if (ix == kNoMor) {
        missing.push_back("composite " + t.c11->object_name(a) + " ; " + t.c11->object_name(b));
      } else {
        vb.set_comp(a, b, ix);
      }
    }
  }
  std::vector<std::array<MorIx, 4>> bs;
  for (const Square& q : t.top->squares) {
    const Square &qa = R.squares[q.top], &qb = R.squares[q.bottom];
    const auto& s = B.find(qa.top, qb.top, ls[q.left], ls[q.right]);
    const auto& u = B.find(qa.bottom, qb.bottom, lt[q.left], lt[q.right]);
    if (s.empty() || u.empty()) {
      missing.push_back("boundary of square " + q.id);
      bs.push_back({kNoMor, kNoMor, q.left, q.right});
    } else {
      bs.push_back({s.front(), u.front(), q.left, q.right});
    }
  }
  if (!missing.empty()) throw ClosureViolation("left edge of the triple category is incomplete", missing);
  DoubleCategory left = double_from_boundaries(t.c10, share(std::move(vb).build()), std::move(bs));
  for (SqIx s = 0; s < left.squares.size(); ++s) left.squares[s].id = t.c11->morphism_name(s);
  left.reindex();
  t.left = share(std::move(left));

  t.bottom_maps = edge_maps(*t.bottom, t.c00, t.c10);
  t.right_maps = edge_maps(*t.right, t.c00, t.c01);
  t.top_maps = edge_maps(*t.top, t.c01, t.c11);
  t.left_maps = edge_maps(*t.left, t.c10, t.c11);
  return t;
}

}  // namespace gnerve
