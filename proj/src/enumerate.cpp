#include "gnerve/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace gnerve {

namespace {

// Backtracking over component tables x -> hom(F x, G x) with naturality checked as
// soon as both ends of a morphism are assigned.
template <class Emit>
bool search_components(const Functor& F, const Functor& G, Budget& budget, Emit&& emit) {
  const FinCat& c = *F.dom;
  const FinCat& d = *F.cod;
  const std::size_t n = c.num_objects();
  std::vector<std::vector<MorIx>> checks(n);  // morphisms whose later endpoint is x
  for (MorIx f = 0; f < c.num_morphisms(); ++f) checks[std::max(c.src(f), c.tgt(f))].push_back(f);
  std::vector<MorIx> comp(n, kNoMor);
  std::function<bool(ObjIx)> go = [&](ObjIx x) -> bool {
    if (x == n) {
      emit(comp);
      return true;
    }
    for (MorIx m : d.hom(F.ob[x], G.ob[x])) {
      if (!budget.spend()) return false;
      comp[x] = m;
      bool ok = true;
      for (MorIx f : checks[x]) {
        MorIx l = d.comp_or_none(F.mor[f], comp[c.tgt(f)]);
        if (l == kNoMor || l != d.comp_or_none(comp[c.src(f)], G.mor[f])) {
          ok = false;
          break;
        }
      }
      if (ok && !go(x + 1)) return false;
    }
    comp[x] = kNoMor;
    return true;
  };
  return go(0);
}

}  // namespace

Enumeration<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d, Budget& budget,
                                        const std::optional<std::vector<ObjIx>>& fixed_ob) {
  Enumeration<Functor> out;
  const std::uint64_t start = budget.used;
  const std::size_t n = c->num_objects();
  const std::size_t m = c->num_morphisms();

  std::vector<std::vector<std::array<MorIx, 3>>> comp_checks(m);
  for (MorIx f = 0; f < m; ++f) {
    for (MorIx g : c->out(c->tgt(f))) {
      MorIx h = c->comp_or_none(f, g);
      if (h != kNoMor) comp_checks[std::max({f, g, h})].push_back({f, g, h});
    }
  }
  std::vector<std::vector<MorIx>> obj_checks(n);
  for (MorIx f = 0; f < m; ++f) obj_checks[std::max(c->src(f), c->tgt(f))].push_back(f);

  Functor F{c, d, std::vector<ObjIx>(n, kNoObj), std::vector<MorIx>(m, kNoMor)};
  bool complete = true;

  std::function<bool(MorIx)> go_mor = [&](MorIx f) -> bool {
    if (f == m) {
      out.items.push_back(F);
      return true;
    }
    auto candidates = d->hom(F.ob[c->src(f)], F.ob[c->tgt(f)]);
    const bool is_id = c->is_identity(f);
    for (MorIx g : candidates) {
      if (is_id && g != d->identity(F.ob[c->src(f)])) continue;
      if (!budget.spend()) return false;
      F.mor[f] = g;
      bool ok = true;
      for (const auto& [a, b, h] : comp_checks[f]) {
        if (d->comp_or_none(F.mor[a], F.mor[b]) != F.mor[h]) {
          ok = false;
          break;
        }
      }
      if (ok && !go_mor(f + 1)) return false;
    }
    F.mor[f] = kNoMor;
    return true;
  };

  std::function<bool(ObjIx)> go_obj = [&](ObjIx x) -> bool {
    if (x == n) return go_mor(0);
    for (ObjIx y = 0; y < d->num_objects(); ++y) {
      if (fixed_ob && (*fixed_ob)[x] != y) continue;
      if (!budget.spend()) return false;
      F.ob[x] = y;
      bool ok = true;
      for (MorIx f : obj_checks[x]) {
        if (d->hom(F.ob[c->src(f)], F.ob[c->tgt(f)]).empty()) {
          ok = false;
          break;
        }
      }
      if (ok && !go_obj(x + 1)) return false;
    }
    F.ob[x] = kNoObj;
    return true;
  };

  complete = go_obj(0);
  out.truncated = !complete;
  out.evaluations = budget.used - start;
  return out;
}

Enumeration<NatTrans> enumerate_nattrans(const Functor& F, const Functor& G, Budget& budget) {
  Enumeration<NatTrans> out;
  const std::uint64_t start = budget.used;
  out.truncated = !search_components(F, G, budget, [&](const std::vector<MorIx>& comp) {
    out.items.push_back(NatTrans{F, G, comp});
  });
  out.evaluations = budget.used - start;
  return out;
}

Enumeration<MonadMorphism> enumerate_monad_morphisms(const MonadPtr& P, const MonadPtr& Q, Budget& budget) {
  Enumeration<MonadMorphism> out;
  const std::uint64_t start = budget.used;
  auto functors = enumerate_functors(P->base, Q->base, budget);
  out.truncated = functors.truncated;
  for (const Functor& F : functors.items) {
    Functor dom = compose(P->endo, F);
    Functor cod = compose(F, Q->endo);
    bool done = search_components(dom, cod, budget, [&](const std::vector<MorIx>& xi) {
      MonadMorphism mm = make_monad_morphism(P, Q, F, xi);
      if (validate_monad_morphism(mm).ok()) out.items.push_back(std::move(mm));
    });
    if (!done) {
      out.truncated = true;
      break;
    }
  }
  out.evaluations = budget.used - start;
  return out;
}

Enumeration<MonadTwoCell> enumerate_monad_2cells(const MonadMorphism& a, const MonadMorphism& b,
                                                 Budget& budget) {
  Enumeration<MonadTwoCell> out;
  const std::uint64_t start = budget.used;
  out.truncated = !search_components(a.F, b.F, budget, [&](const std::vector<MorIx>& alpha) {
    MonadTwoCell cell{a, b, alpha};
    if (validate_monad_2cell(cell).ok()) out.items.push_back(std::move(cell));
  });
  out.evaluations = budget.used - start;
  return out;
}

Enumeration<KlTwoCell> enumerate_kl_2cells(const MonadMorphism& a, const MonadMorphism& b, Budget& budget) {
  Enumeration<KlTwoCell> out;
  const std::uint64_t start = budget.used;
  Functor target = compose(b.F, a.cod->endo);
  out.truncated = !search_components(a.F, target, budget, [&](const std::vector<MorIx>& alpha) {
    KlTwoCell cell{a, b, alpha};
    if (validate_kl_2cell(cell).ok()) out.items.push_back(std::move(cell));
  });
  out.evaluations = budget.used - start;
  return out;
}

}  // namespace gnerve
