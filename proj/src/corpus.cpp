#include "gnerve/corpus.hpp"

#include <stdexcept>

namespace gnerve {

Monad closure_monad(const CatPtr& poset, const std::vector<ObjIx>& cl) {
  const FinCat& c = *poset;
  auto arrow = [&](ObjIx a, ObjIx b) {
    auto h = c.hom(a, b);
    if (h.size() != 1) throw std::invalid_argument("closure_monad: " + c.object_name(a) + " <= " + c.object_name(b) + " fails");
    return h.front();
  };
  Functor endo{poset, poset, cl, {}};
  for (MorIx f = 0; f < c.num_morphisms(); ++f) endo.mor.push_back(arrow(cl[c.src(f)], cl[c.tgt(f)]));
  std::vector<MorIx> unit, mult;
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    unit.push_back(arrow(x, cl[x]));
    mult.push_back(arrow(cl[cl[x]], cl[x]));
  }
  return make_monad(poset, std::move(endo), unit, mult);
}

Monad constant_top(std::size_t n) {
  auto c = share(chain_category(n));
  return closure_monad(c, std::vector<ObjIx>(n, static_cast<ObjIx>(n - 1)));
}

Monad twisted_z3() {
  auto c = share(monoid_category({"1", "g", "g2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  return make_monad(c, identity_functor(c), {1}, {2});
}

FinCat parallel_pair() {
  FinCat::Builder b;
  ObjIx a = b.add_object("a");
  ObjIx x = b.add_object("b");
  MorIx ia = b.add_morphism("1a", a, a);
  MorIx ib = b.add_morphism("1b", x, x);
  MorIx f = b.add_morphism("f", a, x);
  MorIx g = b.add_morphism("g", a, x);
  b.set_identity(a, ia);
  b.set_identity(x, ib);
  b.set_comp(ia, ia, ia);
  b.set_comp(ib, ib, ib);
  for (MorIx h : {f, g}) {
    b.set_comp(ia, h, h);
    b.set_comp(h, ib, h);
  }
  return std::move(b).build();
}

FinCat diamond() {
  return poset_category({"bot", "l", "r", "top"}, {{"bot", "bot"},
                                                   {"l", "l"},
                                                   {"r", "r"},
                                                   {"top", "top"},
                                                   {"bot", "l"},
                                                   {"bot", "r"},
                                                   {"bot", "top"},
                                                   {"l", "top"},
                                                   {"r", "top"}});
}

std::vector<NamedMonad> monad_corpus() {
  std::vector<NamedMonad> out;
  out.push_back({"identity on 1", share(identity_monad(share(chain_category(1))))});
  out.push_back({"identity on Z/3",
                 share(identity_monad(share(monoid_category({"1", "g", "g2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}))))});
  out.push_back({"identity on parallel pair", share(identity_monad(share(parallel_pair())))});
  out.push_back({"identity on 3-chain", share(identity_monad(share(chain_category(3))))});
  out.push_back({"identity on diamond", share(identity_monad(share(diamond())))});
  auto top3 = share(constant_top(3));
  out.push_back({"constant-top on 3-chain", top3});
  out.push_back({"closure on 4-chain", share(closure_monad(share(chain_category(4)), {1, 1, 3, 3}))});
  out.push_back({"closure on diamond", share(closure_monad(share(diamond()), {1, 1, 3, 3}))});
  out.push_back({"twisted Z/3", share(twisted_z3())});
  out.push_back({"arrow monad of constant-top", share(arrow_monad(*top3))});
  return out;
}

DistributiveLaw trivial_law(const MonadPtr& T, const MonadPtr& P) {
  DistributiveLaw d{T, P, {}};
  const FinCat& c = T->cat();
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    ObjIx a = T->obj(P->obj(x)), b = P->obj(T->obj(x));
    if (a != b) throw std::invalid_argument("trivial_law: TP and PT differ at " + c.object_name(x));
    d.lam.push_back(c.identity(a));
  }
  return d;
}

std::vector<NamedLaw> law_corpus() {
  auto top = share(constant_top(3));
  auto id = share(identity_monad(top->base));
  return {{"constant-top over constant-top", trivial_law(top, top)},
          {"constant-top over identity", trivial_law(top, id)},
          {"identity over constant-top", trivial_law(id, top)}};
}

}  // namespace gnerve
