#include "doctest.h"

#include "gnerve/corpus.hpp"
#include "gnerve/iterate.hpp"

using namespace gnerve;

TEST_CASE("lifted double monad on constant-top") {
  for (const auto& [name, d] : law_corpus()) {
    for (const auto& t : {kleisli_theory(), embedding_theory()}) {
      INFO(name << " / " << t.tag);
      auto l = lifted_double_monad(t, d);
      CHECK(validate_lifted_double_monad(l).ok());
    }
  }
}

TEST_CASE("lifted action on Kleisli cells is lam_Y after T tau") {
  auto d = law_corpus().front().law;
  auto l = lifted_double_monad(kleisli_theory(), d);
  const FinCat& c = d.P->cat();
  for (MorIx i = 0; i < l.nerve.cells.size(); ++i) {
    const Cell& k = l.nerve.cells[i];
    const Cell& img = l.nerve.cells[l.action.v.mor[i]];
    CHECK(img.c[0] == c.compose(d.T->map(k.c[0]), d.lam[k.tgt]));
  }
}

TEST_CASE("corrupted lambda is refused") {
  auto z = share(twisted_z3());
  auto zi = share(identity_monad(z->base));
  DistributiveLaw d{z, zi, {1}};
  CHECK_THROWS_AS(lifted_double_monad(kleisli_theory(), d), LiftError);
}

TEST_CASE("triple categories from the law corpus") {
  for (const auto& [name, d] : law_corpus()) {
    for (const auto& t1 : {kleisli_theory(), embedding_theory()}) {
      for (const auto& t2 : {kleisli_theory(), embedding_theory()}) {
        if (t1.tag == "kleisli" && t2.tag == "kleisli" && name != "constant-top over identity") continue;
        INFO(name << " / " << t1.tag << " / " << t2.tag);
        auto tc = triple_from_distributive_law(t1, t2, d);
        CHECK(validate_triple_category(tc).ok());
        CHECK(*tc.c00 == d.P->cat());
      }
    }
  }
}

TEST_CASE("triple over the identity monad is degenerate") {
  auto top = share(constant_top(3));
  auto i = share(identity_monad(top->base));
  auto tc = triple_from_distributive_law(kleisli_theory(), kleisli_theory(), trivial_law(top, i));
  // N(identity) has the base arrows as its cells, so c01 is the arrow category up to names
  CHECK(tc.c01->num_objects() == top->cat().num_morphisms());
  CHECK(tc.c01->num_morphisms() == arrow_category(top->cat()).num_morphisms());
  CHECK(validate_triple_category(tc).ok());
}
