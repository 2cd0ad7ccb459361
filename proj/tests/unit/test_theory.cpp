#include "doctest.h"

#include "gnerve/corpus.hpp"
#include "gnerve/theory.hpp"

using namespace gnerve;

TEST_CASE("theory tags") {
  CHECK(theory_from_tag("kleisli").components.size() == 1);
  CHECK(theory_from_tag("embedding").components.size() == 2);
  CHECK(theory_from_tag("splitepi").components.size() == 2);
  CHECK(theory_from_tag("multi:3").components.size() == 4);
  CHECK_THROWS_AS(theory_from_tag("multi:0"), std::invalid_argument);
  CHECK_THROWS_AS(theory_from_tag("bogus"), std::invalid_argument);
}

TEST_CASE("cell counts on constant-top") {
  auto m = constant_top(3);
  CHECK(all_cells(kleisli_theory(), m).size() == 9);
  // oracle: embeddings are pi : Y -> X with pi ; tau = eta_Y; here pi exists iff Y <= X
  CHECK(all_cells(embedding_theory(), m).size() == 6);
  CHECK(all_cells(splitepi_theory(), m).size() == 9);
}

TEST_CASE("multi-embedding cells on an identity monad") {
  auto m = identity_monad(share(chain_category(2)));
  // oracle: pi1 ; tau = pi2 ; tau = id forces pi1 = pi2 = tau^-1, so only isomorphisms
  auto cs = all_cells(multi_embedding_theory(2), m);
  CHECK(cs.size() == 2);
  for (const auto& c : cs) CHECK(c.c[0] == c.c[1]);
}

TEST_CASE("epsilon projects to the identity") {
  auto m = constant_top(3);
  for (const auto& t : {kleisli_theory(), embedding_theory(), splitepi_theory()}) {
    for (ObjIx y = 0; y < 3; ++y) {
      Cell e = epsilon(t, m, y);
      CHECK(satisfies(t, m, e));
      CHECK(phi(t, e) == m.cat().identity(m.obj(y)));
    }
  }
}

TEST_CASE("embedding presentation round trip") {
  auto m = constant_top(3);
  const FinCat& c = m.cat();
  MorIx L = *c.find_morphism("0->1");
  MorIx res = c.identity(2);
  Cell cell = embedding_from_res(m, L, res);
  CHECK(satisfies(embedding_theory(), m, cell));
  auto [pi, r] = res_from_embedding(m, cell);
  CHECK(pi == L);
  CHECK(r == res);
  CHECK_THROWS_AS(embedding_from_res(m, L, *c.find_morphism("0->1")), std::invalid_argument);
}

TEST_CASE("whiskering by the identity morphism fixes cells") {
  auto p = share(constant_top(3));
  auto id = identity_monad_morphism(p);
  for (const auto& t : {kleisli_theory(), embedding_theory(), splitepi_theory()}) {
    for (const auto& c : all_cells(t, *p)) CHECK(whisker(t, id, c) == c);
  }
}
