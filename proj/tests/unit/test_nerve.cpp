#include "doctest.h"

#include <set>

#include "gnerve/corpus.hpp"
#include "gnerve/nerve.hpp"

using namespace gnerve;

namespace {

const std::vector<Theory> kTheories{kleisli_theory(), embedding_theory(), splitepi_theory(),
                                    multi_embedding_theory(2)};

}  // namespace

TEST_CASE("Kleisli nerve of constant-top") {
  auto m = share(constant_top(3));
  Nerve n = build_nerve(kleisli_theory(), m);
  const DoubleCategory& d = *n.dbl;
  CHECK(d.hcat->num_objects() == 3);
  CHECK(d.hcat->num_morphisms() == 6);
  CHECK(d.vcat->num_morphisms() == 9);
  CHECK(d.num_squares() == 36);
  CHECK(validate_double_category(d).ok());
}

TEST_CASE("Kleisli nerve of an identity monad is the commuting squares") {
  auto c = share(parallel_pair());
  auto m = share(identity_monad(c));
  Nerve n = build_nerve(kleisli_theory(), m);
  auto sq = squares_double_category(c);
  std::vector<std::string> names;
  for (MorIx f = 0; f < c->num_morphisms(); ++f) names.push_back(cell_name(kleisli_theory(), *m, Cell{c->src(f), c->tgt(f), {f}}));
  CHECK(equal_by_names(*n.dbl, relabel_vertical(sq, names)));
}

TEST_CASE("theorem axioms on the corpus") {
  for (const auto& [name, m] : monad_corpus()) {
    for (const auto& t : kTheories) {
      INFO(name << " / " << t.tag);
      for (const auto& c : check_theorem_axioms(t, m)) {
        INFO(c.check);
        CHECK(c.status == Status::pass);
      }
    }
  }
}

TEST_CASE("nerves validate and are property-like") {
  for (const auto& [name, m] : monad_corpus()) {
    for (const auto& t : kTheories) {
      INFO(name << " / " << t.tag);
      Nerve n = build_nerve(t, m);
      CHECK(validate_double_category(*n.dbl).ok());
      std::set<std::array<MorIx, 4>> seen;
      for (const auto& q : n.dbl->squares) CHECK(seen.insert({q.top, q.bottom, q.left, q.right}).second);
    }
  }
}

TEST_CASE("a custom theory without its equation loses the mainax squares") {
  // b ; tau = eta is what makes the mainax square commute; drop it and six of nine cells fail
  Theory t{"loose", {{"b", Direction::backward, 0}, {"tau", Direction::forward, 1}}, {}, 1, false};
  auto axioms = check_theorem_axioms(t, share(twisted_z3()));
  CHECK(overall_status(axioms) == Status::fail);
  for (const auto& c : axioms) {
    INFO(c.check);
    if (c.check.starts_with("axiom 2b")) {
      CHECK(c.status == Status::fail);
      CHECK(c.witnesses.size() == 6);
    } else {
      CHECK(c.status == Status::pass);
    }
  }
  // on a poset every such diagram commutes
  CHECK(overall_status(check_theorem_axioms(t, share(constant_top(3)))) == Status::pass);
}

TEST_CASE("faithfulness and round trip on constant-top") {
  auto p = share(constant_top(3));
  for (const auto& t : kTheories) {
    INFO(t.tag);
    Budget b;
    auto f = check_faithfulness(t, p, p, b);
    CHECK(f.status == Status::pass);
    REQUIRE_FALSE(f.counts.empty());
    CHECK(f.counts.front().second == 10);
    Budget b2;
    CHECK(check_recover_round_trip(t, p, p, b2).status == Status::pass);
  }
}

TEST_CASE("bounded fullness on identity monads") {
  auto p = share(identity_monad(share(chain_category(2))));
  for (const auto& t : kTheories) {
    INFO(t.tag);
    Budget b;
    auto r = check_fullness_bounded(t, p, p, b);
    CHECK(r.status == Status::pass);
  }
  Budget tiny{3};
  CHECK(check_fullness_bounded(kleisli_theory(), p, p, tiny).status == Status::inconclusive);
}

TEST_CASE("closure checks") {
  auto p = share(constant_top(3));
  auto q = share(closure_monad(share(chain_category(4)), {1, 1, 3, 3}));
  for (const auto& t : {embedding_theory(), splitepi_theory()}) {
    INFO(t.tag);
    CHECK(check_vertical_closure(t, p).status == Status::pass);
    Budget b;
    CHECK(check_whisker_closure(t, p, q, b).status == Status::pass);
    Budget b2;
    CHECK(check_horizontal_closure(t, p, p, p, b2).status == Status::pass);
  }
}

TEST_CASE("theory 2-cells") {
  auto p = share(constant_top(3));
  auto id = identity_monad_morphism(p);
  for (const auto& t : kTheories) {
    auto i = identity_theory_2cell(t, id);
    CHECK(validate_theory_2cell(t, i).ok());
    CHECK(validate_theory_2cell(t, hcompose(t, i, i)).ok());
    Budget b;
    CHECK_FALSE(enumerate_theory_2cells(t, id, id, b).items.empty());
  }
}

TEST_CASE("square families of monad 2-cells") {
  auto p = share(constant_top(3));
  for (const auto& t : kTheories) {
    Budget b;
    CHECK(check_two_cell_families(t, p, p, b).status == Status::pass);
  }
}

TEST_CASE("transpose of a nerve") {
  Nerve n = build_nerve(embedding_theory(), share(constant_top(3)));
  auto t = transpose_nerve(n);
  CHECK(validate_double_category(t).ok());
  CHECK(transpose(t) == *n.dbl);
}

TEST_CASE("square families agree across single and shared enumeration") {
  auto p = share(constant_top(3));
  auto q = share(closure_monad(share(chain_category(3)), {1, 1, 2}));
  Budget b;
  auto shared = check_two_cell_families(kTheories, p, q, b);
  REQUIRE(shared.size() == kTheories.size());
  for (std::size_t i = 0; i < kTheories.size(); ++i) {
    INFO(kTheories[i].tag);
    Budget b1;
    auto one = check_two_cell_families(kTheories[i], p, q, b1);
    CHECK(one.status == Status::pass);
    CHECK(shared[i].status == one.status);
    CHECK(shared[i].counts == one.counts);
  }
}
