#pragma once

// Small monads and distributive laws used by the tests, the acceptance run and the CLI
// sample files.

#include <string>
#include <vector>

#include "gnerve/monad.hpp"

namespace gnerve {

/// Closure operator on a poset category: cl[x] is the closure of object x.
Monad closure_monad(const CatPtr& poset, const std::vector<ObjIx>& cl);
/// x |-> top on the n-chain.
Monad constant_top(std::size_t n);
/// Z/3 as a one-object category, P = id, eta = g, mu = g^2.
Monad twisted_z3();
/// a, b with two parallel arrows f, g : a -> b.
FinCat parallel_pair();
/// bot <= l, r <= top.
FinCat diamond();

struct NamedMonad {
  std::string name;
  MonadPtr monad;
};

/// Identity monads on 1..4-object categories, three poset closures, the twisted Z/3 monad
/// and the arrow monad of the constant-top closure.
std::vector<NamedMonad> monad_corpus();

struct NamedLaw {
  std::string name;
  DistributiveLaw law;
};

/// lam_X = identity where TPX = PTX.
DistributiveLaw trivial_law(const MonadPtr& T, const MonadPtr& P);
/// T = P = constant-top, T = constant-top over the identity, and the identity over
/// constant-top, all with identity components.
std::vector<NamedLaw> law_corpus();

}  // namespace gnerve
