#pragma once

// Exhaustive backtracking enumeration of functors, natural transformations, monad
// morphisms and 2-cells, with an explicit evaluation budget.

#include <cstdint>
#include <optional>
#include <vector>

#include "gnerve/monad.hpp"

namespace gnerve {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Counts candidate evaluations (search nodes). Once `used` exceeds `limit` every
/// enumeration in progress stops and marks itself truncated.
struct Budget {
  std::uint64_t limit = kDefaultBudget;
  std::uint64_t used = 0;

  bool spend(std::uint64_t n = 1) {
    used += n;
    return used <= limit;
  }
  bool exhausted() const { return used > limit; }
};

template <class T>
struct Enumeration {
  std::vector<T> items;
  bool truncated = false;
  std::uint64_t evaluations = 0;
};

/// All functors c -> d, optionally with the object map fixed.
Enumeration<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d, Budget& budget,
                                        const std::optional<std::vector<ObjIx>>& fixed_ob = {});
/// All natural transformations F => G (component tables in object order).
Enumeration<NatTrans> enumerate_nattrans(const Functor& F, const Functor& G, Budget& budget);

Enumeration<MonadMorphism> enumerate_monad_morphisms(const MonadPtr& P, const MonadPtr& Q, Budget& budget);
Enumeration<MonadTwoCell> enumerate_monad_2cells(const MonadMorphism& a, const MonadMorphism& b,
                                                 Budget& budget);
Enumeration<KlTwoCell> enumerate_kl_2cells(const MonadMorphism& a, const MonadMorphism& b, Budget& budget);

}  // namespace gnerve
