#pragma once

// Finite double categories (categories internal to Cat), double functors, double
// natural transformations and triple categories stored as a 2x2 grid of corners.

#include <array>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gnerve/fincat.hpp"

namespace gnerve {

using SqIx = std::uint32_t;
inline constexpr SqIx kNoSq = std::numeric_limits<SqIx>::max();

/// top : X -> X' and bottom : Y -> Y' are horizontal, left : X ~> Y and right : X' ~> Y'
/// are vertical.
struct Square {
  std::string id;
  MorIx top = kNoMor;
  MorIx bottom = kNoMor;
  MorIx left = kNoMor;
  MorIx right = kNoMor;
  friend bool operator==(const Square&, const Square&) = default;
};

struct DoubleCategorySpec {
  struct Sq {
    std::string id, top, bottom, left, right;
  };
  std::vector<std::string> objects;
  CategorySpec horizontal;  // objects field ignored, shared list above
  CategorySpec vertical;
  std::vector<Sq> squares;
  std::vector<std::array<std::string, 3>> hcomp;
  std::vector<std::array<std::string, 3>> vcomp;
  std::vector<std::pair<std::string, std::string>> hidentities;  // vertical morphism -> square
  std::vector<std::pair<std::string, std::string>> videntities;  // horizontal morphism -> square
};

class DoubleCategory {
 public:
  CatPtr hcat;
  CatPtr vcat;
  std::vector<Square> squares;
  std::unordered_map<std::uint64_t, SqIx> hcomp;  // key(a, b): a beside b
  std::unordered_map<std::uint64_t, SqIx> vcomp;  // key(a, b): a above b
  std::vector<SqIx> hid;                          // per vertical morphism
  std::vector<SqIx> vid;                          // per horizontal morphism

  static std::uint64_t key(SqIx a, SqIx b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

  /// Rebuilds boundary lookups; call after editing `squares`.
  void reindex();

  std::size_t num_squares() const { return squares.size(); }
  SqIx hcomp_or_none(SqIx a, SqIx b) const;
  SqIx vcomp_or_none(SqIx a, SqIx b) const;
  /// Every square with exactly this boundary.
  const std::vector<SqIx>& find(MorIx top, MorIx bottom, MorIx left, MorIx right) const;
  const std::vector<SqIx>& with_left(MorIx v) const { return by_left_[v]; }
  const std::vector<SqIx>& with_top(MorIx h) const { return by_top_[h]; }
  std::optional<SqIx> find_square(std::string_view id) const;

  static DoubleCategory from_spec(const DoubleCategorySpec& spec);
  DoubleCategorySpec to_spec() const;

  /// Same tables in the same order (indices included).
  friend bool operator==(const DoubleCategory& a, const DoubleCategory& b);

 private:
  std::map<std::array<MorIx, 4>, std::vector<SqIx>> by_boundary_;
  std::vector<std::vector<SqIx>> by_left_;
  std::vector<std::vector<SqIx>> by_top_;
  std::unordered_map<std::string, SqIx> by_id_;
};

using DblPtr = std::shared_ptr<const DoubleCategory>;
inline DblPtr share(DoubleCategory d) { return std::make_shared<const DoubleCategory>(std::move(d)); }

std::string square_name(const FinCat& h, const FinCat& v, MorIx top, MorIx bottom, MorIx left, MorIx right);

/// Double category whose squares are given by boundary only (at most one per boundary).
/// Compositions and identity squares are filled in by boundary lookup; composites whose
/// boundary has no square are left out, so validation reports them.
DoubleCategory double_from_boundaries(const CatPtr& hcat, const CatPtr& vcat,
                                      std::vector<std::array<MorIx, 4>> boundaries);

ValidationReport validate_double_category(const DoubleCategory& d);

/// Horizontal and vertical swapped; square ids kept.
DoubleCategory transpose(const DoubleCategory& d);
/// Objects are vertical morphisms, morphisms are squares composed horizontally.
FinCat cell_category(const DoubleCategory& d);
/// All commuting squares of c, with horizontal and vertical category both c.
DoubleCategory squares_double_category(const CatPtr& c);
/// Renames vertical morphisms and recomputes square names.
DoubleCategory relabel_vertical(const DoubleCategory& d, const std::vector<std::string>& names);

/// Equality up to reordering: compares everything through names.
bool equal_by_names(const FinCat& a, const FinCat& b);
bool equal_by_names(const DoubleCategory& a, const DoubleCategory& b);

struct DoubleFunctor {
  DblPtr dom;
  DblPtr cod;
  Functor h;  // on horizontal categories
  Functor v;  // on vertical categories
  std::vector<SqIx> sq;
  friend bool operator==(const DoubleFunctor& a, const DoubleFunctor& b) {
    return a.h == b.h && a.v == b.v && a.sq == b.sq;
  }
};

DoubleFunctor identity_double_functor(const DblPtr& d);
ValidationReport validate_double_functor(const DoubleFunctor& F);

/// Horizontal components alpha_X : F X -> G X and a square alpha_rho per vertical
/// morphism rho (kNoSq where absent).
struct DoubleNat {
  DoubleFunctor F;
  DoubleFunctor G;
  std::vector<MorIx> comp;
  std::vector<SqIx> sq;
};

ValidationReport validate_double_nat(const DoubleNat& a);

/// Structure maps of one edge: s, t from the upper corner to the lower, i back.
struct EdgeMaps {
  Functor s;
  Functor t;
  Functor i;
};

/// Source/target/identity functors read off a double category whose horizontal category is
/// `lower` and whose cell category is `upper`.
EdgeMaps edge_maps(const DoubleCategory& d, const CatPtr& lower, const CatPtr& upper);

/// Grid of corners: c00 base, c10 above it along the first direction, c01 along the
/// second, c11 diagonal. Each edge is a double category with the lower corner as
/// horizontal category and the upper corner as its cell category:
/// bottom c00|c10, right c00|c01, top c01|c11, left c10|c11.
struct TripleCategory {
  CatPtr c00, c01, c10, c11;
  DblPtr bottom, right, top, left;
  EdgeMaps bottom_maps, right_maps, top_maps, left_maps;
};

ValidationReport validate_triple_category(const TripleCategory& t);

/// Double functor built from a pair of corner functors: `lower` on horizontal data and
/// `upper` sending vertical morphisms (upper objects) and squares (upper morphisms).
DoubleFunctor corner_double_functor(const DblPtr& dom, const DblPtr& cod, const Functor& lower,
                                    const Functor& upper);

}  // namespace gnerve
