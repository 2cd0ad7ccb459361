#pragma once

// Finite categories, functors and natural transformations as explicit tables.
//
// Composition is always written in diagrammatic order: comp(f, g) is "f then g"
// and is defined exactly when tgt(f) == src(g).

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gnerve/report.hpp"

namespace gnerve {

using ObjIx = std::uint32_t;
using MorIx = std::uint32_t;
inline constexpr MorIx kNoMor = std::numeric_limits<MorIx>::max();
inline constexpr ObjIx kNoObj = std::numeric_limits<ObjIx>::max();

/// Unresolved textual form of a category, exactly as it appears in a file.
struct CategorySpec {
  struct Mor {
    std::string id, src, tgt;
  };
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object -> morphism
  std::vector<std::array<std::string, 3>> composition;          // f, g, "f then g"
};

struct MorphismRecord {
  std::string id;
  ObjIx src = 0;
  ObjIx tgt = 0;
  friend bool operator==(const MorphismRecord&, const MorphismRecord&) = default;
};

class FinCat {
 public:
  class Builder;

  FinCat() = default;

  /// Resolves names; throws StructuralError listing every bad reference.
  static FinCat from_spec(const CategorySpec& spec);
  CategorySpec to_spec() const;

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return mors_.size(); }
  const std::string& object_name(ObjIx x) const { return objects_[x]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const MorphismRecord& morphism(MorIx f) const { return mors_[f]; }
  const std::string& morphism_name(MorIx f) const { return mors_[f].id; }
  ObjIx src(MorIx f) const { return mors_[f].src; }
  ObjIx tgt(MorIx f) const { return mors_[f].tgt; }

  /// kNoMor when the table declares no identity for x.
  MorIx identity(ObjIx x) const { return identity_[x]; }
  bool is_identity(MorIx f) const { return identity_[mors_[f].src] == f; }

  std::optional<ObjIx> find_object(std::string_view name) const;
  std::optional<MorIx> find_morphism(std::string_view name) const;

  std::span<const MorIx> hom(ObjIx x, ObjIx y) const { return homs_[x * objects_.size() + y]; }
  std::span<const MorIx> out(ObjIx x) const { return out_[x]; }
  std::span<const MorIx> in(ObjIx y) const { return in_[y]; }

  /// kNoMor if the pair is not composable or the table has no entry.
  MorIx comp_or_none(MorIx f, MorIx g) const noexcept;
  /// Throws std::invalid_argument on a non-composable or missing pair.
  MorIx compose(MorIx f, MorIx g) const;

  /// Same names, same order, same tables.
  friend bool operator==(const FinCat& a, const FinCat& b);

 private:
  void index();

  std::vector<std::string> objects_;
  std::vector<MorphismRecord> mors_;
  std::vector<MorIx> identity_;
  std::vector<std::vector<MorIx>> homs_;
  std::vector<std::vector<MorIx>> out_;
  std::vector<std::vector<MorIx>> in_;
  std::vector<std::uint32_t> pos_in_out_;
  std::vector<std::vector<MorIx>> comp_;
  std::unordered_map<std::string, ObjIx> obj_index_;
  std::unordered_map<std::string, MorIx> mor_index_;
};

/// Incremental construction used by every derived category (Kleisli, arrow, cells).
class FinCat::Builder {
 public:
  ObjIx add_object(std::string name);
  MorIx add_morphism(std::string name, ObjIx src, ObjIx tgt);
  void set_identity(ObjIx x, MorIx f);
  void set_comp(MorIx f, MorIx g, MorIx fg);
  std::size_t num_objects() const { return cat_.objects_.size(); }
  std::size_t num_morphisms() const { return cat_.mors_.size(); }
  /// Throws StructuralError on duplicate names or conflicting composites.
  FinCat build() &&;

 private:
  FinCat cat_;
  std::vector<std::array<MorIx, 3>> comps_;
  std::vector<std::string> problems_;
};

using CatPtr = std::shared_ptr<const FinCat>;

inline CatPtr share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

ValidationReport validate_category(const FinCat& c);
ValidationReport validate_category(const CategorySpec& spec);

/// pre: the relation (pairs "x <= y") is reflexive, transitive and antisymmetric.
/// Morphisms are named "x->y"; identities included.
FinCat poset_category(const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& leq);
/// The n-chain 0 < 1 < ... < n-1.
FinCat chain_category(std::size_t n);
FinCat discrete_category(const std::vector<std::string>& objects);
/// One-object category; table[i][j] is the index of "element i then element j".
FinCat monoid_category(const std::vector<std::string>& elements,
                       const std::vector<std::vector<std::size_t>>& table,
                       std::size_t unit = 0);

/// Objects are the morphisms of c (same indices); morphisms are commuting squares.
FinCat arrow_category(const FinCat& c);
/// {f, f', a, b} for each morphism of arrow_category(c), in the same order.
std::vector<std::array<MorIx, 4>> arrow_squares(const FinCat& c);
std::string arrow_morphism_name(const FinCat& c, MorIx f, MorIx f2, MorIx a, MorIx b);

struct Functor {
  CatPtr dom;
  CatPtr cod;
  std::vector<ObjIx> ob;
  std::vector<MorIx> mor;

  ObjIx on_obj(ObjIx x) const { return ob[x]; }
  MorIx on_mor(MorIx f) const { return mor[f]; }
  friend bool operator==(const Functor& a, const Functor& b);
};

struct FunctorSpec {
  std::vector<std::pair<std::string, std::string>> objects;
  std::vector<std::pair<std::string, std::string>> morphisms;
};

Functor identity_functor(const CatPtr& c);
/// "f then g"; g.dom must be f.cod.
Functor compose(const Functor& f, const Functor& g);
Functor functor_from_spec(const CatPtr& dom, const CatPtr& cod, const FunctorSpec& spec);
FunctorSpec to_spec(const Functor& f);
ValidationReport validate_functor(const Functor& f);

bool same_category(const CatPtr& a, const CatPtr& b);

struct NatTrans {
  Functor dom;
  Functor cod;
  std::vector<MorIx> comp;  // per object of dom.dom
  friend bool operator==(const NatTrans& a, const NatTrans& b) = default;
};

NatTrans identity_nattrans(const Functor& f);
NatTrans nattrans_from_spec(const Functor& dom, const Functor& cod,
                            const std::vector<std::pair<std::string, std::string>>& comps);
std::vector<std::pair<std::string, std::string>> components_spec(const NatTrans& a);
ValidationReport validate_nattrans(const NatTrans& a);

/// F then a : F;G => F;G'.
NatTrans whisker_left(const Functor& f, const NatTrans& a);
/// a then G : F;G => F';G.
NatTrans whisker_right(const NatTrans& a, const Functor& g);
NatTrans vcompose(const NatTrans& a, const NatTrans& b);
/// a : F => F' (A -> B), b : G => G' (B -> C); result F;G => F';G'.
NatTrans hcompose(const NatTrans& a, const NatTrans& b);

}  // namespace gnerve
