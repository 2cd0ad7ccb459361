#include "gnerve/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gnerve {

std::optional<ObjIx> FinCat::find_object(std::string_view name) const {
  auto it = obj_index_.find(std::string(name));
  if (it == obj_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorIx> FinCat::find_morphism(std::string_view name) const {
  auto it = mor_index_.find(std::string(name));
  if (it == mor_index_.end()) return std::nullopt;
  return it->second;
}

MorIx FinCat::comp_or_none(MorIx f, MorIx g) const noexcept {
  if (f >= mors_.size() || g >= mors_.size()) return kNoMor;
  if (mors_[f].tgt != mors_[g].src) return kNoMor;
  return comp_[f][pos_in_out_[g]];
}

MorIx FinCat::compose(MorIx f, MorIx g) const {
  if (mors_[f].tgt != mors_[g].src) {
    throw std::invalid_argument("not composable: " + mors_[f].id + " then " + mors_[g].id);
  }
  MorIx h = comp_[f][pos_in_out_[g]];
  if (h == kNoMor) {
    throw std::invalid_argument("missing composite: " + mors_[f].id + " then " + mors_[g].id);
  }
  return h;
}

void FinCat::index() {
  const std::size_t n = objects_.size();
  homs_.assign(n * n, {});
  out_.assign(n, {});
  in_.assign(n, {});
  pos_in_out_.assign(mors_.size(), 0);
  for (MorIx f = 0; f < mors_.size(); ++f) {
    homs_[mors_[f].src * n + mors_[f].tgt].push_back(f);
    pos_in_out_[f] = static_cast<std::uint32_t>(out_[mors_[f].src].size());
    out_[mors_[f].src].push_back(f);
    in_[mors_[f].tgt].push_back(f);
  }
  comp_.assign(mors_.size(), {});
  for (MorIx f = 0; f < mors_.size(); ++f) comp_[f].assign(out_[mors_[f].tgt].size(), kNoMor);
  if (identity_.size() < n) identity_.resize(n, kNoMor);
}

ObjIx FinCat::Builder::add_object(std::string name) {
  if (name.empty()) problems_.push_back("empty object id");
  auto ix = static_cast<ObjIx>(cat_.objects_.size());
  if (!cat_.obj_index_.emplace(name, ix).second) problems_.push_back("duplicate object id " + name);
  cat_.objects_.push_back(std::move(name));
  cat_.identity_.push_back(kNoMor);
  return ix;
}

MorIx FinCat::Builder::add_morphism(std::string name, ObjIx src, ObjIx tgt) {
  if (name.empty()) problems_.push_back("empty morphism id");
  auto ix = static_cast<MorIx>(cat_.mors_.size());
  if (!cat_.mor_index_.emplace(name, ix).second) {
    problems_.push_back("duplicate morphism id " + name);
  }
  cat_.mors_.push_back({std::move(name), src, tgt});
  return ix;
}

void FinCat::Builder::set_identity(ObjIx x, MorIx f) { cat_.identity_[x] = f; }

void FinCat::Builder::set_comp(MorIx f, MorIx g, MorIx fg) { comps_.push_back({f, g, fg}); }

FinCat FinCat::Builder::build() && {
  cat_.index();
  for (const auto& [f, g, h] : comps_) {
    if (cat_.mors_[f].tgt != cat_.mors_[g].src) {
      problems_.push_back("composition entry for non-composable pair (" + cat_.mors_[f].id + ", " +
                          cat_.mors_[g].id + ")");
      continue;
    }
    MorIx& slot = cat_.comp_[f][cat_.pos_in_out_[g]];
    if (slot != kNoMor && slot != h) {
      problems_.push_back("conflicting composite for (" + cat_.mors_[f].id + ", " +
                          cat_.mors_[g].id + ")");
    }
    slot = h;
  }
  if (!problems_.empty()) throw StructuralError(problems_);
  return std::move(cat_);
}

FinCat FinCat::from_spec(const CategorySpec& spec) {
  std::vector<std::string> problems;
  std::map<std::string, ObjIx> objs;
  for (const auto& o : spec.objects) {
    if (o.empty()) problems.push_back("empty object id");
    if (!objs.emplace(o, static_cast<ObjIx>(objs.size())).second) {
      problems.push_back("duplicate object id " + o);
    }
  }
  std::map<std::string, MorIx> mors;
  for (const auto& m : spec.morphisms) {
    if (m.id.empty()) problems.push_back("empty morphism id");
    if (!mors.emplace(m.id, static_cast<MorIx>(mors.size())).second) {
      problems.push_back("duplicate morphism id " + m.id);
    }
    if (!objs.contains(m.src)) problems.push_back("morphism " + m.id + ": unknown source " + m.src);
    if (!objs.contains(m.tgt)) problems.push_back("morphism " + m.id + ": unknown target " + m.tgt);
  }
  for (const auto& [o, m] : spec.identities) {
    if (!objs.contains(o)) problems.push_back("identity for unknown object " + o);
    if (!mors.contains(m)) problems.push_back("identity of " + o + " is unknown morphism " + m);
  }
  for (const auto& t : spec.composition) {
    for (const auto& name : t) {
      if (!mors.contains(name)) problems.push_back("composition entry mentions unknown morphism " + name);
    }
  }
  if (!problems.empty()) throw StructuralError(problems);

  Builder b;
  for (const auto& o : spec.objects) b.add_object(o);
  for (const auto& m : spec.morphisms) b.add_morphism(m.id, objs.at(m.src), objs.at(m.tgt));
  for (const auto& [o, m] : spec.identities) b.set_identity(objs.at(o), mors.at(m));
  for (const auto& t : spec.composition) b.set_comp(mors.at(t[0]), mors.at(t[1]), mors.at(t[2]));
  return std::move(b).build();
}

CategorySpec FinCat::to_spec() const {
  CategorySpec s;
  s.objects = objects_;
  for (const auto& m : mors_) s.morphisms.push_back({m.id, objects_[m.src], objects_[m.tgt]});
  for (ObjIx x = 0; x < objects_.size(); ++x) {
    if (identity_[x] != kNoMor) s.identities.emplace_back(objects_[x], mors_[identity_[x]].id);
  }
  for (MorIx f = 0; f < mors_.size(); ++f) {
    const auto& outs = out_[mors_[f].tgt];
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if (comp_[f][i] != kNoMor) {
        s.composition.push_back({mors_[f].id, mors_[outs[i]].id, mors_[comp_[f][i]].id});
      }
    }
  }
  return s;
}

bool operator==(const FinCat& a, const FinCat& b) {
  return a.objects_ == b.objects_ && a.mors_ == b.mors_ && a.identity_ == b.identity_ &&
         a.comp_ == b.comp_;
}

ValidationReport validate_category(const FinCat& c) {
  ValidationReport r;
  const auto name = [&](MorIx f) { return c.morphism_name(f); };
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    MorIx i = c.identity(x);
    if (i == kNoMor) {
      r.law("missing identity", c.object_name(x));
    } else if (c.src(i) != x || c.tgt(i) != x) {
      r.law("identity boundary", c.object_name(x) + " -> " + name(i));
    }
  }
  for (MorIx f = 0; f < c.num_morphisms(); ++f) {
    for (MorIx g : c.out(c.tgt(f))) {
      MorIx h = c.comp_or_none(f, g);
      if (h == kNoMor) {
        r.law("missing composite", "(" + name(f) + ", " + name(g) + ")");
      } else if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g)) {
        r.law("composite boundary", "(" + name(f) + ", " + name(g) + ") = " + name(h));
      }
    }
  }
  for (MorIx f = 0; f < c.num_morphisms(); ++f) {
    MorIx is = c.identity(c.src(f));
    MorIx it = c.identity(c.tgt(f));
    if (is != kNoMor && c.src(is) == c.src(f) && c.tgt(is) == c.src(f)) {
      MorIx h = c.comp_or_none(is, f);
      if (h != kNoMor && h != f) r.law("left unit", name(f));
    }
    if (it != kNoMor && c.src(it) == c.tgt(f) && c.tgt(it) == c.tgt(f)) {
      MorIx h = c.comp_or_none(f, it);
      if (h != kNoMor && h != f) r.law("right unit", name(f));
    }
  }
  for (MorIx f = 0; f < c.num_morphisms(); ++f) {
    for (MorIx g : c.out(c.tgt(f))) {
      MorIx fg = c.comp_or_none(f, g);
      if (fg == kNoMor || c.tgt(fg) != c.tgt(g)) continue;
      for (MorIx h : c.out(c.tgt(g))) {
        MorIx gh = c.comp_or_none(g, h);
        if (gh == kNoMor || c.src(gh) != c.src(g)) continue;
        MorIx l = c.comp_or_none(fg, h);
        MorIx r2 = c.comp_or_none(f, gh);
        if (l != kNoMor && r2 != kNoMor && l != r2) {
          r.law("associativity", "(" + name(f) + ", " + name(g) + ", " + name(h) + ")");
        }
      }
    }
  }
  return r;
}

ValidationReport validate_category(const CategorySpec& spec) {
  try {
    return validate_category(FinCat::from_spec(spec));
  } catch (const StructuralError& e) {
    ValidationReport r;
    for (const auto& p : e.problems()) r.structural("category", p);
    return r;
  }
}

FinCat poset_category(const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& leq) {
  std::map<std::string, std::size_t> ix;
  for (const auto& e : elements) ix.emplace(e, ix.size());
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  std::vector<std::string> problems;
  for (const auto& [a, b] : leq) {
    if (!ix.contains(a) || !ix.contains(b)) {
      problems.push_back("relation mentions unknown element " + (ix.contains(a) ? b : a));
      continue;
    }
    rel[ix[a]][ix[b]] = true;
  }
  if (!problems.empty()) throw std::invalid_argument(problems.front());
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i][i]) throw std::invalid_argument("relation not reflexive at " + elements[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rel[i][j] && rel[j][i]) {
        throw std::invalid_argument("relation not antisymmetric at " + elements[i] + ", " +
                                    elements[j]);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[i][j] && rel[j][k] && !rel[i][k]) {
          throw std::invalid_argument("relation not transitive at " + elements[i] + ", " +
                                      elements[j] + ", " + elements[k]);
        }
      }
    }
  }
  FinCat::Builder b;
  for (const auto& e : elements) b.add_object(e);
  std::vector<std::vector<MorIx>> m(n, std::vector<MorIx>(n, kNoMor));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j]) {
        m[i][j] = b.add_morphism(elements[i] + "->" + elements[j], static_cast<ObjIx>(i),
                                 static_cast<ObjIx>(j));
      }
    }
    b.set_identity(static_cast<ObjIx>(i), m[i][i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[i][j] && rel[j][k]) b.set_comp(m[i][j], m[j][k], m[i][k]);
      }
    }
  }
  return std::move(b).build();
}

FinCat chain_category(std::size_t n) {
  std::vector<std::string> els;
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < n; ++i) els.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) leq.emplace_back(els[i], els[j]);
  }
  return poset_category(els, leq);
}

FinCat discrete_category(const std::vector<std::string>& objects) {
  std::vector<std::pair<std::string, std::string>> leq;
  for (const auto& o : objects) leq.emplace_back(o, o);
  return poset_category(objects, leq);
}

FinCat monoid_category(const std::vector<std::string>& elements,
                       const std::vector<std::vector<std::size_t>>& table, std::size_t unit) {
  FinCat::Builder b;
  ObjIx star = b.add_object("*");
  for (const auto& e : elements) b.add_morphism(e, star, star);
  b.set_identity(star, static_cast<MorIx>(unit));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      b.set_comp(static_cast<MorIx>(i), static_cast<MorIx>(j), static_cast<MorIx>(table[i][j]));
    }
  }
  return std::move(b).build();
}

std::string arrow_morphism_name(const FinCat& c, MorIx f, MorIx f2, MorIx a, MorIx b) {
  return "(" + c.morphism_name(a) + "," + c.morphism_name(b) + "):" + c.morphism_name(f) + "=>" +
         c.morphism_name(f2);
}

std::vector<std::array<MorIx, 4>> arrow_squares(const FinCat& c) {
  std::vector<std::array<MorIx, 4>> out;
  for (MorIx f = 0; f < c.num_morphisms(); ++f) {
    for (MorIx f2 = 0; f2 < c.num_morphisms(); ++f2) {
      for (MorIx a : c.hom(c.src(f), c.src(f2))) {
        for (MorIx b : c.hom(c.tgt(f), c.tgt(f2))) {
          MorIx l = c.comp_or_none(f, b);
          if (l != kNoMor && l == c.comp_or_none(a, f2)) out.push_back({f, f2, a, b});
        }
      }
    }
  }
  return out;
}

FinCat arrow_category(const FinCat& c) {
  FinCat::Builder b;
  for (MorIx f = 0; f < c.num_morphisms(); ++f) b.add_object(c.morphism_name(f));
  const auto sqs = arrow_squares(c);
  std::map<std::array<MorIx, 4>, MorIx> lookup;
  std::vector<std::vector<MorIx>> from(c.num_morphisms());
  for (const auto& [f, f2, a, bb] : sqs) {
    MorIx ix = b.add_morphism(arrow_morphism_name(c, f, f2, a, bb), f, f2);
    lookup[{f, f2, a, bb}] = ix;
    from[f].push_back(ix);
  }
  for (MorIx f = 0; f < c.num_morphisms(); ++f) {
    auto it = lookup.find({f, f, c.identity(c.src(f)), c.identity(c.tgt(f))});
    if (it != lookup.end()) b.set_identity(f, it->second);
  }
  for (MorIx i = 0; i < sqs.size(); ++i) {
    for (MorIx j : from[sqs[i][1]]) {
      MorIx a = c.comp_or_none(sqs[i][2], sqs[j][2]);
      MorIx bb = c.comp_or_none(sqs[i][3], sqs[j][3]);
      if (a == kNoMor || bb == kNoMor) continue;
      auto it = lookup.find({sqs[i][0], sqs[j][1], a, bb});
      if (it != lookup.end()) b.set_comp(i, j, it->second);
    }
  }
  return std::move(b).build();
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Functor& a, const Functor& b) {
  return a.ob == b.ob && a.mor == b.mor && same_category(a.dom, b.dom) &&
         same_category(a.cod, b.cod);
}

Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, {}, {}};
  for (ObjIx x = 0; x < c->num_objects(); ++x) f.ob.push_back(x);
  for (MorIx m = 0; m < c->num_morphisms(); ++m) f.mor.push_back(m);
  return f;
}

Functor compose(const Functor& f, const Functor& g) {
  Functor h{f.dom, g.cod, {}, {}};
  h.ob.reserve(f.ob.size());
  for (ObjIx x : f.ob) h.ob.push_back(x == kNoObj ? kNoObj : g.ob[x]);
  for (MorIx m : f.mor) h.mor.push_back(m == kNoMor ? kNoMor : g.mor[m]);
  return h;
}

Functor functor_from_spec(const CatPtr& dom, const CatPtr& cod, const FunctorSpec& spec) {
  std::vector<std::string> problems;
  Functor f{dom, cod, std::vector<ObjIx>(dom->num_objects(), kNoObj),
            std::vector<MorIx>(dom->num_morphisms(), kNoMor)};
  for (const auto& [a, b] : spec.objects) {
    auto x = dom->find_object(a);
    auto y = cod->find_object(b);
    if (!x) problems.push_back("functor maps unknown object " + a);
    if (!y) problems.push_back("functor target object unknown: " + b);
    if (x && y) f.ob[*x] = *y;
  }
  for (const auto& [a, b] : spec.morphisms) {
    auto x = dom->find_morphism(a);
    auto y = cod->find_morphism(b);
    if (!x) problems.push_back("functor maps unknown morphism " + a);
    if (!y) problems.push_back("functor target morphism unknown: " + b);
    if (x && y) f.mor[*x] = *y;
  }
  if (!problems.empty()) throw StructuralError(problems);
  return f;
}

FunctorSpec to_spec(const Functor& f) {
  FunctorSpec s;
  for (ObjIx x = 0; x < f.ob.size(); ++x) {
    if (f.ob[x] != kNoObj) s.objects.emplace_back(f.dom->object_name(x), f.cod->object_name(f.ob[x]));
  }
  for (MorIx m = 0; m < f.mor.size(); ++m) {
    if (f.mor[m] != kNoMor) {
      s.morphisms.emplace_back(f.dom->morphism_name(m), f.cod->morphism_name(f.mor[m]));
    }
  }
  return s;
}

ValidationReport validate_functor(const Functor& f) {
  ValidationReport r;
  const FinCat& c = *f.dom;
  const FinCat& d = *f.cod;
  if (f.ob.size() != c.num_objects() || f.mor.size() != c.num_morphisms()) {
    r.structural("functor shape", "table sizes do not match the domain category");
    return r;
  }
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    if (f.ob[x] == kNoObj || f.ob[x] >= d.num_objects()) r.structural("missing object image", c.object_name(x));
  }
  for (MorIx m = 0; m < c.num_morphisms(); ++m) {
    if (f.mor[m] == kNoMor || f.mor[m] >= d.num_morphisms()) r.structural("missing morphism image", c.morphism_name(m));
  }
  if (!r.ok()) return r;
  for (MorIx m = 0; m < c.num_morphisms(); ++m) {
    MorIx fm = f.mor[m];
    if (d.src(fm) != f.ob[c.src(m)] || d.tgt(fm) != f.ob[c.tgt(m)]) {
      r.law("preserves boundary", c.morphism_name(m) + " -> " + d.morphism_name(fm));
    }
  }
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    if (c.identity(x) != kNoMor && f.mor[c.identity(x)] != d.identity(f.ob[x])) {
      r.law("preserves identity", c.object_name(x));
    }
  }
  for (MorIx a = 0; a < c.num_morphisms(); ++a) {
    for (MorIx b : c.out(c.tgt(a))) {
      MorIx ab = c.comp_or_none(a, b);
      if (ab == kNoMor) continue;
      if (d.comp_or_none(f.mor[a], f.mor[b]) != f.mor[ab]) {
        r.law("preserves composition", "(" + c.morphism_name(a) + ", " + c.morphism_name(b) + ")");
      }
    }
  }
  return r;
}

NatTrans identity_nattrans(const Functor& f) {
  NatTrans a{f, f, {}};
  for (ObjIx x : f.ob) a.comp.push_back(f.cod->identity(x));
  return a;
}

NatTrans nattrans_from_spec(const Functor& dom, const Functor& cod,
                            const std::vector<std::pair<std::string, std::string>>& comps) {
  std::vector<std::string> problems;
  NatTrans a{dom, cod, std::vector<MorIx>(dom.dom->num_objects(), kNoMor)};
  for (const auto& [x, m] : comps) {
    auto ox = dom.dom->find_object(x);
    auto om = dom.cod->find_morphism(m);
    if (!ox) problems.push_back("component at unknown object " + x);
    if (!om) problems.push_back("component is unknown morphism " + m);
    if (ox && om) a.comp[*ox] = *om;
  }
  if (!problems.empty()) throw StructuralError(problems);
  return a;
}

std::vector<std::pair<std::string, std::string>> components_spec(const NatTrans& a) {
  std::vector<std::pair<std::string, std::string>> out;
  for (ObjIx x = 0; x < a.comp.size(); ++x) {
    if (a.comp[x] != kNoMor) out.emplace_back(a.dom.dom->object_name(x), a.dom.cod->morphism_name(a.comp[x]));
  }
  return out;
}

ValidationReport validate_nattrans(const NatTrans& a) {
  ValidationReport r;
  if (!same_category(a.dom.dom, a.cod.dom) || !same_category(a.dom.cod, a.cod.cod)) {
    r.structural("transformation shape", "functors are not parallel");
    return r;
  }
  const FinCat& c = *a.dom.dom;
  const FinCat& d = *a.dom.cod;
  if (a.comp.size() != c.num_objects()) {
    r.structural("transformation shape", "component table size");
    return r;
  }
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    if (a.comp[x] == kNoMor || a.comp[x] >= d.num_morphisms()) {
      r.structural("missing component", c.object_name(x));
    }
  }
  if (!r.ok()) return r;
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    MorIx m = a.comp[x];
    if (d.src(m) != a.dom.ob[x] || d.tgt(m) != a.cod.ob[x]) {
      r.law("component boundary", c.object_name(x) + " -> " + d.morphism_name(m));
    }
  }
  if (!r.ok()) return r;
  for (MorIx f = 0; f < c.num_morphisms(); ++f) {
    MorIx l = d.comp_or_none(a.dom.mor[f], a.comp[c.tgt(f)]);
    MorIx rr = d.comp_or_none(a.comp[c.src(f)], a.cod.mor[f]);
    if (l == kNoMor || l != rr) r.law("naturality", c.morphism_name(f));
  }
  return r;
}

NatTrans whisker_left(const Functor& f, const NatTrans& a) {
  NatTrans out{compose(f, a.dom), compose(f, a.cod), {}};
  for (ObjIx x : f.ob) out.comp.push_back(a.comp[x]);
  return out;
}

NatTrans whisker_right(const NatTrans& a, const Functor& g) {
  NatTrans out{compose(a.dom, g), compose(a.cod, g), {}};
  for (MorIx m : a.comp) out.comp.push_back(g.mor[m]);
  return out;
}

NatTrans vcompose(const NatTrans& a, const NatTrans& b) {
  if (!(a.cod == b.dom)) throw std::invalid_argument("vcompose: shape mismatch");
  NatTrans out{a.dom, b.cod, {}};
  const FinCat& d = *a.dom.cod;
  for (ObjIx x = 0; x < a.comp.size(); ++x) out.comp.push_back(d.compose(a.comp[x], b.comp[x]));
  return out;
}

NatTrans hcompose(const NatTrans& a, const NatTrans& b) {
  if (!same_category(a.dom.cod, b.dom.dom)) throw std::invalid_argument("hcompose: shape mismatch");
  NatTrans out{compose(a.dom, b.dom), compose(a.cod, b.cod), {}};
  const FinCat& e = *b.dom.cod;
  for (ObjIx x = 0; x < a.comp.size(); ++x) {
    out.comp.push_back(e.compose(b.dom.mor[a.comp[x]], b.comp[a.cod.ob[x]]));
  }
  return out;
}

}  // namespace gnerve
