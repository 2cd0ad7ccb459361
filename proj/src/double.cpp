#include "gnerve/double.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gnerve {

namespace {

const std::vector<SqIx> kNone;

std::vector<std::pair<std::uint64_t, SqIx>> sorted(const std::unordered_map<std::uint64_t, SqIx>& m) {
  std::vector<std::pair<std::uint64_t, SqIx>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end());
  return v;
}

SqIx first(std::uint64_t k) { return static_cast<SqIx>(k >> 32); }
SqIx second(std::uint64_t k) { return static_cast<SqIx>(k & 0xffffffffu); }

}  // namespace

void DoubleCategory::reindex() {
  by_boundary_.clear();
  by_id_.clear();
  by_left_.assign(vcat ? vcat->num_morphisms() : 0, {});
  by_top_.assign(hcat ? hcat->num_morphisms() : 0, {});
  for (SqIx s = 0; s < squares.size(); ++s) {
    const Square& q = squares[s];
    by_boundary_[{q.top, q.bottom, q.left, q.right}].push_back(s);
    by_id_.emplace(q.id, s);
    if (q.left < by_left_.size()) by_left_[q.left].push_back(s);
    if (q.top < by_top_.size()) by_top_[q.top].push_back(s);
  }
}

SqIx DoubleCategory::hcomp_or_none(SqIx a, SqIx b) const {
  auto it = hcomp.find(key(a, b));
  return it == hcomp.end() ? kNoSq : it->second;
}

SqIx DoubleCategory::vcomp_or_none(SqIx a, SqIx b) const {
  auto it = vcomp.find(key(a, b));
  return it == vcomp.end() ? kNoSq : it->second;
}

const std::vector<SqIx>& DoubleCategory::find(MorIx top, MorIx bottom, MorIx left, MorIx right) const {
  auto it = by_boundary_.find({top, bottom, left, right});
  return it == by_boundary_.end() ? kNone : it->second;
}

std::optional<SqIx> DoubleCategory::find_square(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

DoubleCategory DoubleCategory::from_spec(const DoubleCategorySpec& spec) {
  std::vector<std::string> problems;
  auto load = [&](CategorySpec c, const char* which) -> CatPtr {
    c.objects = spec.objects;
    try {
      return share(FinCat::from_spec(c));
    } catch (const StructuralError& e) {
      for (const auto& p : e.problems()) problems.push_back(std::string(which) + ": " + p);
      return nullptr;
    }
  };
  DoubleCategory d;
  d.hcat = load(spec.horizontal, "horizontal");
  d.vcat = load(spec.vertical, "vertical");
  if (!d.hcat || !d.vcat) throw StructuralError(problems);
  auto hmor = [&](const std::string& n) {
    auto m = d.hcat->find_morphism(n);
    if (!m) problems.push_back("unknown horizontal morphism " + n);
    return m.value_or(kNoMor);
  };
  auto vmor = [&](const std::string& n) {
    auto m = d.vcat->find_morphism(n);
    if (!m) problems.push_back("unknown vertical morphism " + n);
    return m.value_or(kNoMor);
  };
  std::set<std::string> ids;
  for (const auto& s : spec.squares) {
    if (!ids.insert(s.id).second) problems.push_back("duplicate square id " + s.id);
    d.squares.push_back({s.id, hmor(s.top), hmor(s.bottom), vmor(s.left), vmor(s.right)});
  }
  d.reindex();
  auto sq = [&](const std::string& n) {
    auto s = d.find_square(n);
    if (!s) problems.push_back("unknown square " + n);
    return s.value_or(kNoSq);
  };
  for (const auto& [a, b, c] : spec.hcomp) d.hcomp[key(sq(a), sq(b))] = sq(c);
  for (const auto& [a, b, c] : spec.vcomp) d.vcomp[key(sq(a), sq(b))] = sq(c);
  d.hid.assign(d.vcat->num_morphisms(), kNoSq);
  d.vid.assign(d.hcat->num_morphisms(), kNoSq);
  for (const auto& [v, s] : spec.hidentities) {
    MorIx m = vmor(v);
    SqIx q = sq(s);
    if (m != kNoMor) d.hid[m] = q;
  }
  for (const auto& [h, s] : spec.videntities) {
    MorIx m = hmor(h);
    SqIx q = sq(s);
    if (m != kNoMor) d.vid[m] = q;
  }
  if (!problems.empty()) throw StructuralError(problems);
  return d;
}

DoubleCategorySpec DoubleCategory::to_spec() const {
  DoubleCategorySpec s;
  s.objects = hcat->object_names();
  s.horizontal = hcat->to_spec();
  s.vertical = vcat->to_spec();
  s.horizontal.objects.clear();
  s.vertical.objects.clear();
  for (const auto& q : squares) {
    s.squares.push_back({q.id, hcat->morphism_name(q.top), hcat->morphism_name(q.bottom),
                         vcat->morphism_name(q.left), vcat->morphism_name(q.right)});
  }
  for (const auto& [k, c] : sorted(hcomp)) {
    s.hcomp.push_back({squares[first(k)].id, squares[second(k)].id, squares[c].id});
  }
  for (const auto& [k, c] : sorted(vcomp)) {
    s.vcomp.push_back({squares[first(k)].id, squares[second(k)].id, squares[c].id});
  }
  for (MorIx v = 0; v < hid.size(); ++v) {
    if (hid[v] != kNoSq) s.hidentities.emplace_back(vcat->morphism_name(v), squares[hid[v]].id);
  }
  for (MorIx h = 0; h < vid.size(); ++h) {
    if (vid[h] != kNoSq) s.videntities.emplace_back(hcat->morphism_name(h), squares[vid[h]].id);
  }
  return s;
}

bool operator==(const DoubleCategory& a, const DoubleCategory& b) {
  return same_category(a.hcat, b.hcat) && same_category(a.vcat, b.vcat) && a.squares == b.squares &&
         a.hcomp == b.hcomp && a.vcomp == b.vcomp && a.hid == b.hid && a.vid == b.vid;
}

std::string square_name(const FinCat& h, const FinCat& v, MorIx top, MorIx bottom, MorIx left, MorIx right) {
  return "sq(" + h.morphism_name(top) + "," + h.morphism_name(bottom) + "|" + v.morphism_name(left) + "," +
         v.morphism_name(right) + ")";
}

DoubleCategory double_from_boundaries(const CatPtr& hcat, const CatPtr& vcat,
                                      std::vector<std::array<MorIx, 4>> boundaries) {
  DoubleCategory d;
  d.hcat = hcat;
  d.vcat = vcat;
  const FinCat& h = *hcat;
  const FinCat& v = *vcat;
  for (const auto& [t, b, l, r] : boundaries) d.squares.push_back({square_name(h, v, t, b, l, r), t, b, l, r});
  d.reindex();
  auto unique = [&](MorIx t, MorIx b, MorIx l, MorIx r) {
    if (t == kNoMor || b == kNoMor || l == kNoMor || r == kNoMor) return kNoSq;
    const auto& found = d.find(t, b, l, r);
    return found.empty() ? kNoSq : found.front();
  };
  d.hid.assign(v.num_morphisms(), kNoSq);
  for (MorIx m = 0; m < v.num_morphisms(); ++m) {
    d.hid[m] = unique(h.identity(v.src(m)), h.identity(v.tgt(m)), m, m);
  }
  d.vid.assign(h.num_morphisms(), kNoSq);
  for (MorIx m = 0; m < h.num_morphisms(); ++m) {
    d.vid[m] = unique(m, m, v.identity(h.src(m)), v.identity(h.tgt(m)));
  }
  for (SqIx a = 0; a < d.squares.size(); ++a) {
    const Square& p = d.squares[a];
    for (SqIx b : d.with_left(p.right)) {
      const Square& q = d.squares[b];
      SqIx c = unique(h.comp_or_none(p.top, q.top), h.comp_or_none(p.bottom, q.bottom), p.left, q.right);
      if (c != kNoSq) d.hcomp[DoubleCategory::key(a, b)] = c;
    }
    for (SqIx b : d.with_top(p.bottom)) {
      const Square& q = d.squares[b];
      SqIx c = unique(p.top, q.bottom, v.comp_or_none(p.left, q.left), v.comp_or_none(p.right, q.right));
      if (c != kNoSq) d.vcomp[DoubleCategory::key(a, b)] = c;
    }
  }
  return d;
}

ValidationReport validate_double_category(const DoubleCategory& d) {
  ValidationReport r;
  if (!d.hcat || !d.vcat) {
    r.structural("double category shape", "missing horizontal or vertical category");
    return r;
  }
  const FinCat& h = *d.hcat;
  const FinCat& v = *d.vcat;
  if (h.object_names() != v.object_names()) {
    r.structural("shared objects", "horizontal and vertical categories have different object lists");
  }
  if (d.hid.size() != v.num_morphisms() || d.vid.size() != h.num_morphisms()) {
    r.structural("identity squares", "identity tables do not cover every morphism");
  }
  for (const auto& q : d.squares) {
    if (q.top >= h.num_morphisms() || q.bottom >= h.num_morphisms() || q.left >= v.num_morphisms() ||
        q.right >= v.num_morphisms()) {
      r.structural("square boundary reference", q.id);
    }
  }
  auto valid_sq = [&](SqIx s) { return s < d.squares.size(); };
  for (const auto& [k, c] : d.hcomp) {
    if (!valid_sq(first(k)) || !valid_sq(second(k)) || !valid_sq(c)) r.structural("hcomp reference", "entry");
  }
  for (const auto& [k, c] : d.vcomp) {
    if (!valid_sq(first(k)) || !valid_sq(second(k)) || !valid_sq(c)) r.structural("vcomp reference", "entry");
  }
  if (!r.ok()) return r;

  r.merge(validate_category(h), "horizontal");
  r.merge(validate_category(v), "vertical");

  const auto& S = d.squares;
  auto nm = [&](SqIx s) { return s == kNoSq ? std::string("<none>") : S[s].id; };
  for (const auto& q : S) {
    if (h.src(q.top) != v.src(q.left) || h.tgt(q.top) != v.src(q.right) || h.src(q.bottom) != v.tgt(q.left) ||
        h.tgt(q.bottom) != v.tgt(q.right)) {
      r.law("square boundary", q.id);
    }
  }
  for (MorIx m = 0; m < v.num_morphisms(); ++m) {
    SqIx s = d.hid[m];
    if (s == kNoSq) {
      r.law("missing horizontal identity square", v.morphism_name(m));
    } else if (S[s].left != m || S[s].right != m || S[s].top != h.identity(v.src(m)) ||
               S[s].bottom != h.identity(v.tgt(m))) {
      r.law("horizontal identity square boundary", v.morphism_name(m));
    }
  }
  for (MorIx m = 0; m < h.num_morphisms(); ++m) {
    SqIx s = d.vid[m];
    if (s == kNoSq) {
      r.law("missing vertical identity square", h.morphism_name(m));
    } else if (S[s].top != m || S[s].bottom != m || S[s].left != v.identity(h.src(m)) ||
               S[s].right != v.identity(h.tgt(m))) {
      r.law("vertical identity square boundary", h.morphism_name(m));
    }
  }
  for (const auto& [k, c] : d.hcomp) {
    const Square &a = S[first(k)], &b = S[second(k)];
    if (a.right != b.left) {
      r.law("hcomp of non-adjacent squares", a.id + " | " + b.id);
    } else if (S[c].left != a.left || S[c].right != b.right || S[c].top != h.comp_or_none(a.top, b.top) ||
               S[c].bottom != h.comp_or_none(a.bottom, b.bottom)) {
      r.law("hcomp boundary", a.id + " | " + b.id);
    }
  }
  for (const auto& [k, c] : d.vcomp) {
    const Square &a = S[first(k)], &b = S[second(k)];
    if (a.bottom != b.top) {
      r.law("vcomp of non-adjacent squares", a.id + " / " + b.id);
    } else if (S[c].top != a.top || S[c].bottom != b.bottom || S[c].left != v.comp_or_none(a.left, b.left) ||
               S[c].right != v.comp_or_none(a.right, b.right)) {
      r.law("vcomp boundary", a.id + " / " + b.id);
    }
  }
  for (SqIx a = 0; a < S.size(); ++a) {
    for (SqIx b : d.with_left(S[a].right)) {
      if (d.hcomp_or_none(a, b) == kNoSq) r.law("missing hcomp", S[a].id + " | " + S[b].id);
    }
    for (SqIx b : d.with_top(S[a].bottom)) {
      if (d.vcomp_or_none(a, b) == kNoSq) r.law("missing vcomp", S[a].id + " / " + S[b].id);
    }
  }
  if (r.has_structural()) return r;

  for (SqIx a = 0; a < S.size(); ++a) {
    const Square& q = S[a];
    if (d.hid[q.left] != kNoSq && d.hcomp_or_none(d.hid[q.left], a) != a) r.law("hcomp left unit", q.id);
    if (d.hid[q.right] != kNoSq && d.hcomp_or_none(a, d.hid[q.right]) != a) r.law("hcomp right unit", q.id);
    if (d.vid[q.top] != kNoSq && d.vcomp_or_none(d.vid[q.top], a) != a) r.law("vcomp top unit", q.id);
    if (d.vid[q.bottom] != kNoSq && d.vcomp_or_none(a, d.vid[q.bottom]) != a) r.law("vcomp bottom unit", q.id);
  }
  for (SqIx a = 0; a < S.size(); ++a) {
    for (SqIx b : d.with_left(S[a].right)) {
      SqIx ab = d.hcomp_or_none(a, b);
      if (ab == kNoSq) continue;
      for (SqIx c : d.with_left(S[b].right)) {
        SqIx bc = d.hcomp_or_none(b, c);
        if (bc == kNoSq) continue;
        SqIx l = d.hcomp_or_none(ab, c), rr = d.hcomp_or_none(a, bc);
        if (l == kNoSq || l != rr) r.law("hcomp associativity", S[a].id + " | " + S[b].id + " | " + S[c].id);
      }
    }
    for (SqIx b : d.with_top(S[a].bottom)) {
      SqIx ab = d.vcomp_or_none(a, b);
      if (ab == kNoSq) continue;
      for (SqIx c : d.with_top(S[b].bottom)) {
        SqIx bc = d.vcomp_or_none(b, c);
        if (bc == kNoSq) continue;
        SqIx l = d.vcomp_or_none(ab, c), rr = d.vcomp_or_none(a, bc);
        if (l == kNoSq || l != rr) r.law("vcomp associativity", S[a].id + " / " + S[b].id + " / " + S[c].id);
      }
    }
  }
  // Interchange on every 2x2 grid  s1 s2 / s3 s4.
  for (SqIx s1 = 0; s1 < S.size(); ++s1) {
    for (SqIx s2 : d.with_left(S[s1].right)) {
      SqIx h12 = d.hcomp_or_none(s1, s2);
      for (SqIx s3 : d.with_top(S[s1].bottom)) {
        SqIx v13 = d.vcomp_or_none(s1, s3);
        for (SqIx s4 : d.with_left(S[s3].right)) {
          if (S[s4].top != S[s2].bottom) continue;
          SqIx h34 = d.hcomp_or_none(s3, s4);
          SqIx v24 = d.vcomp_or_none(s2, s4);
          if (h12 == kNoSq || h34 == kNoSq || v13 == kNoSq || v24 == kNoSq) continue;
          SqIx l = d.vcomp_or_none(h12, h34), rr = d.hcomp_or_none(v13, v24);
          if (l == kNoSq || l != rr) {
            r.law("interchange", nm(s1) + " " + nm(s2) + " / " + nm(s3) + " " + nm(s4));
          }
        }
      }
    }
  }
  for (MorIx m1 = 0; m1 < v.num_morphisms(); ++m1) {
    for (MorIx m2 : v.out(v.tgt(m1))) {
      MorIx m = v.comp_or_none(m1, m2);
      if (m == kNoMor || d.hid[m1] == kNoSq || d.hid[m2] == kNoSq) continue;
      if (d.vcomp_or_none(d.hid[m1], d.hid[m2]) != d.hid[m]) {
        r.law("identity squares compose vertically", v.morphism_name(m1) + " ; " + v.morphism_name(m2));
      }
    }
  }
  for (MorIx m1 = 0; m1 < h.num_morphisms(); ++m1) {
    for (MorIx m2 : h.out(h.tgt(m1))) {
      MorIx m = h.comp_or_none(m1, m2);
      if (m == kNoMor || d.vid[m1] == kNoSq || d.vid[m2] == kNoSq) continue;
      if (d.hcomp_or_none(d.vid[m1], d.vid[m2]) != d.vid[m]) {
        r.law("identity squares compose horizontally", h.morphism_name(m1) + " ; " + h.morphism_name(m2));
      }
    }
  }
  for (ObjIx x = 0; x < h.num_objects(); ++x) {
    MorIx iv = v.identity(x), ih = h.identity(x);
    if (iv == kNoMor || ih == kNoMor) continue;
    if (d.hid[iv] != d.vid[ih]) r.law("identity square of an object", h.object_name(x));
  }
  return r;
}

DoubleCategory transpose(const DoubleCategory& d) {
  DoubleCategory t;
  t.hcat = d.vcat;
  t.vcat = d.hcat;
  for (const auto& q : d.squares) t.squares.push_back({q.id, q.left, q.right, q.top, q.bottom});
  t.hcomp = d.vcomp;
  t.vcomp = d.hcomp;
  t.hid = d.vid;
  t.vid = d.hid;
  t.reindex();
  return t;
}

FinCat cell_category(const DoubleCategory& d) {
  FinCat::Builder b;
  for (MorIx m = 0; m < d.vcat->num_morphisms(); ++m) b.add_object(d.vcat->morphism_name(m));
  for (const auto& q : d.squares) b.add_morphism(q.id, q.left, q.right);
  for (MorIx m = 0; m < d.hid.size(); ++m) {
    if (d.hid[m] != kNoSq) b.set_identity(m, d.hid[m]);
  }
  for (const auto& [k, c] : sorted(d.hcomp)) b.set_comp(first(k), second(k), c);
  return std::move(b).build();
}

DoubleCategory squares_double_category(const CatPtr& c) {
  std::vector<std::array<MorIx, 4>> bs;
  for (MorIx l = 0; l < c->num_morphisms(); ++l) {
    for (MorIx r = 0; r < c->num_morphisms(); ++r) {
      for (MorIx t : c->hom(c->src(l), c->src(r))) {
        for (MorIx b : c->hom(c->tgt(l), c->tgt(r))) {
          MorIx x = c->comp_or_none(l, b);
          if (x != kNoMor && x == c->comp_or_none(t, r)) bs.push_back({t, b, l, r});
        }
      }
    }
  }
  return double_from_boundaries(c, c, std::move(bs));
}

DoubleCategory relabel_vertical(const DoubleCategory& d, const std::vector<std::string>& names) {
  const FinCat& v = *d.vcat;
  if (names.size() != v.num_morphisms()) throw std::invalid_argument("relabel_vertical: wrong name count");
  FinCat::Builder b;
  for (ObjIx x = 0; x < v.num_objects(); ++x) b.add_object(v.object_name(x));
  for (MorIx m = 0; m < v.num_morphisms(); ++m) b.add_morphism(names[m], v.src(m), v.tgt(m));
  for (ObjIx x = 0; x < v.num_objects(); ++x) {
    if (v.identity(x) != kNoMor) b.set_identity(x, v.identity(x));
  }
  for (MorIx f = 0; f < v.num_morphisms(); ++f) {
    for (MorIx g : v.out(v.tgt(f))) {
      MorIx h = v.comp_or_none(f, g);
      if (h != kNoMor) b.set_comp(f, g, h);
    }
  }
  DoubleCategory out = d;
  out.vcat = share(std::move(b).build());
  for (auto& q : out.squares) q.id = square_name(*out.hcat, *out.vcat, q.top, q.bottom, q.left, q.right);
  out.reindex();
  return out;
}

bool equal_by_names(const FinCat& a, const FinCat& b) {
  auto norm = [](const FinCat& c) {
    CategorySpec s = c.to_spec();
    std::sort(s.objects.begin(), s.objects.end());
    std::vector<std::tuple<std::string, std::string, std::string>> ms;
    for (const auto& m : s.morphisms) ms.emplace_back(m.id, m.src, m.tgt);
    std::sort(ms.begin(), ms.end());
    std::sort(s.identities.begin(), s.identities.end());
    std::sort(s.composition.begin(), s.composition.end());
    return std::make_tuple(s.objects, ms, s.identities, s.composition);
  };
  return norm(a) == norm(b);
}

bool equal_by_names(const DoubleCategory& a, const DoubleCategory& b) {
  if (!equal_by_names(*a.hcat, *b.hcat) || !equal_by_names(*a.vcat, *b.vcat)) return false;
  auto norm = [](const DoubleCategory& d) {
    DoubleCategorySpec s = d.to_spec();
    std::vector<std::array<std::string, 5>> sq;
    for (const auto& q : s.squares) sq.push_back({q.id, q.top, q.bottom, q.left, q.right});
    std::sort(sq.begin(), sq.end());
    std::sort(s.hcomp.begin(), s.hcomp.end());
    std::sort(s.vcomp.begin(), s.vcomp.end());
    std::sort(s.hidentities.begin(), s.hidentities.end());
    std::sort(s.videntities.begin(), s.videntities.end());
    return std::make_tuple(sq, s.hcomp, s.vcomp, s.hidentities, s.videntities);
  };
  return norm(a) == norm(b);
}

DoubleFunctor identity_double_functor(const DblPtr& d) {
  DoubleFunctor f{d, d, identity_functor(d->hcat), identity_functor(d->vcat), {}};
  for (SqIx s = 0; s < d->squares.size(); ++s) f.sq.push_back(s);
  return f;
}

ValidationReport validate_double_functor(const DoubleFunctor& F) {
  ValidationReport r;
  if (!F.dom || !F.cod || !same_category(F.h.dom, F.dom->hcat) || !same_category(F.h.cod, F.cod->hcat) ||
      !same_category(F.v.dom, F.dom->vcat) || !same_category(F.v.cod, F.cod->vcat)) {
    r.structural("double functor shape", "component functors do not match the double categories");
    return r;
  }
  if (F.sq.size() != F.dom->squares.size()) {
    r.structural("double functor shape", "square map size");
    return r;
  }
  ValidationReport hr = validate_functor(F.h), vr = validate_functor(F.v);
  r.merge(hr, "horizontal");
  r.merge(vr, "vertical");
  for (SqIx s = 0; s < F.sq.size(); ++s) {
    if (F.sq[s] >= F.cod->squares.size()) r.structural("missing square image", F.dom->squares[s].id);
  }
  if (r.has_structural()) return r;
  const DoubleCategory& D = *F.dom;
  const DoubleCategory& E = *F.cod;
  if (F.h.ob != F.v.ob) r.law("object maps agree", "horizontal and vertical object maps differ");
  for (SqIx s = 0; s < D.squares.size(); ++s) {
    const Square& q = D.squares[s];
    const Square& p = E.squares[F.sq[s]];
    if (p.top != F.h.mor[q.top] || p.bottom != F.h.mor[q.bottom] || p.left != F.v.mor[q.left] ||
        p.right != F.v.mor[q.right]) {
      r.law("preserves square boundary", q.id);
    }
  }
  for (const auto& [k, c] : sorted(D.hcomp)) {
    if (E.hcomp_or_none(F.sq[first(k)], F.sq[second(k)]) != F.sq[c]) {
      r.law("preserves hcomp", D.squares[first(k)].id + " | " + D.squares[second(k)].id);
    }
  }
  for (const auto& [k, c] : sorted(D.vcomp)) {
    if (E.vcomp_or_none(F.sq[first(k)], F.sq[second(k)]) != F.sq[c]) {
      r.law("preserves vcomp", D.squares[first(k)].id + " / " + D.squares[second(k)].id);
    }
  }
  for (MorIx m = 0; m < D.hid.size(); ++m) {
    if (D.hid[m] != kNoSq && F.sq[D.hid[m]] != E.hid[F.v.mor[m]]) {
      r.law("preserves horizontal identity squares", D.vcat->morphism_name(m));
    }
  }
  for (MorIx m = 0; m < D.vid.size(); ++m) {
    if (D.vid[m] != kNoSq && F.sq[D.vid[m]] != E.vid[F.h.mor[m]]) {
      r.law("preserves vertical identity squares", D.hcat->morphism_name(m));
    }
  }
  return r;
}

ValidationReport validate_double_nat(const DoubleNat& a) {
  ValidationReport r;
  if (!a.F.dom || !a.G.dom || a.F.dom != a.G.dom || a.F.cod != a.G.cod) {
    if (!(a.F.dom && a.G.dom && a.F.cod && a.G.cod && *a.F.dom == *a.G.dom && *a.F.cod == *a.G.cod)) {
      r.structural("double transformation shape", "double functors are not parallel");
      return r;
    }
  }
  const DoubleCategory& D = *a.F.dom;
  const DoubleCategory& E = *a.F.cod;
  const FinCat& h = *E.hcat;
  if (a.comp.size() != D.hcat->num_objects() || a.sq.size() != D.vcat->num_morphisms()) {
    r.structural("double transformation shape", "component table sizes");
    return r;
  }
  for (ObjIx x = 0; x < a.comp.size(); ++x) {
    if (a.comp[x] >= h.num_morphisms()) r.structural("missing component", D.hcat->object_name(x));
  }
  if (!r.ok()) return r;
  for (ObjIx x = 0; x < a.comp.size(); ++x) {
    if (h.src(a.comp[x]) != a.F.h.ob[x] || h.tgt(a.comp[x]) != a.G.h.ob[x]) {
      r.law("component boundary", D.hcat->object_name(x));
    }
  }
  for (MorIx f = 0; f < D.hcat->num_morphisms(); ++f) {
    MorIx l = h.comp_or_none(a.F.h.mor[f], a.comp[D.hcat->tgt(f)]);
    if (l == kNoMor || l != h.comp_or_none(a.comp[D.hcat->src(f)], a.G.h.mor[f])) {
      r.law("horizontal naturality", D.hcat->morphism_name(f));
    }
  }
  const FinCat& v = *D.vcat;
  for (MorIx m = 0; m < v.num_morphisms(); ++m) {
    SqIx s = a.sq[m];
    if (s == kNoSq || s >= E.squares.size()) {
      r.law("missing square", v.morphism_name(m));
      continue;
    }
    const Square& q = E.squares[s];
    if (q.top != a.comp[v.src(m)] || q.bottom != a.comp[v.tgt(m)] || q.left != a.F.v.mor[m] ||
        q.right != a.G.v.mor[m]) {
      r.law("square boundary", v.morphism_name(m));
    }
  }
  auto have = [&](MorIx m) { return a.sq[m] != kNoSq && a.sq[m] < E.squares.size(); };
  for (MorIx m1 = 0; m1 < v.num_morphisms(); ++m1) {
    for (MorIx m2 : v.out(v.tgt(m1))) {
      MorIx m = v.comp_or_none(m1, m2);
      if (m == kNoMor || !have(m) || !have(m1) || !have(m2)) continue;
      if (E.vcomp_or_none(a.sq[m1], a.sq[m2]) != a.sq[m]) {
        r.law("squares compose vertically", v.morphism_name(m1) + " ; " + v.morphism_name(m2));
      }
    }
  }
  for (ObjIx x = 0; x < v.num_objects(); ++x) {
    MorIx i = v.identity(x);
    if (i != kNoMor && have(i) && a.sq[i] != E.vid[a.comp[x]]) r.law("identity square", v.object_name(x));
  }
  for (SqIx s = 0; s < D.squares.size(); ++s) {
    const Square& q = D.squares[s];
    if (!have(q.left) || !have(q.right)) continue;
    SqIx l = E.hcomp_or_none(a.F.sq[s], a.sq[q.right]);
    SqIx rr = E.hcomp_or_none(a.sq[q.left], a.G.sq[s]);
    if (l == kNoSq || l != rr) r.law("square naturality", q.id);
  }
  return r;
}

EdgeMaps edge_maps(const DoubleCategory& d, const CatPtr& lower, const CatPtr& upper) {
  const FinCat& v = *d.vcat;
  EdgeMaps e{{upper, lower, {}, {}}, {upper, lower, {}, {}}, {lower, upper, {}, {}}};
  for (MorIx m = 0; m < v.num_morphisms(); ++m) {
    e.s.ob.push_back(v.src(m));
    e.t.ob.push_back(v.tgt(m));
  }
  for (const auto& q : d.squares) {
    e.s.mor.push_back(q.top);
    e.t.mor.push_back(q.bottom);
  }
  for (ObjIx x = 0; x < v.num_objects(); ++x) e.i.ob.push_back(v.identity(x));
  for (SqIx s : d.vid) e.i.mor.push_back(s);
  return e;
}

DoubleFunctor corner_double_functor(const DblPtr& dom, const DblPtr& cod, const Functor& lower,
                                    const Functor& upper) {
  DoubleFunctor f{dom, cod, lower, Functor{dom->vcat, cod->vcat, lower.ob, upper.ob}, upper.mor};
  return f;
}

ValidationReport validate_triple_category(const TripleCategory& t) {
  ValidationReport r;
  const std::array<std::pair<const char*, CatPtr>, 4> corners{
      {{"c00", t.c00}, {"c01", t.c01}, {"c10", t.c10}, {"c11", t.c11}}};
  struct Edge {
    const char* name;
    DblPtr d;
    CatPtr lower, upper;
    const EdgeMaps* maps;
  };
  const std::array<Edge, 4> edges{{{"bottom", t.bottom, t.c00, t.c10, &t.bottom_maps},
                                   {"right", t.right, t.c00, t.c01, &t.right_maps},
                                   {"top", t.top, t.c01, t.c11, &t.top_maps},
                                   {"left", t.left, t.c10, t.c11, &t.left_maps}}};
  for (const auto& [n, c] : corners) {
    if (!c) r.structural("missing corner", n);
  }
  for (const auto& e : edges) {
    if (!e.d) r.structural("missing edge", e.name);
  }
  if (!r.ok()) return r;
  for (const auto& [n, c] : corners) r.merge(validate_category(*c), n);
  for (const auto& e : edges) {
    ValidationReport er = validate_double_category(*e.d);
    r.merge(er, e.name);
    if (er.has_structural()) return r;
    if (!(*e.d->hcat == *e.lower)) r.law("edge horizontal category is its lower corner", e.name);
    if (!(cell_category(*e.d) == *e.upper)) r.law("edge cell category is its upper corner", e.name);
  }
  if (!r.ok()) return r;
  for (const auto& e : edges) {
    const std::string n = e.name;
    EdgeMaps derived = edge_maps(*e.d, e.lower, e.upper);
    const std::array<std::pair<const char*, std::pair<const Functor*, const Functor*>>, 3> fs{
        {{"s", {&e.maps->s, &derived.s}}, {"t", {&e.maps->t, &derived.t}}, {"i", {&e.maps->i, &derived.i}}}};
    for (const auto& [fn, pair] : fs) {
      ValidationReport fr = validate_functor(*pair.first);
      r.merge(fr, n + "." + fn);
      if (fr.has_structural()) return r;
      if (!(*pair.first == *pair.second)) r.law("structure functor agrees with edge", n + "." + fn);
    }
    Functor id = identity_functor(e.lower);
    if (!(compose(e.maps->i, e.maps->s) == id)) r.law("source of identity", n);
    if (!(compose(e.maps->i, e.maps->t) == id)) r.law("target of identity", n);
  }
  if (!r.ok()) return r;
  const EdgeMaps &B = t.bottom_maps, &R = t.right_maps, &T = t.top_maps, &L = t.left_maps;
  const std::array<std::pair<const char*, std::pair<const Functor*, const Functor*>>, 2> st{
      {{"s", {&T.s, &B.s}}, {"t", {&T.t, &B.t}}}};
  const std::array<std::pair<const char*, std::pair<const Functor*, const Functor*>>, 2> st2{
      {{"s", {&R.s, &L.s}}, {"t", {&R.t, &L.t}}}};
  for (const auto& [xn, x] : st) {
    for (const auto& [yn, y] : st2) {
      if (!(compose(*x.first, *y.first) == compose(*y.second, *x.second))) {
        r.law("boundary maps commute", std::string(xn) + " then " + yn);
      }
    }
    if (!(compose(L.i, *x.first) == compose(*x.second, R.i))) r.law("identity commutes with boundary", xn);
  }
  for (const auto& [yn, y] : st2) {
    if (!(compose(T.i, *y.second) == compose(*y.first, B.i))) r.law("identity commutes with boundary", yn);
  }
  if (!(compose(R.i, T.i) == compose(B.i, L.i))) r.law("identities commute", "c00 -> c11");

  const std::array<std::tuple<const char*, DoubleFunctor>, 6> dfs{{
      {"s along the second direction", corner_double_functor(t.top, t.bottom, R.s, L.s)},
      {"t along the second direction", corner_double_functor(t.top, t.bottom, R.t, L.t)},
      {"i along the second direction", corner_double_functor(t.bottom, t.top, R.i, L.i)},
      {"s along the first direction", corner_double_functor(t.left, t.right, B.s, T.s)},
      {"t along the first direction", corner_double_functor(t.left, t.right, B.t, T.t)},
      {"i along the first direction", corner_double_functor(t.right, t.left, B.i, T.i)},
  }};
  for (const auto& [n, f] : dfs) r.merge(validate_double_functor(f), n);

  // Interchange of the two vertical compositions on the diagonal corner.
  const DoubleCategory& top = *t.top;
  const DoubleCategory& left = *t.left;
  std::vector<std::vector<SqIx>> tv(t.c11->num_morphisms());
  for (const auto& [k, c] : sorted(top.vcomp)) tv[first(k)].push_back(second(k));
  for (SqIx w = 0; w < tv.size(); ++w) {
    for (SqIx x : tv[w]) {
      SqIx wx = top.vcomp_or_none(w, x);
      for (SqIx y : left.with_top(left.squares[w].bottom)) {
        SqIx wy = left.vcomp_or_none(w, y);
        if (wy == kNoSq) continue;
        for (SqIx z : tv[y]) {
          SqIx xz = left.vcomp_or_none(x, z);
          SqIx yz = top.vcomp_or_none(y, z);
          if (xz == kNoSq || yz == kNoSq) continue;
          SqIx a = left.vcomp_or_none(wx, yz);
          SqIx b = top.vcomp_or_none(wy, xz);
          if (a == kNoSq || a != b) {
            r.law("interchange of the two vertical compositions",
                  t.c11->morphism_name(w) + ", " + t.c11->morphism_name(x) + ", " + t.c11->morphism_name(y) + ", " +
                      t.c11->morphism_name(z));
          }
        }
      }
    }
  }
  return r;
}

}  // namespace gnerve
