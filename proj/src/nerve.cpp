#include "gnerve/nerve.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gnerve {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

// Accumulates witnesses for one check, keeping the first few and counting all.
class Findings {
 public:
  Findings(std::string check, bool required = true) {
    r_.check = std::move(check);
    r_.required = required;
  }
  void add(std::string w) {
    if (r_.witnesses.size() < kMaxWitnesses) r_.witnesses.push_back(std::move(w));
    ++n_;
  }
  void merge(const ValidationReport& rep, const std::string& prefix) {
    for (const auto& v : rep.items()) add(prefix + v.rule + ": " + v.witness);
  }
  void count(std::string k, std::uint64_t v) { r_.counts.emplace_back(std::move(k), v); }
  void note(std::string s) { r_.note = std::move(s); }
  bool clean() const { return n_ == 0; }
  CheckResult done(bool truncated = false) {
    r_.status = n_ ? Status::fail : truncated ? Status::inconclusive : Status::pass;
    if (n_) r_.counts.emplace_back("violations", n_);
    if (truncated && r_.note.empty()) r_.note = "search truncated by the evaluation budget";
    return r_;
  }

 private:
  CheckResult r_;
  std::uint64_t n_ = 0;
};


std::string describe(const Theory& t, const Monad& m, const Cell& c) { return cell_name(t, m, c); }

MorIx unit_power(const Monad& m, ObjIx y, int j) {
  return j == 0 ? m.eta(y) : m.cat().compose(m.eta(y), m.eta(m.obj(y)));
}

}  // namespace

Nerve build_nerve(const Theory& t, const MonadPtr& m) {
  check_theory(t);
  Nerve n;
  n.theory = t;
  n.monad = m;
  n.cells = all_cells(t, *m);
  const FinCat& c = m->cat();
  FinCat::Builder vb;
  for (ObjIx x = 0; x < c.num_objects(); ++x) vb.add_object(c.object_name(x));
  std::vector<std::vector<MorIx>> from(c.num_objects());
  for (MorIx i = 0; i < n.cells.size(); ++i) {
    n.index.emplace(n.cells[i], i);
    vb.add_morphism(cell_name(t, *m, n.cells[i]), n.cells[i].src, n.cells[i].tgt);
    from[n.cells[i].src].push_back(i);
  }
  std::vector<std::string> problems;
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    MorIx id = n.find(identity_cell(t, *m, x));
    if (id == kNoMor) {
      problems.push_back("identity cell at " + c.object_name(x) + " is not a cell of the theory");
    } else {
      vb.set_identity(x, id);
    }
  }
  for (MorIx i = 0; i < n.cells.size(); ++i) {
    for (MorIx j : from[n.cells[i].tgt]) {
      Cell k = vcompose(t, *m, n.cells[i], n.cells[j]);
      MorIx ix = n.find(k);
      if (ix == kNoMor) {
        problems.push_back("composite " + cell_name(t, *m, n.cells[i]) + " ; " + cell_name(t, *m, n.cells[j]) +
                           " = " + cell_name(t, *m, k) + " leaves the theory");
      } else {
        vb.set_comp(i, j, ix);
      }
    }
  }
  if (!problems.empty()) throw ClosureViolation("vertical composition leaves the theory", problems);
  CatPtr vcat = share(std::move(vb).build());

  std::vector<std::array<MorIx, 4>> boundaries;
  for (const Cell& l : n.cells) {
    for (const Cell& r : n.cells) {
      for (MorIx top : c.hom(l.src, r.src)) {
        for (MorIx bottom : c.hom(l.tgt, r.tgt)) {
          if (is_square(t, *m, top, bottom, l, r)) boundaries.push_back({top, bottom, n.find(l), n.find(r)});
        }
      }
    }
  }
  n.dbl = share(double_from_boundaries(m->base, vcat, std::move(boundaries)));
  return n;
}

DoubleCategory nerve_double_category(const Theory& t, const MonadPtr& m) { return *build_nerve(t, m).dbl; }

DoubleCategory transpose_nerve(const Nerve& n) { return transpose(*n.dbl); }

DoubleFunctor whiskering_functor(const Nerve& np, const Nerve& nq, const MonadMorphism& mm) {
  std::vector<std::string> missing;
  DoubleFunctor f;
  f.dom = np.dbl;
  f.cod = nq.dbl;
  f.h = Functor{np.dbl->hcat, nq.dbl->hcat, mm.F.ob, mm.F.mor};
  f.v = Functor{np.dbl->vcat, nq.dbl->vcat, mm.F.ob, {}};
  for (const Cell& c : np.cells) {
    Cell w = whisker(np.theory, mm, c);
    MorIx ix = nq.find(w);
    if (ix == kNoMor) missing.push_back("whiskered cell " + cell_name(nq.theory, *nq.monad, w));
    f.v.mor.push_back(ix);
  }
  if (!missing.empty()) throw ClosureViolation("whiskering leaves the theory", missing);
  for (const Square& s : np.dbl->squares) {
    const auto& found = nq.dbl->find(f.h.mor[s.top], f.h.mor[s.bottom], f.v.mor[s.left], f.v.mor[s.right]);
    if (found.empty()) {
      missing.push_back("image of square " + s.id);
      f.sq.push_back(kNoSq);
    } else {
      f.sq.push_back(found.front());
    }
  }
  if (!missing.empty()) throw ClosureViolation("whiskering does not preserve squares", missing);
  return f;
}

MonadMorphism recover_xi(const Nerve& np, const Nerve& nq, const DoubleFunctor& f) {
  const Monad& P = *np.monad;
  std::vector<MorIx> xi;
  for (ObjIx x = 0; x < P.cat().num_objects(); ++x) {
    MorIx e = np.find(epsilon(np.theory, P, x));
    if (e == kNoMor) {
      throw ClosureViolation("epsilon is not a cell", {"epsilon at " + P.cat().object_name(x)});
    }
    xi.push_back(phi(nq.theory, nq.cells[f.v.mor[e]]));
  }
  Functor F{np.monad->base, nq.monad->base, f.h.ob, f.h.mor};
  return make_monad_morphism(np.monad, nq.monad, std::move(F), xi);
}

std::vector<CheckResult> check_theorem_axioms(const Theory& t, const MonadPtr& mp) {
  const Monad& m = *mp;
  const FinCat& c = m.cat();
  std::vector<CheckResult> out;
  const std::vector<Cell> cs = all_cells(t, m);
  std::set<Cell> cellset(cs.begin(), cs.end());

  Findings a2a("axiom 2a: epsilon cell projects to the identity");
  for (ObjIx y = 0; y < c.num_objects(); ++y) {
    Cell e = epsilon(t, m, y);
    if (!satisfies(t, m, e)) a2a.add("epsilon at " + c.object_name(y) + " is not a cell");
    else if (phi(t, e) != c.identity(m.obj(y))) a2a.add("phi(epsilon) != id at " + c.object_name(y));
  }
  a2a.count("objects", c.num_objects());
  out.push_back(a2a.done());

  Findings a2b("axiom 2b: mainax square for every cell");
  for (const Cell& f : cs) {
    Cell e = epsilon(t, m, f.tgt);
    if (!is_square(t, m, phi(t, f), c.identity(f.tgt), f, e)) a2b.add(describe(t, m, f));
  }
  a2b.count("cells", cs.size());
  out.push_back(a2b.done());

  Findings a3a("axiom 3a: degenerate squares force equal cells");
  std::uint64_t pairs = 0;
  for (const Cell& f : cs) {
    for (const Cell& g : cs) {
      if (f.src != g.src || f.tgt != g.tgt) continue;
      ++pairs;
      if (f != g && is_square(t, m, c.identity(f.src), c.identity(f.tgt), f, g)) {
        a3a.add(describe(t, m, f) + " vs " + describe(t, m, g));
      }
    }
  }
  a3a.count("pairs", pairs);
  out.push_back(a3a.done());

  Findings a3b("axiom 3b: eps-eta square");
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    Cell e = epsilon(t, m, x);
    Cell pe = p_cell(t, mp, e);
    if (!satisfies(t, m, pe)) {
      a3b.add("P epsilon at " + c.object_name(x) + " is not a cell");
    } else if (!is_square(t, m, m.eta(m.obj(x)), m.eta(x), e, pe)) {
      a3b.add(c.object_name(x));
    }
  }
  out.push_back(a3b.done());

  Findings fn("projection is functorial");
  for (ObjIx x = 0; x < c.num_objects(); ++x) {
    if (phi(t, identity_cell(t, m, x)) != m.eta(x)) fn.add("identity at " + c.object_name(x));
  }
  std::uint64_t composites = 0;
  for (const Cell& f : cs) {
    for (const Cell& g : cs) {
      if (f.tgt != g.src) continue;
      ++composites;
      if (phi(t, vcompose(t, m, f, g)) != m.kleisli_compose(phi(t, f), phi(t, g), g.tgt)) {
        fn.add(describe(t, m, f) + " ; " + describe(t, m, g));
      }
    }
  }
  fn.count("composites", composites);
  out.push_back(fn.done());

  Findings mf("middle four: P f ; eps_Y = eps_X ; f");
  for (const Cell& f : cs) {
    Cell pf = p_cell(t, mp, f);
    if (!cellset.contains(pf)) {
      mf.add("P " + describe(t, m, f) + " is not a cell");
      continue;
    }
    Cell l = vcompose(t, m, pf, epsilon(t, m, f.tgt));
    Cell r = vcompose(t, m, epsilon(t, m, f.src), f);
    if (l != r) mf.add(describe(t, m, f));
  }
  out.push_back(mf.done());

  Findings opt("optional functoriality axiom", false);
  for (const Cell& g : cs) {
    ObjIx y = g.src, z = g.tgt;
    MorIx pg = phi(t, g);
    if (!is_square(t, m, m.map(pg), pg, epsilon(t, m, y), epsilon(t, m, m.obj(z)))) {
      opt.add("epsilon naturality at " + describe(t, m, g));
    }
  }
  for (ObjIx z = 0; z < c.num_objects(); ++z) {
    Cell ee = vcompose(t, m, epsilon(t, m, m.obj(z)), epsilon(t, m, z));
    if (!is_square(t, m, m.mu(z), c.identity(z), ee, epsilon(t, m, z))) {
      opt.add("multiplication square at " + c.object_name(z));
    }
  }
  out.push_back(opt.done());
  return out;
}

CheckResult check_vertical_closure(const Theory& t, const MonadPtr& mp) {
  const Monad& m = *mp;
  Findings f("vertical closure of cells");
  const auto cs = all_cells(t, m);
  for (ObjIx x = 0; x < m.cat().num_objects(); ++x) {
    if (!satisfies(t, m, identity_cell(t, m, x))) f.add("identity at " + m.cat().object_name(x));
  }
  std::uint64_t n = 0;
  for (const Cell& a : cs) {
    for (const Cell& b : cs) {
      if (a.tgt != b.src) continue;
      ++n;
      if (!satisfies(t, m, vcompose(t, m, a, b))) f.add(describe(t, m, a) + " ; " + describe(t, m, b));
    }
  }
  f.count("composites", n);
  return f.done();
}

CheckResult check_whisker_closure(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget) {
  Findings f("whiskering closure of cells");
  auto mms = enumerate_monad_morphisms(p, q, budget);
  const auto cs = all_cells(t, *p);
  std::uint64_t n = 0;
  for (const auto& mm : mms.items) {
    for (const Cell& c : cs) {
      ++n;
      Cell w = whisker(t, mm, c);
      if (!satisfies(t, *q, w)) f.add(describe(t, *p, c) + " whiskered to " + describe(t, *q, w));
    }
  }
  f.count("monad morphisms", mms.items.size());
  f.count("whiskered cells", n);
  return f.done(mms.truncated);
}

ValidationReport validate_theory_2cell(const Theory& t, const TheoryTwoCell& a) {
  ValidationReport r;
  if (a.comps.size() != t.components.size()) {
    r.structural("2-cell shape", "component count");
    return r;
  }
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    const Component& k = t.components[i];
    if (k.dir == Direction::forward) {
      r.merge(validate_kl_2cell({a.dom, a.cod, a.comps[i]}), k.name);
    } else if (k.depth == 0) {
      r.merge(validate_monad_2cell({a.cod, a.dom, a.comps[i]}), k.name);
    } else {
      r.merge(validate_kl_2cell({a.cod, a.dom, a.comps[i]}), k.name);
    }
  }
  if (!r.ok()) return r;
  const Monad& Q = *a.dom.cod;
  const FinCat& d = Q.cat();
  for (const auto& e : t.equations) {
    const Component& b = t.components[e.backward];
    for (ObjIx x = 0; x < a.dom.dom->cat().num_objects(); ++x) {
      MorIx f = a.comps[e.forward][x];
      MorIx lhs = d.comp_or_none(a.comps[e.backward][x], b.depth == 0 ? f : Q.map(f));
      if (lhs == kNoMor || lhs != unit_power(Q, a.cod.obj(x), b.depth)) {
        r.law("equation " + b.name + " / " + t.components[e.forward].name, a.dom.dom->cat().object_name(x));
      }
    }
  }
  return r;
}

TheoryTwoCell identity_theory_2cell(const Theory& t, const MonadMorphism& mm) {
  TheoryTwoCell a{mm, mm, {}};
  const Monad& Q = *mm.cod;
  for (const auto& k : t.components) {
    std::vector<MorIx> comp;
    for (ObjIx x = 0; x < mm.dom->cat().num_objects(); ++x) {
      ObjIx fx = mm.obj(x);
      comp.push_back(k.dir == Direction::backward && k.depth == 0 ? Q.cat().identity(fx) : Q.eta(fx));
    }
    a.comps.push_back(std::move(comp));
  }
  return a;
}

Enumeration<TheoryTwoCell> enumerate_theory_2cells(const Theory& t, const MonadMorphism& a,
                                                   const MonadMorphism& b, Budget& budget) {
  Enumeration<TheoryTwoCell> out;
  const std::uint64_t start = budget.used;
  std::vector<std::vector<std::vector<MorIx>>> choices;
  for (const auto& k : t.components) {
    std::vector<std::vector<MorIx>> cs;
    if (k.dir == Direction::forward) {
      auto e = enumerate_kl_2cells(a, b, budget);
      out.truncated |= e.truncated;
      for (auto& c : e.items) cs.push_back(std::move(c.alpha));
    } else if (k.depth == 0) {
      auto e = enumerate_monad_2cells(b, a, budget);
      out.truncated |= e.truncated;
      for (auto& c : e.items) cs.push_back(std::move(c.alpha));
    } else {
      auto e = enumerate_kl_2cells(b, a, budget);
      out.truncated |= e.truncated;
      for (auto& c : e.items) cs.push_back(std::move(c.alpha));
    }
    if (cs.empty() || out.truncated) {
      out.evaluations = budget.used - start;
      return out;
    }
    choices.push_back(std::move(cs));
  }
  std::vector<std::size_t> ix(choices.size(), 0);
  TheoryTwoCell cell{a, b, std::vector<std::vector<MorIx>>(choices.size())};
  while (true) {
    if (!budget.spend()) {
      out.truncated = true;
      break;
    }
    for (std::size_t i = 0; i < choices.size(); ++i) cell.comps[i] = choices[i][ix[i]];
    if (validate_theory_2cell(t, cell).ok()) out.items.push_back(cell);
    std::size_t i = choices.size();
    bool more = false;
    while (i > 0) {
      --i;
      if (++ix[i] < choices[i].size()) {
        more = true;
        break;
      }
      ix[i] = 0;
    }
    if (!more) break;
  }
  out.evaluations = budget.used - start;
  return out;
}

TheoryTwoCell hcompose(const Theory& t, const TheoryTwoCell& a, const TheoryTwoCell& b) {
  TheoryTwoCell out{compose(a.dom, b.dom), compose(a.cod, b.cod), {}};
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    const Component& k = t.components[i];
    if (k.dir == Direction::forward) {
      out.comps.push_back(kl_hcompose({a.dom, a.cod, a.comps[i]}, {b.dom, b.cod, b.comps[i]}).alpha);
    } else if (k.depth == 0) {
      out.comps.push_back(hcompose(MonadTwoCell{a.cod, a.dom, a.comps[i]}, MonadTwoCell{b.cod, b.dom, b.comps[i]}).alpha);
    } else {
      out.comps.push_back(kl_hcompose({a.cod, a.dom, a.comps[i]}, {b.cod, b.dom, b.comps[i]}).alpha);
    }
  }
  return out;
}

namespace {

std::vector<TheoryTwoCell> all_theory_2cells(const Theory& t, const std::vector<MonadMorphism>& mms,
                                             Budget& budget, bool& truncated) {
  std::vector<TheoryTwoCell> out;
  for (const auto& a : mms) {
    for (const auto& b : mms) {
      auto e = enumerate_theory_2cells(t, a, b, budget);
      truncated |= e.truncated;
      out.insert(out.end(), e.items.begin(), e.items.end());
      if (truncated) return out;
    }
  }
  return out;
}

}  // namespace

CheckResult check_horizontal_closure(const Theory& t, const MonadPtr& p, const MonadPtr& q, const MonadPtr& r,
                                     Budget& budget) {
  Findings f("horizontal closure of 2-cells");
  auto pq = enumerate_monad_morphisms(p, q, budget);
  auto qr = enumerate_monad_morphisms(q, r, budget);
  bool truncated = pq.truncated || qr.truncated;
  auto left = all_theory_2cells(t, pq.items, budget, truncated);
  auto right = all_theory_2cells(t, qr.items, budget, truncated);
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < left.size() && !truncated; ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!budget.spend()) {
        truncated = true;
        break;
      }
      ++n;
      auto k = hcompose(t, left[i], right[j]);
      auto rep = validate_theory_2cell(t, k);
      if (!rep.ok()) f.merge(rep, "composite " + std::to_string(i) + " * " + std::to_string(j) + ": ");
    }
  }
  f.count("2-cells P->Q", left.size());
  f.count("2-cells Q->R", right.size());
  f.count("composites", n);
  return f.done(truncated);
}

CheckResult check_faithfulness(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget) {
  Findings f("faithfulness of the nerve");
  Nerve np = build_nerve(t, p);
  Nerve nq = build_nerve(t, q);
  auto mms = enumerate_monad_morphisms(p, q, budget);
  std::vector<DoubleFunctor> ws;
  for (std::size_t i = 0; i < mms.items.size(); ++i) {
    try {
      ws.push_back(whiskering_functor(np, nq, mms.items[i]));
      auto rep = validate_double_functor(ws.back());
      if (!rep.ok()) f.merge(rep, "whiskering " + std::to_string(i) + ": ");
    } catch (const ClosureViolation& e) {
      f.add("whiskering " + std::to_string(i) + ": " + e.what());
      return f.done();
    }
  }
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      if (ws[i] == ws[j]) f.add("monad morphisms " + std::to_string(i) + " and " + std::to_string(j) + " whisker equally");
    }
  }
  f.count("monad morphisms", mms.items.size());
  return f.done(mms.truncated);
}

CheckResult check_recover_round_trip(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget) {
  Findings f("recover xi from whiskering");
  Nerve np = build_nerve(t, p);
  Nerve nq = build_nerve(t, q);
  auto mms = enumerate_monad_morphisms(p, q, budget);
  for (std::size_t i = 0; i < mms.items.size(); ++i) {
    const auto& mm = mms.items[i];
    try {
      MonadMorphism back = recover_xi(np, nq, whiskering_functor(np, nq, mm));
      if (!(back == mm)) f.add("monad morphism " + std::to_string(i));
    } catch (const ClosureViolation& e) {
      f.add("monad morphism " + std::to_string(i) + ": " + e.what());
    }
  }
  f.count("monad morphisms", mms.items.size());
  return f.done(mms.truncated);
}

CheckResult check_fullness_bounded(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget,
                                   bool probe) {
  Findings f(probe ? "fullness probe" : "fullness on the epsilon class");
  Nerve np = build_nerve(t, p);
  Nerve nq = build_nerve(t, q);
  const Monad& P = *p;

  std::vector<MorIx> cls;
  for (const Cell& c : np.cells) {
    MorIx a = np.find(vcompose(t, P, epsilon(t, P, c.src), c));
    MorIx b = np.find(p_cell(t, p, c));
    if (a == kNoMor || b == kNoMor) {
      f.add("class cell for " + describe(t, P, c) + " is not a cell");
      return f.done();
    }
    cls.push_back(a);
    cls.push_back(b);
  }
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());

  std::map<std::vector<std::uint32_t>, std::vector<DoubleFunctor>> groups;
  bool truncated = false;
  std::uint64_t total = 0;
  auto hs = enumerate_functors(p->base, q->base, budget);
  truncated |= hs.truncated;
  for (const Functor& h : hs.items) {
    auto vs = enumerate_functors(np.dbl->vcat, nq.dbl->vcat, budget, h.ob);
    truncated |= vs.truncated;
    for (const Functor& v : vs.items) {
      DoubleFunctor d{np.dbl, nq.dbl, Functor{np.dbl->hcat, nq.dbl->hcat, h.ob, h.mor}, v, {}};
      bool ok = true;
      for (const Square& s : np.dbl->squares) {
        if (!budget.spend()) {
          truncated = true;
          ok = false;
          break;
        }
        const auto& img = nq.dbl->find(h.mor[s.top], h.mor[s.bottom], v.mor[s.left], v.mor[s.right]);
        if (img.empty()) {
          ok = false;
          break;
        }
        d.sq.push_back(img.front());
      }
      if (!ok || !validate_double_functor(d).ok()) continue;
      ++total;
      std::vector<std::uint32_t> key(h.ob.begin(), h.ob.end());
      key.insert(key.end(), h.mor.begin(), h.mor.end());
      for (MorIx c : cls) key.push_back(v.mor[c]);
      groups[key].push_back(std::move(d));
    }
    if (truncated) break;
  }

  std::uint64_t determined = 0, undetermined = 0;
  for (const auto& [key, members] : groups) {
    if (members.size() != 1) {
      ++undetermined;
      continue;
    }
    ++determined;
    if (probe) continue;
    const DoubleFunctor& d = members.front();
    MonadMorphism mm = recover_xi(np, nq, d);
    auto rep = validate_monad_morphism(mm);
    if (!rep.ok()) {
      f.merge(rep, "recovered xi: ");
      continue;
    }
    try {
      if (!(whiskering_functor(np, nq, mm) == d)) f.add("determined double functor is not its whiskering");
    } catch (const ClosureViolation& e) {
      f.add(e.what());
    }
  }
  f.count("double functors", total);
  f.count("determined", determined);
  f.count("undetermined groups", undetermined);
  f.count("evaluations", budget.used);
  if (probe) {
    f.note(undetermined ? "found double functors not determined on the epsilon class"
                        : "every enumerated double functor is determined on the epsilon class");
  }
  return f.done(truncated);
}

namespace {

// Fills components and squares of n (whose functors are already set) from a.
void fill_square_family(const Nerve& np, const Nerve& nq, const MonadTwoCell& a, DoubleNat& n) {
  n.comp = a.alpha;
  n.sq.clear();
  const FinCat& v = *np.dbl->vcat;
  for (MorIx r = 0; r < v.num_morphisms(); ++r) {
    const auto& s = nq.dbl->find(a.alpha[v.src(r)], a.alpha[v.tgt(r)], n.F.v.mor[r], n.G.v.mor[r]);
    n.sq.push_back(s.empty() ? kNoSq : s.front());
  }
}

}  // namespace

DoubleNat two_cell_square_family(const Nerve& np, const Nerve& nq, const MonadTwoCell& a) {
  DoubleNat n{whiskering_functor(np, nq, a.dom), whiskering_functor(np, nq, a.cod), {}, {}};
  fill_square_family(np, nq, a, n);
  return n;
}

std::vector<CheckResult> check_two_cell_families(const std::vector<Theory>& ts, const MonadPtr& p, const MonadPtr& q,
                                                 Budget& budget) {
  struct Side {
    Nerve np, nq;
    bool thin = true;
    std::vector<DoubleFunctor> whiskered;
    Findings f{"square families of monad 2-cells"};
  };
  auto mms = enumerate_monad_morphisms(p, q, budget);
  bool truncated = mms.truncated;
  std::vector<Side> sides;
  for (const Theory& t : ts) {
    Side& sd = sides.emplace_back();
    sd.np = build_nerve(t, p);
    sd.nq = build_nerve(t, q);
    const DoubleCategory& E = *sd.nq.dbl;
    // With at most one square per boundary, every equation between squares holds once both
    // sides exist, so a family over a natural alpha is a double transformation iff it exists.
    for (const Square& s : E.squares) sd.thin = sd.thin && E.find(s.top, s.bottom, s.left, s.right).size() == 1;
    for (const auto& mm : mms.items) sd.whiskered.push_back(whiskering_functor(sd.np, sd.nq, mm));
  }
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < mms.items.size(); ++i) {
    for (std::size_t j = 0; j < mms.items.size(); ++j) {
      auto cs = enumerate_monad_2cells(mms.items[i], mms.items[j], budget);
      truncated |= cs.truncated;
      if (cs.items.empty()) continue;
      n += cs.items.size();
      const std::string where = "2-cell " + std::to_string(i) + "=>" + std::to_string(j) + ": ";
      for (Side& sd : sides) {
        const DoubleCategory& E = *sd.nq.dbl;
        const FinCat& v = *sd.np.dbl->vcat;
        if (!sd.thin) {
          DoubleNat fam{sd.whiskered[i], sd.whiskered[j], {}, {}};
          for (const auto& a : cs.items) {
            fill_square_family(sd.np, sd.nq, a, fam);
            sd.f.merge(validate_double_nat(fam), where);
          }
          continue;
        }
        const Functor& F = sd.whiskered[i].v;
        const Functor& G = sd.whiskered[j].v;
        for (const auto& a : cs.items) {
          for (MorIx r = 0; r < v.num_morphisms(); ++r) {
            bool found = false;
            for (SqIx s : E.with_left(F.mor[r])) {
              const Square& sq = E.squares[s];
              if (sq.right == G.mor[r] && sq.top == a.alpha[v.src(r)] && sq.bottom == a.alpha[v.tgt(r)]) {
                found = true;
                break;
              }
            }
            if (!found) sd.f.add(where + "missing square: " + v.morphism_name(r));
          }
        }
      }
    }
  }
  std::vector<CheckResult> out;
  for (Side& sd : sides) {
    sd.f.count("monad 2-cells", n);
    out.push_back(sd.f.done(truncated));
  }
  return out;
}

CheckResult check_two_cell_families(const Theory& t, const MonadPtr& p, const MonadPtr& q, Budget& budget) {
  return check_two_cell_families(std::vector<Theory>{t}, p, q, budget).front();
}

}  // namespace gnerve
