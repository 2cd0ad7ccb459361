#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

std::vector<int> Tab::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < m(); ++f) {
    if (src[f] == a && tgt[f] == b) out.push_back(f);
  }
  return out;
}

Tab tab_of(const gnerve::FinCat& c) {
  Tab t;
  for (gnerve::ObjIx x = 0; x < c.num_objects(); ++x) {
    t.ob.push_back(c.object_name(x));
    t.id.push_back(static_cast<int>(c.identity(x)));
  }
  const int m = static_cast<int>(c.num_morphisms());
  for (int f = 0; f < m; ++f) {
    t.mor.push_back(c.morphism_name(f));
    t.src.push_back(static_cast<int>(c.src(f)));
    t.tgt.push_back(static_cast<int>(c.tgt(f)));
  }
  t.comp.assign(m * m, -1);
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      gnerve::MorIx h = c.comp_or_none(f, g);
      if (h != gnerve::kNoMor) t.comp[f * m + g] = static_cast<int>(h);
    }
  }
  return t;
}

namespace {

std::vector<int> ints(const std::vector<std::uint32_t>& v) {
  std::vector<int> out;
  for (auto x : v) out.push_back(x == gnerve::kNoMor ? -1 : static_cast<int>(x));
  return out;
}

bool typed(const Tab& c, int f, int a, int b) {
  return f >= 0 && f < c.m() && c.src[f] == a && c.tgt[f] == b;
}

// Functor table check on raw data.
bool functor_ok(const Tab& a, const Tab& b, const std::vector<int>& ob, const std::vector<int>& mor) {
  if (ob.size() != a.ob.size() || mor.size() != a.mor.size()) return false;
  for (int x : ob) {
    if (x < 0 || x >= static_cast<int>(b.ob.size())) return false;
  }
  for (int f = 0; f < a.m(); ++f) {
    if (!typed(b, mor[f], ob[a.src[f]], ob[a.tgt[f]])) return false;
  }
  for (std::size_t x = 0; x < a.ob.size(); ++x) {
    if (mor[a.id[x]] != b.id[ob[x]]) return false;
  }
  for (int f = 0; f < a.m(); ++f) {
    for (int g = 0; g < a.m(); ++g) {
      int h = a.c(f, g);
      if (h >= 0 && b.c(mor[f], mor[g]) != mor[h]) return false;
    }
  }
  return true;
}

}  // namespace

MonadTab monad_tab(const gnerve::Monad& m) {
  return {tab_of(m.cat()), ints(m.endo.ob), ints(m.endo.mor), ints(m.unit.comp), ints(m.mult.comp)};
}

MorTab morphism_tab(const gnerve::MonadMorphism& mm) { return {ints(mm.F.ob), ints(mm.F.mor), ints(mm.xi.comp)}; }

bool monad_ok(const MonadTab& p) {
  const Tab& c = p.c;
  if (!functor_ok(c, c, p.Pob, p.Pmor)) return false;
  const int n = static_cast<int>(c.ob.size());
  for (int x = 0; x < n; ++x) {
    if (!typed(c, p.eta[x], x, p.Pob[x])) return false;
    if (!typed(c, p.mu[x], p.Pob[p.Pob[x]], p.Pob[x])) return false;
  }
  for (int f = 0; f < c.m(); ++f) {
    int x = c.src[f], y = c.tgt[f];
    if (c.c(f, p.eta[y]) != c.c(p.eta[x], p.Pmor[f])) return false;
    if (c.c(p.Pmor[p.Pmor[f]], p.mu[y]) != c.c(p.mu[x], p.Pmor[f])) return false;
  }
  for (int x = 0; x < n; ++x) {
    int px = p.Pob[x];
    if (c.c(p.eta[px], p.mu[x]) != c.id[px]) return false;
    if (c.c(p.Pmor[p.eta[x]], p.mu[x]) != c.id[px]) return false;
    if (c.c(p.mu[px], p.mu[x]) != c.c(p.Pmor[p.mu[x]], p.mu[x])) return false;
  }
  return true;
}

bool morphism_ok(const MonadTab& p, const MonadTab& q, const MorTab& f) {
  const Tab &a = p.c, &b = q.c;
  if (!functor_ok(a, b, f.Fob, f.Fmor)) return false;
  const int n = static_cast<int>(a.ob.size());
  if (static_cast<int>(f.xi.size()) != n) return false;
  for (int x = 0; x < n; ++x) {
    if (!typed(b, f.xi[x], f.Fob[p.Pob[x]], q.Pob[f.Fob[x]])) return false;
  }
  for (int g = 0; g < a.m(); ++g) {
    int x = a.src[g], y = a.tgt[g];
    if (b.c(f.Fmor[p.Pmor[g]], f.xi[y]) != b.c(f.xi[x], q.Pmor[f.Fmor[g]])) return false;
  }
  for (int x = 0; x < n; ++x) {
    int fx = f.Fob[x];
    if (b.c(f.Fmor[p.eta[x]], f.xi[x]) != q.eta[fx]) return false;
    int l = b.c(f.Fmor[p.mu[x]], f.xi[x]);
    int r = b.c(b.c(f.xi[p.Pob[x]], q.Pmor[f.xi[x]]), q.mu[fx]);
    if (l < 0 || l != r) return false;
  }
  return true;
}

bool kl_2cell_ok(const MonadTab& p, const MonadTab& q, const MorTab& f, const MorTab& g, const std::vector<int>& al) {
  const Tab &a = p.c, &b = q.c;
  const int n = static_cast<int>(a.ob.size());
  if (static_cast<int>(al.size()) != n) return false;
  for (int x = 0; x < n; ++x) {
    if (!typed(b, al[x], f.Fob[x], q.Pob[g.Fob[x]])) return false;
  }
  for (int h = 0; h < a.m(); ++h) {
    int x = a.src[h], y = a.tgt[h];
    if (b.c(f.Fmor[h], al[y]) != b.c(al[x], q.Pmor[g.Fmor[h]])) return false;
  }
  for (int x = 0; x < n; ++x) {
    int m = q.mu[g.Fob[x]];
    int l = b.c(b.c(f.xi[x], q.Pmor[al[x]]), m);
    int r = b.c(b.c(al[p.Pob[x]], q.Pmor[g.xi[x]]), m);
    if (l < 0 || l != r) return false;
  }
  return true;
}

std::size_t count_functors(const Tab& a, const Tab& b) {
  std::size_t count = 0;
  const int na = static_cast<int>(a.ob.size()), nb = static_cast<int>(b.ob.size());
  std::vector<int> ob(na, 0), mor(a.m(), -1);
  // Prune on composites whose three morphisms are all assigned, the newest being f.
  auto consistent = [&](int f) {
    for (int g = 0; g <= f; ++g) {
      for (int h = 0; h <= f; ++h) {
        int k = a.c(g, h);
        if (k < 0 || k > f || std::max({g, h, k}) != f) continue;
        if (b.c(mor[g], mor[h]) != mor[k]) return false;
      }
    }
    return true;
  };
  std::function<void(int)> morphisms = [&](int f) {
    if (f == a.m()) {
      if (functor_ok(a, b, ob, mor)) ++count;
      return;
    }
    for (int g : b.hom(ob[a.src[f]], ob[a.tgt[f]])) {
      mor[f] = g;
      if (consistent(f)) morphisms(f + 1);
    }
    mor[f] = -1;
  };
  std::function<void(int)> objects = [&](int x) {
    if (x == na) {
      morphisms(0);
      return;
    }
    for (int y = 0; y < nb; ++y) {
      ob[x] = y;
      objects(x + 1);
    }
  };
  objects(0);
  return count;
}

Shape shape_of(const gnerve::Theory& t) {
  Shape s;
  for (const auto& k : t.components) s.comps.push_back({k.dir == gnerve::Direction::forward, k.depth});
  for (const auto& e : t.equations) s.eqs.emplace_back(static_cast<int>(e.backward), static_cast<int>(e.forward));
  return s;
}

namespace {

int unit2(const MonadTab& p, int y) { return p.c.c(p.eta[y], p.eta[p.Pob[y]]); }

}  // namespace

bool cell_ok(const Shape& s, const MonadTab& p, const Cell& k) {
  for (std::size_t i = 0; i < s.comps.size(); ++i) {
    const auto& d = s.comps[i];
    int a = d.fwd ? k.src : k.tgt;
    int b = d.fwd ? p.Pob[k.tgt] : d.depth == 0 ? k.src : p.Pob[k.src];
    if (!typed(p.c, k.c[i], a, b)) return false;
  }
  for (auto [bi, fi] : s.eqs) {
    int f = k.c[fi];
    if (s.comps[bi].depth == 0) {
      if (p.c.c(k.c[bi], f) != p.eta[k.tgt]) return false;
    } else {
      int v = p.c.c(k.c[bi], p.Pmor[f]);
      if (v < 0 || v != unit2(p, k.tgt)) return false;
    }
  }
  return true;
}

Cell vcomp(const Shape& s, const MonadTab& p, const Cell& a, const Cell& b) {
  Cell k{a.src, b.tgt, {}};
  for (std::size_t i = 0; i < s.comps.size(); ++i) {
    if (s.comps[i].fwd) k.c.push_back(p.kc(a.c[i], b.c[i], b.tgt));
    else if (s.comps[i].depth == 0) k.c.push_back(p.c.c(b.c[i], a.c[i]));
    else k.c.push_back(p.kc(b.c[i], a.c[i], a.src));
  }
  return k;
}

Cell identity(const Shape& s, const MonadTab& p, int x) {
  Cell k{x, x, {}};
  for (const auto& d : s.comps) k.c.push_back(!d.fwd && d.depth == 0 ? p.c.id[x] : p.eta[x]);
  return k;
}

Cell epsilon(const Shape& s, const MonadTab& p, int y) {
  Cell k{p.Pob[y], y, {}};
  for (const auto& d : s.comps) k.c.push_back(d.fwd ? p.c.id[p.Pob[y]] : d.depth == 0 ? p.eta[y] : unit2(p, y));
  return k;
}

bool square(const Shape& s, const MonadTab& p, int top, int bottom, const Cell& l, const Cell& r) {
  const Tab& c = p.c;
  for (std::size_t i = 0; i < s.comps.size(); ++i) {
    int a, b;
    if (s.comps[i].fwd) {
      a = c.c(l.c[i], p.Pmor[bottom]);
      b = c.c(top, r.c[i]);
    } else {
      a = c.c(l.c[i], s.comps[i].depth == 0 ? top : p.Pmor[top]);
      b = c.c(bottom, r.c[i]);
    }
    if (a < 0 || a != b) return false;
  }
  return true;
}

Nerve nerve(const Shape& s, const MonadTab& p) {
  Nerve n;
  const Tab& c = p.c;
  const int objs = static_cast<int>(c.ob.size());
  for (int x = 0; x < objs; ++x) {
    for (int y = 0; y < objs; ++y) {
      std::vector<std::vector<int>> choices;
      for (const auto& d : s.comps) {
        int a = d.fwd ? x : y;
        int b = d.fwd ? p.Pob[y] : d.depth == 0 ? x : p.Pob[x];
        choices.push_back(c.hom(a, b));
      }
      Cell k{x, y, std::vector<int>(s.comps.size())};
      std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == choices.size()) {
          if (cell_ok(s, p, k)) n.cells.push_back(k);
          return;
        }
        for (int f : choices[i]) {
          k.c[i] = f;
          go(i + 1);
        }
      };
      go(0);
    }
  }
  for (std::size_t i = 0; i < n.cells.size(); ++i) {
    const Cell& k = n.cells[i];
    n.index[k] = static_cast<int>(i);
    std::string name = c.ob[k.src] + "~>" + c.ob[k.tgt] + "[";
    for (std::size_t j = 0; j < k.c.size(); ++j) name += (j ? "," : "") + c.mor[k.c[j]];
    n.cell_names.push_back(name + "]");
  }
  for (std::size_t l = 0; l < n.cells.size(); ++l) {
    for (std::size_t r = 0; r < n.cells.size(); ++r) {
      const Cell &kl = n.cells[l], &kr = n.cells[r];
      for (int t : c.hom(kl.src, kr.src)) {
        for (int b : c.hom(kl.tgt, kr.tgt)) {
          if (!square(s, p, t, b, kl, kr)) continue;
          std::array<int, 4> q{t, b, static_cast<int>(l), static_cast<int>(r)};
          n.by_boundary[q] = static_cast<int>(n.squares.size());
          n.squares.push_back(q);
          n.square_names.push_back("sq(" + c.mor[t] + "," + c.mor[b] + "|" + n.cell_names[l] + "," +
                                   n.cell_names[r] + ")");
        }
      }
    }
  }
  return n;
}

Tab cell_tab(const Tab& base, const Nerve& n) {
  Tab t;
  t.ob = n.cell_names;
  t.mor = n.square_names;
  for (const auto& q : n.squares) {
    t.src.push_back(q[2]);
    t.tgt.push_back(q[3]);
  }
  for (std::size_t k = 0; k < n.cells.size(); ++k) {
    const Cell& c = n.cells[k];
    auto it = n.by_boundary.find({base.id[c.src], base.id[c.tgt], static_cast<int>(k), static_cast<int>(k)});
    t.id.push_back(it == n.by_boundary.end() ? -1 : it->second);
  }
  const int m = t.m();
  t.comp.assign(m * m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const auto &qa = n.squares[a], &qb = n.squares[b];
      if (qa[3] != qb[2]) continue;
      auto it = n.by_boundary.find({base.c(qa[0], qb[0]), base.c(qa[1], qb[1]), qa[2], qb[3]});
      if (it != n.by_boundary.end()) t.comp[a * m + b] = it->second;
    }
  }
  return t;
}

MonadTab lifted(const Shape& s, const MonadTab& p, const MonadTab& t, const std::vector<int>& lam, const Nerve& n,
                const Tab& cells) {
  MonadTab out;
  out.c = cells;
  const Tab& c = p.c;
  for (const Cell& k : n.cells) {
    Cell w{t.Pob[k.src], t.Pob[k.tgt], {}};
    for (std::size_t i = 0; i < s.comps.size(); ++i) {
      int tc = t.Pmor[k.c[i]];
      if (s.comps[i].fwd) w.c.push_back(c.c(tc, lam[k.tgt]));
      else if (s.comps[i].depth == 0) w.c.push_back(tc);
      else w.c.push_back(c.c(tc, lam[k.src]));
    }
    auto it = n.index.find(w);
    out.Pob.push_back(it == n.index.end() ? -1 : it->second);
  }
  auto find = [&](int a, int b, int l, int r) {
    if (l < 0 || r < 0) return -1;
    auto it = n.by_boundary.find({a, b, l, r});
    return it == n.by_boundary.end() ? -1 : it->second;
  };
  for (const auto& q : n.squares) out.Pmor.push_back(find(t.Pmor[q[0]], t.Pmor[q[1]], out.Pob[q[2]], out.Pob[q[3]]));
  for (std::size_t k = 0; k < n.cells.size(); ++k) {
    const Cell& cell = n.cells[k];
    int tk = out.Pob[k];
    out.eta.push_back(find(t.eta[cell.src], t.eta[cell.tgt], static_cast<int>(k), tk));
    out.mu.push_back(find(t.mu[cell.src], t.mu[cell.tgt], tk < 0 ? -1 : out.Pob[tk], tk));
  }
  return out;
}

std::string compare(const Tab& a, const gnerve::FinCat& b) {
  if (a.ob.size() != b.num_objects()) return "object count";
  if (static_cast<std::size_t>(a.m()) != b.num_morphisms()) return "morphism count";
  std::vector<int> mor(a.m(), -1);
  for (int f = 0; f < a.m(); ++f) {
    auto g = b.find_morphism(a.mor[f]);
    if (!g) return "missing morphism " + a.mor[f];
    mor[f] = static_cast<int>(*g);
    if (b.object_name(b.src(*g)) != a.ob[a.src[f]] || b.object_name(b.tgt(*g)) != a.ob[a.tgt[f]]) {
      return "boundary of " + a.mor[f];
    }
  }
  for (std::size_t x = 0; x < a.ob.size(); ++x) {
    auto y = b.find_object(a.ob[x]);
    if (!y) return "missing object " + a.ob[x];
    if (a.id[x] < 0 || static_cast<int>(b.identity(*y)) != mor[a.id[x]]) return "identity at " + a.ob[x];
  }
  for (int f = 0; f < a.m(); ++f) {
    for (int g = 0; g < a.m(); ++g) {
      int h = a.c(f, g);
      gnerve::MorIx k = b.comp_or_none(mor[f], mor[g]);
      if ((h < 0) != (k == gnerve::kNoMor) || (h >= 0 && static_cast<int>(k) != mor[h])) {
        return "composite " + a.mor[f] + " ; " + a.mor[g];
      }
    }
  }
  return {};
}

}  // namespace oracle
