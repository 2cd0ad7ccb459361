#include "gnerve/theory.hpp"

#include <charconv>
#include <stdexcept>

namespace gnerve {

namespace {

MorIx seq(const FinCat& c, MorIx f, MorIx g) {
  if (f == kNoMor || g == kNoMor) return kNoMor;
  return c.comp_or_none(f, g);
}

// Source and target object a component must have for a cell X ~> Y.
std::pair<ObjIx, ObjIx> component_type(const Component& k, const Monad& m, ObjIx x, ObjIx y) {
  if (k.dir == Direction::forward) return {x, m.obj(y)};
  return {y, k.depth == 0 ? x : m.obj(x)};
}

// eta^{(j+1)}_Y
MorIx unit_power(const Monad& m, ObjIx y, int j) {
  return j == 0 ? m.eta(y) : m.cat().compose(m.eta(y), m.eta(m.obj(y)));
}

}  // namespace

Theory kleisli_theory() { return {"kleisli", {{"tau", Direction::forward, 1}}, {}, 0, true}; }

Theory embedding_theory() {
  return {"embedding", {{"pi", Direction::backward, 0}, {"tau", Direction::forward, 1}}, {{0, 1}}, 1, true};
}

Theory splitepi_theory() {
  return {"splitepi", {{"s", Direction::backward, 1}, {"e", Direction::forward, 1}}, {{0, 1}}, 1, true};
}

Theory multi_embedding_theory(std::size_t n) {
  if (n == 0) throw std::invalid_argument("multi-embedding needs at least one section");
  Theory t{"multi:" + std::to_string(n), {}, {}, n, true};
  for (std::size_t i = 0; i < n; ++i) {
    t.components.push_back({"pi" + std::to_string(i + 1), Direction::backward, 0});
    t.equations.push_back({i, n});
  }
  t.components.push_back({"tau", Direction::forward, 1});
  return t;
}

Theory theory_from_tag(const std::string& tag) {
  if (tag == "kleisli") return kleisli_theory();
  if (tag == "embedding") return embedding_theory();
  if (tag == "splitepi") return splitepi_theory();
  if (tag.rfind("multi:", 0) == 0) {
    std::size_t n = 0;
    const char* b = tag.data() + 6;
    const char* e = tag.data() + tag.size();
    auto [p, ec] = std::from_chars(b, e, n);
    if (ec == std::errc() && p == e && n > 0) return multi_embedding_theory(n);
  }
  throw std::invalid_argument("unknown theory '" + tag + "' (expected kleisli, embedding, splitepi or multi:<n>)");
}

void check_theory(const Theory& t) {
  if (t.components.empty()) throw std::invalid_argument("theory has no components");
  if (t.phi >= t.components.size() || t.components[t.phi].dir != Direction::forward) {
    throw std::invalid_argument("theory projection must name a forward component");
  }
  for (const auto& k : t.components) {
    if (k.dir == Direction::forward && k.depth != 1) {
      throw std::invalid_argument("forward component " + k.name + " must have depth 1");
    }
    if (k.dir == Direction::backward && k.depth != 0 && k.depth != 1) {
      throw std::invalid_argument("backward component " + k.name + " must have depth 0 or 1");
    }
  }
  for (const auto& e : t.equations) {
    if (e.backward >= t.components.size() || e.forward >= t.components.size() ||
        t.components[e.backward].dir != Direction::backward || t.components[e.forward].dir != Direction::forward) {
      throw std::invalid_argument("equation must pair a backward with a forward component");
    }
  }
}

bool satisfies(const Theory& t, const Monad& m, const Cell& cell) {
  const FinCat& c = m.cat();
  if (cell.c.size() != t.components.size()) return false;
  for (std::size_t i = 0; i < cell.c.size(); ++i) {
    auto [s, g] = component_type(t.components[i], m, cell.src, cell.tgt);
    if (cell.c[i] >= c.num_morphisms() || c.src(cell.c[i]) != s || c.tgt(cell.c[i]) != g) return false;
  }
  for (const auto& e : t.equations) {
    const Component& b = t.components[e.backward];
    MorIx f = cell.c[e.forward];
    MorIx lhs = seq(c, cell.c[e.backward], b.depth == 0 ? f : m.map(f));
    if (lhs == kNoMor || lhs != unit_power(m, cell.tgt, b.depth)) return false;
  }
  return true;
}

std::vector<Cell> cells(const Theory& t, const Monad& m, ObjIx x, ObjIx y) {
  const FinCat& c = m.cat();
  std::vector<std::span<const MorIx>> choices;
  for (const auto& k : t.components) {
    auto [s, g] = component_type(k, m, x, y);
    choices.push_back(c.hom(s, g));
    if (choices.back().empty()) return {};
  }
  std::vector<Cell> out;
  std::vector<std::size_t> ix(choices.size(), 0);
  Cell cell{x, y, std::vector<MorIx>(choices.size())};
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) cell.c[i] = choices[i][ix[i]];
    if (satisfies(t, m, cell)) out.push_back(cell);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++ix[i] < choices[i].size()) break;
      ix[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<Cell> all_cells(const Theory& t, const Monad& m) {
  std::vector<Cell> out;
  for (ObjIx x = 0; x < m.cat().num_objects(); ++x) {
    for (ObjIx y = 0; y < m.cat().num_objects(); ++y) {
      auto cs = cells(t, m, x, y);
      out.insert(out.end(), cs.begin(), cs.end());
    }
  }
  return out;
}

MorIx phi(const Theory& t, const Cell& cell) { return cell.c[t.phi]; }

Cell identity_cell(const Theory& t, const Monad& m, ObjIx x) {
  Cell cell{x, x, {}};
  for (const auto& k : t.components) {
    cell.c.push_back(k.dir == Direction::backward && k.depth == 0 ? m.cat().identity(x) : m.eta(x));
  }
  return cell;
}

Cell vcompose(const Theory& t, const Monad& m, const Cell& c1, const Cell& c2) {
  if (c1.tgt != c2.src) throw std::invalid_argument("vcompose: cells are not composable");
  const FinCat& c = m.cat();
  Cell out{c1.src, c2.tgt, {}};
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    const Component& k = t.components[i];
    MorIx a = c1.c[i], b = c2.c[i];
    if (k.dir == Direction::forward) {
      out.c.push_back(m.kleisli_compose(a, b, c2.tgt));
    } else if (k.depth == 0) {
      out.c.push_back(c.compose(b, a));
    } else {
      out.c.push_back(m.kleisli_compose(b, a, c1.src));
    }
  }
  return out;
}

Cell epsilon(const Theory& t, const Monad& m, ObjIx y) {
  const FinCat& c = m.cat();
  Cell cell{m.obj(y), y, {}};
  for (const auto& k : t.components) {
    if (k.dir == Direction::forward) {
      cell.c.push_back(c.identity(m.obj(y)));
    } else {
      cell.c.push_back(unit_power(m, y, k.depth));
    }
  }
  return cell;
}

bool is_square(const Theory& t, const Monad& m, MorIx top, MorIx bottom, const Cell& left, const Cell& right) {
  const FinCat& c = m.cat();
  if (c.src(top) != left.src || c.tgt(top) != right.src || c.src(bottom) != left.tgt ||
      c.tgt(bottom) != right.tgt) {
    throw std::invalid_argument("is_square: boundary mismatch");
  }
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    const Component& k = t.components[i];
    MorIx l, r;
    if (k.dir == Direction::forward) {
      l = seq(c, left.c[i], m.map(bottom));
      r = seq(c, top, right.c[i]);
    } else {
      l = seq(c, left.c[i], k.depth == 0 ? top : m.map(top));
      r = seq(c, bottom, right.c[i]);
    }
    if (l == kNoMor || l != r) return false;
  }
  return true;
}

Cell whisker(const Theory& t, const MonadMorphism& mm, const Cell& cell) {
  const FinCat& d = mm.cod->cat();
  Cell out{mm.obj(cell.src), mm.obj(cell.tgt), {}};
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    const Component& k = t.components[i];
    MorIx fc = mm.map(cell.c[i]);
    if (k.dir == Direction::forward) {
      out.c.push_back(d.compose(fc, mm.xi_at(cell.tgt)));
    } else if (k.depth == 0) {
      out.c.push_back(fc);
    } else {
      out.c.push_back(d.compose(fc, mm.xi_at(cell.src)));
    }
  }
  return out;
}

MonadMorphism p_monad_morphism(const MonadPtr& m) {
  auto id = share(identity_monad(m->base));
  return compose(mult_monad_morphism(m, id), unit_monad_morphism(id, m));
}

Cell p_cell(const Theory& t, const MonadPtr& m, const Cell& cell) {
  return whisker(t, p_monad_morphism(m), cell);
}

std::string cell_name(const Theory& t, const Monad& m, const Cell& cell) {
  const FinCat& c = m.cat();
  std::string s = c.object_name(cell.src) + "~>" + c.object_name(cell.tgt) + "[";
  for (std::size_t i = 0; i < cell.c.size(); ++i) {
    if (i) s += ",";
    s += c.morphism_name(cell.c[i]);
  }
  (void)t;
  return s + "]";
}

Cell embedding_from_res(const Monad& m, MorIx L, MorIx res) {
  const FinCat& c = m.cat();
  ObjIx y = c.src(L), x = c.tgt(L);
  if (c.src(res) != m.obj(x) || c.tgt(res) != m.obj(y)) {
    throw std::invalid_argument("res must run from PX to PY for L : Y -> X");
  }
  if (seq(c, m.map(L), res) != c.identity(m.obj(y))) {
    throw std::invalid_argument("presentation fails PL ; res = id");
  }
  MorIx l = seq(c, m.mu(x), res);
  MorIx r = seq(c, m.map(res), m.mu(y));
  if (l == kNoMor || l != r) {
    throw std::invalid_argument("res is not a P-homomorphism: mu_X ; res != P res ; mu_Y");
  }
  return Cell{x, y, {L, c.compose(m.eta(x), res)}};
}

std::pair<MorIx, MorIx> res_from_embedding(const Monad& m, const Cell& cell) {
  const FinCat& c = m.cat();
  return {cell.c[0], c.compose(m.map(cell.c[1]), m.mu(cell.tgt))};
}

}  // namespace gnerve
