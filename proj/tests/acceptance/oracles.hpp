#pragma once

// Brute-force re-implementations used only to judge the library. They read the library
// objects through plain accessors and recompute every diagram on raw integer tables.

#include <map>
#include <string>
#include <vector>

#include "gnerve/monad.hpp"
#include "gnerve/theory.hpp"

namespace oracle {

struct Tab {
  std::vector<std::string> ob, mor;
  std::vector<int> src, tgt, id, comp;  // comp: f * |mor| + g, -1 if undefined
  int m() const { return static_cast<int>(mor.size()); }
  int c(int f, int g) const { return f < 0 || g < 0 ? -1 : comp[f * m() + g]; }
  std::vector<int> hom(int a, int b) const;
};

Tab tab_of(const gnerve::FinCat& c);

struct MonadTab {
  Tab c;
  std::vector<int> Pob, Pmor, eta, mu;
  int kc(int f, int g, int z) const { return f < 0 || g < 0 ? -1 : c.c(c.c(f, Pmor[g]), mu[z]); }
};

MonadTab monad_tab(const gnerve::Monad& m);

struct MorTab {
  std::vector<int> Fob, Fmor, xi;
};

MorTab morphism_tab(const gnerve::MonadMorphism& mm);

bool monad_ok(const MonadTab& p);
bool morphism_ok(const MonadTab& p, const MonadTab& q, const MorTab& f);
bool kl_2cell_ok(const MonadTab& p, const MonadTab& q, const MorTab& f, const MorTab& g, const std::vector<int>& alpha);

/// Count of functors between two tables by exhaustive assignment.
std::size_t count_functors(const Tab& a, const Tab& b);

struct Shape {
  struct Comp {
    bool fwd;
    int depth;
  };
  std::vector<Comp> comps;
  std::vector<std::pair<int, int>> eqs;  // backward, forward
};

Shape shape_of(const gnerve::Theory& t);

struct Cell {
  int src, tgt;
  std::vector<int> c;
  bool operator<(const Cell& o) const {
    return std::tie(src, tgt, c) < std::tie(o.src, o.tgt, o.c);
  }
  bool operator==(const Cell& o) const { return src == o.src && tgt == o.tgt && c == o.c; }
};

struct Nerve {
  std::vector<Cell> cells;
  std::map<Cell, int> index;
  std::vector<std::string> cell_names;
  std::vector<std::array<int, 4>> squares;  // top, bottom, left cell, right cell
  std::map<std::array<int, 4>, int> by_boundary;
  std::vector<std::string> square_names;
};

bool cell_ok(const Shape& s, const MonadTab& p, const Cell& k);
Cell vcomp(const Shape& s, const MonadTab& p, const Cell& a, const Cell& b);
Cell identity(const Shape& s, const MonadTab& p, int x);
Cell epsilon(const Shape& s, const MonadTab& p, int y);
bool square(const Shape& s, const MonadTab& p, int top, int bottom, const Cell& l, const Cell& r);
Nerve nerve(const Shape& s, const MonadTab& p);
/// Objects are cells, morphisms are squares composed side by side.
Tab cell_tab(const Tab& base, const Nerve& n);

/// The lifted monad on the cell table of N(P) for a law lam : TP => PT.
MonadTab lifted(const Shape& s, const MonadTab& p, const MonadTab& t, const std::vector<int>& lam, const Nerve& n,
                const Tab& cells);

/// Empty when equal by names, else the first difference.
std::string compare(const Tab& a, const gnerve::FinCat& b);

}  // namespace oracle
