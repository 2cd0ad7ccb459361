#include "gnerve/io.hpp"

#include <fstream>
#include <sstream>

namespace gnerve {

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw StructuralError({std::string("missing field '") + key + "'"});
  return j.at(key);
}

Pairs pairs(const Json& j, const char* what) {
  if (!j.is_object()) throw StructuralError({std::string(what) + " must be an object of name pairs"});
  Pairs out;
  for (const auto& [k, v] : j.items()) out.emplace_back(k, v.get<std::string>());
  return out;
}

Json pairs_json(const Pairs& ps) {
  Json j = Json::object();
  for (const auto& [k, v] : ps) j[k] = v;
  return j;
}

CategorySpec category_spec(const Json& j, bool with_objects) {
  CategorySpec s;
  if (with_objects) s.objects = field(j, "objects").get<std::vector<std::string>>();
  for (const auto& m : field(j, "morphisms")) {
    s.morphisms.push_back({field(m, "id").get<std::string>(), field(m, "src").get<std::string>(),
                           field(m, "tgt").get<std::string>()});
  }
  s.identities = pairs(field(j, "identities"), "identities");
  for (const auto& t : field(j, "composition")) s.composition.push_back(t.get<std::array<std::string, 3>>());
  return s;
}

Json spec_json(const CategorySpec& s, bool with_objects) {
  Json j = Json::object();
  if (with_objects) j["objects"] = s.objects;
  Json ms = Json::array();
  for (const auto& m : s.morphisms) ms.push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
  j["morphisms"] = ms;
  j["identities"] = pairs_json(s.identities);
  j["composition"] = s.composition;
  return j;
}

std::vector<MorIx> components(const Json& j, const FinCat& dom, const FinCat& cod, const std::string& what) {
  std::vector<MorIx> out(dom.num_objects(), kNoMor);
  std::vector<std::string> problems;
  for (const auto& [x, f] : pairs(j, what.c_str())) {
    auto ox = dom.find_object(x);
    auto mf = cod.find_morphism(f);
    if (!ox) problems.push_back(what + ": unknown object " + x);
    if (!mf) problems.push_back(what + ": unknown morphism " + f);
    if (ox && mf) out[*ox] = *mf;
  }
  for (ObjIx x = 0; x < dom.num_objects(); ++x) {
    if (out[x] == kNoMor) problems.push_back(what + ": no component at " + dom.object_name(x));
  }
  if (!problems.empty()) throw StructuralError(problems);
  return out;
}

Json components_json(const std::vector<MorIx>& comp, const FinCat& dom, const FinCat& cod) {
  Json j = Json::object();
  for (ObjIx x = 0; x < comp.size(); ++x) j[dom.object_name(x)] = cod.morphism_name(comp[x]);
  return j;
}

// Turns JSON type errors into structural errors so callers only see one error type.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError({std::string(what) + ": " + e.what()});
  }
}

Json monad_body(const Monad& m) {
  return {{"functor", write_functor(m.endo)},
          {"unit", components_json(m.unit.comp, m.cat(), m.cat())},
          {"multiplication", components_json(m.mult.comp, m.cat(), m.cat())}};
}

Json morphism_body(const MonadMorphism& mm) {
  return {{"functor", write_functor(mm.F)}, {"xi", components_json(mm.xi.comp, mm.dom->cat(), mm.cod->cat())}};
}

template <class Cell2>
Cell2 read_2cell(const Json& j) {
  auto p = share(read_monad(field(j, "source")));
  auto q = share(read_monad(field(j, "target")));
  MonadMorphism a = read_monad_morphism(field(j, "from"), p, q);
  MonadMorphism b = read_monad_morphism(field(j, "to"), p, q);
  auto alpha = components(field(j, "alpha"), p->cat(), q->cat(), "alpha");
  return Cell2{std::move(a), std::move(b), std::move(alpha)};
}

template <class Cell2>
Json write_2cell(const Cell2& a, const char* kind) {
  return {{"kind", kind},
          {"source", write_monad(*a.dom.dom)},
          {"target", write_monad(*a.dom.cod)},
          {"from", morphism_body(a.dom)},
          {"to", morphism_body(a.cod)},
          {"alpha", components_json(a.alpha, a.dom.dom->cat(), a.dom.cod->cat())}};
}

constexpr std::array<const char*, 4> kCorners{"c00", "c01", "c10", "c11"};
constexpr std::array<const char*, 4> kEdges{"bottom", "right", "top", "left"};

}  // namespace

const char* to_string(FileKind k) {
  switch (k) {
    case FileKind::category: return "category";
    case FileKind::monad: return "monad";
    case FileKind::monad_morphism: return "monad_morphism";
    case FileKind::monad_2cell: return "monad_2cell";
    case FileKind::kleisli_2cell: return "kleisli_2cell";
    case FileKind::distributive_law: return "distributive_law";
    case FileKind::double_category: return "double_category";
    case FileKind::triple_category: return "triple_category";
    case FileKind::theory: return "theory";
  }
  return "?";
}

ParseError::ParseError(std::string origin, std::size_t l, std::size_t c, const std::string& msg)
    : std::runtime_error(origin + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}

Json parse_json(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find(": ", msg.find("parse error")); p != std::string::npos) msg = "parse error: " + msg.substr(p + 2);
    throw ParseError(origin, line, col, msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

FileKind detect_kind(const Json& j) {
  if (!j.is_object()) throw StructuralError({"top level must be an object"});
  if (j.contains("kind")) {
    const std::string k = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    for (FileKind f : {FileKind::category, FileKind::monad, FileKind::monad_morphism, FileKind::monad_2cell,
                       FileKind::kleisli_2cell, FileKind::distributive_law, FileKind::double_category,
                       FileKind::triple_category, FileKind::theory}) {
      if (k == to_string(f)) return f;
    }
    throw StructuralError({"unknown kind '" + k + "'"});
  }
  if (j.contains("corners")) return FileKind::triple_category;
  if (j.contains("squares")) return FileKind::double_category;
  if (j.contains("lambda")) return FileKind::distributive_law;
  if (j.contains("alpha")) throw StructuralError({"2-cell files must say whether they are monad_2cell or kleisli_2cell"});
  if (j.contains("xi")) return FileKind::monad_morphism;
  if (j.contains("multiplication")) return FileKind::monad;
  if (j.contains("components")) return FileKind::theory;
  if (j.contains("objects") && j.contains("morphisms")) return FileKind::category;
  throw StructuralError({"cannot tell what kind of file this is"});
}

FinCat read_category(const Json& j) {
  return guarded("category", [&] { return FinCat::from_spec(category_spec(j, true)); });
}

Functor read_functor(const Json& j, const CatPtr& dom, const CatPtr& cod) {
  return guarded("functor", [&] {
    FunctorSpec s{pairs(field(j, "objects"), "functor objects"), pairs(field(j, "morphisms"), "functor morphisms")};
    Functor f = functor_from_spec(dom, cod, s);
    std::vector<std::string> problems;
    for (ObjIx x = 0; x < f.ob.size(); ++x) {
      if (f.ob[x] == kNoObj) problems.push_back("functor leaves object " + dom->object_name(x) + " unmapped");
    }
    for (MorIx m = 0; m < f.mor.size(); ++m) {
      if (f.mor[m] == kNoMor) problems.push_back("functor leaves morphism " + dom->morphism_name(m) + " unmapped");
    }
    if (!problems.empty()) throw StructuralError(problems);
    return f;
  });
}

Monad read_monad(const Json& j, CatPtr base) {
  return guarded("monad", [&] {
    if (!base) base = share(read_category(field(j, "category")));
    Functor endo = read_functor(field(j, "functor"), base, base);
    auto unit = components(field(j, "unit"), *base, *base, "unit");
    auto mult = components(field(j, "multiplication"), *base, *base, "multiplication");
    return make_monad(base, std::move(endo), unit, mult);
  });
}

MonadMorphism read_monad_morphism(const Json& j, MonadPtr p, MonadPtr q) {
  return guarded("monad morphism", [&] {
    if (!p) p = share(read_monad(field(j, "source")));
    if (!q) q = share(read_monad(field(j, "target")));
    Functor F = read_functor(field(j, "functor"), p->base, q->base);
    auto xi = components(field(j, "xi"), p->cat(), q->cat(), "xi");
    return make_monad_morphism(p, q, std::move(F), xi);
  });
}

MonadTwoCell read_monad_2cell(const Json& j) {
  return guarded("monad 2-cell", [&] { return read_2cell<MonadTwoCell>(j); });
}

KlTwoCell read_kleisli_2cell(const Json& j) {
  return guarded("Kleisli 2-cell", [&] { return read_2cell<KlTwoCell>(j); });
}

DistributiveLaw read_distributive_law(const Json& j) {
  return guarded("distributive law", [&] {
    auto base = share(read_category(field(j, "category")));
    auto t = share(read_monad(field(j, "T"), base));
    auto p = share(read_monad(field(j, "P"), base));
    auto lam = components(field(j, "lambda"), *base, *base, "lambda");
    return DistributiveLaw{t, p, lam};
  });
}

DoubleCategory read_double_category(const Json& j) {
  return guarded("double category", [&] {
    DoubleCategorySpec s;
    s.objects = field(j, "objects").get<std::vector<std::string>>();
    s.horizontal = category_spec(field(j, "horizontal"), false);
    s.vertical = category_spec(field(j, "vertical"), false);
    for (const auto& q : field(j, "squares")) {
      s.squares.push_back({field(q, "id").get<std::string>(), field(q, "top").get<std::string>(),
                           field(q, "bottom").get<std::string>(), field(q, "left").get<std::string>(),
                           field(q, "right").get<std::string>()});
    }
    for (const auto& t : field(j, "horizontal_composition")) s.hcomp.push_back(t.get<std::array<std::string, 3>>());
    for (const auto& t : field(j, "vertical_composition")) s.vcomp.push_back(t.get<std::array<std::string, 3>>());
    s.hidentities = pairs(field(j, "horizontal_identities"), "horizontal_identities");
    s.videntities = pairs(field(j, "vertical_identities"), "vertical_identities");
    return DoubleCategory::from_spec(s);
  });
}

TripleCategory read_triple_category(const Json& j) {
  return guarded("triple category", [&] {
    TripleCategory t;
    const Json& cs = field(j, "corners");
    std::array<CatPtr*, 4> corners{&t.c00, &t.c01, &t.c10, &t.c11};
    for (std::size_t i = 0; i < 4; ++i) *corners[i] = share(read_category(field(cs, kCorners[i])));
    const Json& es = field(j, "edges");
    const Json& ms = field(j, "structure");
    std::array<DblPtr*, 4> edges{&t.bottom, &t.right, &t.top, &t.left};
    std::array<EdgeMaps*, 4> maps{&t.bottom_maps, &t.right_maps, &t.top_maps, &t.left_maps};
    const std::array<std::pair<CatPtr, CatPtr>, 4> ends{
        {{t.c00, t.c10}, {t.c00, t.c01}, {t.c01, t.c11}, {t.c10, t.c11}}};
    for (std::size_t i = 0; i < 4; ++i) {
      *edges[i] = share(read_double_category(field(es, kEdges[i])));
      const Json& m = field(ms, kEdges[i]);
      const auto& [lower, upper] = ends[i];
      *maps[i] = EdgeMaps{read_functor(field(m, "s"), upper, lower), read_functor(field(m, "t"), upper, lower),
                          read_functor(field(m, "i"), lower, upper)};
    }
    return t;
  });
}

Theory read_theory(const Json& j) {
  return guarded("theory", [&] {
    Theory t;
    t.tag = field(j, "tag").get<std::string>();
    t.builtin = false;
    std::vector<std::string> problems;
    auto index = [&](const std::string& n) {
      for (std::size_t i = 0; i < t.components.size(); ++i) {
        if (t.components[i].name == n) return i;
      }
      problems.push_back("unknown component " + n);
      return std::size_t{0};
    };
    for (const auto& c : field(j, "components")) {
      const std::string dir = field(c, "direction").get<std::string>();
      if (dir != "forward" && dir != "backward") problems.push_back("direction must be forward or backward");
      t.components.push_back({field(c, "name").get<std::string>(),
                              dir == "forward" ? Direction::forward : Direction::backward,
                              c.value("depth", dir == "forward" ? 1 : 0)});
    }
    if (j.contains("equations")) {
      for (const auto& e : j.at("equations")) {
        auto p = e.get<std::array<std::string, 2>>();
        t.equations.push_back({index(p[0]), index(p[1])});
      }
    }
    t.phi = index(field(j, "phi").get<std::string>());
    if (!problems.empty()) throw StructuralError(problems);
    try {
      check_theory(t);
    } catch (const std::invalid_argument& e) {
      throw StructuralError({e.what()});
    }
    return t;
  });
}

Json write_category(const FinCat& c) {
  Json j = {{"kind", "category"}};
  j.update(spec_json(c.to_spec(), true));
  return j;
}

Json write_functor(const Functor& f) {
  FunctorSpec s = to_spec(f);
  return {{"objects", pairs_json(s.objects)}, {"morphisms", pairs_json(s.morphisms)}};
}

Json write_monad(const Monad& m) {
  Json j = {{"kind", "monad"}, {"category", spec_json(m.cat().to_spec(), true)}};
  j.update(monad_body(m));
  return j;
}

Json write_monad_morphism(const MonadMorphism& mm) {
  Json j = {{"kind", "monad_morphism"}, {"source", write_monad(*mm.dom)}, {"target", write_monad(*mm.cod)}};
  j.update(morphism_body(mm));
  return j;
}

Json write_monad_2cell(const MonadTwoCell& a) { return write_2cell(a, "monad_2cell"); }

Json write_kleisli_2cell(const KlTwoCell& a) { return write_2cell(a, "kleisli_2cell"); }

Json write_distributive_law(const DistributiveLaw& d) {
  const FinCat& c = d.P->cat();
  return {{"kind", "distributive_law"},
          {"category", spec_json(c.to_spec(), true)},
          {"T", monad_body(*d.T)},
          {"P", monad_body(*d.P)},
          {"lambda", components_json(d.lam, c, c)}};
}

Json write_double_category(const DoubleCategory& d) {
  DoubleCategorySpec s = d.to_spec();
  Json sq = Json::array();
  for (const auto& q : s.squares) {
    sq.push_back({{"id", q.id}, {"top", q.top}, {"bottom", q.bottom}, {"left", q.left}, {"right", q.right}});
  }
  return {{"kind", "double_category"},
          {"objects", s.objects},
          {"horizontal", spec_json(s.horizontal, false)},
          {"vertical", spec_json(s.vertical, false)},
          {"squares", sq},
          {"horizontal_composition", s.hcomp},
          {"vertical_composition", s.vcomp},
          {"horizontal_identities", pairs_json(s.hidentities)},
          {"vertical_identities", pairs_json(s.videntities)}};
}

Json write_triple_category(const TripleCategory& t) {
  Json j = {{"kind", "triple_category"}};
  const std::array<const CatPtr*, 4> corners{&t.c00, &t.c01, &t.c10, &t.c11};
  const std::array<const DblPtr*, 4> edges{&t.bottom, &t.right, &t.top, &t.left};
  const std::array<const EdgeMaps*, 4> maps{&t.bottom_maps, &t.right_maps, &t.top_maps, &t.left_maps};
  for (std::size_t i = 0; i < 4; ++i) j["corners"][kCorners[i]] = spec_json((*corners[i])->to_spec(), true);
  for (std::size_t i = 0; i < 4; ++i) {
    Json e = write_double_category(**edges[i]);
    e.erase("kind");
    j["edges"][kEdges[i]] = e;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    j["structure"][kEdges[i]] = {
        {"s", write_functor(maps[i]->s)}, {"t", write_functor(maps[i]->t)}, {"i", write_functor(maps[i]->i)}};
  }
  return j;
}

Json write_theory(const Theory& t) {
  Json cs = Json::array();
  for (const auto& k : t.components) {
    cs.push_back({{"name", k.name}, {"direction", k.dir == Direction::forward ? "forward" : "backward"},
                  {"depth", k.depth}});
  }
  Json es = Json::array();
  for (const auto& e : t.equations) es.push_back({t.components[e.backward].name, t.components[e.forward].name});
  return {{"kind", "theory"}, {"tag", t.tag}, {"components", cs}, {"equations", es},
          {"phi", t.components[t.phi].name}};
}

}  // namespace gnerve
