#include "gnerve/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "gnerve/iterate.hpp"

namespace gnerve {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

unsigned worker_count() {
  const char* v = std::getenv("GNERVE_WORKERS");
  if (!v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end == v || *end || n < 1) return 1;
  return static_cast<unsigned>(std::min(n, 64L));
}

void finalize(CheckReport& r) {
  std::stable_sort(r.checks.begin(), r.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.check < b.check; });
  if (!r.errors.empty()) {
    r.overall = Status::fail;
    r.exit_code = kExitStructural;
    return;
  }
  r.overall = overall_status(r.checks);
  r.exit_code = r.overall == Status::pass ? kExitPass : r.overall == Status::fail ? kExitFail : kExitInconclusive;
}

Json report_json(const CheckReport& r) {
  Json j = {{"tool", kToolName}, {"version", kToolVersion}, {"schema", kReportSchema}, {"command", r.command}};
  Json ins = Json::array();
  for (const auto& i : r.inputs) ins.push_back({{"path", i.path}, {"sha256", i.sha256}});
  j["inputs"] = ins;
  if (r.bound) j["bound"] = r.bound;
  Json cs = Json::array();
  for (const auto& c : r.checks) {
    Json counts = Json::object();
    for (const auto& [k, v] : c.counts) counts[k] = v;
    Json e = {{"check", c.check}, {"status", to_string(c.status)}, {"required", c.required},
              {"witnesses", c.witnesses}, {"counts", counts}};
    if (!c.note.empty()) e["note"] = c.note;
    cs.push_back(e);
  }
  j["checks"] = cs;
  if (!r.errors.empty()) j["errors"] = r.errors;
  j["overall"] = r.exit_code == kExitStructural ? "error" : to_string(r.overall);
  j["exit_code"] = r.exit_code;
  return j;
}

std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " " << r.command << "\n";
  for (const auto& i : r.inputs) os << "input " << i.path << " sha256 " << i.sha256 << "\n";
  if (r.bound) os << "bound " << r.bound << " candidate evaluations\n";
  for (const auto& e : r.errors) os << "error: " << e << "\n";
  for (const auto& c : r.checks) {
    std::string s = to_string(c.status);
    std::transform(s.begin(), s.end(), s.begin(), ::toupper);
    os << std::left << std::setw(13) << s << c.check;
    if (!c.required) os << " (optional)";
    if (!c.counts.empty()) {
      os << " [";
      for (std::size_t i = 0; i < c.counts.size(); ++i) os << (i ? ", " : "") << c.counts[i].first << "=" << c.counts[i].second;
      os << "]";
    }
    os << "\n";
    if (!c.note.empty()) os << "             note: " << c.note << "\n";
    for (const auto& w : c.witnesses) os << "             - " << w << "\n";
  }
  os << "overall: " << (r.exit_code == kExitStructural ? "error" : to_string(r.overall)) << "\n";
  return os.str();
}

namespace {

using Task = std::function<std::vector<CheckResult>()>;

// Runs one task, turning construction failures into a failed check with witnesses.
std::vector<CheckResult> run_guarded(const std::string& id, const Task& task) {
  try {
    return task();
  } catch (const ClosureViolation& e) {
    return {CheckResult{id, Status::fail, e.witnesses(), true, e.what(), {}}};
  } catch (const LiftError& e) {
    return {from_report(id, e.report)};
  }
}

std::vector<CheckResult> run_tasks(const std::vector<std::pair<std::string, Task>>& tasks) {
  std::vector<std::vector<CheckResult>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = run_guarded(tasks[i].first, tasks[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<unsigned>(worker_count(), static_cast<unsigned>(tasks.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<CheckResult> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

Json load(const std::string& path, CheckReport& r) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string bytes = ss.str();
  r.inputs.push_back({path, sha256_hex(bytes)});
  return parse_json(bytes, path);
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

CheckResult laws(const std::string& id, const ValidationReport& rep, CheckReport& r) {
  for (const auto& v : rep.items()) {
    if (v.kind == Violation::Kind::structural) r.errors.push_back(id + ": " + v.rule + ": " + v.witness);
  }
  return from_report(id, rep);
}

Theory pick_theory(const std::string& tag, const std::string& file, CheckReport& r) {
  if (!file.empty()) return read_theory(load(file, r));
  return theory_from_tag(tag);
}

MonadPtr load_monad(const std::string& path, const std::string& label, CheckReport& r) {
  auto m = share(read_monad(load(path, r)));
  r.checks.push_back(laws(label + "monad laws", validate_monad(*m), r));
  return m;
}

bool clean(const CheckReport& r) {
  return r.errors.empty() &&
         std::none_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.status != Status::pass; });
}

void cmd_validate(const std::string& path, CheckReport& r) {
  Json j = load(path, r);
  FileKind k = detect_kind(j);
  const std::string kind = to_string(k);
  switch (k) {
    case FileKind::category:
      r.checks.push_back(laws("category laws", validate_category(read_category(j)), r));
      break;
    case FileKind::monad:
      r.checks.push_back(laws("monad laws", validate_monad(read_monad(j)), r));
      break;
    case FileKind::monad_morphism: {
      auto mm = read_monad_morphism(j);
      r.checks.push_back(laws("source monad laws", validate_monad(*mm.dom), r));
      r.checks.push_back(laws("target monad laws", validate_monad(*mm.cod), r));
      r.checks.push_back(laws("monad morphism laws", validate_monad_morphism(mm), r));
      break;
    }
    case FileKind::monad_2cell:
    case FileKind::kleisli_2cell: {
      MonadMorphism a, b;
      ValidationReport rep;
      if (k == FileKind::monad_2cell) {
        auto c = read_monad_2cell(j);
        a = c.dom;
        b = c.cod;
        rep = validate_monad_2cell(c);
      } else {
        auto c = read_kleisli_2cell(j);
        a = c.dom;
        b = c.cod;
        rep = validate_kl_2cell(c);
      }
      r.checks.push_back(laws("source monad laws", validate_monad(*a.dom), r));
      r.checks.push_back(laws("target monad laws", validate_monad(*a.cod), r));
      r.checks.push_back(laws("from morphism laws", validate_monad_morphism(a), r));
      r.checks.push_back(laws("to morphism laws", validate_monad_morphism(b), r));
      r.checks.push_back(laws(kind + " laws", rep, r));
      break;
    }
    case FileKind::distributive_law: {
      auto d = read_distributive_law(j);
      r.checks.push_back(laws("T monad laws", validate_monad(*d.T), r));
      r.checks.push_back(laws("P monad laws", validate_monad(*d.P), r));
      r.checks.push_back(laws("distributive law axioms", validate_distributive_law(d), r));
      break;
    }
    case FileKind::double_category:
      r.checks.push_back(laws("double category laws", validate_double_category(read_double_category(j)), r));
      break;
    case FileKind::triple_category:
      r.checks.push_back(laws("triple category laws", validate_triple_category(read_triple_category(j)), r));
      break;
    case FileKind::theory:
      read_theory(j);
      r.checks.push_back({"theory is well formed", Status::pass, {}, true, {}, {}});
      break;
  }
}

void cmd_kleisli(const std::string& in, const std::string& out, CheckReport& r) {
  auto m = load_monad(in, "", r);
  if (!clean(r)) return;
  FinCat k = kleisli_category(*m);
  r.checks.push_back(laws("Kleisli category laws", validate_category(k), r));
  write_file(out, write_category(k));
}

CheckResult property_like(const DoubleCategory& d) {
  ValidationReport rep;
  std::map<std::array<MorIx, 4>, std::string> seen;
  for (const auto& q : d.squares) {
    auto [it, fresh] = seen.emplace(std::array<MorIx, 4>{q.top, q.bottom, q.left, q.right}, q.id);
    if (!fresh) rep.law("one square per boundary", it->second + " and " + q.id);
  }
  return from_report("squares are determined by their boundary", rep);
}

void cmd_nerve(const Theory& t, bool transpose_out, const std::string& in, const std::string& out, CheckReport& r) {
  auto m = load_monad(in, "", r);
  if (!clean(r)) return;
  std::vector<std::pair<std::string, Task>> tasks;
  tasks.emplace_back("theorem axioms", [&] { return check_theorem_axioms(t, m); });
  auto built = std::make_shared<std::optional<Nerve>>();
  tasks.emplace_back("nerve construction", [&, built]() -> std::vector<CheckResult> {
    *built = build_nerve(t, m);
    const DoubleCategory& d = *(*built)->dbl;
    std::vector<CheckResult> cs{from_report("nerve double category laws", validate_double_category(d)),
                                property_like(d)};
    cs.back().counts.emplace_back("squares", d.squares.size());
    cs.front().counts = {{"objects", d.hcat->num_objects()},
                         {"horizontal morphisms", d.hcat->num_morphisms()},
                         {"vertical morphisms", d.vcat->num_morphisms()},
                         {"squares", d.squares.size()}};
    if (transpose_out) {
      DoubleCategory tr = transpose(d);
      cs.push_back(from_report("transposed nerve double category laws", validate_double_category(tr)));
      ValidationReport inv;
      if (!(transpose(tr) == d)) inv.law("transpose twice is the identity", "nerve");
      cs.push_back(from_report("transpose is an involution", inv));
    }
    return cs;
  });
  auto results = run_tasks(tasks);
  r.checks.insert(r.checks.end(), results.begin(), results.end());
  if (*built) write_file(out, write_double_category(transpose_out ? transpose(*(*built)->dbl) : *(*built)->dbl));
}

void cmd_axioms(const Theory& t, const std::string& in, CheckReport& r) {
  auto m = load_monad(in, "", r);
  if (!clean(r)) return;
  auto cs = check_theorem_axioms(t, m);
  r.checks.insert(r.checks.end(), cs.begin(), cs.end());
}

void cmd_closure(const Theory& t, const std::vector<std::string>& files, std::uint64_t bound, CheckReport& r) {
  std::vector<MonadPtr> ms;
  const char* labels[] = {"P", "Q", "R"};
  for (std::size_t i = 0; i < files.size(); ++i) ms.push_back(load_monad(files[i], std::string(labels[i]) + ": ", r));
  if (!clean(r)) return;
  while (ms.size() < 3) ms.push_back(ms.back());
  r.bound = bound;
  std::vector<std::pair<std::string, Task>> tasks;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::string id = std::string(labels[i]) + ": vertical closure of cells";
    tasks.emplace_back(id, [&, i, id] {
      auto c = check_vertical_closure(t, ms[i]);
      c.check = id;
      return std::vector<CheckResult>{c};
    });
  }
  tasks.emplace_back("P->Q: whiskering closure of cells", [&] {
    Budget b{bound};
    auto c = check_whisker_closure(t, ms[0], ms[1], b);
    c.check = "P->Q: " + c.check;
    return std::vector<CheckResult>{c};
  });
  tasks.emplace_back("P->Q->R: horizontal closure of 2-cells", [&] {
    Budget b{bound};
    auto c = check_horizontal_closure(t, ms[0], ms[1], ms[2], b);
    c.check = "P->Q->R: " + c.check;
    return std::vector<CheckResult>{c};
  });
  auto results = run_tasks(tasks);
  r.checks.insert(r.checks.end(), results.begin(), results.end());
}

void cmd_faithful(const Theory& t, const std::string& pf, const std::string& qf, std::uint64_t bound, bool probe,
                  CheckReport& r) {
  auto p = load_monad(pf, "P: ", r);
  auto q = load_monad(qf, "Q: ", r);
  if (!clean(r)) return;
  r.bound = bound;
  using Check = CheckResult (*)(const Theory&, const MonadPtr&, const MonadPtr&, Budget&);
  std::vector<std::pair<std::string, Task>> tasks;
  for (auto [id, f] : std::initializer_list<std::pair<const char*, Check>>{
           {"faithfulness of the nerve", &check_faithfulness},
           {"recover xi from whiskering", &check_recover_round_trip},
           {"square families of monad 2-cells", &check_two_cell_families}}) {
    tasks.emplace_back(id, [&, f] {
      Budget b{bound};
      return std::vector<CheckResult>{f(t, p, q, b)};
    });
  }
  tasks.emplace_back("fullness on the epsilon class", [&] {
    Budget b{bound};
    return std::vector<CheckResult>{check_fullness_bounded(t, p, q, b, false)};
  });
  if (probe) {
    tasks.emplace_back("fullness probe", [&] {
      Budget b{bound};
      auto c = check_fullness_bounded(t, p, q, b, true);
      c.required = false;
      return std::vector<CheckResult>{c};
    });
  }
  auto results = run_tasks(tasks);
  r.checks.insert(r.checks.end(), results.begin(), results.end());
}

void cmd_triple(const Theory& t1, const Theory& t2, const std::string& in, const std::string& out, CheckReport& r) {
  auto d = read_distributive_law(load(in, r));
  r.checks.push_back(laws("T: monad laws", validate_monad(*d.T), r));
  r.checks.push_back(laws("P: monad laws", validate_monad(*d.P), r));
  r.checks.push_back(laws("distributive law axioms", validate_distributive_law(d), r));
  if (!clean(r)) return;
  auto lifted = run_guarded("lifted double monad", [&] {
    auto lm = lifted_double_monad(t1, d);
    std::vector<CheckResult> cs{from_report("lifted double monad", validate_lifted_double_monad(lm))};
    if (cs.front().status == Status::pass) {
      auto tt = share(vertical_monad(lm, share(cell_category(*lm.nerve.dbl))));
      for (auto& c : check_theorem_axioms(t2, tt)) {
        c.check = "lifted: " + c.check;
        cs.push_back(std::move(c));
      }
      for (auto& c : check_theorem_axioms(t2, d.T)) {
        c.check = "T: " + c.check;
        cs.push_back(std::move(c));
      }
    }
    return cs;
  });
  r.checks.insert(r.checks.end(), lifted.begin(), lifted.end());
  if (!clean(r)) return;
  std::optional<TripleCategory> tc;
  auto built = run_guarded("triple category laws", [&] {
    tc = triple_from_distributive_law(t1, t2, d);
    auto c = from_report("triple category laws", validate_triple_category(*tc));
    c.counts = {{"c00 morphisms", tc->c00->num_morphisms()},
                {"c01 morphisms", tc->c01->num_morphisms()},
                {"c10 morphisms", tc->c10->num_morphisms()},
                {"c11 morphisms", tc->c11->num_morphisms()}};
    return std::vector<CheckResult>{c};
  });
  r.checks.insert(r.checks.end(), built.begin(), built.end());
  if (tc) write_file(out, write_triple_category(*tc));
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks generalized nerves of monads on finite categories"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));

  std::string theory = "kleisli", theory_file, theory1 = "kleisli", theory2 = "kleisli";
  std::string in, outfile, qfile;
  std::vector<std::string> files;
  std::uint64_t bound = kDefaultBudget;
  bool transpose_out = false, probe = false;

  auto add_theory = [&](CLI::App* s) {
    s->add_option("--theory", theory, "kleisli, embedding, splitepi or multi:<n>");
    s->add_option("--theory-file", theory_file, "Custom theory file");
  };
  auto* validate = app.add_subcommand("validate", "Validate any supported file");
  validate->add_option("file", in)->required();
  auto* kleisli = app.add_subcommand("kleisli", "Write the Kleisli category of a monad");
  kleisli->add_option("monad", in)->required();
  kleisli->add_option("out", outfile)->required();
  auto* nerve = app.add_subcommand("nerve", "Write the nerve double category and check the axioms");
  add_theory(nerve);
  nerve->add_flag("--transpose", transpose_out, "Write the transpose");
  nerve->add_option("monad", in)->required();
  nerve->add_option("out", outfile)->required();
  auto* axioms = app.add_subcommand("axioms", "Check the theorem axioms");
  add_theory(axioms);
  axioms->add_option("monad", in)->required();
  auto* closure = app.add_subcommand("closure", "Check closure of cells and 2-cells");
  add_theory(closure);
  closure->add_option("--bound", bound, "Candidate evaluations per search");
  closure->add_option("monads", files, "P [Q [R]]")->required()->expected(1, 3);
  auto* faithful = app.add_subcommand("faithful", "Check faithfulness and bounded fullness");
  add_theory(faithful);
  faithful->add_option("--bound", bound, "Candidate evaluations per search");
  faithful->add_flag("--probe", probe, "Also search for double functors not determined on the epsilon class");
  faithful->add_option("P", in)->required();
  faithful->add_option("Q", qfile)->required();
  auto* triple = app.add_subcommand("triple", "Build the triple category of a distributive law");
  triple->add_option("--theory1", theory1, "Theory for the nerve of P");
  triple->add_option("--theory2", theory2, "Theory for the second nerve");
  triple->add_option("law", in)->required();
  triple->add_option("out", outfile)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitStructural;
  }

  CheckReport r;
  r.command = app.get_subcommands().front()->get_name();
  try {
    if (validate->parsed()) cmd_validate(in, r);
    if (kleisli->parsed()) cmd_kleisli(in, outfile, r);
    if (nerve->parsed()) cmd_nerve(pick_theory(theory, theory_file, r), transpose_out, in, outfile, r);
    if (axioms->parsed()) cmd_axioms(pick_theory(theory, theory_file, r), in, r);
    if (closure->parsed()) cmd_closure(pick_theory(theory, theory_file, r), files, bound, r);
    if (faithful->parsed()) {
      Theory t = pick_theory(theory, theory_file, r);
      if (!t.builtin) throw std::invalid_argument("faithfulness and fullness need a built-in theory");
      cmd_faithful(t, in, qfile, bound, probe, r);
    }
    if (triple->parsed()) cmd_triple(theory_from_tag(theory1), theory_from_tag(theory2), in, outfile, r);
  } catch (const StructuralError& e) {
    r.errors.insert(r.errors.end(), e.problems().begin(), e.problems().end());
  } catch (const std::exception& e) {
    r.errors.push_back(e.what());
  }
  finalize(r);
  out << (format == "machine" ? report_json(r).dump(2) + "\n" : report_text(r));
  return r.exit_code;
}

}  // namespace gnerve
