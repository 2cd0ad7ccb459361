#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gnerve/cli.hpp"
#include "gnerve/corpus.hpp"
#include "gnerve/nerve.hpp"

namespace py = pybind11;
using namespace gnerve;

namespace {

MonadPtr corpus_monad(const std::string& name) {
  for (const auto& m : monad_corpus()) {
    if (m.name == name) return m.monad;
  }
  throw py::key_error(name);
}

}  // namespace

PYBIND11_MODULE(_gnerve, m) {
  m.doc() = "Nerves of monads on finite categories";

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> argv_s{"gnerve"};
        argv_s.insert(argv_s.end(), args.begin(), args.end());
        std::vector<char*> argv;
        for (auto& a : argv_s) argv.push_back(a.data());
        std::ostringstream out, err;
        int rc;
        {
          py::gil_scoped_release release;
          rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("args"), "Run the command line tool; returns (exit code, stdout, stderr).");

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const auto& c : monad_corpus()) names.push_back(c.name);
    return names;
  });

  m.def(
      "nerve_counts",
      [](const std::string& monad, const std::string& theory) {
        Nerve n = build_nerve(theory_from_tag(theory), corpus_monad(monad));
        py::dict d;
        d["objects"] = n.dbl->hcat->num_objects();
        d["horizontal"] = n.dbl->hcat->num_morphisms();
        d["vertical"] = n.dbl->vcat->num_morphisms();
        d["squares"] = n.dbl->num_squares();
        return d;
      },
      py::arg("monad"), py::arg("theory") = "kleisli");

  m.def(
      "axioms",
      [](const std::string& monad, const std::string& theory) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& c : check_theorem_axioms(theory_from_tag(theory), corpus_monad(monad))) {
          out.emplace_back(c.check, to_string(c.status));
        }
        return out;
      },
      py::arg("monad"), py::arg("theory") = "kleisli");

  m.attr("__version__") = kToolVersion;
}
