// Writes the sample input files under data/.
#include <fstream>
#include <iostream>

#include "gnerve/corpus.hpp"
#include "gnerve/io.hpp"
#include "gnerve/nerve.hpp"

using namespace gnerve;

namespace {

void put(const std::string& dir, const std::string& name, const Json& j) {
  std::ofstream out(dir + "/" + name);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gnerve_samples <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  auto top = share(constant_top(3));
  put(dir, "constant_top.json", write_monad(*top));
  put(dir, "identity_chain3.json", write_monad(identity_monad(share(chain_category(3)))));
  put(dir, "identity_pair.json", write_monad(identity_monad(share(parallel_pair()))));
  put(dir, "closure_chain4.json", write_monad(closure_monad(share(chain_category(4)), {1, 1, 3, 3})));
  put(dir, "closure_diamond.json", write_monad(closure_monad(share(diamond()), {1, 1, 3, 3})));
  put(dir, "twisted_z3.json", write_monad(twisted_z3()));
  put(dir, "arrow_constant_top.json", write_monad(arrow_monad(*top)));
  Monad broken = twisted_z3();
  broken.mult.comp = {1};
  put(dir, "broken_mu.json", write_monad(broken));
  put(dir, "chain3.json", write_category(chain_category(3)));
  put(dir, "identity_morphism.json", write_monad_morphism(identity_monad_morphism(top)));
  put(dir, "identity_2cell.json", write_monad_2cell(identity_monad_2cell(identity_monad_morphism(top))));
  put(dir, "kleisli_identity_2cell.json", write_kleisli_2cell(kl_identity(identity_monad_morphism(top))));
  put(dir, "law_constant_top.json", write_distributive_law(trivial_law(top, top)));
  put(dir, "law_over_identity.json", write_distributive_law(trivial_law(top, share(identity_monad(top->base)))));
  put(dir, "embedding_theory.json", write_theory(embedding_theory()));
  put(dir, "kleisli_nerve_constant_top.json", write_double_category(nerve_double_category(kleisli_theory(), top)));
  return 0;
}
