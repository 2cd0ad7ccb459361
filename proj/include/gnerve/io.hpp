#pragma once

// JSON file formats. Every file is an object with a "kind" field; when it is missing the
// kind is guessed from the keys present.

#include <string>
#include <string_view>

#include "json.hpp"

#include "gnerve/double.hpp"
#include "gnerve/theory.hpp"

namespace gnerve {

using Json = nlohmann::ordered_json;

enum class FileKind {
  category,
  monad,
  monad_morphism,
  monad_2cell,
  kleisli_2cell,
  distributive_law,
  double_category,
  triple_category,
  theory
};

const char* to_string(FileKind k);

/// Malformed JSON, with 1-based line and column of the offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string origin, std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line, column;
};

Json parse_json(std::string_view text, const std::string& origin = "<input>");
Json read_json_file(const std::string& path);
/// Throws StructuralError when no kind can be determined.
FileKind detect_kind(const Json& j);

// Readers throw StructuralError naming every bad reference or missing table entry.
FinCat read_category(const Json& j);
/// Functor tables must be total; the category may be given separately.
Functor read_functor(const Json& j, const CatPtr& dom, const CatPtr& cod);
Monad read_monad(const Json& j, CatPtr base = nullptr);
MonadMorphism read_monad_morphism(const Json& j, MonadPtr p = nullptr, MonadPtr q = nullptr);
MonadTwoCell read_monad_2cell(const Json& j);
KlTwoCell read_kleisli_2cell(const Json& j);
DistributiveLaw read_distributive_law(const Json& j);
DoubleCategory read_double_category(const Json& j);
TripleCategory read_triple_category(const Json& j);
Theory read_theory(const Json& j);

Json write_category(const FinCat& c);
Json write_functor(const Functor& f);
Json write_monad(const Monad& m);
Json write_monad_morphism(const MonadMorphism& mm);
Json write_monad_2cell(const MonadTwoCell& a);
Json write_kleisli_2cell(const KlTwoCell& a);
Json write_distributive_law(const DistributiveLaw& d);
Json write_double_category(const DoubleCategory& d);
Json write_triple_category(const TripleCategory& t);
Json write_theory(const Theory& t);

}  // namespace gnerve
