#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "coalg/coalgebra.hpp"
#include "coalg/pfn.hpp"
#include "coalg/recursion.hpp"

namespace coalg::io {

using Json = nlohmann::json;

// Value encodings. Sets are sorted arrays and objects have sorted keys, so
// dump() of any of these is canonical.
//
//   functor   "id" | {"const":[..]} | {"prod":[F,G]} | {"sum":[F,G]}
//             | {"exp":{"index":[..],"of":F}} | {"pow":F}
//   term      "x" | {"const":"c"} | {"pair":[t,s]} | {"inl":t} | {"inr":t}
//             | {"fun":{"k":t}} | {"set":[..]}
//   coalgebra {"functor":F,"carrier":[..],"structure":{"x":t}}
//   morphism  {"src":X,"dst":Y,"map":{"x":"y"}}
//   partial   {"src":X,"dst":Y,"dom":[..],"map":{"x":"y"}}
//   datum     {"X":..,"W":..,"Y":..,"u":{..},"v":{"w":{"inl":"w'"}|{"inr":"y"}}}

Json to_json(const Functor& f);
Json to_json(const Term& t);
Json to_json(const Coalgebra& x);
Json to_json(const Morphism& f);
Json to_json(const PartialMorphism& f);
Json to_json(const TuringDatum& d);
Json to_json(const Trace& t);
Json to_json(const Relation& r);
Json to_json(const ElementSet& s);

/// Canonical text: compact, sorted keys.
std::string dump(const Json& j);

/// Named values loaded from documents
///   {"functors":{..},"coalgebras":{..},"morphisms":{..},
///    "partial_morphisms":{..},"data":{..}}
/// Inside a document, a coalgebra position may hold the name of a bound
/// coalgebra, and a functor position the name of a bound functor.
struct Workspace {
  std::map<std::string, Functor> functors;
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, Morphism> morphisms;
  std::map<std::string, PartialMorphism> partial_morphisms;
  std::map<std::string, TuringDatum> data;

  /// Lookups throw UnknownBinding.
  const Functor& functor(const std::string& name) const;
  const Coalgebra& coalgebra(const std::string& name) const;
  const Morphism& morphism(const std::string& name) const;
  const PartialMorphism& partial_morphism(const std::string& name) const;
  const TuringDatum& datum(const std::string& name) const;

  /// Adds every binding of `other`; throws ValidationError on a name clash.
  void merge(const Workspace& other);
};

Functor functor_from_json(const Json& j, const Workspace& ws = {});
Term term_from_json(const Json& j);
Coalgebra coalgebra_from_json(const Json& j, const Workspace& ws = {});
/// Checks totality and typing only; the square is not checked here.
Morphism morphism_from_json(const Json& j, const Workspace& ws = {});
PartialMorphism partial_morphism_from_json(const Json& j, const Workspace& ws = {});
TuringDatum datum_from_json(const Json& j, const Workspace& ws = {});

/// Throws ParseError with line and column.
Json parse(std::string_view text, std::string_view source = "<input>");

/// Loads and validates every binding; throws on the first failure.
/// Morphisms must pass the square check (NotMorphism otherwise).
Workspace load_document(std::string_view text, std::string_view source = "<input>");
Workspace load_file(const std::filesystem::path& path);
/// Every *.json file in `dir`, loaded in name order into one workspace, so
/// later files may refer to bindings of earlier ones.
Workspace load_directory(const std::filesystem::path& dir);

struct CheckEntry {
  std::string section;  ///< "functors", "coalgebras", ...
  std::string name;
  bool ok = true;
  std::string message;  ///< error text with its kind name, when !ok
};

/// Validates each binding separately and reports all of them in document
/// order of sections and name order within a section. Throws ParseError
/// only when the text itself is not JSON.
std::vector<CheckEntry> check_document(std::string_view text, std::string_view source = "<input>");

}  // namespace coalg::io
