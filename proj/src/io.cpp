#include "coalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "coalg/error.hpp"

namespace coalg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ValidationError, what); }

const std::string& str(const Json& j, const std::string& what) {
  if (!j.is_string()) bad(what + " must be a string");
  return j.get_ref<const std::string&>();
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) bad(what + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) bad(what + " lacks \"" + key + "\"");
  return *it;
}

std::vector<std::string> strings(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, what + " entry"));
  return out;
}

ElementSet element_set(const Json& j, const std::string& what) {
  auto v = strings(j, what);
  ElementSet out(v.begin(), v.end());
  if (out.size() != v.size()) bad(what + " has duplicates");
  return out;
}

ElementMap element_map(const Json& j, const std::string& what) {
  if (!j.is_object()) bad(what + " must be an object");
  ElementMap out;
  for (const auto& [k, v] : j.items()) out.emplace(k, str(v, what + " value"));
  return out;
}

// The single key of a tagged object such as {"pair":[..]}.
std::pair<std::string, const Json*> tag(const Json& j, const std::string& what) {
  if (!j.is_object() || j.size() != 1) bad(what + " must be an object with exactly one key");
  auto it = j.begin();
  return {it.key(), &it.value()};
}

void require_map_on(const ElementMap& map, const ElementSet& from, const ElementSet& to,
                    const std::string& what) {
  for (const auto& [a, b] : map) {
    if (!from.count(a)) bad(what + " has an entry for '" + a + "' outside its domain");
    if (!to.count(b)) bad(what + " sends '" + a + "' to '" + b + "' outside its codomain");
  }
  for (const auto& a : from)
    if (!map.count(a)) bad(what + " is not defined at '" + a + "'");
}

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::UnknownBinding, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// Serialization

Json to_json(const Functor& f) {
  switch (f.kind()) {
    case Functor::Kind::Id: return "id";
    case Functor::Kind::Const: return Json{{"const", f.symbols()}};
    case Functor::Kind::Prod: return Json{{"prod", {to_json(f.left()), to_json(f.right())}}};
    case Functor::Kind::Sum: return Json{{"sum", {to_json(f.left()), to_json(f.right())}}};
    case Functor::Kind::Exp:
      return Json{{"exp", {{"index", f.symbols()}, {"of", to_json(f.body())}}}};
    case Functor::Kind::Pow: return Json{{"pow", to_json(f.body())}};
  }
  return nullptr;
}

Json to_json(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Leaf: return t.atom();
    case Term::Kind::Const: return Json{{"const", t.atom()}};
    case Term::Kind::Pair: return Json{{"pair", {to_json(t.first()), to_json(t.second())}}};
    case Term::Kind::Inl: return Json{{"inl", to_json(t.payload())}};
    case Term::Kind::Inr: return Json{{"inr", to_json(t.payload())}};
    case Term::Kind::Func: {
      Json table = Json::object();
      for (std::size_t i = 0; i < t.keys().size(); ++i) table[t.keys()[i]] = to_json(t.children()[i]);
      return Json{{"fun", table}};
    }
    case Term::Kind::Set: {
      Json members = Json::array();
      for (const auto& m : t.children()) members.push_back(to_json(m));
      return Json{{"set", members}};
    }
  }
  return nullptr;
}

Json to_json(const ElementSet& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

Json to_json(const Coalgebra& x) {
  Json structure = Json::object();
  for (const auto& [e, t] : x.structure()) structure[e] = to_json(t);
  return {{"functor", to_json(x.functor())}, {"carrier", to_json(x.carrier())},
          {"structure", structure}};
}

Json to_json(const Morphism& f) {
  return {{"src", to_json(f.src)}, {"dst", to_json(f.dst)}, {"map", Json(f.map)}};
}

Json to_json(const PartialMorphism& f) {
  return {{"src", to_json(f.src())},
          {"dst", to_json(f.dst())},
          {"dom", to_json(f.domain())},
          {"map", Json(f.map())}};
}

Json to_json(const TuringDatum& d) {
  std::map<Element, Json> decoded;
  for (std::size_t k = 0; k < 2; ++k)
    for (const auto& [e, tagged] : d.wy.injections[k].map)
      decoded.emplace(tagged, Json{{k == 0 ? "inl" : "inr", e}});
  Json v = Json::object();
  for (const auto& [w, tagged] : d.v.map) v[w] = decoded.at(tagged);
  return {{"X", to_json(d.x)}, {"W", to_json(d.w)}, {"Y", to_json(d.y)},
          {"u", Json(d.u.map)},  {"v", v}};
}

Json to_json(const Trace& t) {
  Json out = {{"input", t.input}, {"visited", t.visited}};
  if (t.halted) out["halted"] = *t.halted;
  if (t.cycle_start) out["cycle_start"] = *t.cycle_start;
  return out;
}

Json to_json(const Relation& r) {
  Json out = Json::array();
  for (const auto& [a, b] : r) out.push_back({a, b});
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

// ---------------------------------------------------------------------------
// Workspace

const Functor& Workspace::functor(const std::string& name) const {
  return lookup(functors, name, "functor");
}
const Coalgebra& Workspace::coalgebra(const std::string& name) const {
  return lookup(coalgebras, name, "coalgebra");
}
const Morphism& Workspace::morphism(const std::string& name) const {
  return lookup(morphisms, name, "morphism");
}
const PartialMorphism& Workspace::partial_morphism(const std::string& name) const {
  return lookup(partial_morphisms, name, "partial morphism");
}
const TuringDatum& Workspace::datum(const std::string& name) const {
  return lookup(data, name, "datum");
}

namespace {

template <class T>
void merge_section(std::map<std::string, T>& into, const std::map<std::string, T>& from,
                   const char* what) {
  for (const auto& [k, v] : from)
    if (!into.emplace(k, v).second) bad(std::string(what) + " '" + k + "' is bound twice");
}

}  // namespace

void Workspace::merge(const Workspace& other) {
  merge_section(functors, other.functors, "functor");
  merge_section(coalgebras, other.coalgebras, "coalgebra");
  merge_section(morphisms, other.morphisms, "morphism");
  merge_section(partial_morphisms, other.partial_morphisms, "partial morphism");
  merge_section(data, other.data, "datum");
}

// ---------------------------------------------------------------------------
// Deserialization

Functor functor_from_json(const Json& j, const Workspace& ws) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    return s == "id" ? Functor::id() : ws.functor(s);
  }
  auto [k, body] = tag(j, "functor");
  auto two = [&](const char* what) {
    if (!body->is_array() || body->size() != 2) bad(std::string(what) + " needs two operands");
    return std::make_pair(functor_from_json((*body)[0], ws), functor_from_json((*body)[1], ws));
  };
  if (k == "const") return Functor::constant(strings(*body, "constant symbols"));
  if (k == "prod") {
    auto [a, b] = two("prod");
    return Functor::prod(a, b);
  }
  if (k == "sum") {
    auto [a, b] = two("sum");
    return Functor::sum(a, b);
  }
  if (k == "exp")
    return Functor::exp(strings(field(*body, "index", "exp"), "exp index"),
                        functor_from_json(field(*body, "of", "exp"), ws));
  if (k == "pow") return Functor::pow(functor_from_json(*body, ws));
  bad("unknown functor constructor \"" + k + "\"");
}

Term term_from_json(const Json& j) {
  if (j.is_string()) return Term::leaf(j.get<std::string>());
  auto [k, body] = tag(j, "term");
  if (k == "const") return Term::constant(str(*body, "constant"));
  if (k == "pair") {
    if (!body->is_array() || body->size() != 2) bad("pair needs two components");
    return Term::pair(term_from_json((*body)[0]), term_from_json((*body)[1]));
  }
  if (k == "inl") return Term::inl(term_from_json(*body));
  if (k == "inr") return Term::inr(term_from_json(*body));
  if (k == "fun") {
    if (!body->is_object()) bad("fun needs an object");
    std::map<std::string, Term> table;
    for (const auto& [key, v] : body->items()) table.emplace(key, term_from_json(v));
    return Term::func(std::move(table));
  }
  if (k == "set") {
    if (!body->is_array()) bad("set needs an array");
    std::vector<Term> members;
    for (const auto& m : *body) members.push_back(term_from_json(m));
    return Term::set(std::move(members));
  }
  bad("unknown term constructor \"" + k + "\"");
}

Coalgebra coalgebra_from_json(const Json& j, const Workspace& ws) {
  if (j.is_string()) return ws.coalgebra(j.get<std::string>());
  auto functor = functor_from_json(field(j, "functor", "coalgebra"), ws);
  auto carrier = element_set(field(j, "carrier", "coalgebra"), "carrier");
  const auto& sj = field(j, "structure", "coalgebra");
  if (!sj.is_object()) bad("structure must be an object");
  std::map<Element, Term> structure;
  for (const auto& [e, t] : sj.items()) structure.emplace(e, term_from_json(t));
  return Coalgebra(std::move(functor), std::move(carrier), std::move(structure));
}

Morphism morphism_from_json(const Json& j, const Workspace& ws) {
  Morphism f{coalgebra_from_json(field(j, "src", "morphism"), ws),
             coalgebra_from_json(field(j, "dst", "morphism"), ws),
             element_map(field(j, "map", "morphism"), "map")};
  if (!(f.src.functor() == f.dst.functor()))
    throw Error(ErrorKind::FunctorMismatch,
                f.src.functor().to_string() + " vs " + f.dst.functor().to_string());
  require_map_on(f.map, f.src.carrier(), f.dst.carrier(), "map");
  return f;
}

PartialMorphism partial_morphism_from_json(const Json& j, const Workspace& ws) {
  return PartialMorphism::make(coalgebra_from_json(field(j, "src", "partial morphism"), ws),
                               coalgebra_from_json(field(j, "dst", "partial morphism"), ws),
                               element_set(field(j, "dom", "partial morphism"), "dom"),
                               element_map(field(j, "map", "partial morphism"), "map"));
}

TuringDatum datum_from_json(const Json& j, const Workspace& ws) {
  auto x = coalgebra_from_json(field(j, "X", "datum"), ws);
  auto w = coalgebra_from_json(field(j, "W", "datum"), ws);
  auto y = coalgebra_from_json(field(j, "Y", "datum"), ws);
  auto u = element_map(field(j, "u", "datum"), "u");
  require_map_on(u, x.carrier(), w.carrier(), "u");
  const auto& vj = field(j, "v", "datum");
  if (!vj.is_object()) bad("v must be an object");
  ElementMap v;
  for (const auto& [state, step] : vj.items()) {
    auto [k, target] = tag(step, "step of v");
    const auto& e = str(*target, "step target");
    if (k == "inl") {
      if (!w.contains(e)) bad("v continues from '" + state + "' to unknown state '" + e + "'");
      v.emplace(state, cont(e));
    } else if (k == "inr") {
      if (!y.contains(e)) bad("v halts from '" + state + "' with unknown output '" + e + "'");
      v.emplace(state, halt(e));
    } else {
      bad("step of v must be {\"inl\":..} or {\"inr\":..}");
    }
  }
  return make_datum(std::move(x), std::move(w), std::move(y), std::move(u), std::move(v));
}

Json parse(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const auto end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (auto pos = detail.find("syntax error"); pos != std::string::npos) detail = detail.substr(pos);
    throw Error(ErrorKind::ParseError, std::string(source) + ":" + std::to_string(line) + ":" +
                                           std::to_string(column) + ": " + detail);
  }
}

namespace {

constexpr const char* kSections[] = {"functors", "coalgebras", "morphisms", "partial_morphisms",
                                     "data"};

bool bound(const Workspace& ws, const std::string& sec, const std::string& name) {
  if (sec == "functors") return ws.functors.count(name) > 0;
  if (sec == "coalgebras") return ws.coalgebras.count(name) > 0;
  if (sec == "morphisms") return ws.morphisms.count(name) > 0;
  if (sec == "partial_morphisms") return ws.partial_morphisms.count(name) > 0;
  return ws.data.count(name) > 0;
}

// Loads every binding of `doc` into `ws`. Without a report the first failure
// propagates; with one, failures are recorded and loading continues.
void load_into(const Json& doc, Workspace& ws, std::vector<CheckEntry>* report) {
  if (!doc.is_object()) bad("document must be an object");
  for (const auto& [k, v] : doc.items())
    if (std::find_if(std::begin(kSections), std::end(kSections),
                     [&](const char* s) { return k == s; }) == std::end(kSections))
      bad("unknown section \"" + k + "\"");
  for (const char* section : kSections) {
    auto it = doc.find(section);
    if (it == doc.end()) continue;
    if (!it->is_object()) bad(std::string("section \"") + section + "\" must be an object");
    const std::string sec = section;
    for (const auto& [name, value] : it->items()) {
      try {
        try {
          if (bound(ws, sec, name)) bad(sec + " binding '" + name + "' is defined twice");
          if (sec == "functors") {
            ws.functors.emplace(name, functor_from_json(value, ws));
          } else if (sec == "coalgebras") {
            ws.coalgebras.emplace(name, coalgebra_from_json(value, ws));
          } else if (sec == "morphisms") {
            auto f = morphism_from_json(value, ws);
            require_morphism(f);
            ws.morphisms.emplace(name, std::move(f));
          } else if (sec == "partial_morphisms") {
            ws.partial_morphisms.emplace(name, partial_morphism_from_json(value, ws));
          } else {
            ws.data.emplace(name, datum_from_json(value, ws));
          }
        } catch (const Json::exception& e) {
          bad(e.what());
        }
        if (report) report->push_back({sec, name, true, ""});
      } catch (const Error& e) {
        if (!report) throw Error(e.kind(), sec + "." + name + ": " + e.what());
        report->push_back({sec, name, false, e.what()});
      }
    }
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Workspace load_document(std::string_view text, std::string_view source) {
  Workspace ws;
  load_into(parse(text, source), ws, nullptr);
  return ws;
}

Workspace load_file(const std::filesystem::path& path) {
  return load_document(read_file(path), path.string());
}

Workspace load_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  Workspace ws;
  for (const auto& f : files) load_into(parse(read_file(f), f.string()), ws, nullptr);
  return ws;
}

std::vector<CheckEntry> check_document(std::string_view text, std::string_view source) {
  std::vector<CheckEntry> report;
  Workspace ws;
  load_into(parse(text, source), ws, &report);
  return report;
}

}  // namespace coalg::io
