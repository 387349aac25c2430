#include "coalg/functor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "coalg/error.hpp"

namespace coalg {

// ---------------------------------------------------------------------------
// Functor

struct Functor::Node {
  Kind kind;
  std::vector<std::string> symbols;
  std::vector<Functor> operands;
};

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Functor::Functor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Functor::Functor() {
  static const auto identity = std::make_shared<const Node>(Node{Kind::Id, {}, {}});
  node_ = identity;
}

Functor Functor::constant(std::vector<std::string> symbols) {
  return Functor(std::make_shared<const Node>(
      Node{Kind::Const, sorted_unique(std::move(symbols)), {}}));
}

Functor Functor::id() { return Functor(); }

Functor Functor::prod(Functor left, Functor right) {
  return Functor(std::make_shared<const Node>(
      Node{Kind::Prod, {}, {std::move(left), std::move(right)}}));
}

Functor Functor::sum(Functor left, Functor right) {
  return Functor(std::make_shared<const Node>(
      Node{Kind::Sum, {}, {std::move(left), std::move(right)}}));
}

Functor Functor::exp(std::vector<std::string> index, Functor body) {
  return Functor(std::make_shared<const Node>(
      Node{Kind::Exp, sorted_unique(std::move(index)), {std::move(body)}}));
}

Functor Functor::pow(Functor body) {
  return Functor(std::make_shared<const Node>(Node{Kind::Pow, {}, {std::move(body)}}));
}

Functor::Kind Functor::kind() const { return node_->kind; }
const std::vector<std::string>& Functor::symbols() const { return node_->symbols; }
const Functor& Functor::left() const { return node_->operands.at(0); }
const Functor& Functor::right() const { return node_->operands.at(1); }
const Functor& Functor::body() const { return node_->operands.at(0); }

bool operator==(const Functor& a, const Functor& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->symbols == b.node_->symbols &&
         a.node_->operands == b.node_->operands;
}

std::string Functor::to_string() const {
  auto braces = [](const std::vector<std::string>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    return out + "}";
  };
  switch (kind()) {
    case Kind::Const: return "C" + braces(symbols());
    case Kind::Id: return "Id";
    case Kind::Prod: return "(" + left().to_string() + " x " + right().to_string() + ")";
    case Kind::Sum: return "(" + left().to_string() + " + " + right().to_string() + ")";
    case Kind::Exp: return body().to_string() + "^" + braces(symbols());
    case Kind::Pow: return "P(" + body().to_string() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Term

Term Term::constant(std::string symbol) {
  Term t;
  t.kind_ = Kind::Const;
  t.atom_ = std::move(symbol);
  return t;
}

Term Term::leaf(Element e) {
  Term t;
  t.kind_ = Kind::Leaf;
  t.atom_ = std::move(e);
  return t;
}

Term Term::pair(Term first, Term second) {
  Term t;
  t.kind_ = Kind::Pair;
  t.kids_ = {std::move(first), std::move(second)};
  return t;
}

Term Term::inl(Term payload) {
  Term t;
  t.kind_ = Kind::Inl;
  t.kids_ = {std::move(payload)};
  return t;
}

Term Term::inr(Term payload) {
  Term t;
  t.kind_ = Kind::Inr;
  t.kids_ = {std::move(payload)};
  return t;
}

Term Term::func(std::map<std::string, Term> table) {
  Term t;
  t.kind_ = Kind::Func;
  for (auto& [k, v] : table) {
    t.keys_.push_back(k);
    t.kids_.push_back(std::move(v));
  }
  return t;
}

Term Term::set(std::vector<Term> members) {
  std::vector<std::pair<std::string, Term>> keyed;
  keyed.reserve(members.size());
  for (auto& m : members) {
    auto k = m.key();
    keyed.emplace_back(std::move(k), std::move(m));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  Term t;
  t.kind_ = Kind::Set;
  for (auto& [k, m] : keyed) t.kids_.push_back(std::move(m));
  return t;
}

namespace {

void write_string(std::string& out, const std::string& s) {
  static const char* hex = "0123456789abcdef";
  out += '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          out += "\\u00";
          out += hex[c >> 4];
          out += hex[c & 0xf];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
}

void write_term(std::string& out, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Leaf:
      write_string(out, t.atom());
      return;
    case Term::Kind::Const:
      out += "{\"const\":";
      write_string(out, t.atom());
      out += '}';
      return;
    case Term::Kind::Pair:
      out += "{\"pair\":[";
      write_term(out, t.first());
      out += ',';
      write_term(out, t.second());
      out += "]}";
      return;
    case Term::Kind::Inl:
    case Term::Kind::Inr:
      out += t.kind() == Term::Kind::Inl ? "{\"inl\":" : "{\"inr\":";
      write_term(out, t.payload());
      out += '}';
      return;
    case Term::Kind::Func:
      out += "{\"fun\":{";
      for (std::size_t i = 0; i < t.keys().size(); ++i) {
        if (i) out += ',';
        write_string(out, t.keys()[i]);
        out += ':';
        write_term(out, t.children()[i]);
      }
      out += "}}";
      return;
    case Term::Kind::Set:
      out += "{\"set\":[";
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += ',';
        write_term(out, t.children()[i]);
      }
      out += "]}";
      return;
  }
}

}  // namespace

std::string Term::key() const {
  std::string out;
  write_term(out, *this);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr std::size_t kSat = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSat - b ? kSat : a + b; }

std::size_t sat_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == kSat || r == 0) break;
  }
  return r;
}

std::vector<Term> enumerate(const Functor& f, const ElementSet& x) {
  std::vector<Term> out;
  switch (f.kind()) {
    case Functor::Kind::Const:
      for (const auto& c : f.symbols()) out.push_back(Term::constant(c));
      break;
    case Functor::Kind::Id:
      for (const auto& e : x) out.push_back(Term::leaf(e));
      break;
    case Functor::Kind::Prod: {
      auto ls = enumerate(f.left(), x);
      auto rs = enumerate(f.right(), x);
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(Term::pair(l, r));
      break;
    }
    case Functor::Kind::Sum:
      for (auto& l : enumerate(f.left(), x)) out.push_back(Term::inl(std::move(l)));
      for (auto& r : enumerate(f.right(), x)) out.push_back(Term::inr(std::move(r)));
      break;
    case Functor::Kind::Exp: {
      auto body = enumerate(f.body(), x);
      const auto& index = f.symbols();
      if (!index.empty() && body.empty()) break;
      std::vector<std::size_t> digits(index.size(), 0);
      while (true) {
        std::map<std::string, Term> table;
        for (std::size_t i = 0; i < index.size(); ++i) table.emplace(index[i], body[digits[i]]);
        out.push_back(Term::func(std::move(table)));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == body.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
      break;
    }
    case Functor::Kind::Pow: {
      auto body = enumerate(f.body(), x);
      const std::size_t n = body.size();
      std::vector<bool> pick(n, false);
      while (true) {
        std::vector<Term> members;
        for (std::size_t i = 0; i < n; ++i)
          if (pick[i]) members.push_back(body[i]);
        out.push_back(Term::set(std::move(members)));
        std::size_t pos = 0;
        while (pos < n && pick[pos]) pick[pos++] = false;
        if (pos == n) break;
        pick[pos] = true;
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::size_t cardinality(const Functor& f, std::size_t n) {
  switch (f.kind()) {
    case Functor::Kind::Const: return f.symbols().size();
    case Functor::Kind::Id: return n;
    case Functor::Kind::Prod: return sat_mul(cardinality(f.left(), n), cardinality(f.right(), n));
    case Functor::Kind::Sum: return sat_add(cardinality(f.left(), n), cardinality(f.right(), n));
    case Functor::Kind::Exp: return sat_pow(cardinality(f.body(), n), f.symbols().size());
    case Functor::Kind::Pow: {
      const auto inner = cardinality(f.body(), n);
      return inner >= 64 ? kSat : sat_pow(2, inner);
    }
  }
  return 0;
}

std::vector<Term> apply_on_set(const Functor& f, const ElementSet& x, std::size_t limit) {
  const auto size = cardinality(f, x.size());
  if (size > limit) {
    throw Error(ErrorKind::EnumerationLimitExceeded,
                "|" + f.to_string() + "(X)| >= " + std::to_string(size) + " for |X| = " +
                    std::to_string(x.size()) + " exceeds limit " + std::to_string(limit));
  }
  auto terms = enumerate(f, x);
  std::vector<std::pair<std::string, std::size_t>> order;
  order.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) order.emplace_back(terms[i].key(), i);
  std::sort(order.begin(), order.end());
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& [k, i] : order) out.push_back(std::move(terms[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Functor on maps

namespace {

[[noreturn]] void mismatch(const Functor& f, const Term& t, const std::string& why) {
  throw Error(ErrorKind::TypeMismatch,
              "term " + t.key() + " is not a term of " + f.to_string() + ": " + why);
}

void check_shape(const Functor& f, const Term& t) {
  switch (f.kind()) {
    case Functor::Kind::Const:
      if (t.kind() != Term::Kind::Const) mismatch(f, t, "expected a constant");
      if (!std::binary_search(f.symbols().begin(), f.symbols().end(), t.atom()))
        mismatch(f, t, "unknown constant '" + t.atom() + "'");
      return;
    case Functor::Kind::Id:
      if (t.kind() != Term::Kind::Leaf) mismatch(f, t, "expected a carrier element");
      return;
    case Functor::Kind::Prod:
      if (t.kind() != Term::Kind::Pair) mismatch(f, t, "expected a pair");
      return;
    case Functor::Kind::Sum:
      if (t.kind() != Term::Kind::Inl && t.kind() != Term::Kind::Inr)
        mismatch(f, t, "expected an injection");
      return;
    case Functor::Kind::Exp:
      if (t.kind() != Term::Kind::Func) mismatch(f, t, "expected a function table");
      if (t.keys() != f.symbols()) mismatch(f, t, "function table keys differ from the index set");
      return;
    case Functor::Kind::Pow:
      if (t.kind() != Term::Kind::Set) mismatch(f, t, "expected a set");
      return;
  }
}

template <typename LeafFn>
Term map_term(const Functor& f, const Term& t, const LeafFn& leaf_fn) {
  check_shape(f, t);
  switch (f.kind()) {
    case Functor::Kind::Const: return t;
    case Functor::Kind::Id: return Term::leaf(leaf_fn(t.atom()));
    case Functor::Kind::Prod:
      return Term::pair(map_term(f.left(), t.first(), leaf_fn),
                        map_term(f.right(), t.second(), leaf_fn));
    case Functor::Kind::Sum:
      return t.kind() == Term::Kind::Inl ? Term::inl(map_term(f.left(), t.payload(), leaf_fn))
                                         : Term::inr(map_term(f.right(), t.payload(), leaf_fn));
    case Functor::Kind::Exp: {
      std::map<std::string, Term> table;
      for (std::size_t i = 0; i < t.keys().size(); ++i)
        table.emplace(t.keys()[i], map_term(f.body(), t.children()[i], leaf_fn));
      return Term::func(std::move(table));
    }
    case Functor::Kind::Pow: {
      std::vector<Term> members;
      members.reserve(t.children().size());
      for (const auto& m : t.children()) members.push_back(map_term(f.body(), m, leaf_fn));
      return Term::set(std::move(members));
    }
  }
  return t;
}

}  // namespace

Term apply_on_map(const Functor& f, const ElementMap& map, const Term& t) {
  return map_term(f, t, [&](const Element& e) -> const Element& {
    auto it = map.find(e);
    if (it == map.end())
      throw Error(ErrorKind::TypeMismatch, "leaf '" + e + "' is outside the domain of the map");
    return it->second;
  });
}

Term apply_on_map(const Functor& f, const std::function<Element(const Element&)>& map,
                  const Term& t) {
  return map_term(f, t, map);
}

namespace {

// Empty string when well typed, otherwise the reason.
std::string type_error(const Functor& f, const Term& t, const ElementSet& carrier) {
  try {
    check_shape(f, t);
  } catch (const Error& e) {
    return e.what();
  }
  switch (f.kind()) {
    case Functor::Kind::Const: return {};
    case Functor::Kind::Id:
      return carrier.count(t.atom()) ? std::string{}
                                     : "leaf '" + t.atom() + "' is not in the carrier";
    case Functor::Kind::Prod: {
      auto r = type_error(f.left(), t.first(), carrier);
      return r.empty() ? type_error(f.right(), t.second(), carrier) : r;
    }
    case Functor::Kind::Sum:
      return type_error(t.kind() == Term::Kind::Inl ? f.left() : f.right(), t.payload(), carrier);
    case Functor::Kind::Exp:
      for (const auto& c : t.children()) {
        auto r = type_error(f.body(), c, carrier);
        if (!r.empty()) return r;
      }
      return {};
    case Functor::Kind::Pow: {
      std::string prev;
      for (const auto& c : t.children()) {
        auto r = type_error(f.body(), c, carrier);
        if (!r.empty()) return r;
        auto k = c.key();
        if (!prev.empty() && !(prev < k)) return "set members are not in canonical order";
        prev = std::move(k);
      }
      return {};
    }
  }
  return {};
}

}  // namespace

bool well_typed(const Functor& f, const Term& t, const ElementSet& carrier) {
  return type_error(f, t, carrier).empty();
}

void require_well_typed(const Functor& f, const Term& t, const ElementSet& carrier) {
  auto why = type_error(f, t, carrier);
  if (!why.empty()) throw Error(ErrorKind::TypeMismatch, why);
}

namespace {

void collect_leaves(const Term& t, ElementSet& out) {
  if (t.kind() == Term::Kind::Leaf) {
    out.insert(t.atom());
    return;
  }
  for (const auto& c : t.children()) collect_leaves(c, out);
}

}  // namespace

ElementSet leaves(const Term& t) {
  ElementSet out;
  collect_leaves(t, out);
  return out;
}

bool lift_relation(const Functor& f, const Relation& r, const Term& t, const Term& s) {
  check_shape(f, t);
  check_shape(f, s);
  switch (f.kind()) {
    case Functor::Kind::Const: return t.atom() == s.atom();
    case Functor::Kind::Id: return r.count({t.atom(), s.atom()}) > 0;
    case Functor::Kind::Prod:
      return lift_relation(f.left(), r, t.first(), s.first()) &&
             lift_relation(f.right(), r, t.second(), s.second());
    case Functor::Kind::Sum:
      if (t.kind() != s.kind()) return false;
      return lift_relation(t.kind() == Term::Kind::Inl ? f.left() : f.right(), r, t.payload(),
                           s.payload());
    case Functor::Kind::Exp:
      for (std::size_t i = 0; i < t.children().size(); ++i)
        if (!lift_relation(f.body(), r, t.children()[i], s.children()[i])) return false;
      return true;
    case Functor::Kind::Pow: {
      auto covered = [&](const Term& u, const Term& other, bool forth) {
        return std::any_of(other.children().begin(), other.children().end(), [&](const Term& v) {
          return forth ? lift_relation(f.body(), r, u, v) : lift_relation(f.body(), r, v, u);
        });
      };
      for (const auto& u : t.children())
        if (!covered(u, s, true)) return false;
      for (const auto& v : s.children())
        if (!covered(v, t, false)) return false;
      return true;
    }
  }
  return false;
}

std::optional<Term> zip_terms(const Functor& f, std::span<const Term> terms,
                              const std::function<Element(std::span<const Element>)>& combine) {
  if (terms.empty()) throw Error(ErrorKind::InvariantViolation, "zip_terms needs at least one term");
  for (const auto& t : terms) check_shape(f, t);
  auto column = [&](auto pick) {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(pick(t));
    return out;
  };
  switch (f.kind()) {
    case Functor::Kind::Const:
      for (const auto& t : terms)
        if (t.atom() != terms[0].atom()) return std::nullopt;
      return terms[0];
    case Functor::Kind::Id: {
      std::vector<Element> atoms;
      for (const auto& t : terms) atoms.push_back(t.atom());
      return Term::leaf(combine(atoms));
    }
    case Functor::Kind::Prod: {
      auto firsts = column([](const Term& t) { return t.first(); });
      auto seconds = column([](const Term& t) { return t.second(); });
      auto a = zip_terms(f.left(), firsts, combine);
      if (!a) return std::nullopt;
      auto b = zip_terms(f.right(), seconds, combine);
      if (!b) return std::nullopt;
      return Term::pair(std::move(*a), std::move(*b));
    }
    case Functor::Kind::Sum: {
      for (const auto& t : terms)
        if (t.kind() != terms[0].kind()) return std::nullopt;
      auto payloads = column([](const Term& t) { return t.payload(); });
      const bool left = terms[0].kind() == Term::Kind::Inl;
      auto z = zip_terms(left ? f.left() : f.right(), payloads, combine);
      if (!z) return std::nullopt;
      return left ? Term::inl(std::move(*z)) : Term::inr(std::move(*z));
    }
    case Functor::Kind::Exp: {
      std::map<std::string, Term> table;
      for (std::size_t i = 0; i < f.symbols().size(); ++i) {
        auto col = column([i](const Term& t) { return t.children()[i]; });
        auto z = zip_terms(f.body(), col, combine);
        if (!z) return std::nullopt;
        table.emplace(f.symbols()[i], std::move(*z));
      }
      return Term::func(std::move(table));
    }
    case Functor::Kind::Pow:
      throw Error(ErrorKind::Unsupported, "cannot zip terms of a powerset functor");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hypotheses

bool is_nontrivial(const Functor& f) { return cardinality(f, 1) > 0; }

bool is_deterministic(const Functor& f) {
  switch (f.kind()) {
    case Functor::Kind::Const:
    case Functor::Kind::Id: return true;
    case Functor::Kind::Prod:
    case Functor::Kind::Sum: return is_deterministic(f.left()) && is_deterministic(f.right());
    case Functor::Kind::Exp: return is_deterministic(f.body());
    case Functor::Kind::Pow: return false;
  }
  return false;
}

bool preserves_products(const Functor& f) {
  switch (f.kind()) {
    case Functor::Kind::Const: return f.symbols().size() == 1;
    case Functor::Kind::Id: return true;
    case Functor::Kind::Prod: return preserves_products(f.left()) && preserves_products(f.right());
    case Functor::Kind::Exp: return preserves_products(f.body());
    case Functor::Kind::Sum:
    case Functor::Kind::Pow: return false;
  }
  return false;
}

PullbackSquare make_pullback(const ElementSet& left, const ElementSet& right,
                             const ElementSet& base, const ElementMap& f, const ElementMap& g) {
  PullbackSquare sq{{}, left, right, base, {}, {}, f, g};
  for (const auto& l : left) {
    auto fl = f.find(l);
    if (fl == f.end()) throw Error(ErrorKind::NotAPullback, "map is not total at '" + l + "'");
    for (const auto& r : right) {
      auto gr = g.find(r);
      if (gr == g.end()) throw Error(ErrorKind::NotAPullback, "map is not total at '" + r + "'");
      if (fl->second != gr->second) continue;
      auto p = pair_id(l, r);
      sq.apex.insert(p);
      sq.to_left.emplace(p, l);
      sq.to_right.emplace(p, r);
    }
  }
  return sq;
}

namespace {

void require_function(const ElementMap& m, const ElementSet& from, const ElementSet& to,
                      const char* name) {
  for (const auto& a : from) {
    auto it = m.find(a);
    if (it == m.end())
      throw Error(ErrorKind::NotAPullback, std::string(name) + " is not total at '" + a + "'");
    if (!to.count(it->second))
      throw Error(ErrorKind::NotAPullback,
                  std::string(name) + " sends '" + a + "' outside its codomain");
  }
}

void require_pullback(const PullbackSquare& sq) {
  require_function(sq.to_left, sq.apex, sq.left, "to_left");
  require_function(sq.to_right, sq.apex, sq.right, "to_right");
  require_function(sq.left_to_base, sq.left, sq.base, "left_to_base");
  require_function(sq.right_to_base, sq.right, sq.base, "right_to_base");
  std::set<std::pair<Element, Element>> hit;
  for (const auto& p : sq.apex) {
    const auto& l = sq.to_left.at(p);
    const auto& r = sq.to_right.at(p);
    if (sq.left_to_base.at(l) != sq.right_to_base.at(r))
      throw Error(ErrorKind::NotAPullback, "square does not commute at '" + p + "'");
    if (!hit.emplace(l, r).second)
      throw Error(ErrorKind::NotAPullback, "apex is not injective into the fibred product");
  }
  for (const auto& l : sq.left)
    for (const auto& r : sq.right)
      if (sq.left_to_base.at(l) == sq.right_to_base.at(r) && !hit.count({l, r}))
        throw Error(ErrorKind::NotAPullback, "pair (" + l + ", " + r + ") has no apex element");
}

}  // namespace

PreservationResult check_weak_pullback_preservation(const Functor& f, const PullbackSquare& sq,
                                                    std::size_t limit) {
  require_pullback(sq);
  const auto fp = apply_on_set(f, sq.apex, limit);
  const auto fl = apply_on_set(f, sq.left, limit);
  const auto fr = apply_on_set(f, sq.right, limit);

  std::set<std::pair<std::string, std::string>> realised;
  for (const auto& t : fp)
    realised.emplace(apply_on_map(f, sq.to_left, t).key(), apply_on_map(f, sq.to_right, t).key());

  std::map<std::string, std::vector<const Term*>> right_by_base;
  for (const auto& s : fr)
    right_by_base[apply_on_map(f, sq.right_to_base, s).key()].push_back(&s);

  for (const auto& t : fl) {
    auto it = right_by_base.find(apply_on_map(f, sq.left_to_base, t).key());
    if (it == right_by_base.end()) continue;
    const auto tk = t.key();
    for (const Term* s : it->second)
      if (!realised.count({tk, s->key()})) return {false, std::make_pair(t, *s)};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Ids

Element pair_id(const Element& a, const Element& b) { return "(" + a + "," + b + ")"; }

Element tuple_id(std::span<const Element> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out + ")";
}

bool is_valid_element_id(const Element& e) {
  if (e.empty()) return false;
  int depth = 0;
  for (char c : e) {
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) return false;
    if (c == ',' && depth == 0) return false;
  }
  return depth == 0;
}

}  // namespace coalg
