#include "coalg/random.hpp"

#include "coalg/error.hpp"

namespace coalg::gen {

std::size_t below(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Term random_term(const Functor& f, const std::vector<Element>& carrier, Rng& rng) {
  const std::size_t n = carrier.size();
  if (cardinality(f, n) == 0)
    throw Error(ErrorKind::InvariantViolation, f.to_string() + " has no terms over this carrier");
  switch (f.kind()) {
    case Functor::Kind::Const:
      return Term::constant(f.symbols()[below(rng, f.symbols().size())]);
    case Functor::Kind::Id:
      return Term::leaf(carrier[below(rng, n)]);
    case Functor::Kind::Prod:
      return Term::pair(random_term(f.left(), carrier, rng), random_term(f.right(), carrier, rng));
    case Functor::Kind::Sum: {
      const bool l = cardinality(f.left(), n) > 0;
      const bool r = cardinality(f.right(), n) > 0;
      if (l && (!r || below(rng, 2) == 0)) return Term::inl(random_term(f.left(), carrier, rng));
      return Term::inr(random_term(f.right(), carrier, rng));
    }
    case Functor::Kind::Exp: {
      std::map<std::string, Term> table;
      for (const auto& k : f.symbols()) table.emplace(k, random_term(f.body(), carrier, rng));
      return Term::func(std::move(table));
    }
    case Functor::Kind::Pow: {
      std::vector<Term> members;
      if (cardinality(f.body(), n) > 0) {
        const std::size_t k = below(rng, 3);
        for (std::size_t i = 0; i < k; ++i) members.push_back(random_term(f.body(), carrier, rng));
      }
      return Term::set(std::move(members));
    }
  }
  return {};
}

namespace {

std::vector<Element> names(std::size_t n, const std::string& prefix) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Coalgebra random_coalgebra(const Functor& f, std::size_t n, Rng& rng, const std::string& prefix) {
  const auto carrier = names(n, prefix);
  std::map<Element, Term> structure;
  for (const auto& e : carrier) structure.emplace(e, random_term(f, carrier, rng));
  return Coalgebra(f, ElementSet(carrier.begin(), carrier.end()), std::move(structure),
                   TrivialPolicy::Allow);
}

std::vector<Coalgebra> all_coalgebras(const Functor& f, std::size_t n, const std::string& prefix,
                                      std::size_t limit) {
  const auto carrier = names(n, prefix);
  const ElementSet set(carrier.begin(), carrier.end());
  const auto terms = apply_on_set(f, set, limit);
  std::vector<Coalgebra> out;
  if (n > 0 && terms.empty()) return out;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    if (out.size() == limit)
      throw Error(ErrorKind::EnumerationLimitExceeded,
                  "more than " + std::to_string(limit) + " coalgebras");
    std::map<Element, Term> structure;
    for (std::size_t i = 0; i < n; ++i) structure.emplace(carrier[i], terms[digits[i]]);
    out.emplace_back(f, set, std::move(structure), TrivialPolicy::Allow);
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == terms.size()) digits[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

ElementSet random_open(const Coalgebra& x, Rng& rng) {
  ElementSet pick;
  for (const auto& e : x.carrier())
    if (below(rng, 2)) pick.insert(e);
  return below(rng, 2) ? generated(x, pick).subset() : cogenerated_inside(x, pick).subset();
}

PartialMorphism random_partial_morphism(const Coalgebra& x, const Coalgebra& y, Rng& rng) {
  constexpr std::size_t kLimit = 4096;
  const auto dom = random_open(x, rng);
  std::vector<ElementMap> maps;
  try {
    maps = all_morphisms(restrict(x, dom), y, kLimit);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EnumerationLimitExceeded) throw;
  }
  if (maps.empty()) return zero(x, y);
  return PartialMorphism::make(x, y, dom, maps[below(rng, maps.size())]);
}

Coalgebra loop_coalgebra(const Functor& f, std::size_t n, Rng& rng, const std::string& prefix) {
  std::map<Element, Term> structure;
  ElementSet carrier;
  for (const auto& e : names(n, prefix)) {
    structure.emplace(e, random_term(f, {e}, rng));
    carrier.insert(e);
  }
  return Coalgebra(f, std::move(carrier), std::move(structure), TrivialPolicy::Allow);
}

std::string shape(const Coalgebra& x, const Element& e) {
  const auto star = [](const Element&) { return Element("*"); };
  return apply_on_map(x.functor(), star, x.structure(e)).key();
}

std::optional<ElementMap> random_shape_map(const Coalgebra& x, const Coalgebra& y, Rng& rng,
                                           const ElementSet& fixed) {
  std::map<std::string, std::vector<Element>> by_shape;
  for (const auto& e : y.carrier()) by_shape[shape(y, e)].push_back(e);
  ElementMap out;
  for (const auto& e : x.carrier()) {
    if (fixed.count(e)) {
      out.emplace(e, e);
      continue;
    }
    auto it = by_shape.find(shape(x, e));
    if (it == by_shape.end()) return std::nullopt;
    out.emplace(e, it->second[below(rng, it->second.size())]);
  }
  return out;
}

}  // namespace coalg::gen
