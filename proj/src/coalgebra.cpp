#include "coalg/coalgebra.hpp"

#include <algorithm>

#include "coalg/error.hpp"

namespace coalg {

struct Coalgebra::Data {
  Functor functor;
  ElementSet carrier;
  std::map<Element, Term> structure;
  std::map<Element, ElementSet> successors;
  bool topology = true;
};

Coalgebra::Coalgebra() {
  static const auto empty_id = std::make_shared<const Data>();
  data_ = empty_id;
}

Coalgebra::Coalgebra(Functor functor, ElementSet carrier, std::map<Element, Term> structure,
                     TrivialPolicy policy) {
  const bool nontrivial = is_nontrivial(functor);
  if (!nontrivial && policy == TrivialPolicy::Reject) {
    throw Error(ErrorKind::TrivialFunctor,
                functor.to_string() + " sends a nonempty set to the empty set");
  }
  for (const auto& e : carrier) {
    if (!is_valid_element_id(e))
      throw Error(ErrorKind::ValidationError, "malformed element id '" + e + "'");
    if (!structure.count(e))
      throw Error(ErrorKind::ValidationError, "no structure value for '" + e + "'");
  }
  for (const auto& [e, t] : structure) {
    if (!carrier.count(e))
      throw Error(ErrorKind::ValidationError, "structure given for '" + e + "' outside the carrier");
    try {
      require_well_typed(functor, t, carrier);
    } catch (const Error& err) {
      throw Error(ErrorKind::ValidationError, "structure of '" + e + "': " + err.what());
    }
  }
  auto data = std::make_shared<Data>();
  data->functor = std::move(functor);
  data->carrier = std::move(carrier);
  data->structure = std::move(structure);
  data->topology = nontrivial;
  for (const auto& [e, t] : data->structure) data->successors.emplace(e, leaves(t));
  data_ = std::move(data);
}

Coalgebra Coalgebra::empty(Functor functor) {
  return Coalgebra(std::move(functor), {}, {}, TrivialPolicy::Allow);
}

const Functor& Coalgebra::functor() const { return data_->functor; }
const ElementSet& Coalgebra::carrier() const { return data_->carrier; }
const std::map<Element, Term>& Coalgebra::structure() const { return data_->structure; }

const Term& Coalgebra::structure(const Element& e) const {
  auto it = data_->structure.find(e);
  if (it == data_->structure.end())
    throw Error(ErrorKind::UnknownElement, "'" + e + "' is not in the carrier");
  return it->second;
}

const ElementSet& Coalgebra::successors(const Element& e) const {
  auto it = data_->successors.find(e);
  if (it == data_->successors.end())
    throw Error(ErrorKind::UnknownElement, "'" + e + "' is not in the carrier");
  return it->second;
}

bool Coalgebra::has_topology() const { return data_->topology; }

bool operator==(const Coalgebra& a, const Coalgebra& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->functor == b.data_->functor && a.data_->carrier == b.data_->carrier &&
         a.data_->structure == b.data_->structure;
}

Coalgebra restrict(const Coalgebra& x, const ElementSet& subset) {
  if (!is_subcoalgebra(x, subset))
    throw Error(ErrorKind::NotSubcoalgebra, "subset is not successor-closed in the carrier");
  if (subset.size() == x.size()) return x;
  std::map<Element, Term> structure;
  for (const auto& e : subset) structure.emplace(e, x.structure(e));
  return Coalgebra(x.functor(), subset, std::move(structure), TrivialPolicy::Allow);
}

// ---------------------------------------------------------------------------
// Morphisms

MorphismCheck is_morphism(const Morphism& f) {
  if (!(f.src.functor() == f.dst.functor()))
    return {false, std::nullopt, "functors differ"};
  for (const auto& x : f.src.carrier()) {
    auto it = f.map.find(x);
    if (it == f.map.end()) return {false, x, "map is not defined at '" + x + "'"};
    if (!f.dst.contains(it->second))
      return {false, x, "'" + x + "' is sent outside the codomain"};
  }
  for (const auto& x : f.src.carrier()) {
    const auto pushed = apply_on_map(f.src.functor(), f.map, f.src.structure(x));
    if (!(pushed == f.dst.structure(f.map.at(x))))
      return {false, x, "square fails at '" + x + "'"};
  }
  return {};
}

void require_morphism(const Morphism& f) {
  auto check = is_morphism(f);
  if (!check) throw Error(ErrorKind::NotMorphism, check.reason);
}

Morphism identity(const Coalgebra& x) {
  ElementMap map;
  for (const auto& e : x.carrier()) map.emplace(e, e);
  return {x, x, std::move(map)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.dst == g.src))
    throw Error(ErrorKind::ObjectMismatch, "codomain of the first map is not the domain of the second");
  ElementMap map;
  for (const auto& [a, b] : f.map) map.emplace(a, g.map.at(b));
  return {f.src, g.dst, std::move(map)};
}

std::vector<ElementMap> all_morphisms(const Coalgebra& src, const Coalgebra& dst,
                                      std::size_t limit) {
  std::vector<ElementMap> out;
  if (!(src.functor() == dst.functor())) return out;
  const std::vector<Element> order(src.carrier().begin(), src.carrier().end());
  const std::vector<Element> targets(dst.carrier().begin(), dst.carrier().end());
  std::map<Element, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i], i);

  // Element x can be checked once x and all its successors are assigned.
  std::vector<std::vector<Element>> ready(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t last = i;
    for (const auto& l : src.successors(order[i])) last = std::max(last, position.at(l));
    ready[last].push_back(order[i]);
  }

  ElementMap current;
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      if (out.size() == limit)
        throw Error(ErrorKind::EnumerationLimitExceeded,
                    "more than " + std::to_string(limit) + " morphisms");
      out.push_back(current);
      return;
    }
    for (const auto& t : targets) {
      current[order[i]] = t;
      bool ok = true;
      for (const auto& x : ready[i]) {
        if (!(apply_on_map(src.functor(), current, src.structure(x)) ==
              dst.structure(current.at(x)))) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
    current.erase(order[i]);
  };
  search(search, 0);
  return out;
}

ElementSet image(const Morphism& f, const ElementSet& subset) {
  ElementSet out;
  for (const auto& e : subset) out.insert(f.map.at(e));
  return out;
}

ElementSet image(const Morphism& f) { return image(f, f.src.carrier()); }

// ---------------------------------------------------------------------------
// Subcoalgebras

bool is_subcoalgebra(const Coalgebra& x, const ElementSet& s) {
  for (const auto& e : s) {
    if (!x.contains(e)) return false;
    for (const auto& l : x.successors(e))
      if (!s.count(l)) return false;
  }
  return true;
}

Subcoalgebra::Subcoalgebra(Coalgebra parent, ElementSet subset)
    : parent_(std::move(parent)), subset_(std::move(subset)) {
  if (!is_subcoalgebra(parent_, subset_))
    throw Error(ErrorKind::NotSubcoalgebra, "subset is not successor-closed in the carrier");
}

Morphism Subcoalgebra::inclusion() const {
  ElementMap map;
  for (const auto& e : subset_) map.emplace(e, e);
  return {as_coalgebra(), parent_, std::move(map)};
}

}  // namespace coalg
