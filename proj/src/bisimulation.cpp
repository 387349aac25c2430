#include "coalg/coalgebra.hpp"
#include "coalg/error.hpp"

namespace coalg {

namespace {

bool within(const Bisimulation& r) {
  for (const auto& [a, b] : r.pairs)
    if (!r.left.contains(a) || !r.right.contains(b)) return false;
  return true;
}

bool projections_are_morphisms(const Bisimulation& r) {
  ElementSet carrier;
  std::map<Element, Term> structure;
  ElementMap p0, p1;
  for (const auto& [a, b] : r.pairs) {
    auto id = pair_id(a, b);
    auto it = r.structure->find({a, b});
    if (it == r.structure->end()) return false;
    carrier.insert(id);
    structure.emplace(id, it->second);
    p0.emplace(id, a);
    p1.emplace(id, b);
  }
  if (r.structure->size() != r.pairs.size()) return false;
  try {
    Coalgebra rel(r.left.functor(), std::move(carrier), std::move(structure),
                  TrivialPolicy::Allow);
    return is_morphism({rel, r.left, std::move(p0)}).ok &&
           is_morphism({rel, r.right, std::move(p1)}).ok;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

bool is_bisimulation(const Bisimulation& r) {
  if (!(r.left.functor() == r.right.functor()) || !within(r)) return false;
  if (r.structure) return projections_are_morphisms(r);
  const auto& f = r.left.functor();
  for (const auto& [a, b] : r.pairs)
    if (!lift_relation(f, r.pairs, r.left.structure(a), r.right.structure(b))) return false;
  return true;
}

Relation largest_bisimulation(const Coalgebra& x, const Coalgebra& y) {
  if (!(x.functor() == y.functor()))
    throw Error(ErrorKind::FunctorMismatch,
                x.functor().to_string() + " vs " + y.functor().to_string());
  Relation r;
  for (const auto& a : x.carrier())
    for (const auto& b : y.carrier()) r.emplace(a, b);
  const auto& f = x.functor();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = r.begin(); it != r.end();) {
      if (!lift_relation(f, r, x.structure(it->first), y.structure(it->second))) {
        it = r.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return r;
}

bool graph_is_bisimulation(const Coalgebra& x, const Coalgebra& y, const ElementMap& g) {
  Relation graph;
  for (const auto& a : x.carrier()) {
    auto it = g.find(a);
    if (it == g.end() || !y.contains(it->second)) return false;
    graph.emplace(a, it->second);
  }
  return is_bisimulation({x, y, std::move(graph), std::nullopt});
}

}  // namespace coalg
