#include <algorithm>
#include <deque>
#include <numeric>

#include "coalg/coalgebra.hpp"
#include "coalg/error.hpp"

namespace coalg {

namespace {

void require_topology(const Coalgebra& x) {
  if (!x.has_topology())
    throw Error(ErrorKind::TrivialFunctor, "topology is undefined for " + x.functor().to_string());
}

void require_inside(const Coalgebra& x, const ElementSet& s) {
  for (const auto& e : s)
    if (!x.contains(e)) throw Error(ErrorKind::UnknownElement, "'" + e + "' is not in the carrier");
}

ElementSet complement(const Coalgebra& x, const ElementSet& s) {
  ElementSet out;
  std::set_difference(x.carrier().begin(), x.carrier().end(), s.begin(), s.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool disjoint(const ElementSet& a, const ElementSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

// Minimal open neighbourhood of every point.
std::map<Element, ElementSet> basis(const Coalgebra& x) {
  std::map<Element, ElementSet> out;
  for (const auto& e : x.carrier()) out.emplace(e, generated(x, {e}).subset());
  return out;
}

}  // namespace

Subcoalgebra generated(const Coalgebra& x, const ElementSet& s) {
  require_inside(x, s);
  ElementSet closed = s;
  std::deque<Element> todo(s.begin(), s.end());
  while (!todo.empty()) {
    auto e = std::move(todo.front());
    todo.pop_front();
    for (const auto& l : x.successors(e))
      if (closed.insert(l).second) todo.push_back(l);
  }
  return Subcoalgebra(x, std::move(closed));
}

Subcoalgebra cogenerated_inside(const Coalgebra& x, const ElementSet& s) {
  require_inside(x, s);
  ElementSet kept = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = kept.begin(); it != kept.end();) {
      const auto& succ = x.successors(*it);
      const bool escapes =
          std::any_of(succ.begin(), succ.end(), [&](const Element& l) { return !kept.count(l); });
      if (escapes) {
        it = kept.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return Subcoalgebra(x, std::move(kept));
}

ElementSet interior(const Coalgebra& x, const ElementSet& s) {
  require_topology(x);
  return cogenerated_inside(x, s).subset();
}

ElementSet closure(const Coalgebra& x, const ElementSet& s) {
  require_topology(x);
  require_inside(x, s);
  return complement(x, interior(x, complement(x, s)));
}

bool is_dense(const Coalgebra& x, const ElementSet& s) {
  return closure(x, s).size() == x.size();
}

std::vector<ElementSet> open_sets(const Coalgebra& x, std::size_t limit) {
  require_topology(x);
  const auto base = basis(x);
  std::set<ElementSet> found{ElementSet{}};
  std::deque<ElementSet> todo{ElementSet{}};
  while (!todo.empty()) {
    auto open = std::move(todo.front());
    todo.pop_front();
    for (const auto& [e, nbhd] : base) {
      if (open.count(e)) continue;
      ElementSet bigger = open;
      bigger.insert(nbhd.begin(), nbhd.end());
      if (found.insert(bigger).second) {
        if (found.size() > limit)
          throw Error(ErrorKind::EnumerationLimitExceeded,
                      "more than " + std::to_string(limit) + " open sets");
        todo.push_back(std::move(bigger));
      }
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  return out;
}

std::vector<ElementSet> connected_components(const Coalgebra& x) {
  require_topology(x);
  std::vector<Element> elems(x.carrier().begin(), x.carrier().end());
  std::map<Element, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<std::size_t> parent(elems.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& l : x.successors(elems[i])) parent[find(i)] = find(index.at(l));

  std::map<std::size_t, ElementSet> blocks;
  for (std::size_t i = 0; i < elems.size(); ++i) blocks[find(i)].insert(elems[i]);
  std::vector<ElementSet> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Coalgebra& x) { return connected_components(x).size() == 1; }

bool is_irreducible(const Coalgebra& x) {
  require_topology(x);
  const auto base = basis(x);
  for (const auto& [a, na] : base)
    for (const auto& [b, nb] : base)
      if (disjoint(na, nb)) return false;
  return true;
}

bool is_hausdorff(const Coalgebra& x) {
  require_topology(x);
  const auto base = basis(x);
  for (const auto& [a, na] : base)
    for (const auto& [b, nb] : base)
      if (a < b && !disjoint(na, nb)) return false;
  return true;
}

Factorization epi_mono_factorize(const Morphism& f) {
  require_morphism(f);
  Subcoalgebra img(f.dst, image(f));
  Morphism epi{f.src, img.as_coalgebra(), f.map};
  return {std::move(epi), img, img.inclusion()};
}

Subcoalgebra preimage(const Morphism& f, const Subcoalgebra& u) {
  if (!(u.parent() == f.dst))
    throw Error(ErrorKind::ObjectMismatch, "subcoalgebra does not live in the codomain");
  ElementSet pre;
  for (const auto& [a, b] : f.map)
    if (u.subset().count(b)) pre.insert(a);
  if (!is_subcoalgebra(f.src, pre))
    throw Error(ErrorKind::InvariantViolation, "preimage of a subcoalgebra is not closed");
  return Subcoalgebra(f.src, std::move(pre));
}

}  // namespace coalg
