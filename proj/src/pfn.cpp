#include "coalg/pfn.hpp"

#include <algorithm>

#include "coalg/error.hpp"

namespace coalg {

PartialMorphism PartialMorphism::make(Coalgebra src, Coalgebra dst, ElementSet dom,
                                      ElementMap map) {
  if (!(src.functor() == dst.functor()))
    throw Error(ErrorKind::FunctorMismatch,
                src.functor().to_string() + " vs " + dst.functor().to_string());
  if (!is_subcoalgebra(src, dom))
    throw Error(ErrorKind::NotSubcoalgebra, "domain is not a subcoalgebra of the source");
  if (map.size() != dom.size())
    throw Error(ErrorKind::ValidationError, "map must be defined exactly on the domain");
  for (const auto& u : dom) {
    auto it = map.find(u);
    if (it == map.end())
      throw Error(ErrorKind::ValidationError, "map is not defined at '" + u + "'");
    if (!dst.contains(it->second))
      throw Error(ErrorKind::ValidationError,
                  "'" + u + "' is sent to '" + it->second + "' outside the target");
  }
  const auto& f = src.functor();
  for (const auto& u : dom) {
    if (!(apply_on_map(f, map, src.structure(u)) == dst.structure(map.at(u))))
      throw Error(ErrorKind::NotMorphism, "square fails at '" + u + "'");
  }
  return PartialMorphism(std::move(src), std::move(dst), std::move(dom), std::move(map));
}

PartialMorphism PartialMorphism::from_representative(const Morphism& mono, const Morphism& phi) {
  if (!(mono.src == phi.src))
    throw Error(ErrorKind::ObjectMismatch, "mono and map have different domains");
  require_morphism(mono);
  require_morphism(phi);
  ElementSet dom;
  ElementMap map;
  for (const auto& [u, x] : mono.map) {
    if (!dom.insert(x).second)
      throw Error(ErrorKind::NotPartialMono, "mono identifies two elements at '" + x + "'");
    map.emplace(x, phi.map.at(u));
  }
  return make(mono.dst, phi.dst, std::move(dom), std::move(map));
}

std::optional<Element> PartialMorphism::at(const Element& x) const {
  auto it = map_.find(x);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

PartialMorphism embed_total(const Morphism& f) {
  require_morphism(f);
  return PartialMorphism::make(f.src, f.dst, f.src.carrier(), f.map);
}

PartialMorphism identity_partial(const Coalgebra& x) { return embed_total(identity(x)); }

PartialMorphism partial_identity(const Subcoalgebra& s) {
  ElementMap map;
  for (const auto& e : s.subset()) map.emplace(e, e);
  return PartialMorphism::make(s.parent(), s.parent(), s.subset(), std::move(map));
}

PartialMorphism compose(const PartialMorphism& g, const PartialMorphism& f) {
  if (!(f.dst() == g.src()))
    throw Error(ErrorKind::ObjectMismatch,
                "codomain of the first partial morphism is not the domain of the second");
  ElementSet dom;
  ElementMap map;
  for (const auto& [u, v] : f.map()) {
    if (auto w = g.at(v)) {
      dom.insert(u);
      map.emplace(u, *w);
    }
  }
  return PartialMorphism::make(f.src(), g.dst(), std::move(dom), std::move(map));
}

PartialMorphism zero(const Coalgebra& x, const Coalgebra& y) {
  return PartialMorphism::make(x, y, {}, {});
}

bool is_zero(const PartialMorphism& f) { return f.domain().empty(); }

bool equal(const PartialMorphism& f, const PartialMorphism& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst()))
    throw Error(ErrorKind::ObjectMismatch, "partial morphisms have different source or target");
  return f.domain() == g.domain() && f.map() == g.map();
}

std::vector<PartialMorphism> all_partial_morphisms(const Coalgebra& x, const Coalgebra& y,
                                                   std::size_t limit) {
  std::vector<PartialMorphism> out;
  const auto opens =
      x.empty() ? std::vector<ElementSet>{ElementSet{}} : open_sets(x, limit);
  for (const auto& s : opens) {
    const auto sub = restrict(x, s);
    for (auto& m : all_morphisms(sub, y, limit - out.size())) {
      if (out.size() == limit)
        throw Error(ErrorKind::EnumerationLimitExceeded,
                    "more than " + std::to_string(limit) + " partial morphisms");
      out.push_back(PartialMorphism::make(x, y, s, std::move(m)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Near product

PartialMorphism box(const PartialMorphism& f, const PartialMorphism& g) {
  const auto ps = product(f.src(), g.src());
  const auto pd = product(f.dst(), g.dst());
  ElementSet dom;
  ElementMap map;
  for (const auto& id : ps.total.carrier()) {
    auto a = f.at(ps.p0.map.at(id));
    auto b = g.at(ps.p1.map.at(id));
    if (!a || !b) continue;
    auto target = pair_id(*a, *b);
    if (!pd.total.contains(target))
      throw Error(ErrorKind::InvariantViolation, "image pair " + target + " is not in the product");
    dom.insert(id);
    map.emplace(id, std::move(target));
  }
  return PartialMorphism::make(ps.total, pd.total, std::move(dom), std::move(map));
}

PartialMorphism diag(const Coalgebra& x) {
  const auto p = product(x, x);
  ElementMap map;
  for (const auto& e : x.carrier()) map.emplace(e, pair_id(e, e));
  return PartialMorphism::make(x, p.total, x.carrier(), std::move(map));
}

PartialMorphism proj0(const Coalgebra& x, const Coalgebra& y) {
  return embed_total(product(x, y).p0);
}

PartialMorphism proj1(const Coalgebra& x, const Coalgebra& y) {
  return embed_total(product(x, y).p1);
}

PartialMorphism pair(const PartialMorphism& f, const PartialMorphism& g) {
  if (!(f.src() == g.src()))
    throw Error(ErrorKind::ObjectMismatch, "pairing needs a common source");
  return compose(box(f, g), diag(f.src()));
}

PartialMorphism assoc_component(const Coalgebra& x, const Coalgebra& y, const Coalgebra& z) {
  const auto xy = product(x, y).total;
  const auto outer0 = proj0(xy, z);
  const auto a = compose(proj0(x, y), outer0);
  const auto b = compose(proj1(x, y), outer0);
  const auto c = proj1(xy, z);
  return pair(a, pair(b, c));
}

PartialMorphism twist_component(const Coalgebra& x, const Coalgebra& y) {
  return pair(proj1(x, y), proj0(x, y));
}

bool pentagon_holds(const Coalgebra& w, const Coalgebra& x, const Coalgebra& y,
                    const Coalgebra& z) {
  const auto wx = product(w, x).total;
  const auto xy = product(x, y).total;
  const auto yz = product(y, z).total;
  const auto top = compose(assoc_component(w, x, yz), assoc_component(wx, y, z));
  const auto bottom =
      compose(box(identity_partial(w), assoc_component(x, y, z)),
              compose(assoc_component(w, xy, z),
                      box(assoc_component(w, x, y), identity_partial(z))));
  return top == bottom;
}

bool hexagon_holds(const Coalgebra& x, const Coalgebra& y, const Coalgebra& z) {
  const auto yz = product(y, z).total;
  const auto left = compose(assoc_component(y, z, x),
                            compose(twist_component(x, yz), assoc_component(x, y, z)));
  const auto right =
      compose(box(identity_partial(y), twist_component(x, z)),
              compose(assoc_component(y, x, z),
                      box(twist_component(x, y), identity_partial(z))));
  return left == right;
}

Subcoalgebra dom_by_pairing(const PartialMorphism& f) {
  const auto composite = compose(proj0(f.src(), f.dst()), pair(identity_partial(f.src()), f));
  return Subcoalgebra(f.src(), composite.domain());
}

// ---------------------------------------------------------------------------
// Coproducts

PartialMorphism cotuple(const CoproductWitness& w, const std::vector<PartialMorphism>& legs) {
  if (legs.size() != w.summands.size() || legs.empty())
    throw Error(ErrorKind::ObjectMismatch, "one leg per summand is required");
  ElementSet dom;
  ElementMap map;
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (!(legs[k].src() == w.summands[k]))
      throw Error(ErrorKind::ObjectMismatch,
                  "leg " + std::to_string(k) + " does not start at its summand");
    if (!(legs[k].dst() == legs[0].dst()))
      throw Error(ErrorKind::CodomainMismatch, "legs have different codomains");
    for (const auto& [a, b] : legs[k].map()) {
      dom.insert(coproduct_id(k, a));
      map.emplace(coproduct_id(k, a), b);
    }
  }
  return PartialMorphism::make(w.total, legs[0].dst(), std::move(dom), std::move(map));
}

PartialMorphism coprod(const PartialMorphism& f, const PartialMorphism& g) {
  const auto& functor = f.src().functor();
  const auto ws = coproduct(functor, {f.src(), g.src()});
  const auto wd = coproduct(functor, {f.dst(), g.dst()});
  ElementSet dom;
  ElementMap map;
  std::size_t k = 0;
  for (const auto* part : {&f, &g}) {
    for (const auto& [a, b] : part->map()) {
      dom.insert(coproduct_id(k, a));
      map.emplace(coproduct_id(k, a), coproduct_id(k, b));
    }
    ++k;
  }
  return PartialMorphism::make(ws.total, wd.total, std::move(dom), std::move(map));
}

// ---------------------------------------------------------------------------
// Domains and ranges

Subcoalgebra dom(const PartialMorphism& f) { return Subcoalgebra(f.src(), f.domain()); }

Subcoalgebra ran(const PartialMorphism& f) {
  ElementSet image;
  for (const auto& [u, v] : f.map()) image.insert(v);
  return Subcoalgebra(f.dst(), std::move(image));
}

namespace {

void require_same_parent(const Subcoalgebra& a, const Subcoalgebra& b) {
  if (!(a.parent() == b.parent()))
    throw Error(ErrorKind::ObjectMismatch, "subcoalgebras of different coalgebras");
}

}  // namespace

Subcoalgebra meet(const Subcoalgebra& a, const Subcoalgebra& b) {
  require_same_parent(a, b);
  ElementSet out;
  std::set_intersection(a.subset().begin(), a.subset().end(), b.subset().begin(),
                        b.subset().end(), std::inserter(out, out.end()));
  return Subcoalgebra(a.parent(), std::move(out));
}

Subcoalgebra join(const Subcoalgebra& a, const Subcoalgebra& b) {
  require_same_parent(a, b);
  ElementSet out = a.subset();
  out.insert(b.subset().begin(), b.subset().end());
  return Subcoalgebra(a.parent(), std::move(out));
}

Subcoalgebra meet_by_composition(const Subcoalgebra& a, const Subcoalgebra& b) {
  require_same_parent(a, b);
  return dom(compose(partial_identity(b), partial_identity(a)));
}

Subcoalgebra join_by_cotuple(const Subcoalgebra& a, const Subcoalgebra& b) {
  require_same_parent(a, b);
  const auto w = coproduct(a.parent().functor(), {a.as_coalgebra(), b.as_coalgebra()});
  const auto c = cotuple(w, {a.inclusion(), b.inclusion()});
  return Subcoalgebra(a.parent(), image(c));
}

Subcoalgebra union_of_domains(const Coalgebra& parent, const std::vector<Subcoalgebra>& family) {
  Subcoalgebra acc(parent, {});
  for (const auto& s : family) acc = join(acc, s);
  return acc;
}

bool is_total(const PartialMorphism& f) { return f.domain().size() == f.src().size(); }

bool is_weakly_total(const PartialMorphism& f) { return is_dense(f.src(), f.domain()); }

namespace {

std::optional<std::pair<Element, Element>> injectivity_witness(const PartialMorphism& f) {
  std::map<Element, Element> seen;
  for (const auto& [u, v] : f.map()) {
    auto [it, fresh] = seen.emplace(v, u);
    if (!fresh) return std::make_pair(it->second, u);
  }
  return std::nullopt;
}

}  // namespace

bool is_partial_mono(const PartialMorphism& f) { return !injectivity_witness(f); }

PartialMorphism section(const PartialMorphism& f) {
  if (auto w = injectivity_witness(f))
    throw Error(ErrorKind::NotPartialMono,
                "'" + w->first + "' and '" + w->second + "' have the same image");
  ElementSet dom;
  ElementMap map;
  for (const auto& [u, v] : f.map()) {
    dom.insert(v);
    map.emplace(v, u);
  }
  return PartialMorphism::make(f.dst(), f.src(), std::move(dom), std::move(map));
}

PartialMorphism divide(const PartialMorphism& psi, const PartialMorphism& phi) {
  if (!(psi.src() == phi.src()))
    throw Error(ErrorKind::ObjectMismatch, "divisor and dividend have different sources");
  ElementMap table;
  std::map<Element, Element> origin;
  for (const auto& [x, y] : phi.map()) {
    auto z = psi.at(x);
    if (!z)
      throw Error(ErrorKind::DomainNotContained,
                  "'" + x + "' is in the domain of the divisor but not of the dividend");
    auto [it, fresh] = table.emplace(y, *z);
    if (!fresh && it->second != *z)
      throw Error(ErrorKind::NotDivisible, "'" + origin.at(y) + "' and '" + x +
                                               "' have the same image '" + y +
                                               "' but different values");
    origin.emplace(y, x);
  }
  return PartialMorphism::make(phi.dst(), psi.dst(), ran(phi).subset(), std::move(table));
}

}  // namespace coalg
