#include "coalg/recursion.hpp"

#include <algorithm>

#include "coalg/error.hpp"

namespace coalg {

namespace {

void require_total(const Morphism& f, const char* what) {
  for (const auto& x : f.src.carrier()) {
    auto it = f.map.find(x);
    if (it == f.map.end())
      throw Error(ErrorKind::NotTotal, std::string(what) + " is not defined at '" + x + "'");
    if (!f.dst.contains(it->second))
      throw Error(ErrorKind::NotTotal,
                  std::string(what) + " sends '" + x + "' outside its codomain");
  }
  if (f.map.size() != f.src.size())
    throw Error(ErrorKind::NotTotal, std::string(what) + " has entries outside its domain");
}

void check_iteration_inputs(const Morphism& f, const Subcoalgebra& u) {
  if (!(f.src == f.dst) || !(u.parent() == f.src))
    throw Error(ErrorKind::ObjectMismatch,
                "iteration needs an endomorphism of the coalgebra containing U");
  require_total(f, "f");
  require_morphism(f);
  for (const auto& e : u.subset())
    if (f.map.at(e) != e)
      throw Error(ErrorKind::NotFixing, "f moves '" + e + "' to '" + f.map.at(e) + "'");
}

}  // namespace

std::vector<ElementSet> preimage_layers(const Morphism& f, const Subcoalgebra& u) {
  check_iteration_inputs(f, u);
  std::vector<ElementSet> layers{u.subset()};
  for (std::size_t n = 1; n <= f.src.size(); ++n) {
    ElementSet next;
    for (const auto& [a, b] : f.map)
      if (layers.back().count(b)) next.insert(a);
    if (!std::includes(next.begin(), next.end(), layers.back().begin(), layers.back().end()))
      throw Error(ErrorKind::InvariantViolation,
                  "preimage layer " + std::to_string(n) + " does not contain its predecessor");
    layers.push_back(std::move(next));
  }
  return layers;
}

PartialMorphism iterate(const Morphism& f, const Subcoalgebra& u) {
  preimage_layers(f, u);  // validates inputs and asserts nesting
  const auto bound = f.src.size();
  ElementSet dom;
  ElementMap map;
  for (const auto& x : f.src.carrier()) {
    Element cur = x;
    for (std::size_t n = 0; n <= bound; ++n) {
      if (u.subset().count(cur)) {
        dom.insert(x);
        map.emplace(x, cur);
        break;
      }
      cur = f.map.at(cur);
    }
  }
  return PartialMorphism::make(f.src, f.src, std::move(dom), std::move(map));
}

PartialMorphism oracle_iterate(const Morphism& f, const Subcoalgebra& u) {
  check_iteration_inputs(f, u);
  const auto& functor = f.src.functor();
  if (!preserves_products(functor))
    throw Error(ErrorKind::Unsupported,
                functor.to_string() + " does not preserve products; orbit words have no structure");
  const auto combine = [](std::span<const Element> parts) { return tuple_id(parts); };

  ElementSet carrier;
  std::map<Element, Term> structure;
  ElementMap first, last;
  for (const auto& x : f.src.carrier()) {
    std::vector<Element> word{x};
    for (std::size_t n = 1; n <= f.src.size(); ++n) {
      word.push_back(f.map.at(word.back()));
      if (!u.subset().count(word.back())) continue;
      std::vector<Term> terms;
      for (const auto& e : word) terms.push_back(f.src.structure(e));
      auto zipped = zip_terms(functor, terms, combine);
      if (!zipped)
        throw Error(ErrorKind::Unsupported, "orbit of '" + x + "' does not zip");
      auto id = tuple_id(word);
      carrier.insert(id);
      structure.emplace(id, std::move(*zipped));
      first.emplace(id, word.front());
      last.emplace(id, word.back());
    }
  }
  Coalgebra words(functor, std::move(carrier), std::move(structure), TrivialPolicy::Allow);
  return divide(embed_total({words, f.src, std::move(last)}),
                embed_total({words, f.src, std::move(first)}));
}

// ---------------------------------------------------------------------------
// Turing data

Element cont(const Element& w) { return coproduct_id(0, w); }
Element halt(const Element& y) { return coproduct_id(1, y); }

TuringDatum make_datum(Coalgebra x, Coalgebra w, Coalgebra y, ElementMap u, ElementMap v) {
  if (!(x.functor() == w.functor()) || !(x.functor() == y.functor()))
    throw Error(ErrorKind::FunctorMismatch, "datum objects have different functors");
  auto wy = coproduct(x.functor(), {w, y});
  Morphism um{x, w, std::move(u)};
  Morphism vm{w, wy.total, std::move(v)};
  require_total(um, "u");
  require_total(vm, "v");
  require_morphism(um);
  require_morphism(vm);
  return {std::move(x), std::move(w), std::move(y), std::move(um), std::move(vm), std::move(wy)};
}

PartialMorphism turing_development(const TuringDatum& d) {
  const auto start = embed_total(compose(d.wy.injections[0], d.u));
  const auto step = cotuple(d.wy, {d.v, d.wy.injections[1]});
  const Subcoalgebra halted(d.wy.total, image(d.wy.injections[1]));
  const auto run = iterate(step, halted);
  const auto output = cotuple(d.wy, std::vector<PartialMorphism>{zero(d.w, d.y), identity_partial(d.y)});
  return compose(output, compose(run, start));
}

namespace {

// A step of v decoded into (halted?, element).
struct Step {
  bool halted;
  Element target;
};

Step decode(const TuringDatum& d, const Element& w) {
  const auto& tagged = d.v.map.at(w);
  for (std::size_t k = 0; k < 2; ++k)
    for (const auto& [e, t] : d.wy.injections[k].map)
      if (t == tagged) return {k == 1, e};
  throw Error(ErrorKind::InvariantViolation, "step '" + tagged + "' is not a tagged element");
}

}  // namespace

Trace run_trace(const TuringDatum& d, const Element& x) {
  if (!d.x.contains(x)) throw Error(ErrorKind::UnknownElement, "'" + x + "' is not an input");
  Trace trace{x, {}, std::nullopt, std::nullopt};
  std::map<Element, std::size_t> index;
  Element w = d.u.map.at(x);
  for (;;) {
    index.emplace(w, trace.visited.size());
    trace.visited.push_back(w);
    auto s = decode(d, w);
    if (s.halted) {
      trace.halted = s.target;
      return trace;
    }
    if (auto it = index.find(s.target); it != index.end()) {
      trace.cycle_start = it->second;
      return trace;
    }
    w = s.target;
  }
}

TuringDatum datum_seq(const TuringDatum& d1, const TuringDatum& d2) {
  if (!(d1.y == d2.x))
    throw Error(ErrorKind::ObjectMismatch, "output of the first datum is not the input of the second");
  const auto states = coproduct(d1.x.functor(), {d1.w, d2.w});
  ElementMap u, v;
  for (const auto& [x, w] : d1.u.map) u.emplace(x, coproduct_id(0, w));
  for (const auto& w : d1.w.carrier()) {
    auto s = decode(d1, w);
    v.emplace(coproduct_id(0, w), cont(s.halted ? coproduct_id(1, d2.u.map.at(s.target))
                                                : coproduct_id(0, s.target)));
  }
  for (const auto& w : d2.w.carrier()) {
    auto s = decode(d2, w);
    v.emplace(coproduct_id(1, w), s.halted ? halt(s.target) : cont(coproduct_id(1, s.target)));
  }
  return make_datum(d1.x, states.total, d2.y, std::move(u), std::move(v));
}

TuringDatum datum_coprod(const TuringDatum& d1, const TuringDatum& d2) {
  const auto& f = d1.x.functor();
  const auto xs = coproduct(f, {d1.x, d2.x});
  const auto ws = coproduct(f, {d1.w, d2.w});
  const auto ys = coproduct(f, {d1.y, d2.y});
  ElementMap u, v;
  std::size_t k = 0;
  for (const auto* d : {&d1, &d2}) {
    for (const auto& [x, w] : d->u.map) u.emplace(coproduct_id(k, x), coproduct_id(k, w));
    for (const auto& w : d->w.carrier()) {
      auto s = decode(*d, w);
      v.emplace(coproduct_id(k, w), s.halted ? halt(coproduct_id(k, s.target))
                                             : cont(coproduct_id(k, s.target)));
    }
    ++k;
  }
  return make_datum(xs.total, ws.total, ys.total, std::move(u), std::move(v));
}

TuringDatum datum_box(const TuringDatum& d1, const TuringDatum& d2) {
  const auto px = product(d1.x, d2.x);
  const auto py = product(d1.y, d2.y);
  const auto left = product(d1.w, d2.x);
  const auto right = product(d1.y, d2.w);
  const auto states = coproduct(d1.x.functor(), {left.total, right.total});
  ElementMap u, v;
  for (const auto& id : px.total.carrier())
    u.emplace(id, coproduct_id(0, pair_id(d1.u.map.at(px.p0.map.at(id)), px.p1.map.at(id))));
  for (const auto& id : left.total.carrier()) {
    const auto& x2 = left.p1.map.at(id);
    auto s = decode(d1, left.p0.map.at(id));
    v.emplace(coproduct_id(0, id),
              cont(s.halted ? coproduct_id(1, pair_id(s.target, d2.u.map.at(x2)))
                            : coproduct_id(0, pair_id(s.target, x2))));
  }
  for (const auto& id : right.total.carrier()) {
    const auto& y1 = right.p0.map.at(id);
    auto s = decode(d2, right.p1.map.at(id));
    v.emplace(coproduct_id(1, id), s.halted ? halt(pair_id(y1, s.target))
                                            : cont(coproduct_id(1, pair_id(y1, s.target))));
  }
  return make_datum(px.total, states.total, py.total, std::move(u), std::move(v));
}

IterationLaws iteration_product_laws(const Morphism& f, const Subcoalgebra& u, const Morphism& g,
                                     const Subcoalgebra& v) {
  IterationLaws laws;
  const auto itf = iterate(f, u);
  const auto itg = iterate(g, v);
  const auto& functor = f.src.functor();

  const auto sum = coproduct(functor, {f.src, g.src});
  ElementMap fg;
  ElementSet uv;
  std::size_t k = 0;
  for (const auto& [m, s] : {std::make_pair(&f, &u), std::make_pair(&g, &v)}) {
    for (const auto& [a, b] : m->map) fg.emplace(coproduct_id(k, a), coproduct_id(k, b));
    for (const auto& e : s->subset()) uv.insert(coproduct_id(k, e));
    ++k;
  }
  laws.coproduct_law = iterate({sum.total, sum.total, std::move(fg)},
                               Subcoalgebra(sum.total, std::move(uv))) == coprod(itf, itg);

  if (is_deterministic(functor)) {
    laws.product_checked = true;
    const auto prod = product(f.src, g.src);
    ElementMap fxg;
    ElementSet uxv;
    for (const auto& id : prod.total.carrier()) {
      const auto& a = prod.p0.map.at(id);
      const auto& b = prod.p1.map.at(id);
      fxg.emplace(id, pair_id(f.map.at(a), g.map.at(b)));
      if (u.subset().count(a) && v.subset().count(b)) uxv.insert(id);
    }
    laws.product_law = iterate({prod.total, prod.total, std::move(fxg)},
                               Subcoalgebra(prod.total, std::move(uxv))) == box(itf, itg);
  }
  return laws;
}

}  // namespace coalg
