#include "coalg/limits.hpp"

#include <algorithm>

#include "coalg/error.hpp"
#include "coalg/random.hpp"

namespace coalg {

Element coproduct_id(std::size_t index, const Element& e) {
  return std::to_string(index) + "." + e;
}

CoproductWitness coproduct(const Functor& functor, const std::vector<Coalgebra>& summands) {
  ElementSet carrier;
  std::map<Element, Term> structure;
  std::vector<ElementMap> tags(summands.size());
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& x = summands[k];
    if (!(x.functor() == functor))
      throw Error(ErrorKind::FunctorMismatch, "summand " + std::to_string(k) + " has functor " +
                                                  x.functor().to_string());
    for (const auto& e : x.carrier()) tags[k].emplace(e, coproduct_id(k, e));
  }
  for (std::size_t k = 0; k < summands.size(); ++k) {
    for (const auto& [e, t] : summands[k].structure()) {
      carrier.insert(tags[k].at(e));
      structure.emplace(tags[k].at(e), apply_on_map(functor, tags[k], t));
    }
  }
  CoproductWitness w{summands,
                     Coalgebra(functor, std::move(carrier), std::move(structure),
                               TrivialPolicy::Allow),
                     {}};
  for (std::size_t k = 0; k < summands.size(); ++k)
    w.injections.push_back({summands[k], w.total, std::move(tags[k])});
  return w;
}

CoproductWitness coproduct(const std::vector<Coalgebra>& summands) {
  if (summands.empty())
    throw Error(ErrorKind::InvariantViolation, "empty coproduct needs an explicit functor");
  return coproduct(summands.front().functor(), summands);
}

Morphism cotuple(const CoproductWitness& w, const std::vector<Morphism>& legs) {
  if (legs.size() != w.summands.size() || legs.empty())
    throw Error(ErrorKind::ObjectMismatch, "one leg per summand is required");
  ElementMap map;
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (!(legs[k].src == w.summands[k]))
      throw Error(ErrorKind::ObjectMismatch, "leg " + std::to_string(k) + " does not start at its summand");
    if (!(legs[k].dst == legs[0].dst))
      throw Error(ErrorKind::CodomainMismatch, "legs have different codomains");
    require_morphism(legs[k]);
    for (const auto& [a, b] : legs[k].map) map.emplace(coproduct_id(k, a), b);
  }
  return {w.total, legs[0].dst, std::move(map)};
}

namespace {

void require_deterministic(const Functor& f) {
  if (!is_deterministic(f))
    throw Error(ErrorKind::NonDeterministicProduct,
                f.to_string() + " contains a powerset; its products need not be finite");
}

Element combine_pair(std::span<const Element> parts) { return pair_id(parts[0], parts[1]); }

}  // namespace

ProductWitness product(const Coalgebra& x, const Coalgebra& y) {
  if (!(x.functor() == y.functor()))
    throw Error(ErrorKind::FunctorMismatch,
                x.functor().to_string() + " vs " + y.functor().to_string());
  const auto& f = x.functor();
  require_deterministic(f);
  const auto pairs = largest_bisimulation(x, y);

  ElementSet carrier;
  std::map<Element, Term> structure;
  ElementMap p0, p1;
  for (const auto& [a, b] : pairs) {
    const std::vector<Term> terms{x.structure(a), y.structure(b)};
    auto zipped = zip_terms(f, terms, combine_pair);
    if (!zipped)
      throw Error(ErrorKind::InvariantViolation, "bisimilar pair (" + a + ", " + b + ") does not zip");
    auto id = pair_id(a, b);
    carrier.insert(id);
    structure.emplace(id, std::move(*zipped));
    p0.emplace(id, a);
    p1.emplace(id, b);
  }
  Coalgebra total(f, std::move(carrier), std::move(structure), TrivialPolicy::Allow);
  return {x, y, total, {total, x, std::move(p0)}, {total, y, std::move(p1)}};
}

Coalgebra power(const Coalgebra& x, std::size_t n) {
  require_deterministic(x.functor());
  if (n == 0) throw Error(ErrorKind::Unsupported, "power needs n >= 1");
  Coalgebra acc = x;
  for (std::size_t i = 1; i < n; ++i) acc = product(acc, x).total;
  if (!x.empty() && acc.empty())
    throw Error(ErrorKind::InvariantViolation, "power of a nonempty coalgebra is empty");
  return acc;
}

Morphism pair_total(const ProductWitness& w, const Morphism& f, const Morphism& g) {
  if (!(f.src == g.src)) throw Error(ErrorKind::ObjectMismatch, "pairing needs a common domain");
  if (!(f.dst == w.left) || !(g.dst == w.right))
    throw Error(ErrorKind::ObjectMismatch, "pairing legs do not land in the product factors");
  require_morphism(f);
  require_morphism(g);
  ElementMap map;
  for (const auto& t : f.src.carrier()) {
    auto id = pair_id(f.map.at(t), g.map.at(t));
    if (!w.total.contains(id))
      throw Error(ErrorKind::InvariantViolation, "pair " + id + " is not in the product");
    map.emplace(t, std::move(id));
  }
  Morphism h{f.src, w.total, std::move(map)};
  require_morphism(h);
  return h;
}

DistIso dist(const Coalgebra& x, const std::vector<Coalgebra>& ys) {
  const auto& f = x.functor();
  require_deterministic(f);
  auto sum = coproduct(f, ys);
  auto lhs = product(x, sum.total);
  std::vector<ProductWitness> parts;
  std::vector<Coalgebra> part_totals;
  for (const auto& y : ys) {
    parts.push_back(product(x, y));
    part_totals.push_back(parts.back().total);
  }
  auto rhs = coproduct(f, part_totals);

  // Tagged element of the sum -> (summand index, element).
  std::map<Element, std::pair<std::size_t, Element>> untag;
  for (std::size_t k = 0; k < sum.injections.size(); ++k)
    for (const auto& [e, tagged] : sum.injections[k].map) untag.emplace(tagged, std::make_pair(k, e));

  ElementMap forward, backward;
  for (const auto& id : lhs.total.carrier()) {
    const auto& a = lhs.p0.map.at(id);
    const auto& [k, b] = untag.at(lhs.p1.map.at(id));
    auto target = coproduct_id(k, pair_id(a, b));
    if (!rhs.total.contains(target))
      throw Error(ErrorKind::InvariantViolation, "distributivity target " + target + " missing");
    forward.emplace(id, target);
    backward.emplace(target, id);
  }
  if (backward.size() != rhs.total.size())
    throw Error(ErrorKind::InvariantViolation, "distributivity map is not onto");
  Morphism fwd{lhs.total, rhs.total, std::move(forward)};
  Morphism bwd{rhs.total, lhs.total, std::move(backward)};
  require_morphism(fwd);
  require_morphism(bwd);
  return {std::move(lhs), std::move(sum), std::move(parts), std::move(rhs), std::move(fwd),
          std::move(bwd)};
}

namespace {

bool witness_is_sound(const ProductWitness& w) {
  if (!(w.p0.src == w.total) || !(w.p1.src == w.total) || !(w.p0.dst == w.left) ||
      !(w.p1.dst == w.right))
    return false;
  if (!is_morphism(w.p0) || !is_morphism(w.p1)) return false;
  const auto pairs = largest_bisimulation(w.left, w.right);
  std::set<std::pair<Element, Element>> seen;
  for (const auto& t : w.total.carrier())
    if (!seen.emplace(w.p0.map.at(t), w.p1.map.at(t)).second) return false;  // not jointly monic
  return seen == pairs;
}

}  // namespace

bool verify_product_universal(const ProductWitness& w, std::size_t trials, std::uint64_t seed) {
  require_deterministic(w.total.functor());
  if (!witness_is_sound(w)) return false;
  gen::Rng rng(seed);
  const auto& f = w.total.functor();
  constexpr std::size_t kMorphismLimit = 4096;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Coalgebra t;
    switch (trial % 4) {
      case 0: t = w.left; break;
      case 1: t = w.right; break;
      case 2: t = gen::random_coalgebra(f, gen::below(rng, 4), rng, "t"); break;
      default:
        t = coproduct(f, {w.left, gen::random_coalgebra(f, gen::below(rng, 3), rng, "t")}).total;
    }
    std::vector<ElementMap> fs, gs;
    try {
      fs = all_morphisms(t, w.left, kMorphismLimit);
      gs = all_morphisms(t, w.right, kMorphismLimit);
    } catch (const Error&) {
      continue;
    }
    if (fs.empty() || gs.empty()) continue;
    Morphism fm{t, w.left, fs[gen::below(rng, fs.size())]};
    Morphism gm{t, w.right, gs[gen::below(rng, gs.size())]};
    Morphism h;
    try {
      h = pair_total(w, fm, gm);
    } catch (const Error&) {
      return false;
    }
    if (compose(w.p0, h).map != fm.map || compose(w.p1, h).map != gm.map) return false;

    // Uniqueness by exhaustion where the search space is small.
    try {
      std::size_t mediating = 0;
      for (const auto& cand : all_morphisms(t, w.total, kMorphismLimit)) {
        Morphism hm{t, w.total, cand};
        if (compose(w.p0, hm).map == fm.map && compose(w.p1, hm).map == gm.map) ++mediating;
      }
      if (mediating != 1) return false;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EnumerationLimitExceeded) throw;
    }
  }
  return true;
}

}  // namespace coalg
