#include <algorithm>

#include "coalg/error.hpp"
#include "coalg/laws.hpp"

namespace coalg::laws {

Functor stream_functor() {
  return Functor::prod(Functor::constant({"0", "1"}), Functor::id());
}

std::vector<Functor> category_battery() {
  return {Functor::constant({"0", "1"}), Functor::id(), stream_functor(),
          Functor::exp({"0", "1"}, Functor::id()), Functor::pow(Functor::id())};
}

std::vector<Functor> hypothesis_battery() {
  const auto id = Functor::id();
  return {Functor::constant({"c"}),
          Functor::constant({"0", "1"}),
          id,
          stream_functor(),
          Functor::sum(id, Functor::constant({"*"})),
          Functor::exp({"0", "1"}, id),
          Functor::pow(id),
          Functor::prod(id, id),
          Functor::pow(Functor::prod(Functor::constant({"a", "b"}), id))};
}

Coalgebra two_point_example() {
  return Coalgebra(Functor::id(), {"x", "y"}, {{"x", Term::leaf("y")}, {"y", Term::leaf("y")}});
}

Coalgebra plain_set(const std::vector<Element>& points) {
  std::map<Element, Term> structure;
  for (const auto& p : points) structure.emplace(p, Term::leaf(p));
  return Coalgebra(Functor::id(), ElementSet(points.begin(), points.end()), std::move(structure));
}

TuringDatum mod2_datum() {
  const auto x = plain_set({"0", "1", "2", "3"});
  return make_datum(x, x, x, {{"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "3"}},
                    {{"0", halt("0")}, {"1", halt("1")}, {"2", cont("0")}, {"3", cont("1")}});
}

std::array<Coalgebra, 3> coherence_triple() {
  const auto f = stream_functor();
  auto step = [](const char* out, const char* next) {
    return Term::pair(Term::constant(out), Term::leaf(next));
  };
  Coalgebra a(f, {"a0", "a1"}, {{"a0", step("0", "a1")}, {"a1", step("1", "a0")}});
  Coalgebra b(f, {"b0", "b1", "b2"},
              {{"b0", step("1", "b1")}, {"b1", step("0", "b0")}, {"b2", step("0", "b0")}});
  Coalgebra c(f, {"c0", "c1", "c2"},
              {{"c0", step("0", "c1")}, {"c1", step("1", "c2")}, {"c2", step("0", "c1")}});
  return {a, b, c};
}

// ---------------------------------------------------------------------------

bool weakly_total_by_definition(const PartialMorphism& f, const std::vector<Coalgebra>& probes) {
  for (const auto& w : probes) {
    if (!(w.functor() == f.src().functor())) continue;
    for (const auto& phi : all_partial_morphisms(w, f.src()))
      if (is_zero(compose(f, phi)) && !is_zero(phi)) return false;
  }
  return true;
}

bool partial_mono_by_definition(const PartialMorphism& f, const std::vector<Coalgebra>& probes) {
  const auto restrict_to_dom = partial_identity(dom(f));
  for (const auto& w : probes) {
    if (!(w.functor() == f.src().functor())) continue;
    // Group the probes theta by f theta; each group must agree on (dom f) theta.
    std::map<std::pair<ElementSet, ElementMap>, PartialMorphism> seen;
    for (const auto& theta : all_partial_morphisms(w, f.src())) {
      const auto image = compose(f, theta);
      const auto restricted = compose(restrict_to_dom, theta);
      auto [it, fresh] = seen.emplace(std::make_pair(image.domain(), image.map()), restricted);
      if (!fresh && !(it->second == restricted)) return false;
    }
  }
  return true;
}

ElementSet iterate_domain_by_preimages(const ElementMap& f, const ElementSet& u,
                                       std::size_t steps) {
  ElementSet layer = u;
  ElementSet all = u;
  for (std::size_t n = 0; n < steps; ++n) {
    ElementSet next;
    for (const auto& [a, b] : f)
      if (layer.count(b)) next.insert(a);
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

std::vector<ElementSet> opens_by_subsets(const Coalgebra& x) {
  const std::vector<Element> points(x.carrier().begin(), x.carrier().end());
  if (points.size() > 16)
    throw Error(ErrorKind::EnumerationLimitExceeded, "too many subsets to test");
  std::vector<ElementSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << points.size()); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (mask >> i & 1) s.insert(points[i]);
    bool closed = true;
    for (const auto& e : s)
      for (const auto& l : leaves(x.structure(e)))
        if (!s.count(l)) closed = false;
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<Element> points(const char* prefix, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Every non-decreasing map {0..n-1} -> {0..m-1}.
void monotone_maps(std::size_t n, std::size_t m, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = cur.empty() ? 0 : cur.back(); v < m; ++v) {
    cur.push_back(v);
    monotone_maps(n, m, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PullbackSquare> pullback_squares(std::size_t max_size) {
  std::vector<PullbackSquare> out;
  for (std::size_t nd = 1; nd <= max_size; ++nd) {
    const auto d = points("d", nd);
    for (std::size_t nb = 1; nb <= max_size; ++nb) {
      const auto b = points("b", nb);
      std::vector<std::vector<std::size_t>> fs;
      std::vector<std::size_t> cur;
      monotone_maps(nb, nd, cur, fs);
      for (std::size_t nc = 1; nc <= max_size; ++nc) {
        const auto c = points("c", nc);
        std::vector<std::vector<std::size_t>> gs;
        monotone_maps(nc, nd, cur, gs);
        for (const auto& fv : fs) {
          for (const auto& gv : gs) {
            ElementMap f, g;
            for (std::size_t i = 0; i < nb; ++i) f.emplace(b[i], d[fv[i]]);
            for (std::size_t i = 0; i < nc; ++i) g.emplace(c[i], d[gv[i]]);
            auto sq = make_pullback(ElementSet(b.begin(), b.end()), ElementSet(c.begin(), c.end()),
                                    ElementSet(d.begin(), d.end()), f, g);
            if (sq.apex.size() <= max_size) out.push_back(std::move(sq));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace coalg::laws
