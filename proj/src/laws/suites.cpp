#include <algorithm>
#include <functional>

#include "coalg/error.hpp"
#include "coalg/laws.hpp"

namespace coalg::laws {

namespace {

using gen::below;
using gen::Rng;

std::uint64_t mix(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull ^ (seed * 0x9e3779b97f4a7c15ull);
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Case {
 public:
  Case(std::string name, std::uint64_t seed) : rng(mix(seed, name)) { result.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok && result.failures++ == 0) result.first_failure = what;
  }

  void fail(const std::string& what) { check(false, what); }

  Rng rng;
  CaseResult result;
};

using Body = std::function<void(Case&)>;

void run_case(std::vector<CaseResult>& out, const std::string& name, std::uint64_t seed,
              const Body& body) {
  Case c(name, seed);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("unexpected exception: ") + e.what());
  }
  out.push_back(std::move(c.result));
}

std::string label(const Functor& f) { return f.to_string(); }

std::string show(const ElementSet& s) {
  std::string out = "{";
  for (const auto& e : s) out += (out.size() > 1 ? "," : "") + e;
  return out + "}";
}

Coalgebra small(const Functor& f, Rng& rng, std::size_t max, const std::string& prefix = "s") {
  return gen::random_coalgebra(f, below(rng, max + 1), rng, prefix);
}

// Next object of a composable chain: random, or the previous one plus a summand.
Coalgebra next_object(const Functor& f, const Coalgebra& prev, Rng& rng, const std::string& prefix) {
  const auto extra = below(rng, 2);
  if (below(rng, 2) || prev.size() + extra > 4) return small(f, rng, 4, prefix);
  return coproduct(f, {prev, gen::random_coalgebra(f, extra, rng, prefix)}).total;
}

std::vector<Functor> deterministic(const std::vector<Functor>& fs) {
  std::vector<Functor> out;
  for (const auto& f : fs)
    if (is_deterministic(f)) out.push_back(f);
  return out;
}

PartialMorphism table_compose(const PartialMorphism& g, const PartialMorphism& f) {
  ElementSet dom;
  ElementMap map;
  for (const auto& u : f.src().carrier()) {
    auto it = f.map().find(u);
    if (it == f.map().end()) continue;
    auto jt = g.map().find(it->second);
    if (jt == g.map().end()) continue;
    dom.insert(u);
    map.emplace(u, jt->second);
  }
  return PartialMorphism::make(f.src(), g.dst(), std::move(dom), std::move(map));
}

// ---------------------------------------------------------------------------
// category

void suite_category(std::uint64_t seed, std::size_t trials, std::vector<CaseResult>& out) {
  for (const auto& f : category_battery()) {
    const auto name = label(f);
    run_case(out, "associativity " + name, seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto a = small(f, c.rng, 4, "a");
        auto b = next_object(f, a, c.rng, "b");
        auto cc = next_object(f, b, c.rng, "c");
        auto d = next_object(f, cc, c.rng, "d");
        auto p = gen::random_partial_morphism(a, b, c.rng);
        auto q = gen::random_partial_morphism(b, cc, c.rng);
        auto r = gen::random_partial_morphism(cc, d, c.rng);
        c.check(compose(r, compose(q, p)) == compose(compose(r, q), p), "h(gf) != (hg)f");
      }
    });
    run_case(out, "identity " + name, seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto a = small(f, c.rng, 4, "a");
        auto b = next_object(f, a, c.rng, "b");
        auto p = gen::random_partial_morphism(a, b, c.rng);
        c.check(compose(identity_partial(b), p) == p, "1 f != f");
        c.check(compose(p, identity_partial(a)) == p, "f 1 != f");
      }
    });
    run_case(out, "zero " + name, seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto a = small(f, c.rng, 4, "a");
        auto b = next_object(f, a, c.rng, "b");
        auto cc = next_object(f, b, c.rng, "c");
        auto d = next_object(f, cc, c.rng, "d");
        auto p = gen::random_partial_morphism(a, b, c.rng);
        auto r = gen::random_partial_morphism(cc, d, c.rng);
        c.check(compose(r, compose(zero(b, cc), p)) == zero(a, d), "g 0 f != 0");
        c.check(is_zero(compose(zero(b, cc), p)) && is_zero(compose(r, zero(b, cc))),
                "zero does not absorb");
      }
    });
    run_case(out, "composition-table " + name, seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto a = small(f, c.rng, 4, "a");
        auto b = next_object(f, a, c.rng, "b");
        auto cc = next_object(f, b, c.rng, "c");
        auto p = gen::random_partial_morphism(a, b, c.rng);
        auto q = gen::random_partial_morphism(b, cc, c.rng);
        c.check(compose(q, p) == table_compose(q, p), "pullback composition differs from table walk");
      }
    });
    run_case(out, "embedding " + name, seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto a = small(f, c.rng, 3, "a");
        auto b = coproduct(f, {a, small(f, c.rng, 1, "b")}).total;
        auto cc = coproduct(f, {b, small(f, c.rng, 1, "c")}).total;
        const auto ab = all_morphisms(a, b, 4096);
        const auto bc = all_morphisms(b, cc, 4096);
        if (ab.empty() || bc.empty()) continue;
        Morphism m{a, b, ab[below(c.rng, ab.size())]};
        Morphism n{b, cc, bc[below(c.rng, bc.size())]};
        c.check(embed_total(compose(n, m)) == compose(embed_total(n), embed_total(m)),
                "embedding does not preserve composition");
        c.check(is_total(embed_total(m)), "embedded morphism is not total");
        Morphism m2{a, b, ab[below(c.rng, ab.size())]};
        c.check((embed_total(m) == embed_total(m2)) == (m.map == m2.map), "embedding is not faithful");
      }
    });
  }
  for (const auto& f : deterministic(category_battery())) {
    run_case(out, "box-functoriality " + label(f), seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto a = small(f, c.rng, 3, "a");
        auto b = next_object(f, a, c.rng, "b");
        auto cc = next_object(f, b, c.rng, "c");
        auto a2 = small(f, c.rng, 3, "p");
        auto b2 = next_object(f, a2, c.rng, "q");
        auto c2 = next_object(f, b2, c.rng, "r");
        auto p = gen::random_partial_morphism(a, b, c.rng);
        auto q = gen::random_partial_morphism(b, cc, c.rng);
        auto p2 = gen::random_partial_morphism(a2, b2, c.rng);
        auto q2 = gen::random_partial_morphism(b2, c2, c.rng);
        c.check(box(compose(q, p), compose(q2, p2)) == compose(box(q, q2), box(p, p2)),
                "box is not functorial");
        c.check(is_zero(box(p, zero(a2, b2))), "box with zero is not zero");
        c.check(box(identity_partial(a), identity_partial(a2)) ==
                    identity_partial(product(a, a2).total),
                "box of identities is not the identity");
      }
    });
  }
}

// ---------------------------------------------------------------------------
// topology

bool same_family(std::vector<ElementSet> a, std::vector<ElementSet> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void suite_topology(std::uint64_t seed, std::size_t trials, std::vector<CaseResult>& out) {
  run_case(out, "two-point-counterexample", seed, [&](Case& c) {
    const auto x = two_point_example();
    const auto pid = partial_identity(Subcoalgebra(x, {"y"}));
    c.check(is_subcoalgebra(x, {"y"}), "{y} is not a subcoalgebra");
    c.check(is_dense(x, {"y"}), "{y} is not dense");
    c.check(is_weakly_total(pid), "partial identity on {y} is not weakly total");
    c.check(!is_total(pid), "partial identity on {y} is total");
    c.check(!is_subcoalgebra(x, {"x"}), "{x} is a subcoalgebra");
    c.check(same_family(open_sets(x), {{}, {"y"}, {"x", "y"}}), "opens are not {}, {y}, {x,y}");
    c.check(!is_hausdorff(x), "example is Hausdorff");
    c.check(is_irreducible(x), "example is not irreducible");
    std::vector<Coalgebra> probes;
    for (std::size_t n = 0; n <= 2; ++n)
      for (auto& w : gen::all_coalgebras(Functor::id(), n, "w")) probes.push_back(w);
    c.check(weakly_total_by_definition(pid, probes), "quantified weak totality fails");
  });

  run_case(out, "opens-oracle", seed, [&](Case& c) {
    const auto battery = category_battery();
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = battery[t % battery.size()];
      auto x = small(f, c.rng, 5);
      const auto opens = opens_by_subsets(x);
      c.check(same_family(open_sets(x), opens), "open_sets differs from subset enumeration");
      ElementSet s;
      for (const auto& e : x.carrier())
        if (below(c.rng, 2)) s.insert(e);
      ElementSet inner;
      ElementSet outer = x.carrier();
      for (const auto& o : opens) {
        if (std::includes(s.begin(), s.end(), o.begin(), o.end())) inner.insert(o.begin(), o.end());
        // closed set = complement of an open
        ElementSet closed;
        for (const auto& e : x.carrier())
          if (!o.count(e)) closed.insert(e);
        if (std::includes(closed.begin(), closed.end(), s.begin(), s.end())) {
          ElementSet meet;
          std::set_intersection(outer.begin(), outer.end(), closed.begin(), closed.end(),
                                std::inserter(meet, meet.end()));
          outer = std::move(meet);
        }
      }
      c.check(interior(x, s) == inner, "interior of " + show(s) + " differs");
      c.check(closure(x, s) == outer, "closure of " + show(s) + " differs");
      c.check(is_dense(x, s) == (outer == x.carrier()), "density of " + show(s) + " differs");
    }
  });

  run_case(out, "local-connectedness", seed, [&](Case& c) {
    const auto battery = category_battery();
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = battery[t % battery.size()];
      auto x = small(f, c.rng, 5);
      const auto comps = connected_components(x);
      ElementSet covered;
      std::vector<Coalgebra> parts;
      std::vector<Morphism> legs;
      for (const auto& k : comps) {
        ElementSet rest;
        for (const auto& e : x.carrier())
          if (!k.count(e)) rest.insert(e);
        c.check(is_subcoalgebra(x, k) && is_subcoalgebra(x, rest), "component " + show(k) + " is not clopen");
        c.check(!k.empty() && is_connected(restrict(x, k)), "component " + show(k) + " is not connected");
        ElementSet from_basis;
        for (const auto& e : k) {
          const auto g = generated(x, {e}).subset();
          c.check(std::includes(k.begin(), k.end(), g.begin(), g.end()),
                  "neighbourhood of " + e + " leaves its component");
          from_basis.insert(g.begin(), g.end());
        }
        c.check(from_basis == k, "component " + show(k) + " is not a union of basic opens");
        for (const auto& e : k) c.check(covered.insert(e).second, "components overlap at " + e);
        Subcoalgebra sub(x, k);
        parts.push_back(sub.as_coalgebra());
        legs.push_back(sub.inclusion());
      }
      c.check(covered == x.carrier(), "components do not cover the carrier");
      if (parts.empty()) continue;
      const auto sum = coproduct(f, parts);
      const auto back = cotuple(sum, legs);
      c.check(is_morphism(back).ok && image(back) == x.carrier() &&
                  back.map.size() == x.size(),
              "coalgebra is not the coproduct of its components");
    }
  });

  run_case(out, "weak-totality-equivalence", seed, [&](Case& c) {
    for (const auto& f : {Functor::id(), stream_functor()}) {
      // probes up to |X|
      std::vector<Coalgebra> probes;
      for (std::size_t n = 0; n <= 3; ++n)
        for (auto& w : gen::all_coalgebras(f, n, "w")) probes.push_back(w);
      for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& x : gen::all_coalgebras(f, n)) {
          for (const auto& u : open_sets(x)) {
            const auto pid = partial_identity(Subcoalgebra(x, u));
            c.check(is_weakly_total(pid) == weakly_total_by_definition(pid, probes),
                    "density and quantified definition disagree on " + show(u) + " in " +
                        label(f));
          }
        }
      }
    }
  });

  const std::vector<Functor> criteria_battery = {Functor::id(), stream_functor(),
                                                 Functor::pow(Functor::id())};
  auto endos = [](const Coalgebra& x) -> std::optional<std::vector<PartialMorphism>> {
    try {
      return all_partial_morphisms(x, x, 4096);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EnumerationLimitExceeded) throw;
      return std::nullopt;
    }
  };
  run_case(out, "irreducible-criterion", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      auto x = small(criteria_battery[t % 3], c.rng, 4);
      auto fs = endos(x);
      if (!fs) continue;
      bool all = true;
      for (const auto& p : *fs)
        if (!is_zero(p) && !is_weakly_total(p)) all = false;
      c.check(is_irreducible(x) == all, "irreducible differs from: every nonzero map weakly total");
    }
  });
  run_case(out, "dense-open-criterion", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      auto x = small(criteria_battery[t % 3], c.rng, 4);
      auto fs = endos(x);
      if (!fs) continue;
      bool all = true;
      for (const auto& p : *fs)
        if (is_weakly_total(p) && !is_total(p)) all = false;
      bool only_full = true;
      for (const auto& o : open_sets(x))
        if (is_dense(x, o) && o != x.carrier()) only_full = false;
      c.check(all == only_full, "weakly total implies total differs from: X is its only dense open");
    }
  });
  run_case(out, "hausdorff-criterion", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      auto x = small(criteria_battery[t % 3], c.rng, 4);
      auto fs = endos(x);
      if (!fs) continue;
      bool all = true;
      for (const auto& p : *fs)
        if (is_weakly_total(p) && !is_total(p)) all = false;
      c.check(!is_hausdorff(x) || all, "Hausdorff coalgebra has a weakly total, non-total map");
    }
  });
}

// ---------------------------------------------------------------------------
// lattice

void suite_lattice(std::uint64_t seed, std::size_t trials, std::vector<CaseResult>& out) {
  for (const auto& f : category_battery()) {
    run_case(out, "operations " + label(f), seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto x = small(f, c.rng, 5);
        const auto opens = open_sets(x);
        auto pick = [&] { return Subcoalgebra(x, opens[below(c.rng, opens.size())]); };
        const auto a = pick(), b = pick(), d = pick();
        ElementSet inter, uni = a.subset();
        std::set_intersection(a.subset().begin(), a.subset().end(), b.subset().begin(),
                              b.subset().end(), std::inserter(inter, inter.end()));
        uni.insert(b.subset().begin(), b.subset().end());
        c.check(meet(a, b).subset() == inter, "meet is not intersection");
        c.check(meet_by_composition(a, b).subset() == inter, "meet by composition is not intersection");
        c.check(join(a, b).subset() == uni, "join is not union");
        c.check(join_by_cotuple(a, b).subset() == uni, "join by cotuple is not union");
        c.check(dom(partial_identity(a)) == a && ran(partial_identity(a)) == a,
                "partial identity does not recover its subcoalgebra");
        const Subcoalgebra top(x, x.carrier()), bottom(x, {});
        c.check(meet(a, top) == a && join(a, bottom) == a, "bounds fail");
        c.check(union_of_domains(x, {a, b, d}) == join(join(a, b), d), "finite union is not the join fold");
        c.check(union_of_domains(x, {a}) == a && union_of_domains(x, {}) == bottom,
                "degenerate unions fail");
      }
    });
    run_case(out, "distributivity " + label(f), seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto x = small(f, c.rng, 5);
        const auto opens = open_sets(x);
        auto pick = [&] { return Subcoalgebra(x, opens[below(c.rng, opens.size())]); };
        const auto a = pick(), b = pick(), d = pick();
        c.check(meet(a, join(b, d)) == join(meet(a, b), meet(a, d)), "meet over join fails");
        c.check(join(a, meet(b, d)) == meet(join(a, b), join(a, d)), "join over meet fails");
        c.check(meet(a, join(a, b)) == a && join(a, meet(a, b)) == a, "absorption fails");
      }
    });
  }
  for (const auto& f : deterministic(category_battery())) {
    run_case(out, "dom-by-pairing " + label(f), seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto x = small(f, c.rng, 4, "a");
        auto y = next_object(f, x, c.rng, "b");
        auto p = gen::random_partial_morphism(x, y, c.rng);
        c.check(dom_by_pairing(p) == dom(p), "p0 <1, f> has a different domain");
      }
    });
    run_case(out, "range-of-box " + label(f), seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto a = small(f, c.rng, 3, "a");
        auto b = next_object(f, a, c.rng, "b");
        auto a2 = small(f, c.rng, 3, "p");
        auto b2 = next_object(f, a2, c.rng, "q");
        auto p = gen::random_partial_morphism(a, b, c.rng);
        auto q = gen::random_partial_morphism(a2, b2, c.rng);
        const auto w = product(b, b2);
        const auto rp = ran(p).subset(), rq = ran(q).subset();
        ElementSet expected;
        for (const auto& id : w.total.carrier())
          if (rp.count(w.p0.map.at(id)) && rq.count(w.p1.map.at(id))) expected.insert(id);
        c.check(ran(box(p, q)).subset() == expected, "range of a box is not the product of ranges");
      }
    });
    run_case(out, "stable-union " + label(f), seed, [&](Case& c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto x = small(f, c.rng, 4, "a");
        auto y = small(f, c.rng, 3, "b");
        std::vector<Subcoalgebra> family;
        const auto k = below(c.rng, 4);
        for (std::size_t i = 0; i < k; ++i) family.emplace_back(x, gen::random_open(x, c.rng));
        const auto lhs = dom(box(identity_partial(y), partial_identity(union_of_domains(x, family))));
        std::vector<Subcoalgebra> parts;
        for (const auto& e : family) parts.push_back(dom(box(identity_partial(y), partial_identity(e))));
        c.check(lhs == union_of_domains(lhs.parent(), parts), "Y box union differs from union of Y box");
      }
    });
  }
}

// ---------------------------------------------------------------------------
// choice

void suite_choice(std::uint64_t seed, std::size_t trials, std::vector<CaseResult>& out) {
  const auto battery = category_battery();
  run_case(out, "section-contract", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = battery[t % battery.size()];
      auto x = small(f, c.rng, 3, "a");
      auto y = below(c.rng, 2) ? small(f, c.rng, 3, "b")
                               : coproduct(f, {x, small(f, c.rng, 1, "b")}).total;
      std::vector<PartialMorphism> monos;
      for (auto& p : all_partial_morphisms(x, y, 20000))
        if (is_partial_mono(p) && !is_zero(p)) monos.push_back(std::move(p));
      const auto phi = monos.empty() ? zero(x, y) : monos[below(c.rng, monos.size())];
      const auto sigma = section(phi);
      c.check(compose(phi, sigma) == partial_identity(ran(phi)), "phi sigma is not dom sigma");
      c.check(compose(phi, compose(sigma, phi)) == phi, "phi sigma phi is not phi");
      c.check(dom(sigma) == ran(phi), "dom sigma is not ran phi");
    }
  });
  run_case(out, "section-edge-cases", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = battery[t % battery.size()];
      auto x = small(f, c.rng, 4, "a");
      auto y = small(f, c.rng, 4, "b");
      c.check(section(identity_partial(x)) == identity_partial(x), "section of identity");
      c.check(section(zero(x, y)) == zero(y, x), "section of zero");
    }
  });
  run_case(out, "mono-definition", seed, [&](Case& c) {
    for (const auto& f : {Functor::id(), stream_functor()}) {
      std::vector<Coalgebra> small_objects, probes;
      for (std::size_t n = 0; n <= 3; ++n)
        for (auto& w : gen::all_coalgebras(f, n, n <= 2 ? "a" : "w")) {
          if (n <= 2) small_objects.push_back(w);
          probes.push_back(w);
        }
      const bool exhaustive = f == Functor::id();
      const std::size_t pairs = exhaustive ? small_objects.size() * small_objects.size() : trials;
      for (std::size_t i = 0; i < pairs; ++i) {
        const auto& x = exhaustive ? small_objects[i / small_objects.size()]
                                   : small_objects[below(c.rng, small_objects.size())];
        const auto& y = exhaustive ? small_objects[i % small_objects.size()]
                                   : small_objects[below(c.rng, small_objects.size())];
        for (const auto& p : all_partial_morphisms(x, y))
          c.check(is_partial_mono(p) == partial_mono_by_definition(p, probes),
                  "injectivity and quantified mono definition disagree in " + label(f));
      }
    }
  });
  run_case(out, "division", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = battery[t % battery.size()];
      auto x = small(f, c.rng, 4, "a");
      auto y = next_object(f, x, c.rng, "b");
      auto z = next_object(f, x, c.rng, "c");
      auto psi = gen::random_partial_morphism(x, z, c.rng);
      auto raw = gen::random_partial_morphism(x, y, c.rng);
      auto phi = compose(raw, partial_identity(dom(psi)));
      bool divisible = true;
      for (const auto& [a, fa] : phi.map())
        for (const auto& [b, fb] : phi.map())
          if (fa == fb && psi.map().at(a) != psi.map().at(b)) divisible = false;
      try {
        const auto q = divide(psi, phi);
        c.check(divisible, "divide accepted an indivisible pair");
        c.check(dom(q) == ran(phi), "dom of the quotient is not ran phi");
        c.check(compose(q, phi) == compose(psi, partial_identity(dom(phi))),
                "(psi/phi) phi is not psi on dom phi");
      } catch (const Error& e) {
        c.check(!divisible && e.kind() == ErrorKind::NotDivisible,
                std::string("unexpected rejection: ") + e.what());
      }
      const auto& dr = raw.domain();
      if (!std::includes(psi.domain().begin(), psi.domain().end(), dr.begin(), dr.end())) {
        try {
          divide(psi, raw);
          c.fail("divide accepted a divisor with a larger domain");
        } catch (const Error& e) {
          c.check(e.kind() == ErrorKind::DomainNotContained, e.what());
        }
      }
      c.check(divide(phi, phi) == partial_identity(ran(phi)), "phi/phi is not the identity on ran phi");
    }
  });
}

// ---------------------------------------------------------------------------
// iteration

struct IterInstance {
  Morphism f;
  Subcoalgebra u;
};

IterInstance iteration_instance(const Functor& f, Rng& rng, bool loops, const std::string& prefix) {
  if (loops) {
    auto x = gen::loop_coalgebra(f, 1 + below(rng, 5), rng, prefix);
    ElementSet fixed, u;
    for (const auto& e : x.carrier())
      if (below(rng, 3) == 0) fixed.insert(e);
    auto map = *gen::random_shape_map(x, x, rng, fixed);
    for (const auto& e : fixed)
      if (below(rng, 4)) u.insert(e);
    return {{x, x, std::move(map)}, Subcoalgebra(x, std::move(u))};
  }
  auto x = gen::random_coalgebra(f, below(rng, 5), rng, prefix);
  const auto maps = all_morphisms(x, x, 4096);
  Morphism m{x, x, maps[below(rng, maps.size())]};
  ElementSet fixed;
  for (const auto& [a, b] : m.map)
    if (a == b) fixed.insert(a);
  const auto inside = cogenerated_inside(x, fixed).as_coalgebra();
  return {m, Subcoalgebra(x, gen::random_open(inside, rng))};
}

const std::vector<Functor>& iteration_battery() {
  static const std::vector<Functor> fs = {Functor::id(), stream_functor(),
                                          Functor::exp({"0", "1"}, Functor::id()),
                                          Functor::pow(Functor::id())};
  return fs;
}

void suite_iteration(std::uint64_t seed, std::size_t trials, std::vector<CaseResult>& out) {
  const auto& battery = iteration_battery();
  auto each = [&](Case& c, const std::function<void(const IterInstance&)>& fn) {
    for (std::size_t t = 0; t < trials; ++t)
      fn(iteration_instance(battery[t % battery.size()], c.rng, (t / battery.size()) % 2 == 0, "s"));
  };
  run_case(out, "domain-by-preimages", seed, [&](Case& c) {
    each(c, [&](const IterInstance& in) {
      const auto it = iterate(in.f, in.u);
      c.check(it.domain() == iterate_domain_by_preimages(in.f.map, in.u.subset(), in.f.src.size()),
              "domain differs from the union of preimages");
      const auto layers = preimage_layers(in.f, in.u);
      for (std::size_t n = 1; n < layers.size(); ++n)
        c.check(std::includes(layers[n].begin(), layers[n].end(), layers[n - 1].begin(),
                              layers[n - 1].end()),
                "preimage layers are not nested");
    });
  });
  run_case(out, "least-power-values", seed, [&](Case& c) {
    each(c, [&](const IterInstance& in) {
      const auto it = iterate(in.f, in.u);
      std::string wrong;
      ElementSet layer = in.u.subset(), reached = layer;
      for (std::size_t n = 0; n <= in.f.src.size(); ++n) {
        for (const auto& x : layer) {
          Element v = x;
          for (std::size_t k = 0; k < n; ++k) v = in.f.map.at(v);
          if (wrong.empty() && it.at(x) != v) wrong = "value at " + x + " is not f^" + std::to_string(n);
        }
        ElementSet next;
        for (const auto& [a, b] : in.f.map)
          if (reached.count(b) && !reached.count(a)) next.insert(a);
        reached.insert(next.begin(), next.end());
        layer = std::move(next);
      }
      c.check(wrong.empty(), wrong);
    });
  });
  run_case(out, "image-in-U", seed, [&](Case& c) {
    each(c, [&](const IterInstance& in) {
      const auto r = ran(iterate(in.f, in.u)).subset();
      c.check(std::includes(in.u.subset().begin(), in.u.subset().end(), r.begin(), r.end()),
              "image leaves U");
    });
  });
  run_case(out, "oracle-agreement", seed, [&](Case& c) {
    each(c, [&](const IterInstance& in) {
      if (!preserves_products(in.f.src.functor())) {
        try {
          oracle_iterate(in.f, in.u);
          c.fail("oracle accepted " + label(in.f.src.functor()));
        } catch (const Error& e) {
          c.check(e.kind() == ErrorKind::Unsupported, e.what());
        }
        return;
      }
      c.check(oracle_iterate(in.f, in.u) == iterate(in.f, in.u), "oracle disagrees with iterate");
    });
  });
  run_case(out, "product-law", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = battery[t % 3];  // deterministic members
      const bool loops = (t / 3) % 2 == 0;
      auto a = iteration_instance(f, c.rng, loops, "a");
      auto b = iteration_instance(f, c.rng, loops, "b");
      auto laws = iteration_product_laws(a.f, a.u, b.f, b.u);
      c.check(laws.product_checked && laws.product_law, "It(f x g, U x V) differs from box");
    }
  });
  run_case(out, "coproduct-law", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = battery[t % battery.size()];
      const bool loops = (t / battery.size()) % 2 == 0;
      auto a = iteration_instance(f, c.rng, loops, "a");
      auto b = iteration_instance(f, c.rng, !loops, "b");
      c.check(iteration_product_laws(a.f, a.u, b.f, b.u).coproduct_law,
              "It(f + g, U + V) differs from the coproduct");
    }
  });
  run_case(out, "plain-set-example", seed, [&](Case& c) {
    const auto x = plain_set({"0", "1", "2", "3"});
    const Morphism f{x, x, {{"0", "0"}, {"1", "0"}, {"2", "3"}, {"3", "2"}}};
    const auto it = iterate(f, Subcoalgebra(x, {"0"}));
    c.check(it.domain() == ElementSet{"0", "1"}, "domain is not {0,1}");
    c.check(it.map() == ElementMap{{"0", "0"}, {"1", "0"}}, "values are not all 0");
    c.check(oracle_iterate(f, Subcoalgebra(x, {"0"})) == it, "oracle differs");
    c.check(iterate(identity(x), Subcoalgebra(x, x.carrier())) == identity_partial(x),
            "U = X does not give the identity");
    c.check(is_zero(iterate(f, Subcoalgebra(x, {}))), "U empty does not give zero");
    try {
      iterate(f, Subcoalgebra(x, {"2"}));
      c.fail("a moved point of U was accepted");
    } catch (const Error& e) {
      c.check(e.kind() == ErrorKind::NotFixing, e.what());
    }
  });
}

// ---------------------------------------------------------------------------
// turing

// A random datum with input `x`, built from loop coalgebras and shape maps.
TuringDatum random_datum(const Coalgebra& x, Rng& rng, const std::string& tag) {
  const auto& f = x.functor();
  auto w = coproduct(f, {x, gen::loop_coalgebra(f, below(rng, 3), rng, tag + "w")}).total;
  auto y = gen::loop_coalgebra(f, below(rng, 4), rng, tag + "y");
  auto u = *gen::random_shape_map(x, w, rng);
  auto wy = coproduct(f, {w, y});
  auto v = *gen::random_shape_map(w, wy.total, rng);
  return make_datum(x, w, y, std::move(u), std::move(v));
}

// Runs the datum by direct simulation with the step bound |W|.
std::optional<Element> simulate(const TuringDatum& d, const Element& x) {
  std::map<Element, std::pair<bool, Element>> step;
  for (std::size_t k = 0; k < 2; ++k)
    for (const auto& [e, tagged] : d.wy.injections[k].map) step.emplace(tagged, std::make_pair(k == 1, e));
  Element w = d.u.map.at(x);
  for (std::size_t n = 0; n <= d.w.size(); ++n) {
    const auto& [halted, next] = step.at(d.v.map.at(w));
    if (halted) return next;
    w = next;
  }
  return std::nullopt;
}

const std::vector<Functor>& turing_battery() {
  static const std::vector<Functor> fs = {Functor::id(), stream_functor(),
                                          Functor::exp({"0", "1"}, Functor::id()),
                                          Functor::pow(Functor::id())};
  return fs;
}

void suite_turing(std::uint64_t seed, std::size_t trials, std::vector<CaseResult>& out) {
  const auto& battery = turing_battery();
  auto pairs = [&](Case& c, bool deterministic_only,
                   const std::function<void(const TuringDatum&, const TuringDatum&)>& fn) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = battery[t % (deterministic_only ? 3 : battery.size())];
      auto x = gen::loop_coalgebra(f, below(c.rng, 4), c.rng, "x");
      auto d1 = random_datum(x, c.rng, "p");
      auto d2 = random_datum(d1.y, c.rng, "q");
      fn(d1, d2);
    }
  };
  run_case(out, "seq-agreement", seed, [&](Case& c) {
    pairs(c, false, [&](const TuringDatum& d1, const TuringDatum& d2) {
      c.check(turing_development(datum_seq(d1, d2)) ==
                  compose(turing_development(d2), turing_development(d1)),
              "Tur(seq) differs from the composite");
    });
  });
  run_case(out, "coprod-agreement", seed, [&](Case& c) {
    pairs(c, false, [&](const TuringDatum& d1, const TuringDatum& d2) {
      c.check(turing_development(datum_coprod(d1, d2)) ==
                  coprod(turing_development(d1), turing_development(d2)),
              "Tur(coprod) differs from the coproduct");
    });
  });
  run_case(out, "box-agreement", seed, [&](Case& c) {
    pairs(c, true, [&](const TuringDatum& d1, const TuringDatum& d2) {
      c.check(turing_development(datum_box(d1, d2)) ==
                  box(turing_development(d1), turing_development(d2)),
              "Tur(box) differs from the box");
    });
  });
  run_case(out, "trace-agreement", seed, [&](Case& c) {
    pairs(c, false, [&](const TuringDatum& d1, const TuringDatum&) {
      const auto tur = turing_development(d1);
      for (const auto& x : d1.x.carrier()) {
        const auto tr = run_trace(d1, x);
        c.check(tr.halted == tur.at(x), "trace outcome differs at " + x);
        c.check(tr.halted.has_value() != tr.cycle_start.has_value(), "trace has no single outcome");
        c.check(!tr.visited.empty() && tr.visited.front() == d1.u.map.at(x), "trace does not start at u(x)");
        for (std::size_t i = 0; i + 1 < tr.visited.size(); ++i)
          c.check(d1.v.map.at(tr.visited[i]) == cont(tr.visited[i + 1]), "trace skips a step");
        if (tr.cycle_start)
          c.check(*tr.cycle_start < tr.visited.size() &&
                      d1.v.map.at(tr.visited.back()) == cont(tr.visited[*tr.cycle_start]),
                  "cycle witness does not close the loop");
      }
    });
  });
  run_case(out, "direct-simulation", seed, [&](Case& c) {
    pairs(c, false, [&](const TuringDatum& d1, const TuringDatum& d2) {
      for (const auto* d : {&d1, &d2}) {
        const auto tur = turing_development(*d);
        for (const auto& x : d->x.carrier())
          c.check(tur.at(x) == simulate(*d, x), "development differs from simulation at " + x);
        c.check(is_subcoalgebra(d->x, tur.domain()) && is_subcoalgebra(d->y, ran(tur).subset()),
                "domain or range is not a subcoalgebra");
      }
    });
  });
  run_case(out, "mod2-example", seed, [&](Case& c) {
    const auto d = mod2_datum();
    const auto tur = turing_development(d);
    c.check(is_total(tur), "mod-2 development is not total");
    c.check(tur.map() == ElementMap{{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}},
            "mod-2 development is not w mod 2");
    const auto tr = run_trace(d, "3");
    c.check(tr.visited == std::vector<Element>{"3", "1"} && tr.halted == Element("1"),
            "trace at 3 is not 3,1 then 1");
    c.check(turing_development(datum_seq(d, d)) == tur, "mod 2 twice is not mod 2");
  });
  run_case(out, "degenerate-data", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = battery[t % battery.size()];
      auto x = gen::loop_coalgebra(f, below(c.rng, 4), c.rng, "x");
      auto w = coproduct(f, {x}).total;
      auto y = coproduct(f, {w, gen::loop_coalgebra(f, below(c.rng, 2), c.rng, "y")}).total;
      ElementMap u, v_halt, v_loop;
      for (const auto& e : x.carrier()) u.emplace(e, coproduct_id(0, e));
      for (const auto& e : w.carrier()) {
        v_halt.emplace(e, halt(coproduct_id(0, e)));
        v_loop.emplace(e, cont(e));
      }
      const auto halting = make_datum(x, w, y, u, v_halt);
      const auto looping = make_datum(x, w, y, u, v_loop);
      ElementMap direct;
      for (const auto& e : x.carrier()) direct.emplace(e, coproduct_id(0, coproduct_id(0, e)));
      c.check(turing_development(halting) == embed_total({x, y, direct}),
              "immediate halt is not h u");
      c.check(is_zero(turing_development(looping)), "never-halting datum is not zero");
      if (!x.empty())
        c.check(run_trace(looping, *x.carrier().begin()).cycle_start == std::size_t{0},
                "never-halting trace has no cycle at 0");
      c.check(is_zero(turing_development(datum_seq(looping, random_datum(y, c.rng, "r")))),
              "sequence after a never-halting datum is not zero");
    }
  });
}

// ---------------------------------------------------------------------------
// coherence

bool is_bijective_total(const PartialMorphism& f) {
  if (!is_total(f)) return false;
  ElementSet img;
  for (const auto& [a, b] : f.map()) img.insert(b);
  return img == f.dst().carrier();
}

void suite_coherence(std::uint64_t seed, std::size_t trials, std::vector<CaseResult>& out) {
  const auto triple = coherence_triple();
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  run_case(out, "twist-involution", seed, [&](Case& c) {
    for (const auto& x : triple)
      for (const auto& y : triple)
        c.check(compose(twist_component(y, x), twist_component(x, y)) ==
                    identity_partial(product(x, y).total),
                "twist twice is not the identity");
    for (std::size_t t = 0; t < trials; ++t) {
      auto x = small(stream_functor(), c.rng, 3, "a");
      auto y = next_object(stream_functor(), x, c.rng, "b");
      c.check(compose(twist_component(y, x), twist_component(x, y)) ==
                  identity_partial(product(x, y).total),
              "twist twice is not the identity");
    }
    const auto& a = triple[0];
    const auto tw = twist_component(a, a);
    for (const auto& e : a.carrier())
      c.check(tw.at(pair_id(e, e)) == pair_id(e, e), "twist moves a diagonal point");
  });
  run_case(out, "associator-iso", seed, [&](Case& c) {
    for (const auto& q : perms) {
      const auto alpha = assoc_component(triple[q[0]], triple[q[1]], triple[q[2]]);
      c.check(is_bijective_total(alpha), "associator is not a total bijection");
      c.check(compose(section(alpha), alpha) == identity_partial(alpha.src()),
              "associator has no inverse");
    }
  });
  run_case(out, "pentagon", seed, [&](Case& c) {
    for (const auto& q : perms)
      c.check(pentagon_holds(triple[q[0]], triple[q[1]], triple[q[2]], triple[q[0]]),
              "pentagon composites differ");
  });
  run_case(out, "hexagon", seed, [&](Case& c) {
    for (const auto& q : perms)
      c.check(hexagon_holds(triple[q[0]], triple[q[1]], triple[q[2]]), "hexagon composites differ");
  });
  run_case(out, "distributivity", seed, [&](Case& c) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto f = deterministic(category_battery())[t % 4];
      auto x = small(f, c.rng, 3, "a");
      auto y1 = next_object(f, x, c.rng, "b");
      auto y2 = small(f, c.rng, 2, "c");
      const auto iso = dist(x, {y1, y2});
      c.check(compose(iso.backward, iso.forward).map == identity(iso.lhs.total).map &&
                  compose(iso.forward, iso.backward).map == identity(iso.rhs.total).map,
              "distributivity maps are not inverse");
    }
  });

  const std::vector<Functor> product_battery = {
      Functor::id(), stream_functor(), Functor::exp({"0", "1"}, Functor::id()),
      Functor::constant({"0", "1"}), Functor::sum(Functor::id(), Functor::constant({"*"}))};
  auto witnesses = [&](Case& c) {
    std::vector<ProductWitness> ws;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& f = product_battery[t % product_battery.size()];
      auto x = small(f, c.rng, 3, "a");
      auto y = below(c.rng, 2) ? small(f, c.rng, 3, "b")
                               : coproduct(f, {x, small(f, c.rng, 1, "b")}).total;
      ws.push_back(product(x, y));
    }
    return ws;
  };
  run_case(out, "product-universal", seed, [&](Case& c) {
    std::size_t i = 0;
    for (const auto& w : witnesses(c))
      c.check(verify_product_universal(w, 100, mix(seed, "witness") + i++),
              "universal property fails for " + label(w.total.functor()));
  });
  run_case(out, "product-negative-control", seed, [&](Case& c) {
    for (const auto& w : witnesses(c)) {
      if (w.total.empty()) continue;
      // Two copies of the product: projections stay morphisms but are not jointly monic.
      const auto twice = coproduct(w.total.functor(), {w.total, w.total});
      ProductWitness doubled{w.left, w.right, twice.total, cotuple(twice, {w.p0, w.p0}),
                             cotuple(twice, {w.p1, w.p1})};
      c.check(!verify_product_universal(doubled, 10), "doubled witness accepted");
      // Drop everything outside one generated subcoalgebra, if that loses points.
      const auto sub = generated(w.total, {*w.total.carrier().begin()});
      if (sub.subset().size() < w.total.size()) {
        const auto part = sub.as_coalgebra();
        ProductWitness cut{w.left, w.right, part, compose(w.p0, sub.inclusion()),
                           compose(w.p1, sub.inclusion())};
        c.check(!verify_product_universal(cut, 10), "truncated witness accepted");
      }
    }
  });
}

// ---------------------------------------------------------------------------
// functor-hypotheses

void suite_hypotheses(std::uint64_t seed, std::size_t, std::vector<CaseResult>& out) {
  const auto squares = pullback_squares(3);
  for (const auto& f : hypothesis_battery()) {
    run_case(out, "weak-pullbacks " + label(f), seed, [&](Case& c) {
      for (const auto& sq : squares) {
        const auto r = check_weak_pullback_preservation(f, sq);
        c.check(r.holds, "no common preimage for " + (r.counterexample
                                                          ? r.counterexample->first.key() + " / " +
                                                                r.counterexample->second.key()
                                                          : std::string("?")));
      }
    });
  }
  run_case(out, "non-pullback-rejected", seed, [&](Case& c) {
    auto sq = make_pullback({"b0", "b1"}, {"c0"}, {"d0"}, {{"b0", "d0"}, {"b1", "d0"}}, {{"c0", "d0"}});
    sq.apex.erase(sq.apex.begin());
    sq.to_left.erase(sq.to_left.begin());
    sq.to_right.erase(sq.to_right.begin());
    try {
      check_weak_pullback_preservation(Functor::id(), sq);
      c.fail("a non-pullback square was accepted");
    } catch (const Error& e) {
      c.check(e.kind() == ErrorKind::NotAPullback, e.what());
    }
  });
  run_case(out, "nontriviality", seed, [&](Case& c) {
    for (const auto& f : hypothesis_battery()) c.check(is_nontrivial(f), label(f) + " is trivial");
    c.check(!is_nontrivial(Functor::constant({})), "C{} is nontrivial");
    c.check(!is_nontrivial(Functor::prod(Functor::constant({}), Functor::id())),
            "C{} x Id is nontrivial");
    c.check(is_nontrivial(Functor::pow(Functor::constant({}))), "P(C{}) is trivial");
  });
  run_case(out, "classification", seed, [&](Case& c) {
    const auto id = Functor::id();
    c.check(is_deterministic(stream_functor()) && !is_deterministic(Functor::pow(id)),
            "determinism misclassified");
    c.check(preserves_products(id) && preserves_products(Functor::exp({"0", "1"}, id)) &&
                preserves_products(Functor::prod(Functor::constant({"c"}), id)),
            "product preservation missed");
    c.check(!preserves_products(stream_functor()) && !preserves_products(Functor::pow(id)) &&
                !preserves_products(Functor::sum(id, id)),
            "product preservation over-claimed");
  });
  run_case(out, "cardinality", seed, [&](Case& c) {
    for (const auto& f : hypothesis_battery())
      for (std::size_t n = 0; n <= 3; ++n) {
        ElementSet x;
        for (std::size_t i = 0; i < n; ++i) x.insert("e" + std::to_string(i));
        c.check(cardinality(f, n) == apply_on_set(f, x).size(),
                "count of " + label(f) + " on " + std::to_string(n) + " points");
      }
  });
}

using SuiteFn = void (*)(std::uint64_t, std::size_t, std::vector<CaseResult>&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  std::size_t trials;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r = {
      {"category", suite_category, 200},   {"topology", suite_topology, 50},
      {"lattice", suite_lattice, 50},      {"choice", suite_choice, 100},
      {"iteration", suite_iteration, 100}, {"turing", suite_turing, 50},
      {"coherence", suite_coherence, 25},  {"functor-hypotheses", suite_hypotheses, 1},
  };
  return r;
}

const SuiteEntry& find_suite(const std::string& name) {
  for (const auto& e : registry())
    if (name == e.name) return e;
  throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
}

}  // namespace

bool SuiteReport::ok() const {
  return !cases.empty() &&
         std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok(); });
}

std::size_t SuiteReport::passed() const {
  return std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::size_t default_trials(const std::string& suite) { return find_suite(suite).trials; }

SuiteReport run_suite(const std::string& suite, std::uint64_t seed,
                      std::optional<std::size_t> trials) {
  const auto& entry = find_suite(suite);
  SuiteReport report{suite, seed, trials.value_or(entry.trials), {}};
  entry.fn(seed, report.trials, report.cases);
  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace coalg::laws
