#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

#include "coalg/coalgebra.hpp"
#include "coalg/laws.hpp"

using namespace coalg;
using coalg::testing::expect_error;

namespace {

const Functor kId = Functor::id();

// Morphism check by direct evaluation of both sides of the square.
bool square_commutes(const Coalgebra& x, const Coalgebra& y, const ElementMap& f) {
  for (const auto& e : x.carrier())
    if (!(apply_on_map(x.functor(), f, x.structure(e)) == y.structure(f.at(e)))) return false;
  return true;
}

std::vector<ElementMap> all_functions(const ElementSet& from, const ElementSet& to) {
  std::vector<ElementMap> out{{}};
  for (const auto& a : from) {
    std::vector<ElementMap> next;
    for (const auto& m : out)
      for (const auto& b : to) {
        auto n = m;
        n.emplace(a, b);
        next.push_back(std::move(n));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates the structure") {
  expect_error(ErrorKind::ValidationError,
               [] { Coalgebra(kId, {"x"}, {{"x", Term::leaf("z")}}); });
  expect_error(ErrorKind::ValidationError, [] { Coalgebra(kId, {"x", "y"}, {{"x", Term::leaf("x")}}); });
  expect_error(ErrorKind::ValidationError, [] { Coalgebra(kId, {"a,b"}, {{"a,b", Term::leaf("a,b")}}); });
  expect_error(ErrorKind::TrivialFunctor, [] { Coalgebra(Functor::constant({}), {}, {}); });
  const Coalgebra allowed(Functor::constant({}), {}, {}, TrivialPolicy::Allow);
  CHECK_FALSE(allowed.has_topology());
  CHECK(laws::two_point_example().has_topology());
}

TEST_CASE("all_morphisms matches filtering every function") {
  gen::Rng rng(3);
  for (const auto& f : laws::category_battery()) {
    for (int t = 0; t < 20; ++t) {
      const auto x = gen::random_coalgebra(f, gen::below(rng, 4), rng, "a");
      const auto y = gen::random_coalgebra(f, gen::below(rng, 4), rng, "b");
      std::vector<ElementMap> expected;
      for (auto& m : all_functions(x.carrier(), y.carrier()))
        if (square_commutes(x, y, m)) expected.push_back(std::move(m));
      auto found = all_morphisms(x, y);
      std::sort(found.begin(), found.end());
      CHECK(found == expected);
      for (const auto& m : expected) CHECK(is_morphism({x, y, m}).ok);
    }
  }
}

TEST_CASE("morphism checks name a witness") {
  const auto x = laws::two_point_example();
  const auto two = laws::plain_set({"p", "q"});
  const auto check = is_morphism({x, two, {{"x", "p"}, {"y", "q"}}});
  CHECK_FALSE(check.ok);
  CHECK(check.witness == Element("x"));
  expect_error(ErrorKind::NotMorphism, [&] { require_morphism({x, two, {{"x", "p"}, {"y", "q"}}}); });
  expect_error(ErrorKind::NotMorphism, [&] { require_morphism({x, two, {{"x", "p"}}}); });
  expect_error(ErrorKind::ObjectMismatch, [&] { compose(identity(x), identity(two)); });
}

TEST_CASE("topology of the two-point example") {
  const auto x = laws::two_point_example();
  CHECK(is_subcoalgebra(x, {"y"}));
  CHECK_FALSE(is_subcoalgebra(x, {"x"}));
  CHECK(generated(x, {"x"}).subset() == ElementSet{"x", "y"});
  CHECK(cogenerated_inside(x, {"x"}).subset().empty());
  CHECK(closure(x, {"y"}) == ElementSet{"x", "y"});
  CHECK(closure(x, {"x"}) == ElementSet{"x"});
  CHECK(interior(x, {"x"}).empty());
  CHECK(is_dense(x, {"y"}));
  CHECK_FALSE(is_dense(x, {}));
  CHECK(open_sets(x).size() == 3);
  CHECK(is_connected(x));
  CHECK(is_irreducible(x));
  CHECK_FALSE(is_hausdorff(x));
  expect_error(ErrorKind::NotSubcoalgebra, [&] { Subcoalgebra(x, {"x"}); });
  expect_error(ErrorKind::EnumerationLimitExceeded, [&] { open_sets(x, 2); });
}

TEST_CASE("degenerate topologies") {
  const auto empty = Coalgebra::empty(kId);
  CHECK_FALSE(is_connected(empty));
  CHECK(is_irreducible(empty));
  CHECK(is_hausdorff(empty));
  const auto two = laws::plain_set({"p", "q"});
  CHECK(is_hausdorff(two));
  CHECK_FALSE(is_irreducible(two));
  CHECK(connected_components(two).size() == 2);
}

TEST_CASE("opens, closure and interior against subset enumeration") {
  gen::Rng rng(9);
  for (const auto& f : laws::category_battery()) {
    for (int t = 0; t < 30; ++t) {
      const auto x = gen::random_coalgebra(f, gen::below(rng, 6), rng);
      auto opens = open_sets(x);
      auto expected = laws::opens_by_subsets(x);
      std::sort(opens.begin(), opens.end());
      std::sort(expected.begin(), expected.end());
      CHECK(opens == expected);
      for (const auto& o : opens) {
        CHECK(generated(x, o).subset() == o);
        CHECK(cogenerated_inside(x, o).subset() == o);
      }
    }
  }
}

TEST_CASE("Hausdorff and irreducible agree with their definitions on the open lattice") {
  gen::Rng rng(21);
  for (const auto& f : laws::category_battery()) {
    for (int t = 0; t < 30; ++t) {
      const auto x = gen::random_coalgebra(f, gen::below(rng, 5), rng);
      const auto opens = laws::opens_by_subsets(x);
      auto disjoint = [](const ElementSet& a, const ElementSet& b) {
        return std::none_of(a.begin(), a.end(), [&](const Element& e) { return b.count(e) > 0; });
      };
      bool irreducible = true;
      for (const auto& a : opens)
        for (const auto& b : opens)
          if (!a.empty() && !b.empty() && disjoint(a, b)) irreducible = false;
      bool hausdorff = true;
      for (const auto& p : x.carrier())
        for (const auto& q : x.carrier()) {
          if (p >= q) continue;
          bool separated = false;
          for (const auto& a : opens)
            for (const auto& b : opens)
              if (a.count(p) && b.count(q) && disjoint(a, b)) separated = true;
          if (!separated) hausdorff = false;
        }
      CHECK(is_irreducible(x) == irreducible);
      CHECK(is_hausdorff(x) == hausdorff);
    }
  }
}

TEST_CASE("epi-mono factorization and preimages") {
  gen::Rng rng(4);
  const auto f = laws::stream_functor();
  for (int t = 0; t < 40; ++t) {
    const auto x = gen::random_coalgebra(f, 1 + gen::below(rng, 4), rng, "a");
    const auto y = gen::random_coalgebra(f, 1 + gen::below(rng, 3), rng, "b");
    const auto ms = all_morphisms(x, y);
    if (ms.empty()) continue;
    const Morphism m{x, y, ms[gen::below(rng, ms.size())]};
    const auto fac = epi_mono_factorize(m);
    CHECK(compose(fac.mono, fac.epi).map == m.map);
    CHECK(fac.image.subset() == image(m));
    const Subcoalgebra u(y, gen::random_open(y, rng));
    ElementSet expected;
    for (const auto& [a, b] : m.map)
      if (u.subset().count(b)) expected.insert(a);
    CHECK(preimage(m, u).subset() == expected);
  }
}

TEST_CASE("largest bisimulation against every relation") {
  gen::Rng rng(8);
  for (const auto& f : laws::category_battery()) {
    for (int t = 0; t < 15; ++t) {
      const auto x = gen::random_coalgebra(f, gen::below(rng, 3), rng, "a");
      const auto y = gen::random_coalgebra(f, gen::below(rng, 4), rng, "b");
      std::vector<std::pair<Element, Element>> all;
      for (const auto& a : x.carrier())
        for (const auto& b : y.carrier()) all.emplace_back(a, b);
      Relation expected;
      for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
        Relation r;
        for (std::size_t i = 0; i < all.size(); ++i)
          if (mask >> i & 1) r.insert(all[i]);
        bool ok = true;
        for (const auto& [a, b] : r)
          if (!lift_relation(f, r, x.structure(a), y.structure(b))) ok = false;
        if (ok) expected.insert(r.begin(), r.end());
      }
      const auto found = largest_bisimulation(x, y);
      CHECK(found == expected);
      CHECK(is_bisimulation({x, y, found, std::nullopt}));
    }
  }
  expect_error(ErrorKind::FunctorMismatch,
               [] { largest_bisimulation(laws::two_point_example(), laws::coherence_triple()[0]); });
}

TEST_CASE("a graph is a bisimulation exactly for morphisms") {
  gen::Rng rng(2);
  for (const auto& f : laws::category_battery()) {
    for (int t = 0; t < 20; ++t) {
      const auto x = gen::random_coalgebra(f, gen::below(rng, 3), rng, "a");
      const auto y = gen::random_coalgebra(f, 1 + gen::below(rng, 2), rng, "b");
      for (const auto& m : all_functions(x.carrier(), y.carrier()))
        CHECK(graph_is_bisimulation(x, y, m) == is_morphism({x, y, m}).ok);
    }
  }
}
