#include "doctest.h"
#include "helpers.hpp"

#include "coalg/laws.hpp"
#include "coalg/limits.hpp"

using namespace coalg;
using coalg::testing::expect_error;

TEST_CASE("coproducts tag their summands") {
  const auto a = laws::two_point_example();
  const auto b = laws::plain_set({"p"});
  const auto w = coproduct({a, b});
  CHECK(w.total.carrier() == ElementSet{"0.x", "0.y", "1.p"});
  for (const auto& inj : w.injections) CHECK(is_morphism(inj).ok);
  expect_error(ErrorKind::FunctorMismatch, [&] { coproduct({a, laws::coherence_triple()[0]}); });
  expect_error(ErrorKind::InvariantViolation, [] { coproduct(std::vector<Coalgebra>{}); });
}

TEST_CASE("cotuple checks its legs") {
  const auto a = laws::two_point_example();
  const auto p = laws::plain_set({"p"});
  const auto w = coproduct({a, p});
  const Morphism to_p{a, p, {{"x", "p"}, {"y", "p"}}};
  const auto h = cotuple(w, {to_p, identity(p)});
  CHECK(h.map == ElementMap{{"0.x", "p"}, {"0.y", "p"}, {"1.p", "p"}});
  expect_error(ErrorKind::ObjectMismatch, [&] { cotuple(w, {to_p}); });
  expect_error(ErrorKind::ObjectMismatch, [&] { cotuple(w, {identity(p), to_p}); });
  expect_error(ErrorKind::CodomainMismatch, [&] { cotuple(w, {identity(a), identity(p)}); });
}

TEST_CASE("product of two alternating streams") {
  const auto t = laws::coherence_triple();
  const auto w = product(t[0], t[1]);
  CHECK(w.total.carrier() == ElementSet{"(a0,b1)", "(a0,b2)", "(a1,b0)"});
  CHECK(is_morphism(w.p0).ok);
  CHECK(is_morphism(w.p1).ok);
  CHECK(verify_product_universal(w, 50, 1));
  const auto tree = Coalgebra(Functor::pow(Functor::id()), {"r"}, {{"r", Term::set({})}});
  expect_error(ErrorKind::NonDeterministicProduct, [&] { product(tree, tree); });
  expect_error(ErrorKind::FunctorMismatch, [&] { product(t[0], laws::two_point_example()); });
}

TEST_CASE("pairing into a product") {
  const auto t = laws::coherence_triple();
  const auto w = product(t[0], t[0]);
  const auto p = pair_total(w, identity(t[0]), identity(t[0]));
  CHECK(p.map == ElementMap{{"a0", "(a0,a0)"}, {"a1", "(a1,a1)"}});
  expect_error(ErrorKind::ObjectMismatch, [&] { pair_total(w, identity(t[0]), identity(t[1])); });
}

TEST_CASE("powers") {
  const auto a = laws::coherence_triple()[0];
  CHECK(power(a, 1) == a);
  CHECK(power(a, 3).size() == 2);
  expect_error(ErrorKind::Unsupported, [&] { power(a, 0); });
}

TEST_CASE("distributivity is an isomorphism") {
  gen::Rng rng(6);
  for (const auto& f : {Functor::id(), laws::stream_functor(), Functor::exp({"0", "1"}, Functor::id())}) {
    for (int t = 0; t < 20; ++t) {
      const auto x = gen::random_coalgebra(f, gen::below(rng, 4), rng, "a");
      const auto y0 = gen::random_coalgebra(f, gen::below(rng, 3), rng, "b");
      const auto y1 = gen::random_coalgebra(f, gen::below(rng, 3), rng, "c");
      const auto iso = dist(x, {y0, y1});
      CHECK(compose(iso.backward, iso.forward).map == identity(iso.lhs.total).map);
      CHECK(compose(iso.forward, iso.backward).map == identity(iso.rhs.total).map);
    }
  }
}

TEST_CASE("product verification rejects corrupted witnesses") {
  const auto t = laws::coherence_triple();
  const auto w = product(t[0], t[2]);
  REQUIRE(verify_product_universal(w, 20, 3));
  const auto twice = coproduct({w.total, w.total});
  const ProductWitness doubled{w.left, w.right, twice.total, cotuple(twice, {w.p0, w.p0}),
                               cotuple(twice, {w.p1, w.p1})};
  CHECK_FALSE(verify_product_universal(doubled, 20, 3));
  const ProductWitness swapped{w.left, w.right, w.total, w.p0, w.p0};
  CHECK_FALSE(verify_product_universal(swapped, 20, 3));
}
