#include "doctest.h"
#include "helpers.hpp"

#include "coalg/functor.hpp"

using namespace coalg;
using coalg::testing::expect_error;

namespace {

const Functor kId = Functor::id();
const Functor kStream = Functor::prod(Functor::constant({"0", "1"}), Functor::id());

ElementSet points(std::size_t n) {
  ElementSet out;
  for (std::size_t i = 0; i < n; ++i) out.insert("e" + std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("cardinality of small functors") {
  CHECK(cardinality(Functor::constant({"0", "1"}), 5) == 2);
  CHECK(cardinality(kId, 3) == 3);
  CHECK(cardinality(kStream, 3) == 6);
  CHECK(cardinality(Functor::sum(kId, Functor::constant({"*"})), 2) == 3);
  CHECK(cardinality(Functor::exp({"0", "1"}, kId), 3) == 9);
  CHECK(cardinality(Functor::pow(kId), 3) == 8);
  CHECK(cardinality(Functor::pow(Functor::prod(Functor::constant({"a", "b"}), kId)), 2) == 16);
  CHECK(cardinality(Functor::exp({}, Functor::constant({})), 4) == 1);
}

TEST_CASE("apply_on_set agrees with cardinality on random functors") {
  gen::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto f = coalg::testing::random_functor(rng, 2);
    for (std::size_t n = 0; n <= 2; ++n) {
      const auto terms = apply_on_set(f, points(n));
      CHECK(terms.size() == cardinality(f, n));
      CHECK(std::is_sorted(terms.begin(), terms.end()));
      for (const auto& t : terms) CHECK(well_typed(f, t, points(n)));
    }
  }
}

TEST_CASE("apply_on_set guards its enumeration") {
  expect_error(ErrorKind::EnumerationLimitExceeded,
               [] { apply_on_set(Functor::pow(kId), points(4), 10); });
}

TEST_CASE("set terms are deduplicated and sorted") {
  const auto s = Term::set({Term::leaf("b"), Term::leaf("a"), Term::leaf("b")});
  REQUIRE(s.children().size() == 2);
  CHECK(s.children()[0] == Term::leaf("a"));
  CHECK(s.key() == R"({"set":["a","b"]})");
}

TEST_CASE("apply_on_map on sets collapses images") {
  const auto t = Term::set({Term::leaf("a"), Term::leaf("b")});
  const auto img = apply_on_map(Functor::pow(kId), ElementMap{{"a", "c"}, {"b", "c"}}, t);
  CHECK(img == Term::set({Term::leaf("c")}));
}

TEST_CASE("functor laws hold for apply_on_map") {
  gen::Rng rng(5);
  const auto x = points(3);
  const std::vector<Element> xs(x.begin(), x.end());
  for (int t = 0; t < 100; ++t) {
    const auto f = coalg::testing::random_functor(rng, 2);
    if (cardinality(f, 3) == 0) continue;
    const auto term = gen::random_term(f, xs, rng);
    ElementMap id, g, h;
    for (const auto& e : xs) {
      id.emplace(e, e);
      g.emplace(e, xs[gen::below(rng, 3)]);
      h.emplace(e, xs[gen::below(rng, 3)]);
    }
    ElementMap hg;
    for (const auto& [a, b] : g) hg.emplace(a, h.at(b));
    CHECK(apply_on_map(f, id, term) == term);
    CHECK(apply_on_map(f, hg, term) == apply_on_map(f, h, apply_on_map(f, g, term)));
  }
}

TEST_CASE("well typedness") {
  const ElementSet carrier{"x"};
  CHECK_FALSE(well_typed(kId, Term::leaf("z"), carrier));
  CHECK_FALSE(well_typed(kStream, Term::pair(Term::constant("2"), Term::leaf("x")), carrier));
  CHECK(well_typed(kStream, Term::pair(Term::constant("1"), Term::leaf("x")), carrier));
  expect_error(ErrorKind::TypeMismatch, [&] { require_well_typed(kId, Term::leaf("z"), carrier); });
}

TEST_CASE("relation lifting for the powerset is two-sided") {
  const auto pow = Functor::pow(kId);
  const Relation r{{"a", "c"}};
  const auto ab = Term::set({Term::leaf("a"), Term::leaf("b")});
  const auto a = Term::set({Term::leaf("a")});
  const auto c = Term::set({Term::leaf("c")});
  const auto none = Term::set({});
  CHECK_FALSE(lift_relation(pow, r, ab, c));
  CHECK(lift_relation(pow, r, a, c));
  CHECK(lift_relation(pow, r, none, none));
  CHECK_FALSE(lift_relation(pow, r, a, none));
  CHECK_FALSE(lift_relation(kStream, r, Term::pair(Term::constant("0"), Term::leaf("a")),
                            Term::pair(Term::constant("1"), Term::leaf("c"))));
}

TEST_CASE("zip_terms") {
  const std::vector<Term> same{Term::pair(Term::constant("0"), Term::leaf("a")),
                               Term::pair(Term::constant("0"), Term::leaf("b"))};
  const auto join = [](std::span<const Element> es) { return tuple_id(es); };
  CHECK(zip_terms(kStream, same, join) == Term::pair(Term::constant("0"), Term::leaf("(a,b)")));
  const std::vector<Term> clash{Term::pair(Term::constant("0"), Term::leaf("a")),
                                Term::pair(Term::constant("1"), Term::leaf("b"))};
  CHECK_FALSE(zip_terms(kStream, clash, join).has_value());
  const std::vector<Term> sets{Term::set({}), Term::set({})};
  expect_error(ErrorKind::Unsupported, [&] { zip_terms(Functor::pow(kId), sets, join); });
}

TEST_CASE("hypothesis predicates") {
  CHECK_FALSE(is_nontrivial(Functor::constant({})));
  CHECK_FALSE(is_nontrivial(Functor::exp({"a"}, Functor::constant({}))));
  CHECK(is_nontrivial(Functor::sum(Functor::constant({}), kId)));
  CHECK(is_nontrivial(Functor::pow(Functor::constant({}))));
  CHECK(is_deterministic(kStream));
  CHECK_FALSE(is_deterministic(Functor::exp({"0"}, Functor::pow(kId))));
  CHECK(preserves_products(kId));
  CHECK(preserves_products(Functor::exp({"0", "1"}, kId)));
  CHECK_FALSE(preserves_products(kStream));
  CHECK_FALSE(preserves_products(Functor::sum(kId, kId)));
}

TEST_CASE("pullbacks and their preservation") {
  const auto sq = make_pullback({"b0", "b1"}, {"c0"}, {"d0"}, {{"b0", "d0"}, {"b1", "d0"}},
                                {{"c0", "d0"}});
  CHECK(sq.apex == ElementSet{"(b0,c0)", "(b1,c0)"});
  CHECK(check_weak_pullback_preservation(Functor::pow(kId), sq).holds);
  CHECK(check_weak_pullback_preservation(Functor::prod(kId, kId), sq).holds);
  auto broken = sq;
  broken.apex.erase("(b1,c0)");
  broken.to_left.erase("(b1,c0)");
  broken.to_right.erase("(b1,c0)");
  expect_error(ErrorKind::NotAPullback,
               [&] { check_weak_pullback_preservation(kId, broken); });
}

TEST_CASE("element ids") {
  CHECK(pair_id("a", "b") == "(a,b)");
  const std::vector<Element> parts{"a", "(b,c)", "d"};
  CHECK(tuple_id(parts) == "(a,(b,c),d)");
  CHECK(is_valid_element_id("(a,b)"));
  CHECK(is_valid_element_id("0.x"));
  CHECK_FALSE(is_valid_element_id("a,b"));
  CHECK_FALSE(is_valid_element_id("(a"));
  CHECK_FALSE(is_valid_element_id(""));
}
