#include "doctest.h"
#include "helpers.hpp"

#include "coalg/laws.hpp"
#include "coalg/recursion.hpp"

using namespace coalg;
using coalg::testing::expect_error;

namespace {

const Coalgebra kN4 = laws::plain_set({"0", "1", "2", "3"});
const Morphism kDrop{kN4, kN4, {{"0", "0"}, {"1", "0"}, {"2", "3"}, {"3", "2"}}};

ElementMap identity_map(const Coalgebra& x) { return identity(x).map; }

// Plain-set datum that halts at once with h(w).
TuringDatum immediate(const Coalgebra& x, const Coalgebra& y, const ElementMap& h) {
  ElementMap v;
  for (const auto& [w, out] : h) v.emplace(w, halt(out));
  return make_datum(x, x, y, identity_map(x), v);
}

}  // namespace

TEST_CASE("iteration on a plain set") {
  const auto it = iterate(kDrop, Subcoalgebra(kN4, {"0"}));
  CHECK(it.domain() == ElementSet{"0", "1"});
  CHECK(it.map() == ElementMap{{"0", "0"}, {"1", "0"}});
  const auto layers = preimage_layers(kDrop, Subcoalgebra(kN4, {"0"}));
  REQUIRE(layers.size() == 5);
  CHECK(layers[0] == ElementSet{"0"});
  CHECK(layers[1] == ElementSet{"0", "1"});
  CHECK(oracle_iterate(kDrop, Subcoalgebra(kN4, {"0"})) == it);
}

TEST_CASE("iteration preconditions") {
  expect_error(ErrorKind::NotFixing, [] { iterate(kDrop, Subcoalgebra(kN4, {"2"})); });
  expect_error(ErrorKind::NotTotal,
               [] { iterate(Morphism{kN4, kN4, {{"0", "0"}}}, Subcoalgebra(kN4, {"0"})); });
  const auto other = laws::plain_set({"0"});
  expect_error(ErrorKind::ObjectMismatch, [&] { iterate(kDrop, Subcoalgebra(other, {"0"})); });
  const auto a = laws::coherence_triple()[0];
  expect_error(ErrorKind::Unsupported, [&] { oracle_iterate(identity(a), Subcoalgebra(a, {})); });
}

TEST_CASE("long orbits take the least power") {
  // 4 -> 3 -> 2 -> 2 and 1 -> 0 -> 0 on plain sets
  const auto x = laws::plain_set({"0", "1", "2", "3", "4"});
  const Morphism dec{x, x, {{"0", "0"}, {"1", "0"}, {"2", "2"}, {"3", "2"}, {"4", "3"}}};
  const auto it = iterate(dec, Subcoalgebra(x, {"0", "2"}));
  CHECK(it.map() == ElementMap{{"0", "0"}, {"1", "0"}, {"2", "2"}, {"3", "2"}, {"4", "2"}});
  CHECK(oracle_iterate(dec, Subcoalgebra(x, {"0", "2"})) == it);
}

TEST_CASE("the mod-2 machine") {
  const auto d = laws::mod2_datum();
  const auto tur = turing_development(d);
  CHECK(tur.map() == ElementMap{{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}});
  const auto tr = run_trace(d, "3");
  CHECK(tr.visited == std::vector<Element>{"3", "1"});
  CHECK(tr.halted == Element("1"));
  CHECK_FALSE(tr.cycle_start.has_value());
  expect_error(ErrorKind::UnknownElement, [&] { run_trace(d, "9"); });
}

TEST_CASE("immediate halting and divergence") {
  const auto y = laws::plain_set({"a", "b"});
  const auto h = ElementMap{{"0", "a"}, {"1", "b"}, {"2", "a"}, {"3", "b"}};
  const auto d = immediate(kN4, y, h);
  CHECK(turing_development(d) == embed_total(Morphism{kN4, y, h}));
  CHECK(run_trace(d, "2").visited.size() == 1);

  ElementMap spin;
  for (const auto& e : kN4.carrier()) spin.emplace(e, cont(e));
  const auto never = make_datum(kN4, kN4, y, identity_map(kN4), spin);
  CHECK(is_zero(turing_development(never)));
  const auto tr = run_trace(never, "1");
  CHECK_FALSE(tr.halted.has_value());
  CHECK(tr.cycle_start == std::size_t{0});
}

TEST_CASE("datum validation") {
  const auto y = laws::plain_set({"a"});
  expect_error(ErrorKind::NotTotal,
               [&] { make_datum(kN4, kN4, y, {{"0", "0"}}, {}); });
  expect_error(ErrorKind::FunctorMismatch, [&] {
    make_datum(kN4, laws::coherence_triple()[0], y, {}, {});
  });
}

TEST_CASE("combinators on the mod-2 machine") {
  const auto d = laws::mod2_datum();
  const auto tur = turing_development(d);
  CHECK(turing_development(datum_seq(d, d)) == compose(tur, tur));
  CHECK(turing_development(datum_coprod(d, d)) == coprod(tur, tur));
  CHECK(turing_development(datum_box(d, d)) == box(tur, tur));

  const auto same = immediate(kN4, kN4, identity_map(kN4));
  CHECK(turing_development(datum_seq(d, same)) == tur);
  expect_error(ErrorKind::ObjectMismatch,
               [&] { datum_seq(d, immediate(laws::plain_set({"q"}), kN4, {{"q", "0"}})); });
}

TEST_CASE("box with diverging parts") {
  // The left machine halts only on even inputs; the right one is mod 2.
  ElementMap v;
  for (const auto& e : kN4.carrier()) v.emplace(e, (e == "0" || e == "2") ? halt(e) : cont(e));
  const auto partial = make_datum(kN4, kN4, kN4, identity_map(kN4), v);
  const auto d = laws::mod2_datum();
  const auto both = turing_development(datum_box(partial, d));
  CHECK(both == box(turing_development(partial), turing_development(d)));
  CHECK(both.domain().size() == 8);
}

TEST_CASE("coprod with an empty datum") {
  const auto empty = Coalgebra::empty(Functor::id());
  const auto none = make_datum(empty, empty, empty, {}, {});
  CHECK(is_zero(turing_development(none)));
  const auto d = laws::mod2_datum();
  const auto sum = turing_development(datum_coprod(d, none));
  CHECK(sum.domain().size() == 4);
  CHECK(sum.at("0.3") == Element("0.1"));
}

TEST_CASE("iteration laws on plain decrement machines") {
  const auto laws = iteration_product_laws(kDrop, Subcoalgebra(kN4, {"0"}), identity(kN4),
                                           Subcoalgebra(kN4, {"2", "3"}));
  CHECK(laws.product_checked);
  CHECK(laws.holds());
  const auto full = iteration_product_laws(identity(kN4), Subcoalgebra(kN4, kN4.carrier()),
                                           identity(kN4), Subcoalgebra(kN4, kN4.carrier()));
  CHECK(full.holds());
}
