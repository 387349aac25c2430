#include "doctest.h"
#include "helpers.hpp"

#include "coalg/laws.hpp"

using namespace coalg;
using namespace coalg::laws;

TEST_CASE("every suite passes at reduced size") {
  for (const auto& name : suite_names()) {
    const auto trials = std::max<std::size_t>(1, default_trials(name) / 5);
    const auto report = run_suite(name, 11, trials);
    CAPTURE(name);
    CHECK(!report.cases.empty());
    for (const auto& c : report.cases) {
      CAPTURE(c.name);
      CHECK_MESSAGE(c.ok(), c.first_failure);
    }
  }
}

TEST_CASE("reports are deterministic and sorted") {
  const auto a = run_suite("iteration", 5, 10);
  const auto b = run_suite("iteration", 5, 10);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].name == b.cases[i].name);
    CHECK(a.cases[i].checks == b.cases[i].checks);
    if (i) CHECK(a.cases[i - 1].name < a.cases[i].name);
  }
  testing::expect_error(ErrorKind::UnknownSuite, [] { run_suite("nope", 1); });
}

TEST_CASE("a case without checks does not pass") {
  CaseResult empty{"x", 0, 0, ""};
  CHECK_FALSE(empty.ok());
  SuiteReport none{"s", 0, 0, {}};
  CHECK_FALSE(none.ok());
}

TEST_CASE("quantified weak totality separates dense from non-dense") {
  const auto x = two_point_example();
  std::vector<Coalgebra> probes;
  for (std::size_t n = 0; n <= 2; ++n)
    for (auto& w : gen::all_coalgebras(Functor::id(), n, "w")) probes.push_back(w);
  CHECK(weakly_total_by_definition(partial_identity(Subcoalgebra(x, {"y"})), probes));
  CHECK_FALSE(weakly_total_by_definition(zero(x, x), probes));
  CHECK(weakly_total_by_definition(zero(Coalgebra::empty(Functor::id()), x), probes));
}

TEST_CASE("quantified mono definition") {
  const auto two = plain_set({"u", "v"});
  const auto one = plain_set({"p"});
  std::vector<Coalgebra> probes;
  for (std::size_t n = 0; n <= 2; ++n)
    for (auto& w : gen::all_coalgebras(Functor::id(), n, "w")) probes.push_back(w);
  CHECK(partial_mono_by_definition(identity_partial(two), probes));
  CHECK_FALSE(partial_mono_by_definition(
      embed_total(Morphism{two, one, {{"u", "p"}, {"v", "p"}}}), probes));
}

TEST_CASE("preimage oracle and subset opens") {
  const ElementMap f{{"0", "0"}, {"1", "0"}, {"2", "3"}, {"3", "2"}};
  CHECK(iterate_domain_by_preimages(f, {"0"}, 4) == ElementSet{"0", "1"});
  CHECK(iterate_domain_by_preimages(f, {}, 4).empty());
  CHECK(opens_by_subsets(two_point_example()).size() == 3);
}

TEST_CASE("pullback square family") {
  const auto squares = pullback_squares(3);
  CHECK(squares.size() > 50);
  for (const auto& sq : squares) {
    CHECK(sq.apex.size() <= 3);
    for (const auto& a : sq.apex)
      CHECK(sq.left_to_base.at(sq.to_left.at(a)) == sq.right_to_base.at(sq.to_right.at(a)));
  }
  CHECK(pullback_squares(1).size() == 1);
}

TEST_CASE("fixtures") {
  for (const auto& f : hypothesis_battery()) CHECK(is_nontrivial(f));
  const auto t = coherence_triple();
  for (const auto& a : t)
    for (const auto& b : t) CHECK_FALSE(product(a, b).total.empty());
  CHECK(turing_development(mod2_datum()).domain().size() == 4);
}
