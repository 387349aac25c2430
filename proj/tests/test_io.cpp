#include "doctest.h"
#include "helpers.hpp"

#include "coalg/io.hpp"
#include "coalg/laws.hpp"

using namespace coalg;
using coalg::testing::expect_error;
using io::Json;

namespace {

const std::string kData = COALG_TEST_DATA;

}  // namespace

TEST_CASE("term keys are the canonical json text") {
  gen::Rng rng(1);
  const std::vector<Element> xs{"a", "b", "(a,b)"};
  for (int t = 0; t < 200; ++t) {
    const auto f = coalg::testing::random_functor(rng, 3);
    if (cardinality(f, xs.size()) == 0) continue;
    const auto term = gen::random_term(f, xs, rng);
    CHECK(term.key() == io::dump(io::to_json(term)));
    CHECK(io::term_from_json(io::to_json(term)) == term);
  }
}

TEST_CASE("functors round trip") {
  gen::Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto f = coalg::testing::random_functor(rng, 3);
    const auto j = io::to_json(f);
    CHECK(io::functor_from_json(j) == f);
    CHECK(io::dump(io::to_json(io::functor_from_json(io::parse(io::dump(j))))) == io::dump(j));
  }
}

TEST_CASE("coalgebras and morphisms round trip bit-stably") {
  gen::Rng rng(3);
  for (const auto& f : laws::hypothesis_battery()) {
    for (int t = 0; t < 20; ++t) {
      const auto x = gen::random_coalgebra(f, gen::below(rng, 4), rng, "a");
      const auto text = io::dump(io::to_json(x));
      const auto back = io::coalgebra_from_json(io::parse(text));
      CHECK(back == x);
      CHECK(io::dump(io::to_json(back)) == text);

      const auto y = coproduct(f, {x, gen::random_coalgebra(f, 1, rng, "b")}).total;
      const auto p = gen::random_partial_morphism(x, y, rng);
      CHECK(io::partial_morphism_from_json(io::to_json(p)) == p);
      const auto m = identity(x);
      const auto mback = io::morphism_from_json(io::to_json(m));
      CHECK(mback.map == m.map);
      CHECK(mback.src == m.src);
    }
  }
}

TEST_CASE("data round trip") {
  const auto d = laws::mod2_datum();
  const auto j = io::to_json(d);
  CHECK(j["v"]["2"] == Json{{"inl", "0"}});
  CHECK(j["v"]["1"] == Json{{"inr", "1"}});
  const auto back = io::datum_from_json(j);
  CHECK(io::dump(io::to_json(back)) == io::dump(j));
  CHECK(turing_development(back) == turing_development(d));
}

TEST_CASE("parse errors carry a position") {
  try {
    io::parse("{\n  \"a\": [1,,2]\n}", "doc.json");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("doc.json:2:") != std::string::npos);
  }
}

TEST_CASE("documents load with name references") {
  const auto ws = io::load_directory(kData);
  CHECK(ws.coalgebra("ex") == laws::two_point_example());
  CHECK(ws.coalgebra("alt") == laws::coherence_triple()[0]);
  CHECK(ws.functor("stream") == laws::stream_functor());
  CHECK(ws.partial_morphism("only_y").domain() == ElementSet{"y"});
  CHECK(turing_development(ws.datum("mod2")).map() ==
        ElementMap{{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}});
  expect_error(ErrorKind::UnknownBinding, [&] { ws.coalgebra("missing"); });
}

TEST_CASE("document validation") {
  expect_error(ErrorKind::ValidationError, [] { io::load_document(R"({"extras":{}})"); });
  expect_error(ErrorKind::ValidationError, [] {
    io::load_document(R"({"coalgebras":{"c":{"functor":"id","carrier":["x"],"structure":{"x":"z"}}}})");
  });
  expect_error(ErrorKind::NotMorphism, [] {
    io::load_document(R"({"coalgebras":{"c":{"functor":"id","carrier":["x","y"],"structure":{"x":"y","y":"y"}},
                                         "d":{"functor":"id","carrier":["p","q"],"structure":{"p":"p","q":"q"}}},
                          "morphisms":{"m":{"src":"c","dst":"d","map":{"x":"p","y":"q"}}}})");
  });
  expect_error(ErrorKind::UnknownBinding, [] {
    io::load_document(R"({"morphisms":{"m":{"src":"nope","dst":"nope","map":{}}}})");
  });
  io::Workspace a = io::load_document(R"({"coalgebras":{"c":{"functor":"id","carrier":[],"structure":{}}}})");
  const auto b = a;
  expect_error(ErrorKind::ValidationError, [&] { a.merge(b); });
}

TEST_CASE("check_document reports every binding") {
  const auto entries = io::check_document(
      R"({"coalgebras":{"good":{"functor":"id","carrier":["x"],"structure":{"x":"x"}},
                        "bad":{"functor":"id","carrier":["x"],"structure":{"x":"z"}}}})");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "bad");
  CHECK_FALSE(entries[0].ok);
  CHECK(entries[0].message.find("'z'") != std::string::npos);
  CHECK(entries[1].ok);
}
