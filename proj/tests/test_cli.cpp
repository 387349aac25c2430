#include <cstdlib>
#include <sstream>

#include "doctest.h"

#include "cli.hpp"
#include "coalg/io.hpp"

using coalg::cli::run;

namespace {

const std::string kData = COALG_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Result in_workspace(std::vector<std::string> args) {
  args.insert(args.begin(), {"--workspace", kData});
  return call(std::move(args));
}

}  // namespace

TEST_CASE("check") {
  const auto good = call({"check", kData + "/two_point.json"});
  CHECK(good.code == 0);
  CHECK(good.out.find("ok   ") != std::string::npos);
  const auto leaf = call({"check", kData + "/bad/leaf.json"});
  CHECK(leaf.code == 1);
  CHECK(leaf.out.find("ValidationError") != std::string::npos);
  CHECK(leaf.out.find("'z'") != std::string::npos);
  const auto square = call({"check", kData + "/bad/square.json"});
  CHECK(square.code == 1);
  CHECK(square.out.find("NotMorphism: square fails at 'x'") != std::string::npos);
  const auto syntax = call({"check", kData + "/bad/syntax.json"});
  CHECK(syntax.code == 1);
  CHECK(syntax.out.find("syntax.json:3:") != std::string::npos);
}

TEST_CASE("topology") {
  const auto all = in_workspace({"topology", "ex"});
  CHECK(all.code == 0);
  CHECK(all.out.find(R"(opens: [[],["y"],["x","y"]])") != std::string::npos);
  CHECK(all.out.find("hausdorff: false") != std::string::npos);
  const auto dense = in_workspace({"topology", "ex", "--dense", "y"});
  CHECK(dense.out == "dense {y}: true\n");
  const auto machine = in_workspace({"--format", "machine", "topology", "ex", "--opens", "--hausdorff"});
  const auto j = coalg::io::parse(machine.out);
  CHECK(j["opens"].size() == 3);
  CHECK(j["hausdorff"] == false);
  CHECK(in_workspace({"topology", "ex", "--dense", "q"}).code == 1);
  CHECK(in_workspace({"topology", "missing"}).err.find("UnknownBinding") != std::string::npos);
}

TEST_CASE("enumeration limit from flag and environment") {
  CHECK(in_workspace({"--limit", "1", "topology", "ex", "--opens"}).code == 3);
  ::setenv(coalg::cli::kLimitVariable, "2", 1);
  const auto env = in_workspace({"topology", "ex", "--opens"});
  CHECK(env.code == 3);
  CHECK(env.err.find("EnumerationLimitExceeded") != std::string::npos);
  CHECK(in_workspace({"--limit", "10", "topology", "ex", "--opens"}).code == 0);
  ::setenv(coalg::cli::kLimitVariable, "lots", 1);
  CHECK(in_workspace({"topology", "ex", "--opens"}).code == 1);
  ::unsetenv(coalg::cli::kLimitVariable);
}

TEST_CASE("products and bisimulations") {
  const auto pow = in_workspace({"product", "tree", "tree2"});
  CHECK(pow.code == 3);
  CHECK(pow.err.find("NonDeterministicProduct") != std::string::npos);
  CHECK(in_workspace({"product", "alt", "ex"}).code == 2);
  const auto ok = in_workspace({"--format", "machine", "product", "alt", "alt3"});
  CHECK(ok.code == 0);
  CHECK(coalg::io::parse(ok.out)["total"]["carrier"].size() == 3);
  const auto bisim = in_workspace({"bisim", "alt", "alt3"});
  CHECK(bisim.out.find(R"([["a0","b1"],["a0","b2"],["a1","b0"]])") != std::string::npos);
}

TEST_CASE("compose follows argument order") {
  const auto gf = in_workspace({"compose", "collapse", "only_y"});
  CHECK(gf.out.find(R"(dom: ["y"])") != std::string::npos);
  const auto fg = in_workspace({"compose", "only_y", "collapse"});
  CHECK(fg.out.find(R"(dom: ["x","y"])") != std::string::npos);
  CHECK(in_workspace({"compose", "to_point", "to_point"}).code == 2);
}

TEST_CASE("iterate and turing") {
  const auto it = in_workspace({"iterate", "drop", "0"});
  CHECK(it.code == 0);
  CHECK(it.out.find(R"(map: {"0":"0","1":"0"})") != std::string::npos);
  const auto nf = in_workspace({"iterate", "drop", "2"});
  CHECK(nf.code == 1);
  CHECK(nf.err.find("NotFixing") != std::string::npos);
  const auto tur = in_workspace({"turing", "mod2", "--trace", "3"});
  CHECK(tur.code == 0);
  CHECK(tur.out.find(R"(trace 3: visited ["3","1"], halted 1)") != std::string::npos);
  const auto m = in_workspace({"--format", "machine", "turing", "mod2", "--trace", "3"});
  const auto j = coalg::io::parse(m.out);
  CHECK(j["traces"]["3"]["visited"] == coalg::io::Json({"3", "1"}));
  CHECK(j["traces"]["3"]["halted"] == "1");
  CHECK(in_workspace({"turing", "mod2", "--trace", "7"}).code == 1);
}

TEST_CASE("laws") {
  const auto a = call({"--format", "machine", "laws", "--suite", "turing", "--seed", "3", "--trials", "5"});
  const auto b = call({"--format", "machine", "laws", "--suite", "turing", "--seed", "3", "--trials", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = coalg::io::parse(a.out);
  CHECK(j["passed"] == j["total"]);
  bool has_seq = false;
  for (const auto& c : j["cases"]) has_seq = has_seq || c["name"] == "seq-agreement";
  CHECK(has_seq);
  const auto topo = call({"laws", "--suite", "topology", "--trials", "3"});
  CHECK(topo.code == 0);
  CHECK(topo.out.find("PASS two-point-counterexample") != std::string::npos);
  const auto unknown = call({"laws", "--suite", "nope"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("UnknownSuite") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"--format", "yaml", "laws"}).code == 1);
  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("topology") != std::string::npos);
}
