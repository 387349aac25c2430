// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "coalg/laws.hpp"

using namespace coalg;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr double kTotalLimitMs = 300000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Suites are run once and shared between criteria.
struct Runs {
  std::map<std::string, std::pair<laws::SuiteReport, double>> done;

  const std::pair<laws::SuiteReport, double>& get(const std::string& suite, std::size_t trials) {
    const auto key = suite + "/" + std::to_string(trials);
    auto it = done.find(key);
    if (it != done.end()) return it->second;
    const auto t0 = Clock::now();
    auto report = laws::run_suite(suite, kSeed, trials);
    return done.emplace(key, std::make_pair(std::move(report), ms_since(t0))).first->second;
  }
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// Every case whose name starts with one of `prefixes` must pass, with at
// least `min_checks` checks each, and exactly `expected` cases must match.
Outcome select(const laws::SuiteReport& r, const std::vector<std::string>& prefixes,
               std::size_t expected, std::size_t min_checks) {
  std::size_t matched = 0, checks = 0;
  for (const auto& c : r.cases) {
    bool hit = false;
    for (const auto& p : prefixes) hit = hit || starts_with(c.name, p);
    if (!hit) continue;
    ++matched;
    checks += c.checks;
    if (!c.ok())
      return {false, c.name + ": " + (c.checks ? c.first_failure : std::string("no checks ran"))};
    if (c.checks < min_checks)
      return {false, c.name + ": only " + std::to_string(c.checks) + " checks"};
  }
  if (matched != expected)
    return {false, std::to_string(matched) + " cases matched, expected " + std::to_string(expected)};
  return {true, std::to_string(matched) + " cases, " + std::to_string(checks) + " checks"};
}

Outcome within(Outcome o, double ms, double limit_ms) {
  if (o.pass && ms > limit_ms) {
    o.pass = false;
    o.detail += "; too slow";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.0f ms of %.0f ms", ms, limit_ms);
  o.detail += buf;
  return o;
}

Outcome timed(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.0f ms", ms);
  return {true, buf};
}

Outcome merge(Outcome a, const Outcome& t) {
  a.detail += t.detail;
  return a;
}

Outcome ac1() {
  const auto t0 = Clock::now();
  const auto x = laws::two_point_example();
  const bool sub = is_subcoalgebra(x, {"y"});
  const bool dense = is_dense(x, {"y"});
  const auto pid = partial_identity(Subcoalgebra(x, {"y"}));
  const bool weak = is_weakly_total(pid);
  const bool total = is_total(pid);
  const Outcome o{sub && dense && weak && !total,
                  std::string("subcoalgebra=") + (sub ? "true" : "false") + " dense=" +
                      (dense ? "true" : "false") + " weakly_total=" + (weak ? "true" : "false") +
                      " total=" + (total ? "true" : "false")};
  return within(o, ms_since(t0), 1000);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  Runs runs;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dense but not total partial identity on {x,y}", ac1},
      {"category and zero laws, 200 triples per functor",
       [&] {
         const auto& [r, ms] = runs.get("category", 200);
         return within(select(r, {"associativity ", "identity ", "zero "}, 15, 200), ms, 30000);
       }},
      {"domain lattice, 50 coalgebras per functor",
       [&] {
         const auto& [r, ms] = runs.get("lattice", 50);
         return merge(select(r, {"operations ", "distributivity "}, 10, 50), timed(ms));
       }},
      {"weak totality: density vs quantified definition, |X| <= 3",
       [&] {
         const auto& [r, ms] = runs.get("topology", 50);
         return merge(select(r, {"weak-totality-equivalence"}, 1, 1), timed(ms));
       }},
      {"weak choice on 100 partial monos",
       [&] {
         const auto& [r, ms] = runs.get("choice", 100);
         return merge(select(r, {"section-contract"}, 1, 300), timed(ms));
       }},
      {"iteration: preimage domain, image, laws, oracle, 100 instances",
       [&] {
         const auto& [r, ms] = runs.get("iteration", 100);
         return merge(select(r,
                             {"domain-by-preimages", "image-in-U", "least-power-values",
                              "product-law", "coproduct-law", "oracle-agreement"},
                             6, 100),
                      timed(ms));
       }},
      {"Turing closure: seq, coprod, box on 50 pairs",
       [&] {
         const auto& [r, ms] = runs.get("turing", 50);
         return within(select(r, {"seq-agreement", "coprod-agreement", "box-agreement"}, 3, 50), ms,
                       60000);
       }},
      {"weak pullback preservation, squares up to 3 points",
       [&] {
         const auto& [r, ms] = runs.get("functor-hypotheses", 1);
         return merge(select(r, {"weak-pullbacks "}, laws::hypothesis_battery().size(),
                             laws::pullback_squares(3).size()),
                      timed(ms));
       }},
      {"product universal property, 25 witnesses x 100 trials, negative control",
       [&] {
         const auto& [r, ms] = runs.get("coherence", 25);
         return merge(select(r, {"product-universal", "product-negative-control"}, 2, 1), timed(ms));
       }},
      {"local connectedness, 50 coalgebras",
       [&] {
         const auto& [r, ms] = runs.get("topology", 50);
         return merge(select(r, {"local-connectedness"}, 1, 50), timed(ms));
       }},
      {"twist involution, pentagon, hexagon",
       [&] {
         const auto& [r, ms] = runs.get("coherence", 25);
         return merge(select(r, {"twist-involution", "pentagon", "hexagon"}, 3, 6), timed(ms));
       }},
  };

  std::size_t passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    passed += o.pass;
    std::printf("AC%zu %s  %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  const double total = ms_since(start);
  const bool in_time = total <= kTotalLimitMs;
  std::printf("acceptance: %zu/%zu passed in %.0f ms (limit %.0f ms)%s\n", passed, criteria.size(),
              total, kTotalLimitMs, in_time ? "" : ", too slow");
  return passed == criteria.size() && in_time ? 0 : 1;
}
