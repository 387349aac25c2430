#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coalg/pfn.hpp"
#include "coalg/random.hpp"
#include "coalg/recursion.hpp"

namespace coalg::laws {

// ---------------------------------------------------------------------------
// Fixtures

/// C{0,1} x Id.
Functor stream_functor();
/// C{0,1}, Id, stream, Id^{0,1}, P(Id).
std::vector<Functor> category_battery();
/// The functors checked for weak pullback preservation.
std::vector<Functor> hypothesis_battery();
/// F = Id on {x, y} with x -> y and y -> y.
Coalgebra two_point_example();
/// Identity-functor coalgebra with every point its own successor.
Coalgebra plain_set(const std::vector<Element>& points);
/// Plain sets on {0,1,2,3}; u = id, v(w) = continue at w-2 for w >= 2, else halt with w.
TuringDatum mod2_datum();
/// Three small stream coalgebras with pairwise nonempty products.
std::array<Coalgebra, 3> coherence_triple();

// ---------------------------------------------------------------------------
// Brute-force oracles

/// For every probe W and every partial phi: W -> f.src, f phi = 0 implies phi = 0.
bool weakly_total_by_definition(const PartialMorphism& f, const std::vector<Coalgebra>& probes);

/// For every probe W and all theta, theta': W -> f.src, f theta = f theta'
/// implies (dom f) theta = (dom f) theta'.
bool partial_mono_by_definition(const PartialMorphism& f, const std::vector<Coalgebra>& probes);

/// Union of the iterated preimages f^-n[U], n = 0..|X|, by plain table walks.
ElementSet iterate_domain_by_preimages(const ElementMap& f, const ElementSet& u, std::size_t steps);

/// Subcoalgebras found by testing every subset for successor closure.
std::vector<ElementSet> opens_by_subsets(const Coalgebra& x);

/// Pullback squares over B, C, D with 1..max_size points each, every pair of
/// order-preserving maps B -> D, C -> D (all squares up to relabeling of B
/// and C), keeping those whose apex has at most max_size points.
std::vector<PullbackSquare> pullback_squares(std::size_t max_size);

// ---------------------------------------------------------------------------
// Suites

struct CaseResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  /// A case that ran no checks is not a pass.
  bool ok() const { return checks > 0 && failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<CaseResult> cases;  ///< sorted by name
  bool ok() const;
  std::size_t passed() const;
};

/// category, topology, lattice, choice, iteration, turing, coherence,
/// functor-hypotheses.
const std::vector<std::string>& suite_names();
std::size_t default_trials(const std::string& suite);

/// Runs a suite deterministically. `trials` is the number of random
/// instances per case; exhaustive cases ignore it. Throws UnknownSuite.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed,
                      std::optional<std::size_t> trials = std::nullopt);

}  // namespace coalg::laws
