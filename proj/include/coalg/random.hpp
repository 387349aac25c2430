#pragma once

#include <random>
#include <string>
#include <vector>

#include "coalg/coalgebra.hpp"
#include "coalg/pfn.hpp"

namespace coalg::gen {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n).
std::size_t below(Rng& rng, std::size_t n);

/// A random element of F(carrier). Throws InvariantViolation when F(carrier)
/// is empty. Pow nodes draw at most two members.
Term random_term(const Functor& f, const std::vector<Element>& carrier, Rng& rng);

/// Random coalgebra on the carrier {prefix0, ..., prefix(n-1)}.
Coalgebra random_coalgebra(const Functor& f, std::size_t n, Rng& rng,
                           const std::string& prefix = "s");

/// Every coalgebra structure on {prefix0, ..., prefix(n-1)}.
std::vector<Coalgebra> all_coalgebras(const Functor& f, std::size_t n,
                                      const std::string& prefix = "s",
                                      std::size_t limit = kDefaultEnumerationLimit);

/// A random subcoalgebra: the closure or the interior of a random subset.
ElementSet random_open(const Coalgebra& x, Rng& rng);

/// A random partial morphism x -> y on a random open domain; zero when no
/// morphism leaves that domain.
PartialMorphism random_partial_morphism(const Coalgebra& x, const Coalgebra& y, Rng& rng);

/// Coalgebra on {prefix0, ...} whose structure terms mention only the point
/// itself. Every subset is a subcoalgebra, and a function between two such
/// coalgebras is a morphism exactly when it preserves shape().
Coalgebra loop_coalgebra(const Functor& f, std::size_t n, Rng& rng,
                         const std::string& prefix = "s");

/// Structure of `e` with every leaf replaced by "*".
std::string shape(const Coalgebra& x, const Element& e);

/// A random shape-preserving function x -> y that fixes `fixed` (a subset of
/// both carriers). nullopt when some point has no target of its shape.
std::optional<ElementMap> random_shape_map(const Coalgebra& x, const Coalgebra& y, Rng& rng,
                                           const ElementSet& fixed = {});

}  // namespace coalg::gen
