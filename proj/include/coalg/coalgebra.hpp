#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "coalg/functor.hpp"

namespace coalg {

enum class TrivialPolicy {
  Reject,  ///< throw TrivialFunctor for functors with F({*}) empty
  Allow,   ///< accept them, with topology operations disabled
};

/// A finite F-coalgebra: carrier plus structure map carrier -> F(carrier).
/// Immutable; copies share state, and equality is structural.
class Coalgebra {
 public:
  /// The empty coalgebra for the identity functor.
  Coalgebra();

  /// Validates element ids and every structure term; throws ValidationError
  /// naming the first offending element or leaf.
  Coalgebra(Functor functor, ElementSet carrier, std::map<Element, Term> structure,
            TrivialPolicy policy = TrivialPolicy::Reject);

  /// The empty coalgebra for `functor`.
  static Coalgebra empty(Functor functor);

  const Functor& functor() const;
  const ElementSet& carrier() const;
  const std::map<Element, Term>& structure() const;
  /// Throws UnknownElement.
  const Term& structure(const Element& e) const;
  /// Leaves of the structure value of `e`.
  const ElementSet& successors(const Element& e) const;

  std::size_t size() const { return carrier().size(); }
  bool empty() const { return carrier().empty(); }
  bool contains(const Element& e) const { return carrier().count(e) > 0; }

  /// False for coalgebras of trivial functors built with TrivialPolicy::Allow.
  bool has_topology() const;

  friend bool operator==(const Coalgebra& a, const Coalgebra& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// The restriction of `x` to a successor-closed subset. Throws NotSubcoalgebra.
Coalgebra restrict(const Coalgebra& x, const ElementSet& subset);

// ---------------------------------------------------------------------------
// Morphisms

/// A candidate morphism; use is_morphism / require_morphism to certify it.
struct Morphism {
  Coalgebra src;
  Coalgebra dst;
  ElementMap map;
};

struct MorphismCheck {
  bool ok = true;
  /// First element where the square fails (or the map is not total).
  std::optional<Element> witness;
  std::string reason;
  explicit operator bool() const { return ok; }
};

MorphismCheck is_morphism(const Morphism& f);
/// Throws NotMorphism naming the first failing element.
void require_morphism(const Morphism& f);

Morphism identity(const Coalgebra& x);
/// g after f; throws ObjectMismatch unless f.dst == g.src.
Morphism compose(const Morphism& g, const Morphism& f);
/// Every morphism src -> dst, found by backtracking with early square checks.
/// Throws EnumerationLimitExceeded once more than `limit` are found.
std::vector<ElementMap> all_morphisms(const Coalgebra& src, const Coalgebra& dst,
                                      std::size_t limit = kDefaultEnumerationLimit);

/// Image f[A] of a subset of f.src.
ElementSet image(const Morphism& f, const ElementSet& subset);
ElementSet image(const Morphism& f);

// ---------------------------------------------------------------------------
// Subcoalgebras and the coalgebra topology

/// A successor-closed subset of a parent coalgebra.
class Subcoalgebra {
 public:
  /// Throws NotSubcoalgebra if `subset` is not successor-closed or not
  /// contained in the carrier.
  Subcoalgebra(Coalgebra parent, ElementSet subset);

  const Coalgebra& parent() const { return parent_; }
  const ElementSet& subset() const { return subset_; }
  /// The subset with the restricted structure.
  Coalgebra as_coalgebra() const { return restrict(parent_, subset_); }
  /// The inclusion into the parent.
  Morphism inclusion() const;

  friend bool operator==(const Subcoalgebra&, const Subcoalgebra&) = default;

 private:
  Coalgebra parent_;
  ElementSet subset_;
};

inline constexpr std::size_t kDefaultOpenSetLimit = 4096;

bool is_subcoalgebra(const Coalgebra& x, const ElementSet& s);
/// Least subcoalgebra containing `s` (successor closure).
Subcoalgebra generated(const Coalgebra& x, const ElementSet& s);
/// Largest subcoalgebra contained in `s`.
Subcoalgebra cogenerated_inside(const Coalgebra& x, const ElementSet& s);

ElementSet interior(const Coalgebra& x, const ElementSet& s);
ElementSet closure(const Coalgebra& x, const ElementSet& s);
bool is_dense(const Coalgebra& x, const ElementSet& s);

/// Every subcoalgebra, sorted by size then lexicographically. Throws
/// EnumerationLimitExceeded once more than `limit` opens are found.
std::vector<ElementSet> open_sets(const Coalgebra& x, std::size_t limit = kDefaultOpenSetLimit);

/// Components of the undirected successor graph, each a clopen subcoalgebra.
std::vector<ElementSet> connected_components(const Coalgebra& x);
/// The empty coalgebra is not connected.
bool is_connected(const Coalgebra& x);

bool is_irreducible(const Coalgebra& x);
bool is_hausdorff(const Coalgebra& x);

struct Factorization {
  Morphism epi;  ///< src onto the image
  Subcoalgebra image;
  Morphism mono;  ///< inclusion of the image into dst
};

/// Throws NotMorphism if `f` is not a morphism.
Factorization epi_mono_factorize(const Morphism& f);

/// f^-1[U] as a subcoalgebra of f.src. Throws ObjectMismatch if U lives in
/// another coalgebra, InvariantViolation if the preimage is not closed.
Subcoalgebra preimage(const Morphism& f, const Subcoalgebra& u);

// ---------------------------------------------------------------------------
// Bisimulations

/// A relation between two coalgebras, optionally carrying an explicit
/// bisimulation structure. Structure terms use pair_id(a, b) leaves.
struct Bisimulation {
  Coalgebra left;
  Coalgebra right;
  Relation pairs;
  std::optional<std::map<std::pair<Element, Element>, Term>> structure;
};

/// With a structure: both projections are morphisms. Without: every pair
/// passes relation lifting.
bool is_bisimulation(const Bisimulation& r);

/// Greatest fixpoint of relation lifting, starting from the full relation.
/// Throws FunctorMismatch.
Relation largest_bisimulation(const Coalgebra& x, const Coalgebra& y);

/// Whether the graph of `g` is a bisimulation between `x` and `y`.
bool graph_is_bisimulation(const Coalgebra& x, const Coalgebra& y, const ElementMap& g);

}  // namespace coalg
