#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coalg/coalgebra.hpp"
#include "coalg/limits.hpp"

namespace coalg {

/// A partial morphism src -> dst, stored as its canonical representative:
/// a subcoalgebra `dom` of src (the mono is its inclusion) and a morphism
/// from the restriction to dst.
class PartialMorphism {
 public:
  /// Validates the representative. Throws NotSubcoalgebra when `dom` is not
  /// successor-closed, ValidationError when `map` is not a total function
  /// dom -> dst.carrier, NotMorphism when the square fails on dom.
  static PartialMorphism make(Coalgebra src, Coalgebra dst, ElementSet dom, ElementMap map);

  /// Normalizes the representative (mono, phi) with mono: U >-> src injective.
  /// Throws ObjectMismatch, NotMorphism, or NotPartialMono for a non-injective mono.
  static PartialMorphism from_representative(const Morphism& mono, const Morphism& phi);

  const Coalgebra& src() const { return src_; }
  const Coalgebra& dst() const { return dst_; }
  const ElementSet& domain() const { return dom_; }
  const ElementMap& map() const { return map_; }

  /// Value at `x`, or nullopt outside the domain.
  std::optional<Element> at(const Element& x) const;

  friend bool operator==(const PartialMorphism&, const PartialMorphism&) = default;

 private:
  PartialMorphism(Coalgebra src, Coalgebra dst, ElementSet dom, ElementMap map)
      : src_(std::move(src)), dst_(std::move(dst)), dom_(std::move(dom)), map_(std::move(map)) {}

  Coalgebra src_;
  Coalgebra dst_;
  ElementSet dom_;
  ElementMap map_;
};

PartialMorphism embed_total(const Morphism& f);
PartialMorphism identity_partial(const Coalgebra& x);
/// The partial identity {i, 1_S} on a subcoalgebra.
PartialMorphism partial_identity(const Subcoalgebra& s);

/// g after f by pullback: defined where f is defined and lands in dom g.
/// Throws ObjectMismatch unless f.dst == g.src.
PartialMorphism compose(const PartialMorphism& g, const PartialMorphism& f);

PartialMorphism zero(const Coalgebra& x, const Coalgebra& y);
bool is_zero(const PartialMorphism& f);

/// Class equality. Throws ObjectMismatch when src or dst differ.
bool equal(const PartialMorphism& f, const PartialMorphism& g);

/// Every partial morphism x -> y: every subcoalgebra of x with every
/// morphism out of it. Throws EnumerationLimitExceeded past `limit`.
std::vector<PartialMorphism> all_partial_morphisms(const Coalgebra& x, const Coalgebra& y,
                                                   std::size_t limit = kDefaultEnumerationLimit);

// ---------------------------------------------------------------------------
// Near product. All of these throw NonDeterministicProduct for Pow functors.

/// f box g : src f x src g -> dst f x dst g, defined on dom f x dom g.
PartialMorphism box(const PartialMorphism& f, const PartialMorphism& g);
/// Diagonal X -> X x X.
PartialMorphism diag(const Coalgebra& x);
PartialMorphism proj0(const Coalgebra& x, const Coalgebra& y);
PartialMorphism proj1(const Coalgebra& x, const Coalgebra& y);
/// <f, g> = (f box g) after diag. Throws ObjectMismatch without a common src.
PartialMorphism pair(const PartialMorphism& f, const PartialMorphism& g);

/// (X x Y) x Z -> X x (Y x Z), built from projections and pairings.
PartialMorphism assoc_component(const Coalgebra& x, const Coalgebra& y, const Coalgebra& z);
/// X x Y -> Y x X as <p1, p0>.
PartialMorphism twist_component(const Coalgebra& x, const Coalgebra& y);

/// Mac Lane pentagon for (((W x X) x Y) x Z).
bool pentagon_holds(const Coalgebra& w, const Coalgebra& x, const Coalgebra& y,
                    const Coalgebra& z);
/// Symmetric-monoidal hexagon for ((X x Y) x Z).
bool hexagon_holds(const Coalgebra& x, const Coalgebra& y, const Coalgebra& z);

/// dom computed as the domain of p0 <1_X, f>.
Subcoalgebra dom_by_pairing(const PartialMorphism& f);

// ---------------------------------------------------------------------------
// Coproducts of partial morphisms

/// [legs...] out of w.total. Throws ObjectMismatch or CodomainMismatch as the
/// total cotuple does.
PartialMorphism cotuple(const CoproductWitness& w, const std::vector<PartialMorphism>& legs);
/// f + g between the coproducts of sources and of targets.
PartialMorphism coprod(const PartialMorphism& f, const PartialMorphism& g);

// ---------------------------------------------------------------------------
// Domains and ranges

Subcoalgebra dom(const PartialMorphism& f);
/// Image of f, a subcoalgebra of f.dst.
Subcoalgebra ran(const PartialMorphism& f);

/// Throw ObjectMismatch for different parents.
Subcoalgebra meet(const Subcoalgebra& a, const Subcoalgebra& b);
Subcoalgebra join(const Subcoalgebra& a, const Subcoalgebra& b);
/// meet as the domain of the composite of partial identities.
Subcoalgebra meet_by_composition(const Subcoalgebra& a, const Subcoalgebra& b);
/// join as the range of the cotuple of the two inclusions.
Subcoalgebra join_by_cotuple(const Subcoalgebra& a, const Subcoalgebra& b);

/// Union of a finite family of subcoalgebras of `parent`. Throws ObjectMismatch.
Subcoalgebra union_of_domains(const Coalgebra& parent, const std::vector<Subcoalgebra>& family);

bool is_total(const PartialMorphism& f);
/// dom f is dense in src. Throws TrivialFunctor when src has no topology.
bool is_weakly_total(const PartialMorphism& f);

/// Injective on its domain.
bool is_partial_mono(const PartialMorphism& f);
/// sigma: dst -> src with dom = ran f and sigma(f u) = u. Throws NotPartialMono.
PartialMorphism section(const PartialMorphism& f);

/// psi / phi : Y -> Z with dom = ran phi and (psi/phi)(phi x) = psi x.
/// Throws ObjectMismatch, DomainNotContained, or NotDivisible naming a pair
/// identified by phi and separated by psi.
PartialMorphism divide(const PartialMorphism& psi, const PartialMorphism& phi);

}  // namespace coalg
