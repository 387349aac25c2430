#pragma once

#include <optional>
#include <vector>

#include "coalg/limits.hpp"
#include "coalg/pfn.hpp"

namespace coalg {

/// f^-n[U] for n = 0..|X|. Throws InvariantViolation if the layers are not
/// nested, which cannot happen when f fixes U.
std::vector<ElementSet> preimage_layers(const Morphism& f, const Subcoalgebra& u);

/// It(f, U): x goes to f^n(x) for the least n <= |X| with f^n(x) in U, and
/// is undefined when there is none. Throws ObjectMismatch unless f is an
/// endomorphism of U's parent, NotTotal, NotMorphism, NotFixing.
PartialMorphism iterate(const Morphism& f, const Subcoalgebra& u);

/// It(f, U) computed as last|W / first|W over the coalgebra of orbit words
/// (x, fx, ..., f^n x) with 1 <= n <= |X| and f^n x in U. Throws Unsupported
/// unless the functor preserves products, since only then do tuples of
/// states carry a unique structure.
PartialMorphism oracle_iterate(const Morphism& f, const Subcoalgebra& u);

/// u: X -> W and v: W -> W + Y, both total morphisms. In `wy`, summand 0 is
/// W (continue) and summand 1 is Y (halt).
struct TuringDatum {
  Coalgebra x, w, y;
  Morphism u;
  Morphism v;
  CoproductWitness wy;
};

/// Tags for v's table.
Element cont(const Element& w);
Element halt(const Element& y);

/// Validates the datum. Throws FunctorMismatch, NotTotal, NotMorphism.
TuringDatum make_datum(Coalgebra x, Coalgebra w, Coalgebra y, ElementMap u, ElementMap v);

/// [0, 1_Y] after It([v, i1], 0 + Y) after i0 u.
PartialMorphism turing_development(const TuringDatum& d);

struct Trace {
  Element input;
  std::vector<Element> visited;
  std::optional<Element> halted;
  /// Index into `visited` of the state entered again, when diverged.
  std::optional<std::size_t> cycle_start;
};

/// Runs u then v until it halts or revisits a state. Throws UnknownElement.
Trace run_trace(const TuringDatum& d, const Element& x);

/// Runs d1 then d2 on state space W1 + W2. Throws ObjectMismatch unless d1.y == d2.x.
TuringDatum datum_seq(const TuringDatum& d1, const TuringDatum& d2);
/// Runs the datum of whichever summand the input comes from.
TuringDatum datum_coprod(const TuringDatum& d1, const TuringDatum& d2);
/// Runs d1 on the left component to completion, then d2 on the right, over
/// (W1 x X2) + (Y1 x W2). Throws NonDeterministicProduct.
TuringDatum datum_box(const TuringDatum& d1, const TuringDatum& d2);

struct IterationLaws {
  bool product_checked = false;  ///< false for Pow functors
  bool product_law = true;       ///< It(f x g, U x V) = It(f,U) box It(g,V)
  bool coproduct_law = true;     ///< It(f + g, U + V) = It(f,U) + It(g,V)
  bool holds() const { return product_law && coproduct_law; }
};

IterationLaws iteration_product_laws(const Morphism& f, const Subcoalgebra& u, const Morphism& g,
                                     const Subcoalgebra& v);

}  // namespace coalg
