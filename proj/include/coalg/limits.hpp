#pragma once

#include <cstdint>
#include <vector>

#include "coalg/coalgebra.hpp"

namespace coalg {

/// Tagged disjoint union. Summand k contributes the ids coproduct_id(k, x).
struct CoproductWitness {
  std::vector<Coalgebra> summands;
  Coalgebra total;
  std::vector<Morphism> injections;
};

Element coproduct_id(std::size_t index, const Element& e);

/// Throws FunctorMismatch when a summand has a different functor.
CoproductWitness coproduct(const Functor& functor, const std::vector<Coalgebra>& summands);
/// Non-empty `summands`; the functor is taken from the first.
CoproductWitness coproduct(const std::vector<Coalgebra>& summands);

/// The copairing [legs...] out of `w.total`. Throws CodomainMismatch when the
/// legs disagree on their codomain, ObjectMismatch when leg k does not start
/// at summand k, NotMorphism for a leg that is not a morphism.
Morphism cotuple(const CoproductWitness& w, const std::vector<Morphism>& legs);

/// Product for Pow-free functors: the largest bisimulation with the forced
/// structure. Elements are pair_id(x, y).
struct ProductWitness {
  Coalgebra left;
  Coalgebra right;
  Coalgebra total;
  Morphism p0;
  Morphism p1;
};

/// Throws NonDeterministicProduct for functors containing Pow, FunctorMismatch.
ProductWitness product(const Coalgebra& x, const Coalgebra& y);

/// X^n built as ((X x X) x X) ...; n >= 1.
Coalgebra power(const Coalgebra& x, std::size_t n);

/// <f, g>: T -> X x Y for morphisms f: T -> X, g: T -> Y.
Morphism pair_total(const ProductWitness& w, const Morphism& f, const Morphism& g);

/// X x (Y_0 + ... + Y_k-1)  ~=  (X x Y_0) + ... + (X x Y_k-1).
struct DistIso {
  ProductWitness lhs;             ///< X x (sum Ys)
  CoproductWitness sum_of_ys;     ///< sum Ys
  std::vector<ProductWitness> parts;  ///< X x Y_i
  CoproductWitness rhs;           ///< sum (X x Y_i)
  Morphism forward;
  Morphism backward;
};

DistIso dist(const Coalgebra& x, const std::vector<Coalgebra>& ys);

/// Checks the witness itself (projections are morphisms, carrier is the
/// largest bisimulation, projections jointly monic) and then, for `trials`
/// randomly chosen test objects T and morphism pairs into the factors, that
/// <f, g> is a morphism with p0<f,g> = f and p1<f,g> = g.
bool verify_product_universal(const ProductWitness& w, std::size_t trials,
                              std::uint64_t seed = 0);

}  // namespace coalg
