#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coalg {

/// Carrier elements and constant symbols are opaque identifiers.
using Element = std::string;
using ElementSet = std::set<Element>;
using ElementMap = std::map<Element, Element>;
using Relation = std::set<std::pair<Element, Element>>;

inline constexpr std::size_t kDefaultEnumerationLimit = 100000;

// ---------------------------------------------------------------------------
// Functor expressions

/// Syntax tree of a set endofunctor built from constants, the identity,
/// binary products and sums, exponents by a finite index set, and the finite
/// powerset. Immutable; copies share structure.
class Functor {
 public:
  enum class Kind { Const, Id, Prod, Sum, Exp, Pow };

  /// The identity functor.
  Functor();

  static Functor constant(std::vector<std::string> symbols);
  static Functor id();
  static Functor prod(Functor left, Functor right);
  static Functor sum(Functor left, Functor right);
  static Functor exp(std::vector<std::string> index, Functor body);
  static Functor pow(Functor body);

  Kind kind() const;
  /// Constant symbols (Const) or the index set (Exp); sorted, duplicate-free.
  const std::vector<std::string>& symbols() const;
  const Functor& left() const;
  const Functor& right() const;
  /// Operand of Exp and Pow.
  const Functor& body() const;

  std::string to_string() const;

  friend bool operator==(const Functor& a, const Functor& b);

 private:
  struct Node;
  explicit Functor(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Terms: elements of F(X)

class Term {
 public:
  enum class Kind { Const, Leaf, Pair, Inl, Inr, Func, Set };

  Term() = default;

  static Term constant(std::string symbol);
  static Term leaf(Element e);
  static Term pair(Term first, Term second);
  static Term inl(Term payload);
  static Term inr(Term payload);
  static Term func(std::map<std::string, Term> table);
  /// Deduplicates and sorts members by their canonical key.
  static Term set(std::vector<Term> members);

  Kind kind() const { return kind_; }
  /// The constant symbol (Const) or carrier element (Leaf).
  const std::string& atom() const { return atom_; }
  const Term& first() const { return kids_.at(0); }
  const Term& second() const { return kids_.at(1); }
  const Term& payload() const { return kids_.at(0); }
  /// Index keys of a Func term, parallel to children().
  const std::vector<std::string>& keys() const { return keys_; }
  const std::vector<Term>& children() const { return kids_; }

  /// Canonical serialization; compact JSON text with sorted keys. Set
  /// members are ordered by it, so it is also the total order on terms.
  std::string key() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend bool operator<(const Term& a, const Term& b) { return a.key() < b.key(); }

 private:
  Kind kind_ = Kind::Const;
  std::string atom_;
  std::vector<std::string> keys_;
  std::vector<Term> kids_;
};

// ---------------------------------------------------------------------------
// Functor action

/// |F(X)| for |X| = n, saturating at SIZE_MAX.
std::size_t cardinality(const Functor& f, std::size_t n);

/// Enumerates F(X) in canonical order. Throws EnumerationLimitExceeded when
/// |F(X)| exceeds `limit`.
std::vector<Term> apply_on_set(const Functor& f, const ElementSet& x,
                               std::size_t limit = kDefaultEnumerationLimit);

/// F applied to the function `map` (domain = its keys), evaluated at `t`.
Term apply_on_map(const Functor& f, const ElementMap& map, const Term& t);

/// Same, for a function given as a callable; `t` is only shape-checked.
Term apply_on_map(const Functor& f,
                  const std::function<Element(const Element&)>& map,
                  const Term& t);

bool well_typed(const Functor& f, const Term& t, const ElementSet& carrier);

/// Throws TypeMismatch with the offending position when `t` is not a term of
/// `f` over `carrier`.
void require_well_typed(const Functor& f, const Term& t, const ElementSet& carrier);

ElementSet leaves(const Term& t);

/// Relation lifting: Const equal symbols, Id membership in `r`,
/// Prod/Exp componentwise, Sum same injection, Pow in both directions.
bool lift_relation(const Functor& f, const Relation& r, const Term& t, const Term& s);

/// Combines terms of equal shape position by position, joining their leaves
/// with `combine`. Returns nullopt when two constants or two injections
/// disagree. Throws Unsupported for functors containing Pow.
std::optional<Term> zip_terms(
    const Functor& f, std::span<const Term> terms,
    const std::function<Element(std::span<const Element>)>& combine);

// ---------------------------------------------------------------------------
// Functor hypotheses

/// F({*}) is nonempty; for this grammar equivalent to "FX empty implies X empty".
bool is_nontrivial(const Functor& f);

/// No Pow node occurs.
bool is_deterministic(const Functor& f);

/// F(X x Y) = F(X) x F(Y) canonically; holds for X^M with singleton constants.
bool preserves_products(const Functor& f);

/// A commuting square of finite sets
///
///   apex --to_left--> left
///    |                 |
///  to_right       left_to_base
///    v                 v
///   right --right_to_base--> base
struct PullbackSquare {
  ElementSet apex, left, right, base;
  ElementMap to_left, to_right, left_to_base, right_to_base;
};

/// The canonical pullback of `f: left -> base` and `g: right -> base`, with
/// apex elements named "(l,r)".
PullbackSquare make_pullback(const ElementSet& left, const ElementSet& right,
                             const ElementSet& base, const ElementMap& f,
                             const ElementMap& g);

struct PreservationResult {
  bool holds = true;
  /// A compatible pair in F(left) x F(right) with no common preimage.
  std::optional<std::pair<Term, Term>> counterexample;
};

/// Decides by exhaustive search whether F maps the pullback `square` to a weak
/// pullback. Throws NotAPullback if the input square is not a pullback.
PreservationResult check_weak_pullback_preservation(
    const Functor& f, const PullbackSquare& square,
    std::size_t limit = kDefaultEnumerationLimit);

/// Ids built by the constructions. Element ids may not contain unbalanced
/// parentheses or top-level commas, which keeps these encodings injective.
Element pair_id(const Element& a, const Element& b);
Element tuple_id(std::span<const Element> parts);
bool is_valid_element_id(const Element& e);

}  // namespace coalg
