#pragma once

// Monads and comonads on finite sets at the level of values, with law
// checks, Kleisli and Eilenberg-Moore constructions; and monads on finite
// categories given by functors and natural transformations.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fincat/finset.hpp"
#include "fincat/functor.hpp"
#include "fincat/value.hpp"
#include "fincat/verdict.hpp"

namespace fincat {

/// A finite set of values, sorted and duplicate-free.
using Carrier = std::vector<Value>;
using ValueFn = std::function<Value(const Value&)>;
using ValueMap = std::map<Value, Value>;

Carrier carrier_of(const FinSet& s);
/// Atoms "x0", ..., "x{n-1}".
Carrier standard_carrier(std::size_t n);
/// Looks `v` up in `m`; throws NotAFunction when absent.
const Value& lookup(const ValueMap& m, const Value& v);

class FinSetMonad {
 public:
  virtual ~FinSetMonad() = default;
  virtual std::string name() const = 0;
  /// Whether enumerate() returns all of T X rather than a bounded part.
  virtual bool finite_carrier() const = 0;
  /// T X in canonical order.
  virtual Carrier enumerate(const Carrier& x) const = 0;
  /// |enumerate(X)| for |X| = n, saturating.
  virtual std::uint64_t carrier_size(std::uint64_t n) const = 0;
  virtual Value unit(const Value& x) const = 0;
  virtual Value multiply(const Value& ttx) const = 0;
  virtual Value fmap(const ValueFn& f, const Value& tx) const = 0;
  virtual Value sample(const Carrier& x, std::mt19937_64& rng) const = 0;
};

using MonadPtr = std::shared_ptr<const FinSetMonad>;

MonadPtr powerset_monad();
/// Enumerates distributions whose weights have denominators dividing some
/// d ≤ max_denominator.
MonadPtr distribution_monad(std::size_t max_denominator);
/// Throws NotAMonoid unless the table is a monoid.
MonadPtr writer_monad(const MonoidTable& m);
/// Accepts any table with a two-sided unit, so broken tables can be tested.
MonadPtr writer_monad_unchecked(const MonoidTable& m);
MonadPtr maybe_monad();
MonadPtr list_monad(std::size_t max_length);

struct MonadSpec {
  std::string kind;  // powerset, distribution, writer, maybe, list
  std::size_t max_denominator = 2;
  std::size_t max_length = 2;
  std::optional<MonoidTable> monoid = std::nullopt;
};

/// Throws UnknownKind, NotAMonoid or InvalidArgument.
MonadPtr builtin_monad(const MonadSpec& spec);

enum class LawMode { exhaustive, bounded };

struct LawOptions {
  LawMode mode = LawMode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10'000;
  std::uint64_t budget = default_budget;
  bool naturality = true;
};

/// Null when `law` (left_unit, right_unit, associativity) holds at the
/// element, otherwise a witness.
nlohmann::json monad_law_failure(const FinSetMonad& t, const std::string& law, const Value& element);

/// Unit laws on T X, associativity on T T T X (all of it, the bounded
/// enumeration, or seeded samples), and naturality of η, μ and
/// functoriality of T against functions into small corpus sets. Stats
/// count instances per law. Throws NotFiniteCarrier for an exhaustive
/// check of an infinite carrier, BudgetExceeded when a carrier is too big.
Verdict check_monad_laws(const FinSetMonad& t, const Carrier& x, const LawOptions& opts = {});

/// A Kleisli arrow X → T Y.
struct KleisliArrow {
  Carrier domain;
  Carrier codomain;
  ValueMap map;
  friend bool operator==(const KleisliArrow&, const KleisliArrow&) = default;
};

KleisliArrow kleisli_identity(const FinSetMonad& t, const Carrier& x);
/// μ ∘ T h ∘ k. Throws EndpointMismatch unless the arrows meet.
KleisliArrow kleisli_compose(const FinSetMonad& t, const KleisliArrow& k, const KleisliArrow& h);

/// Objects are the universe sets; morphisms every X → T Y, named
/// "X->Y:[t1,...]"; identities η; composition kleisli_compose. Laws are not
/// checked here. Throws NotFiniteCarrier or BudgetExceeded.
RawCategory kleisli_raw(const FinSetMonad& t, const std::vector<NamedSet>& universe,
                        std::uint64_t budget = default_budget);
/// validate_category(kleisli_raw(...)).
FinCategory kleisli_category(const FinSetMonad& t, const std::vector<NamedSet>& universe,
                             std::uint64_t budget = default_budget);

/// An algebra (A, e : T A → A).
struct Algebra {
  Carrier carrier;
  ValueMap structure;
};

Algebra free_algebra(const FinSetMonad& t, const Carrier& x);
/// e ∘ η = id and e ∘ T e = e ∘ μ. For infinite carriers only instances
/// inside the bounded enumeration are checked.
Verdict check_algebra(const FinSetMonad& t, const Algebra& a, std::uint64_t budget = default_budget);
/// f ∘ e_A = e_B ∘ T f on T A.
Verdict check_algebra_morphism(const FinSetMonad& t, const Algebra& a, const Algebra& b, const ValueMap& f);

struct EmExtension {
  ValueMap map;  // T X → A
  Verdict verdict;
};

/// e ∘ T f, verified to be an algebra morphism from (T X, μ) with
/// f = result ∘ η, and unique among all functions T X → A.
EmExtension em_extension(const FinSetMonad& t, const Carrier& x, const Algebra& a, const ValueMap& f,
                         std::uint64_t budget = default_budget);

struct EmCategory {
  FinCategory category;
  std::vector<Algebra> algebras;  // indexed like category objects
  std::vector<Name> carriers;     // universe name per object
};

/// All algebras on universe sets and all algebra morphisms between them.
/// Objects are named "A:[e(t1),...]" by the structure map's values.
EmCategory materialize_em_category(const FinSetMonad& t, const std::vector<NamedSet>& universe,
                                   std::uint64_t budget = default_budget);

class FinSetComonad {
 public:
  virtual ~FinSetComonad() = default;
  virtual std::string name() const = 0;
  virtual Carrier enumerate(const Carrier& x) const = 0;
  virtual std::uint64_t carrier_size(std::uint64_t n) const = 0;
  virtual Value counit(const Value& cx) const = 0;
  virtual Value comultiply(const Value& cx) const = 0;
  virtual Value fmap(const ValueFn& f, const Value& cx) const = 0;
};

using ComonadPtr = std::shared_ptr<const FinSetComonad>;

/// C X = X × E, ε(x,e) = x, ν(x,e) = ((x,e),e).
ComonadPtr reader_comonad(const Carrier& e);

/// ε ∘ ν = id, C ε ∘ ν = id and ν ∘ ν = C ν ∘ ν on C X.
Verdict check_comonad_laws(const FinSetComonad& c, const Carrier& x, std::uint64_t budget = default_budget);

/// A co-Kleisli arrow C X → Y; `domain` is X.
struct CokleisliArrow {
  Carrier domain;
  Carrier codomain;
  ValueMap map;
  friend bool operator==(const CokleisliArrow&, const CokleisliArrow&) = default;
};

CokleisliArrow cokleisli_identity(const FinSetComonad& c, const Carrier& x);
/// h ∘ C k ∘ ν
CokleisliArrow cokleisli_compose(const FinSetComonad& c, const CokleisliArrow& k, const CokleisliArrow& h);

/// A coalgebra (A, i : A → C A).
struct Coalgebra {
  Carrier carrier;
  ValueMap structure;
};

/// ε ∘ i = id and ν ∘ i = C i ∘ i.
Verdict check_coalgebra(const FinSetComonad& c, const Coalgebra& a);

/// Row-stochastic matrix of a distribution-valued Kleisli arrow.
struct StochasticMatrix {
  Carrier rows;
  Carrier cols;
  std::vector<std::vector<Rational>> entries;
  friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;
};

StochasticMatrix to_matrix(const KleisliArrow& k);
/// Throws NotNormalized naming the first row with a negative entry or a
/// sum other than 1.
KleisliArrow from_matrix(const StochasticMatrix& m);

/// A monad on a finite category: T, η : id ⇒ T, μ : T T ⇒ T.
struct CatMonad {
  FinFunctor functor;
  NatTrans unit;
  NatTrans mult;
};

/// A comonad: C, ε : C ⇒ id, ν : C ⇒ C C.
struct CatComonad {
  FinFunctor functor;
  NatTrans counit;
  NatTrans comult;
};

/// Unit and associativity squares at every object.
Verdict check_cat_monad_laws(const CatMonad& t);
Verdict check_cat_comonad_laws(const CatComonad& c);

struct CatKleisli {
  FinCategory category;
  /// Per Kleisli morphism: the underlying k : X → T Y and its target Y.
  std::vector<std::pair<MorphismId, ObjectId>> arrows;
};

/// Objects of the base; morphisms "X->Y:k" for k : X → T Y.
CatKleisli cat_kleisli_category(const CatMonad& t);

struct CatAlgebra {
  ObjectId carrier = npos;
  MorphismId structure = npos;
  friend bool operator==(const CatAlgebra&, const CatAlgebra&) = default;
};

struct CatEmCategory {
  FinCategory category;
  std::vector<CatAlgebra> algebras;   // indexed like category objects
  std::vector<MorphismId> morphisms;  // underlying base morphism
};

/// Algebras "A:a" with a ∘ η_A = id and a ∘ T a = a ∘ μ_A; morphisms
/// "A:a->B:b:f" with f ∘ a = b ∘ T f.
CatEmCategory cat_em_category(const CatMonad& t);

}  // namespace fincat
