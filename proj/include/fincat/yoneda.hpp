#pragma once

// Presheaves on finite categories, representables, and brute-force
// enumeration of natural transformations between presheaves.

#include <optional>
#include <utility>
#include <vector>

#include "fincat/finset.hpp"
#include "fincat/verdict.hpp"

namespace fincat {

/// A set-valued functor on the opposite of `base`. Opposite categories keep
/// names, so object and morphism ids agree with `base`.
struct Presheaf {
  FinCategory base;
  SetFunctor values;

  const FinSet& at(ObjectId x) const { return values.at(x); }
  /// P f : P(tgt f) → P(src f)
  const FinFunction& on(MorphismId f) const { return values.on(f); }
};

/// Validates contravariant functoriality.
Presheaf make_presheaf(const FinCategory& base, std::vector<FinSet> sets, std::vector<FinFunction> actions);

/// Hom(−, X): elements "hom(Y,X):f", action by precomposition.
Presheaf representable(const FinCategory& c, ObjectId x);
Presheaf constant_presheaf(const FinCategory& c, const FinSet& s);
/// Pointwise disjoint union; elements "0:p" and "1:q".
Presheaf coproduct_presheaf(const Presheaf& p, const Presheaf& q);
/// Pointwise product; elements "(p,q)".
Presheaf product_presheaf(const Presheaf& p, const Presheaf& q);

/// ∏_X |Q X|^{|P X|}, saturating.
std::uint64_t family_count(const Presheaf& p, const Presheaf& q);

/// All natural transformations P ⇒ Q in canonical order. Throws
/// BudgetExceeded when the family count exceeds `budget`.
std::vector<SetNat> nat_set(const Presheaf& p, const Presheaf& q, std::uint64_t budget = default_budget);

/// α ↦ α_X(id_X), as an index into F X.
std::size_t yoneda_forward(const Presheaf& f, ObjectId x, const SetNat& alpha);
/// p ↦ (g ↦ F g (p)) for g ∈ Hom(Y, X).
SetNat yoneda_backward(const Presheaf& f, ObjectId x, std::size_t p);

struct YonedaCorrespondence {
  std::vector<SetNat> nats;          // nat_set(y_X, F)
  std::vector<std::size_t> forward;  // per transformation
  std::vector<SetNat> backward;      // per element of F X
  Verdict verdict;
};

/// Checks that forward and backward are mutually inverse bijections
/// between Nat(y_X, F) and F X.
YonedaCorrespondence yoneda_correspondence(const Presheaf& f, ObjectId x, std::uint64_t budget = default_budget);

/// y_f : y_X ⇒ y_Y, postcomposition with f : X → Y.
SetNat yoneda_image(const FinCategory& c, MorphismId f);

/// For all X, Y: Hom(X, Y) ≅ Nat(y_X, y_Y) via f ↦ y_f, functoriality of
/// y, and X ≅ Y iff y_X ≅ y_Y.
Verdict yoneda_embedding_check(const FinCategory& c, std::uint64_t budget = default_budget);

/// First representing object in canonical order with a natural iso y_X ⇒ F.
std::optional<std::pair<ObjectId, SetNat>> is_representable(const Presheaf& f,
                                                            std::uint64_t budget = default_budget);

}  // namespace fincat
