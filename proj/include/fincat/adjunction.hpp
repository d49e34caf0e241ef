#pragma once

// Adjunctions between finite categories given by unit and counit.

#include <optional>

#include "fincat/monad.hpp"
#include "fincat/order.hpp"
#include "fincat/universal.hpp"

namespace fincat {

/// F : C → D left adjoint to G : D → C with η : id ⇒ G F, ε : F G ⇒ id.
/// Unchecked until passed through validate_adjunction.
struct Adjunction {
  FinFunctor left;
  FinFunctor right;
  NatTrans unit;
  NatTrans counit;
};

/// Both triangle identities and, for every pair (C, D), that ♭ and ♯ are
/// mutually inverse. The witness carries the first failure of each kind
/// under "triangle" and "transpose". Throws ShapeMismatch when the data do
/// not have the shape of an adjunction.
Verdict check_adjunction(const Adjunction& adj);
/// Throws TriangleViolation or TransposeNotBijective.
Adjunction validate_adjunction(Adjunction adj);

Adjunction identity_adjunction(const FinCategory& c);
/// The thin adjunction of a Galois connection f ⊣ g. Throws
/// TriangleViolation when the unit or counit inequality fails.
Adjunction galois_adjunction(const MonotoneMap& f, const MonotoneMap& g);

/// ♭ : Hom(F c, d) → Hom(c, G d), g ↦ G g ∘ η_c. Throws WrongHomSet.
MorphismId transpose_flat(const Adjunction& adj, ObjectId c, MorphismId g);
/// ♯ : Hom(c, G d) → Hom(F c, d), f ↦ ε_d ∘ F f. Throws WrongHomSet.
MorphismId transpose_sharp(const Adjunction& adj, ObjectId d, MorphismId f);

/// (G F, η, G ε F)
CatMonad induced_monad(const Adjunction& adj);
/// (F G, ε, F η G)
CatComonad induced_comonad(const Adjunction& adj);

/// L_T : C → Kl(T), f ↦ η ∘ f; R_T : Kl(T) → C, k ↦ μ ∘ T k.
FinFunctor kleisli_left(const CatMonad& t, const CatKleisli& kl);
FinFunctor kleisli_right(const CatMonad& t, const CatKleisli& kl);
/// L^T : C → EM(T), X ↦ (T X, μ_X); U^T : EM(T) → C.
FinFunctor em_left(const CatMonad& t, const CatEmCategory& em);
FinFunctor em_forget(const CatMonad& t, const CatEmCategory& em);

struct Comparison {
  CatMonad monad;
  CatKleisli kleisli;
  CatEmCategory em;
  FinFunctor j;  // Kl(T) → D, k ↦ k♯
  FinFunctor k;  // D → EM(T), D ↦ (G D, G ε_D)
  /// J L_T ≅ F, G J ≅ R_T, K F ≅ L^T and U^T K ≅ G, each by a natural iso
  /// that was found by search.
  Verdict verdict;
};

Comparison comparison_functors(const Adjunction& adj);

/// Whether K is an equivalence. The witness on failure names the property
/// that breaks and an instance of it.
Verdict monadicity_check(const Adjunction& adj);

/// Cone(L C, E) ≅ Cone(C, R ∘ E) for every C. With an adjunction the map
/// is transposition of legs and must be a bijection; without one only the
/// cardinalities are compared.
Verdict check_cone_bijection(const FinFunctor& left, const FinFunctor& right, const Diagram& e,
                             const std::optional<Adjunction>& adj = std::nullopt,
                             std::uint64_t budget = default_budget);

/// check_preservation(G, d) together with the cone bijection. Throws NoLimit.
Verdict check_radj_continuity(const Adjunction& adj, const Diagram& d, std::uint64_t budget = default_budget);

}  // namespace fincat
