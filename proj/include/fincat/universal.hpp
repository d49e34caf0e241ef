#pragma once

// Diagrams, cones, slice categories and limits by exhaustive search.

#include <optional>
#include <vector>

#include "fincat/functor.hpp"
#include "fincat/verdict.hpp"

namespace fincat {

/// A diagram is a functor from a shape category into an ambient category.
struct Diagram {
  FinFunctor body;

  const FinCategory& shape() const noexcept { return body.source(); }
  const FinCategory& ambient() const noexcept { return body.target(); }
};

/// Legs run tip → D(I) for cones. For cocones (results of colimit_of) they
/// run D(I) → tip.
struct Cone {
  ObjectId tip = npos;
  std::vector<MorphismId> legs;
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Every pair of non-empty paths of non-identity shape morphisms with the
/// same endpoints must compose to the same ambient morphism.
Verdict check_commutes(const Diagram& d);

bool is_cone(const Diagram& d, const Cone& cone);
std::vector<Cone> enumerate_cones(const Diagram& d, ObjectId tip);

/// Holds iff every cone factors through `cone` by exactly one morphism;
/// otherwise the witness is a cone with zero or several mediators.
Verdict check_terminal_cone(const Diagram& d, const Cone& cone, std::uint64_t budget = default_budget);

struct SliceCategory {
  FinCategory category;
  std::vector<Cone> cones;  // indexed like category objects
};

/// Cones over `d` and the ambient morphisms between their tips that commute
/// with the legs.
SliceCategory slice_category(const Diagram& d, std::uint64_t budget = default_budget);

/// First terminal cone in canonical order (tips, then legs), if any.
std::optional<Cone> limit_of(const Diagram& d, std::uint64_t budget = default_budget);
/// Computed as a limit of the opposite diagram; legs run D(I) → tip.
std::optional<Cone> colimit_of(const Diagram& d, std::uint64_t budget = default_budget);

Diagram opposite(const Diagram& d);
/// F ∘ D
Diagram apply(const FinFunctor& f, const Diagram& d);

/// Does `f` carry a limit cone of `d` to a limit cone of `f ∘ d`?
/// Throws NoLimit when `d` has no limit.
Verdict check_preservation(const FinFunctor& f, const Diagram& d, std::uint64_t budget = default_budget);

nlohmann::json to_json(const Diagram& d, const Cone& cone);

}  // namespace fincat
