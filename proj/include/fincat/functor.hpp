#pragma once

// Functors, natural transformations and their calculus between finite
// categories.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fincat/core.hpp"

namespace fincat {

inline constexpr std::uint64_t default_budget = 1'000'000;

struct RawFunctor {
  std::map<Name, Name> objects;
  std::map<Name, Name> morphisms;
  friend bool operator==(const RawFunctor&, const RawFunctor&) = default;
};

class FinFunctor {
 public:
  FinFunctor() = default;

  const FinCategory& source() const noexcept { return source_; }
  const FinCategory& target() const noexcept { return target_; }

  ObjectId on_object(ObjectId x) const { return objects_.at(x); }
  MorphismId on_morphism(MorphismId f) const { return morphisms_.at(f); }
  const std::vector<ObjectId>& object_map() const noexcept { return objects_; }
  const std::vector<MorphismId>& morphism_map() const noexcept { return morphisms_; }

  RawFunctor to_raw() const;

  friend bool operator==(const FinFunctor&, const FinFunctor&) = default;

 private:
  FinCategory source_;
  FinCategory target_;
  std::vector<ObjectId> objects_;
  std::vector<MorphismId> morphisms_;

  friend FinFunctor make_functor(FinCategory, FinCategory, std::vector<ObjectId>,
                                 std::vector<MorphismId>);
  friend FinFunctor functor_unchecked(FinCategory, FinCategory, std::vector<ObjectId>,
                                      std::vector<MorphismId>);
};

/// Checks totality, endpoints, identities and composites exhaustively.
FinFunctor make_functor(FinCategory source, FinCategory target, std::vector<ObjectId> objects,
                        std::vector<MorphismId> morphisms);
FinFunctor validate_functor(const FinCategory& source, const FinCategory& target,
                            const RawFunctor& raw);
/// For maps that are functorial by construction.
FinFunctor functor_unchecked(FinCategory source, FinCategory target,
                             std::vector<ObjectId> objects, std::vector<MorphismId> morphisms);

FinFunctor identity_functor(const FinCategory& c);
/// `g ∘ f`
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);
FinFunctor opposite(const FinFunctor& f);

class NatTrans {
 public:
  NatTrans() = default;

  const FinFunctor& source() const noexcept { return source_; }
  const FinFunctor& target() const noexcept { return target_; }
  MorphismId component(ObjectId x) const { return components_.at(x); }
  const std::vector<MorphismId>& components() const noexcept { return components_; }

  std::map<Name, Name> to_raw() const;

  friend bool operator==(const NatTrans&, const NatTrans&) = default;

 private:
  FinFunctor source_;
  FinFunctor target_;
  std::vector<MorphismId> components_;

  friend NatTrans make_nat(FinFunctor, FinFunctor, std::vector<MorphismId>);
  friend NatTrans nat_unchecked(FinFunctor, FinFunctor, std::vector<MorphismId>);
};

/// Checks that `f, g` are parallel, component endpoints, and every
/// naturality square `G m ∘ α_X = α_Y ∘ F m`.
NatTrans make_nat(FinFunctor f, FinFunctor g, std::vector<MorphismId> components);
NatTrans validate_nat(const FinFunctor& f, const FinFunctor& g,
                      const std::map<Name, Name>& components);
NatTrans nat_unchecked(FinFunctor f, FinFunctor g, std::vector<MorphismId> components);

NatTrans identity_nat(const FinFunctor& f);
/// `β ∘ α` for α: F ⇒ G, β: G ⇒ H.
NatTrans vertical_compose(const NatTrans& beta, const NatTrans& alpha);
/// For α: F ⇒ G (C → D) and β: H ⇒ I (D → E), the transformation
/// HF ⇒ IG with components β_{GC} ∘ H(α_C).
NatTrans horizontal_compose(const NatTrans& beta, const NatTrans& alpha);
/// βF : HF ⇒ IF
NatTrans whisker(const NatTrans& beta, const FinFunctor& f);
/// Hα : HF ⇒ HG
NatTrans whisker(const FinFunctor& h, const NatTrans& alpha);

bool is_natural_iso(const NatTrans& alpha);

/// All natural transformations F ⇒ G, canonical order.
std::vector<NatTrans> enumerate_nats(const FinFunctor& f, const FinFunctor& g,
                                     std::uint64_t budget = default_budget);
std::optional<NatTrans> find_natural_iso(const FinFunctor& f, const FinFunctor& g);

struct EquivalenceWitness {
  FinFunctor inverse;
  NatTrans unit;    // id ⇒ G∘F
  NatTrans counit;  // F∘G ⇒ id
};

struct FunctorClass {
  bool faithful = false;
  bool full = false;
  bool fully_faithful = false;
  bool essentially_surjective = false;
  std::optional<EquivalenceWitness> equivalence;
};

FunctorClass classify_functor(const FinFunctor& f);
std::optional<EquivalenceWitness> check_equivalence(const FinFunctor& f);

/// All functors C → D, canonical order. The enumeration is refused when
/// |D_obj|^|C_obj| · |D_mor|^|C_mor| exceeds `budget`.
std::vector<FinFunctor> enumerate_functors(const FinCategory& c, const FinCategory& d,
                                           std::uint64_t budget = default_budget);

struct FunctorCategory {
  FinCategory category;
  std::vector<FinFunctor> functors;           // indexed like category objects
  std::vector<NatTrans> transformations;      // indexed like category morphisms
};

FunctorCategory functor_category(const FinCategory& c, const FinCategory& d,
                                 std::uint64_t budget = default_budget);

Name functor_label(const FinFunctor& f);

/// Saturating arithmetic for enumeration estimates.
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace fincat
