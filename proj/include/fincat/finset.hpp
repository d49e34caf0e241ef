#pragma once

// Finite sets and functions, set-valued functors, and the explicit limit and
// colimit constructions in FinSet.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fincat/core.hpp"
#include "fincat/functor.hpp"

namespace fincat {

class FinSet {
 public:
  FinSet() = default;
  /// Throws DuplicateName if two elements coincide.
  explicit FinSet(std::vector<Name> elements);

  /// Elements "0", "1", ..., "n-1".
  static FinSet range(std::size_t n);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  const Name& element(std::size_t i) const;
  const std::vector<Name>& elements() const noexcept;
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const FinSet& a, const FinSet& b);

  struct Data;

 private:
  std::shared_ptr<const Data> d_;
};

class FinFunction {
 public:
  FinFunction() = default;
  /// `images[i]` is the index in `codomain` of the image of element i.
  FinFunction(FinSet domain, FinSet codomain, std::vector<std::size_t> images);
  static FinFunction from_map(const FinSet& domain, const FinSet& codomain,
                              const std::map<Name, Name>& mapping);
  static FinFunction identity(const FinSet& s);

  const FinSet& domain() const noexcept { return domain_; }
  const FinSet& codomain() const noexcept { return codomain_; }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const Name& operator()(std::string_view x) const;
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool injective() const;
  bool surjective() const;
  std::map<Name, Name> to_map() const;

  friend bool operator==(const FinFunction&, const FinFunction&) = default;

 private:
  FinSet domain_;
  FinSet codomain_;
  std::vector<std::size_t> images_;
};

/// `g ∘ f`
FinFunction compose(const FinFunction& g, const FinFunction& f);

/// All functions `a → b` in lexicographic order of image tuples.
std::vector<FinFunction> all_functions(const FinSet& a, const FinSet& b);

/// A functor from a finite category into FinSet: one set per object and one
/// function per morphism, validated for functoriality. Presheaves and FinSet
/// diagrams are both instances.
class SetFunctor {
 public:
  SetFunctor() = default;
  SetFunctor(FinCategory shape, std::vector<FinSet> sets, std::vector<FinFunction> arrows);

  const FinCategory& shape() const noexcept { return shape_; }
  const FinSet& at(ObjectId x) const { return sets_.at(x); }
  const FinFunction& on(MorphismId m) const { return arrows_.at(m); }
  const std::vector<FinSet>& sets() const noexcept { return sets_; }
  const std::vector<FinFunction>& arrows() const noexcept { return arrows_; }

  friend bool operator==(const SetFunctor&, const SetFunctor&) = default;

 private:
  FinCategory shape_;
  std::vector<FinSet> sets_;
  std::vector<FinFunction> arrows_;
};

/// A natural transformation between set-valued functors on one shape.
struct SetNat {
  std::vector<FinFunction> components;
  friend bool operator==(const SetNat&, const SetNat&) = default;
  friend auto operator<=>(const SetNat& a, const SetNat& b) {
    std::vector<std::vector<std::size_t>> x, y;
    for (const auto& c : a.components) x.push_back(c.images());
    for (const auto& c : b.components) y.push_back(c.images());
    return x <=> y;
  }
};

/// Null when natural, otherwise the first failing square.
nlohmann::json naturality_failure(const SetFunctor& p, const SetFunctor& q, const SetNat& alpha);
SetNat make_set_nat(const SetFunctor& p, const SetFunctor& q, std::vector<FinFunction> components);
SetNat identity_set_nat(const SetFunctor& p);
/// `β ∘ α`
SetNat vertical_compose(const SetNat& beta, const SetNat& alpha);
bool is_set_iso(const SetNat& alpha);

struct SetCone {
  FinSet tip;
  std::vector<FinFunction> legs;  // one per shape object
};

/// Tuples of the product ∏ D(I) compatible with every shape morphism, with
/// the restricted projections. Tuples are named "(a,b,...)".
SetCone finset_limit(const SetFunctor& d);
/// The disjoint union ⨿ D(I) (elements "I:x") quotiented by the equivalence
/// generated by x ~ D(m)(x); each class is named by its least member. Legs
/// run D(I) → colimit.
SetCone finset_colimit(const SetFunctor& d);

/// Checks the universal property against every cone (or cocone) whose tip
/// is one of the diagram's own sets.
/// Empty when the candidate count exceeds `budget`.
std::optional<bool> spot_check_limit(const SetFunctor& d, const SetCone& cone,
                                     std::uint64_t budget = 200'000);
std::optional<bool> spot_check_colimit(const SetFunctor& d, const SetCone& cocone,
                                       std::uint64_t budget = 200'000);

enum class ShapeKind { product, coproduct, equalizer, coequalizer, pullback, pushout, terminal, initial };

std::optional<ShapeKind> parse_shape_kind(std::string_view s);

/// Named universal constructions:
///   product / coproduct: any number of sets, no arrows; legs per set;
///   equalizer f,g: A ⇉ B → leg E → A;  coequalizer → leg B → Q;
///   pullback f: A → C, g: B → C → legs to A, B;
///   pushout f: A → B, g: A → C → legs from B, C;
///   terminal / initial: no arguments.
SetCone construct_shape(ShapeKind kind, std::span<const FinSet> sets, std::span<const FinFunction> arrows);

/// Self-pullback of `f`, legs p, q : X ×_Y X → X.
std::pair<FinFunction, FinFunction> kernel_pair(const FinFunction& f);

struct NamedSet {
  Name name;
  FinSet set;
};

/// The full subcategory of FinSet on a list of named sets; every function is
/// a morphism, named "X->Y:[a,b,...]" by its images.
class FinSetFragment {
 public:
  explicit FinSetFragment(std::vector<NamedSet> sets);
  /// Sets "0", "1", ..., "n" where set "k" is FinSet::range(k).
  static FinSetFragment canonical(std::size_t max_size);

  const FinCategory& category() const noexcept { return category_; }
  const std::vector<NamedSet>& sets() const noexcept { return sets_; }
  const FinSet& set_of(ObjectId x) const;
  ObjectId object_named(std::string_view name) const { return category_.object(name); }
  MorphismId morphism_of(ObjectId from, ObjectId to, const std::vector<std::size_t>& images) const;
  FinFunction function_of(MorphismId m) const;

 private:
  std::vector<NamedSet> sets_;  // in category object order
  FinCategory category_;
  std::vector<std::vector<std::size_t>> images_;  // per morphism
};

}  // namespace fincat
