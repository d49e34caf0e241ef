#pragma once

// Finite categories stored as validated composition tables.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/error.hpp"

namespace fincat {

using Name = std::string;
using ObjectId = std::size_t;
using MorphismId = std::size_t;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct MorphismSpec {
  Name name;
  Name src;
  Name tgt;
  friend bool operator==(const MorphismSpec&, const MorphismSpec&) = default;
};

/// One entry of the composition table: `then ∘ first = equals`.
struct CompositeSpec {
  Name first;
  Name then;
  Name equals;
  friend bool operator==(const CompositeSpec&, const CompositeSpec&) = default;
};

/// Unchecked category data as it comes from a file or a construction.
struct RawCategory {
  std::vector<Name> objects;
  std::vector<MorphismSpec> morphisms;
  std::map<Name, Name> identities;
  std::vector<CompositeSpec> compose;

  friend bool operator==(const RawCategory&, const RawCategory&) = default;
};

/// Adds `f ∘ id = f` and `id ∘ f = f` entries that are not already present.
RawCategory with_unit_composites(RawCategory raw);

/// An immutable, validated finite category. Objects and morphisms are
/// indexed in lexicographic order of their names, which is the canonical
/// iteration order used everywhere a witness is selected. Copies share
/// the underlying tables.
class FinCategory {
 public:
  FinCategory();

  std::size_t object_count() const noexcept;
  std::size_t morphism_count() const noexcept;

  const Name& object_name(ObjectId x) const;
  const Name& morphism_name(MorphismId f) const;
  const std::vector<Name>& object_names() const noexcept;
  const std::vector<Name>& morphism_names() const noexcept;

  ObjectId src(MorphismId f) const;
  ObjectId tgt(MorphismId f) const;
  MorphismId identity(ObjectId x) const;
  bool is_identity(MorphismId f) const;

  /// `g ∘ f`; throws EndpointMismatch unless tgt(f) = src(g).
  MorphismId compose(MorphismId g, MorphismId f) const;
  bool composable(MorphismId g, MorphismId f) const { return tgt(f) == src(g); }

  const std::vector<MorphismId>& hom(ObjectId x, ObjectId y) const;

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<MorphismId> find_morphism(std::string_view name) const;
  ObjectId object(std::string_view name) const;
  MorphismId morphism(std::string_view name) const;

  RawCategory to_raw() const;

  friend bool operator==(const FinCategory& a, const FinCategory& b);

  struct Data;

 private:
  explicit FinCategory(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend FinCategory assemble_category(const RawCategory& raw, bool check_laws);
};

/// Builds a category, checking structure and, when `check_laws` is set,
/// unitality and associativity. Constructions whose laws hold by
/// construction may skip the law sweep.
FinCategory assemble_category(const RawCategory& raw, bool check_laws);

/// Checks every category axiom; the first violation in canonical order is
/// thrown as an Error naming the offending morphisms.
FinCategory validate_category(const RawCategory& raw);

FinCategory opposite(const FinCategory& c);

/// Finite monoid given by its multiplication table: `product[a][b] = a·b`.
struct MonoidTable {
  std::vector<Name> elements;
  std::vector<std::vector<std::size_t>> product;
};

/// Null when `m` is a monoid, otherwise a witness of the first failure
/// (bad table shape, missing unit, or a non-associative triple).
nlohmann::json monoid_violation(const MonoidTable& m);
std::optional<std::size_t> monoid_unit(const MonoidTable& m);

/// One object `*`, one morphism per element, `g ∘ f = g·f`.
FinCategory delooping(const MonoidTable& m);

struct MorphismClass {
  bool mono = false;
  bool epi = false;
  bool iso = false;
  bool split_mono = false;
  bool split_epi = false;
  std::optional<MorphismId> inverse;
  std::optional<MorphismId> retraction;
  std::optional<MorphismId> section;
};

MorphismClass classify_morphism(const FinCategory& c, MorphismId f);
MorphismClass classify_morphism(const FinCategory& c, std::string_view f);

bool is_iso(const FinCategory& c, MorphismId f);
std::optional<MorphismId> inverse_of(const FinCategory& c, MorphismId f);

/// The wide subcategory of isomorphisms.
FinCategory core_groupoid(const FinCategory& c);

nlohmann::json to_json(const FinCategory& c, const MorphismClass& k);

namespace shapes {

FinCategory empty();
FinCategory terminal();
FinCategory discrete(const std::vector<Name>& objects);
/// A --f--> B
FinCategory walking_arrow();
/// f, g : A ⇉ B
FinCategory parallel_pair();
/// f : A → C ← B : g
FinCategory cospan();
/// f : A → B, g : A → C
FinCategory span();

}  // namespace shapes

}  // namespace fincat
