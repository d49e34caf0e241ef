#pragma once

// Finite preorders as thin categories, meets and joins, Galois connections,
// the adjoint functor theorem for preorders, and closure operators.

#include <optional>
#include <utility>
#include <vector>

#include "fincat/functor.hpp"
#include "fincat/verdict.hpp"

namespace fincat {

/// Elements are kept sorted by name.
class FinPreorder {
 public:
  FinPreorder() = default;
  /// Throws DuplicateName, UnknownObject, NotReflexive or NotTransitive.
  FinPreorder(std::vector<Name> elements, const std::vector<std::pair<Name, Name>>& leq);
  /// Reflexive-transitive closure of the given pairs.
  static FinPreorder generated(std::vector<Name> elements, const std::vector<std::pair<Name, Name>>& leq);

  std::size_t size() const noexcept { return elements_.size(); }
  const Name& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Name>& elements() const noexcept { return elements_; }
  std::size_t index_of(std::string_view name) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool equivalent(std::size_t a, std::size_t b) const { return leq_[a][b] && leq_[b][a]; }
  bool is_poset() const;
  /// All related pairs (a, b) with a ≤ b, in index order.
  std::vector<std::pair<Name, Name>> pairs() const;

  friend bool operator==(const FinPreorder&, const FinPreorder&) = default;

 private:
  std::vector<Name> elements_;
  std::vector<std::vector<bool>> leq_;
};

struct MonotoneMap {
  FinPreorder source;
  FinPreorder target;
  std::vector<std::size_t> images;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
};

/// Null when monotone, otherwise the first pair a ≤ b with f(a) ≰ f(b).
nlohmann::json monotonicity_failure(const FinPreorder& source, const FinPreorder& target,
                                    const std::vector<std::size_t>& images);
/// Throws NotMonotone.
MonotoneMap make_monotone(FinPreorder source, FinPreorder target, std::vector<std::size_t> images);
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
MonotoneMap identity_monotone(const FinPreorder& p);

/// One morphism "a<=b" per related pair.
FinCategory as_thin_category(const FinPreorder& p);
/// The functor between thin categories induced by a monotone map.
FinFunctor thin_functor(const MonotoneMap& f, const FinCategory& source, const FinCategory& target);

struct Bound {
  std::size_t element;
  /// Other elements equivalent to `element` are bounds too.
  bool up_to_equivalence = false;
};

/// Greatest lower bound (least upper bound) of a subset given by indices;
/// the least index among equivalent candidates.
std::optional<Bound> meet(const FinPreorder& p, const std::vector<std::size_t>& subset);
std::optional<Bound> join(const FinPreorder& p, const std::vector<std::size_t>& subset);

/// Does g carry every existing meet (join) of its source to a meet (join)?
/// The witness is a subset whose bound is not preserved.
Verdict preserves_meets(const MonotoneMap& g, std::uint64_t budget = default_budget);
Verdict preserves_joins(const MonotoneMap& f, std::uint64_t budget = default_budget);

struct AftResult {
  std::optional<MonotoneMap> lower;
  /// "meets" when Y has all meets, "pointwise" otherwise.
  std::string method;
  nlohmann::json witness;
};

/// Lower adjoint of g : Y → X by f(x) = inf{y | x ≤ g(y)}. When Y has all
/// meets, g must preserve them and the witness is a violating subset. When
/// it does not, each {y | x ≤ g(y)} must have a least element and the
/// witness names the x where it does not.
AftResult aft_lower_adjoint(const MonotoneMap& g, std::uint64_t budget = default_budget);

/// f(x) ≤ y ⇔ x ≤ g(y) for every pair; unit and counit inequalities are
/// counted in the stats.
Verdict validate_galois(const MonotoneMap& f, const MonotoneMap& g);

/// g ∘ f
MonotoneMap closure_from_galois(const MonotoneMap& f, const MonotoneMap& g);
/// Monotone, extensive and idempotent.
Verdict check_closure_operator(const FinPreorder& p, const std::vector<std::size_t>& t);

/// Fixed points of t with the induced order, and their indices in p.
std::pair<FinPreorder, std::vector<std::size_t>> closed_elements(const FinPreorder& p,
                                                                 const std::vector<std::size_t>& t);

}  // namespace fincat
