#include "fincat/error.hpp"
#include "fincat/verdict.hpp"

namespace fincat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::io: return "Io";
    case ErrorKind::syntax: return "Syntax";
    case ErrorKind::unknown_kind: return "UnknownKind";
    case ErrorKind::unknown_object: return "UnknownObject";
    case ErrorKind::unknown_morphism: return "UnknownMorphism";
    case ErrorKind::duplicate_name: return "DuplicateName";
    case ErrorKind::missing_image: return "MissingImage";
    case ErrorKind::missing_identity: return "MissingIdentity";
    case ErrorKind::missing_composite: return "MissingComposite";
    case ErrorKind::conflicting_composite: return "ConflictingComposite";
    case ErrorKind::unitality_violation: return "UnitalityViolation";
    case ErrorKind::associativity_violation: return "AssociativityViolation";
    case ErrorKind::endpoint_mismatch: return "EndpointMismatch";
    case ErrorKind::not_a_monoid: return "NotAMonoid";
    case ErrorKind::identity_not_preserved: return "IdentityNotPreserved";
    case ErrorKind::composition_not_preserved: return "CompositionNotPreserved";
    case ErrorKind::naturality_square_fails: return "NaturalitySquareFails";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::no_limit: return "NoLimit";
    case ErrorKind::arity_mismatch: return "ArityMismatch";
    case ErrorKind::cyclic_graph: return "CyclicGraph";
    case ErrorKind::triangle_violation: return "TriangleViolation";
    case ErrorKind::transpose_not_bijective: return "TransposeNotBijective";
    case ErrorKind::wrong_hom_set: return "WrongHomSet";
    case ErrorKind::not_monotone: return "NotMonotone";
    case ErrorKind::not_reflexive: return "NotReflexive";
    case ErrorKind::not_transitive: return "NotTransitive";
    case ErrorKind::not_a_function: return "NotAFunction";
    case ErrorKind::not_normalized: return "NotNormalized";
    case ErrorKind::not_finite_carrier: return "NotFiniteCarrier";
    case ErrorKind::law_violation: return "LawViolation";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, nlohmann::json witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      message_(message),
      witness_(std::move(witness)) {}

nlohmann::json Error::to_json() const {
  nlohmann::json j;
  j["status"] = "error";
  j["error"] = std::string(to_string(kind_));
  j["message"] = message_;
  if (!witness_.is_null()) j["witness"] = witness_;
  return j;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::error: return "error";
  }
  return "error";
}

Verdict& Verdict::fail(nlohmann::json w) {
  if (status == Status::holds) {
    status = Status::fails;
    witness = std::move(w);
  }
  count("failures");
  return *this;
}

Verdict& Verdict::merge(const Verdict& other) {
  for (const auto& [k, v] : other.stats) stats[k] += v;
  bounded = bounded || other.bounded;
  if (other.status != Status::holds && status == Status::holds) {
    status = other.status;
    witness = other.witness;
    if (!other.check.empty() && witness.is_object()) witness["check"] = other.check;
  }
  return *this;
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["status"] = std::string(to_string(status));
  j["mode"] = bounded ? "bounded" : "exhaustive";
  j["stats"] = stats;
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

}  // namespace fincat
