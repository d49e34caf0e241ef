#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace fincat {

enum class ErrorKind {
  io,
  syntax,
  unknown_kind,
  unknown_object,
  unknown_morphism,
  duplicate_name,
  missing_image,
  missing_identity,
  missing_composite,
  conflicting_composite,
  unitality_violation,
  associativity_violation,
  endpoint_mismatch,
  not_a_monoid,
  identity_not_preserved,
  composition_not_preserved,
  naturality_square_fails,
  shape_mismatch,
  budget_exceeded,
  no_limit,
  arity_mismatch,
  cyclic_graph,
  triangle_violation,
  transpose_not_bijective,
  wrong_hom_set,
  not_monotone,
  not_reflexive,
  not_transitive,
  not_a_function,
  not_normalized,
  not_finite_carrier,
  law_violation,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind);

/// Failure raised by constructors and checks. `witness()` carries the
/// offending names in the same vocabulary as the input documents.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, nlohmann::json witness = nullptr);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix that what() carries.
  const std::string& message() const noexcept { return message_; }
  const nlohmann::json& witness() const noexcept { return witness_; }

  nlohmann::json to_json() const;

 private:
  ErrorKind kind_;
  std::string message_;
  nlohmann::json witness_;
};

}  // namespace fincat
