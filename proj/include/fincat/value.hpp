#pragma once

// Structured values for monad carriers: atoms, finite sets, lists, tuples,
// finitely supported distributions with exact rational weights, and the
// two shapes of an optional value.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace fincat {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);
/// Accepts "a", "a/b" and "-a/b"; throws Syntax otherwise.
Rational parse_rational(const std::string& s);

class Value {
 public:
  enum class Kind { atom, set, list, tuple, dist, nothing, just };

  Value() = default;
  static Value atom(std::string name);
  /// Sorted and deduplicated.
  static Value set(std::vector<Value> items);
  static Value list(std::vector<Value> items);
  static Value tuple(std::vector<Value> items);
  /// Weights of equal outcomes are summed, zero weights dropped, outcomes
  /// sorted.
  static Value dist(std::vector<std::pair<Value, Rational>> weighted);
  static Value nothing();
  static Value just(Value v);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Value>& items() const noexcept { return items_; }
  /// Parallel to items() for distributions.
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  Rational weight_of(const Value& outcome) const;

  /// Canonical text: a, {a,b}, [a,b], (a,b), {a:1/2,b:1/2}, nothing, just(a).
  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  Kind kind_ = Kind::atom;
  std::string name_;
  std::vector<Value> items_;
  std::vector<Rational> weights_;
};

/// Tagged JSON form: strings are atoms; {"set":[...]}, {"list":[...]},
/// {"tuple":[...]}, {"dist":[[v,"p/q"],...]}, {"nothing":null}, {"just":v}.
nlohmann::json to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);

std::vector<Value> atoms(const std::vector<std::string>& names);

}  // namespace fincat
