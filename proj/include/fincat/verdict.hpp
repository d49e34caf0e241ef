#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace fincat {

enum class Status { holds, fails, error };

std::string_view to_string(Status status);

/// Outcome of a law check. A failing verdict always carries a witness; the
/// first failure found in canonical order is kept, later ones only count.
struct Verdict {
  std::string check;
  Status status = Status::holds;
  nlohmann::json witness = nullptr;
  std::map<std::string, std::uint64_t> stats;
  // Set when only a bounded enumeration of an infinite carrier was examined.
  bool bounded = false;

  Verdict() = default;
  explicit Verdict(std::string name) : check(std::move(name)) {}

  bool holds() const noexcept { return status == Status::holds; }
  explicit operator bool() const noexcept { return holds(); }

  void count(const std::string& key, std::uint64_t n = 1) { stats[key] += n; }

  Verdict& fail(nlohmann::json w);
  Verdict& merge(const Verdict& other);

  nlohmann::json to_json() const;
};

}  // namespace fincat
