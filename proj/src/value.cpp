#include "fincat/value.hpp"

#include <algorithm>
#include <map>

#include "fincat/error.hpp"

namespace fincat {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  auto bad = [&] { return Error(ErrorKind::syntax, "not a rational number: " + s, {{"text", s}}); };
  auto slash = s.find('/');
  auto digits = [](const std::string& t, bool allow_sign) {
    std::size_t i = (allow_sign && !t.empty() && t[0] == '-') ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                                       [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  using boost::multiprecision::cpp_int;
  if (slash == std::string::npos) {
    if (!digits(s, true)) throw bad();
    return Rational(cpp_int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw bad();
  cpp_int d(den);
  if (d == 0) throw bad();
  return Rational(cpp_int(num), d);
}

Value Value::atom(std::string name) {
  Value v;
  v.kind_ = Kind::atom;
  v.name_ = std::move(name);
  return v;
}

Value Value::set(std::vector<Value> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  Value v;
  v.kind_ = Kind::set;
  v.items_ = std::move(items);
  return v;
}

Value Value::list(std::vector<Value> items) {
  Value v;
  v.kind_ = Kind::list;
  v.items_ = std::move(items);
  return v;
}

Value Value::tuple(std::vector<Value> items) {
  Value v;
  v.kind_ = Kind::tuple;
  v.items_ = std::move(items);
  return v;
}

Value Value::dist(std::vector<std::pair<Value, Rational>> weighted) {
  std::map<Value, Rational> merged;
  for (auto& [outcome, w] : weighted) merged[std::move(outcome)] += w;
  Value v;
  v.kind_ = Kind::dist;
  for (auto& [outcome, w] : merged) {
    if (w == 0) continue;
    v.items_.push_back(outcome);
    v.weights_.push_back(w);
  }
  return v;
}

Value Value::nothing() {
  Value v;
  v.kind_ = Kind::nothing;
  return v;
}

Value Value::just(Value inner) {
  Value v;
  v.kind_ = Kind::just;
  v.items_.push_back(std::move(inner));
  return v;
}

Rational Value::weight_of(const Value& outcome) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), outcome);
  if (it == items_.end() || !(*it == outcome)) return Rational(0);
  return weights_[static_cast<std::size_t>(it - items_.begin())];
}

std::string Value::to_string() const {
  auto join = [this](char open, char close, bool weighted) {
    std::string s(1, open);
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) s += ",";
      s += items_[i].to_string();
      if (weighted) s += ":" + fincat::to_string(weights_[i]);
    }
    return s + close;
  };
  switch (kind_) {
    case Kind::atom: return name_;
    case Kind::set: return join('{', '}', false);
    case Kind::list: return join('[', ']', false);
    case Kind::tuple: return join('(', ')', false);
    case Kind::dist: return join('{', '}', true);
    case Kind::nothing: return "nothing";
    case Kind::just: return "just(" + items_[0].to_string() + ")";
  }
  return {};
}

bool operator==(const Value& a, const Value& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.items_ == b.items_ && a.weights_ == b.weights_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  // Shorter first, then elementwise.
  if (auto c = a.items_.size() <=> b.items_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.items_.size(); ++i) {
    if (auto c = a.items_[i] <=> b.items_[i]; c != 0) return c;
  }
  for (std::size_t i = 0; i < a.weights_.size(); ++i) {
    if (a.weights_[i] < b.weights_[i]) return std::strong_ordering::less;
    if (b.weights_[i] < a.weights_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

nlohmann::json to_json(const Value& v) {
  auto items = [&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v.items()) arr.push_back(to_json(x));
    return arr;
  };
  switch (v.kind()) {
    case Value::Kind::atom: return v.name();
    case Value::Kind::set: return {{"set", items()}};
    case Value::Kind::list: return {{"list", items()}};
    case Value::Kind::tuple: return {{"tuple", items()}};
    case Value::Kind::dist: {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < v.items().size(); ++i) {
        arr.push_back({to_json(v.items()[i]), to_string(v.weights()[i])});
      }
      return {{"dist", arr}};
    }
    case Value::Kind::nothing: return {{"nothing", nullptr}};
    case Value::Kind::just: return {{"just", to_json(v.items()[0])}};
  }
  return nullptr;
}

Value value_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Value::atom(j.get<std::string>());
  if (!j.is_object() || j.size() != 1) {
    throw Error(ErrorKind::syntax, "a value is a string or a one-key tagged object", {{"value", j}});
  }
  const auto& [tag, body] = *j.items().begin();
  auto list_of = [&]() {
    if (!body.is_array()) throw Error(ErrorKind::syntax, "expected an array under " + tag, {{"value", j}});
    std::vector<Value> out;
    for (const auto& x : body) out.push_back(value_from_json(x));
    return out;
  };
  if (tag == "set") return Value::set(list_of());
  if (tag == "list") return Value::list(list_of());
  if (tag == "tuple") return Value::tuple(list_of());
  if (tag == "nothing") return Value::nothing();
  if (tag == "just") return Value::just(value_from_json(body));
  if (tag == "dist") {
    if (!body.is_array()) throw Error(ErrorKind::syntax, "expected an array under dist", {{"value", j}});
    std::vector<std::pair<Value, Rational>> weighted;
    for (const auto& pair : body) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorKind::syntax, "distribution entries are [value, weight] pairs", {{"value", pair}});
      }
      const auto& w = pair[1];
      Rational q = w.is_string() ? parse_rational(w.get<std::string>())
                   : w.is_number_integer() ? Rational(w.get<long long>())
                                           : throw Error(ErrorKind::syntax, "weights are integers or \"p/q\"",
                                                         {{"value", pair}});
      weighted.emplace_back(value_from_json(pair[0]), q);
    }
    return Value::dist(std::move(weighted));
  }
  throw Error(ErrorKind::unknown_kind, "unknown value tag " + tag, {{"tag", tag}});
}

std::vector<Value> atoms(const std::vector<std::string>& names) {
  std::vector<Value> out;
  for (const auto& n : names) out.push_back(Value::atom(n));
  return out;
}

}  // namespace fincat
