#include "fincat/monad.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fincat {

Carrier carrier_of(const FinSet& s) {
  Carrier c = atoms(s.elements());
  std::sort(c.begin(), c.end());
  return c;
}

Carrier standard_carrier(std::size_t n) {
  Carrier c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Value::atom("x" + std::to_string(i)));
  std::sort(c.begin(), c.end());
  return c;
}

const Value& lookup(const ValueMap& m, const Value& v) {
  auto it = m.find(v);
  if (it == m.end()) {
    throw Error(ErrorKind::not_a_function, "no image for " + v.to_string(), {{"element", to_json(v)}});
  }
  return it->second;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i)) return std::numeric_limits<std::uint64_t>::max();
    r = r * (n - k + i) / i;
  }
  return r;
}

class Powerset final : public FinSetMonad {
 public:
  std::string name() const override { return "powerset"; }
  bool finite_carrier() const override { return true; }
  Carrier enumerate(const Carrier& x) const override {
    if (x.size() >= 63) throw Error(ErrorKind::budget_exceeded, "powerset of a huge set");
    Carrier out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.size()); ++mask) {
      std::vector<Value> items;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (mask >> i & 1) items.push_back(x[i]);
      }
      out.push_back(Value::set(std::move(items)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::uint64_t carrier_size(std::uint64_t n) const override { return saturating_pow(2, n); }
  Value unit(const Value& x) const override { return Value::set({x}); }
  Value multiply(const Value& ttx) const override {
    std::vector<Value> items;
    for (const auto& s : ttx.items()) items.insert(items.end(), s.items().begin(), s.items().end());
    return Value::set(std::move(items));
  }
  Value fmap(const ValueFn& f, const Value& tx) const override {
    std::vector<Value> items;
    for (const auto& v : tx.items()) items.push_back(f(v));
    return Value::set(std::move(items));
  }
  Value sample(const Carrier& x, std::mt19937_64& rng) const override {
    std::vector<Value> items;
    for (const auto& v : x) {
      if (pick(rng, 2)) items.push_back(v);
    }
    return Value::set(std::move(items));
  }
};

class Distribution final : public FinSetMonad {
 public:
  explicit Distribution(std::size_t max_den) : max_den_(max_den) {}
  std::string name() const override { return "distribution"; }
  bool finite_carrier() const override { return false; }
  Carrier enumerate(const Carrier& x) const override {
    std::set<Value> out;
    std::vector<std::size_t> parts(x.size());
    for (std::size_t d = 1; d <= max_den_; ++d) {
      std::function<void(std::size_t, std::size_t)> split = [&](std::size_t i, std::size_t left) {
        if (i + 1 == x.size()) {
          parts[i] = left;
          std::vector<std::pair<Value, Rational>> w;
          for (std::size_t k = 0; k < x.size(); ++k) w.emplace_back(x[k], Rational(parts[k], d));
          out.insert(Value::dist(std::move(w)));
          return;
        }
        for (std::size_t a = 0; a <= left; ++a) {
          parts[i] = a;
          split(i + 1, left - a);
        }
      };
      if (!x.empty()) split(0, d);
    }
    return {out.begin(), out.end()};
  }
  std::uint64_t carrier_size(std::uint64_t n) const override {
    if (n == 0) return 0;
    std::uint64_t total = 0;
    for (std::size_t d = 1; d <= max_den_; ++d) {
      total = saturating_add(total, binomial(d + n - 1, n - 1));
    }
    return total;
  }
  Value unit(const Value& x) const override { return Value::dist({{x, Rational(1)}}); }
  Value multiply(const Value& ttx) const override {
    std::vector<std::pair<Value, Rational>> w;
    for (std::size_t i = 0; i < ttx.items().size(); ++i) {
      const auto& p = ttx.items()[i];
      for (std::size_t j = 0; j < p.items().size(); ++j) w.emplace_back(p.items()[j], ttx.weights()[i] * p.weights()[j]);
    }
    return Value::dist(std::move(w));
  }
  Value fmap(const ValueFn& f, const Value& tx) const override {
    std::vector<std::pair<Value, Rational>> w;
    for (std::size_t i = 0; i < tx.items().size(); ++i) w.emplace_back(f(tx.items()[i]), tx.weights()[i]);
    return Value::dist(std::move(w));
  }
  Value sample(const Carrier& x, std::mt19937_64& rng) const override {
    const std::size_t d = 1 + pick(rng, max_den_);
    std::vector<std::pair<Value, Rational>> w;
    for (std::size_t k = 0; k < d; ++k) w.emplace_back(x[pick(rng, x.size())], Rational(1, d));
    return Value::dist(std::move(w));
  }

 private:
  std::size_t max_den_;
};

class Writer final : public FinSetMonad {
 public:
  Writer(MonoidTable m, std::size_t unit) : m_(std::move(m)), unit_(unit) {
    for (std::size_t i = 0; i < m_.elements.size(); ++i) index_[m_.elements[i]] = i;
  }
  std::string name() const override { return "writer"; }
  bool finite_carrier() const override { return true; }
  Carrier enumerate(const Carrier& x) const override {
    Carrier out;
    for (const auto& v : x) {
      for (const auto& e : m_.elements) out.push_back(Value::tuple({v, Value::atom(e)}));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::uint64_t carrier_size(std::uint64_t n) const override { return saturating_mul(n, m_.elements.size()); }
  Value unit(const Value& x) const override { return Value::tuple({x, Value::atom(m_.elements[unit_])}); }
  // ((x, m), n) ↦ (x, m·n): the inner log comes first.
  Value multiply(const Value& ttx) const override {
    const auto& inner = ttx.items().at(0);
    std::size_t m = index_.at(inner.items().at(1).name());
    std::size_t n = index_.at(ttx.items().at(1).name());
    return Value::tuple({inner.items().at(0), Value::atom(m_.elements[m_.product[m][n]])});
  }
  Value fmap(const ValueFn& f, const Value& tx) const override {
    return Value::tuple({f(tx.items().at(0)), tx.items().at(1)});
  }
  Value sample(const Carrier& x, std::mt19937_64& rng) const override {
    return Value::tuple({x[pick(rng, x.size())], Value::atom(m_.elements[pick(rng, m_.elements.size())])});
  }

 private:
  MonoidTable m_;
  std::size_t unit_;
  std::map<Name, std::size_t> index_;
};

class Maybe final : public FinSetMonad {
 public:
  std::string name() const override { return "maybe"; }
  bool finite_carrier() const override { return true; }
  Carrier enumerate(const Carrier& x) const override {
    Carrier out{Value::nothing()};
    for (const auto& v : x) out.push_back(Value::just(v));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::uint64_t carrier_size(std::uint64_t n) const override { return n + 1; }
  Value unit(const Value& x) const override { return Value::just(x); }
  Value multiply(const Value& ttx) const override {
    if (ttx.kind() == Value::Kind::nothing) return ttx;
    return ttx.items().at(0);
  }
  Value fmap(const ValueFn& f, const Value& tx) const override {
    if (tx.kind() == Value::Kind::nothing) return tx;
    return Value::just(f(tx.items().at(0)));
  }
  Value sample(const Carrier& x, std::mt19937_64& rng) const override {
    std::size_t k = pick(rng, x.size() + 1);
    return k == x.size() ? Value::nothing() : Value::just(x[k]);
  }
};

class List final : public FinSetMonad {
 public:
  explicit List(std::size_t max_len) : max_len_(max_len) {}
  std::string name() const override { return "list"; }
  bool finite_carrier() const override { return false; }
  Carrier enumerate(const Carrier& x) const override {
    Carrier out;
    std::vector<Value> current;
    std::function<void()> extend = [&] {
      out.push_back(Value::list(current));
      if (current.size() == max_len_) return;
      for (const auto& v : x) {
        current.push_back(v);
        extend();
        current.pop_back();
      }
    };
    extend();
    std::sort(out.begin(), out.end());
    return out;
  }
  std::uint64_t carrier_size(std::uint64_t n) const override {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= max_len_; ++k) {
      total = saturating_add(total, saturating_pow(n, k));
    }
    return total;
  }
  Value unit(const Value& x) const override { return Value::list({x}); }
  Value multiply(const Value& ttx) const override {
    std::vector<Value> items;
    for (const auto& l : ttx.items()) items.insert(items.end(), l.items().begin(), l.items().end());
    return Value::list(std::move(items));
  }
  Value fmap(const ValueFn& f, const Value& tx) const override {
    std::vector<Value> items;
    for (const auto& v : tx.items()) items.push_back(f(v));
    return Value::list(std::move(items));
  }
  Value sample(const Carrier& x, std::mt19937_64& rng) const override {
    std::vector<Value> items;
    const std::size_t len = x.empty() ? 0 : pick(rng, max_len_ + 1);
    for (std::size_t k = 0; k < len; ++k) items.push_back(x[pick(rng, x.size())]);
    return Value::list(std::move(items));
  }

 private:
  std::size_t max_len_;
};

}  // namespace

MonadPtr powerset_monad() { return std::make_shared<Powerset>(); }

MonadPtr distribution_monad(std::size_t max_denominator) {
  if (max_denominator < 1) throw Error(ErrorKind::invalid_argument, "max_denominator must be at least 1");
  return std::make_shared<Distribution>(max_denominator);
}

MonadPtr writer_monad(const MonoidTable& m) {
  if (auto w = monoid_violation(m); !w.is_null()) {
    throw Error(ErrorKind::not_a_monoid, "writer monad needs a monoid", w);
  }
  return writer_monad_unchecked(m);
}

MonadPtr writer_monad_unchecked(const MonoidTable& m) {
  auto unit = monoid_unit(m);
  if (!unit) throw Error(ErrorKind::not_a_monoid, "table has no two-sided unit", {{"reason", "no unit"}});
  return std::make_shared<Writer>(m, *unit);
}

MonadPtr maybe_monad() { return std::make_shared<Maybe>(); }

MonadPtr list_monad(std::size_t max_length) { return std::make_shared<List>(max_length); }

MonadPtr builtin_monad(const MonadSpec& spec) {
  if (spec.kind == "powerset") return powerset_monad();
  if (spec.kind == "distribution") return distribution_monad(spec.max_denominator);
  if (spec.kind == "maybe") return maybe_monad();
  if (spec.kind == "list") return list_monad(spec.max_length);
  if (spec.kind == "writer") {
    if (!spec.monoid) throw Error(ErrorKind::invalid_argument, "writer monad needs a monoid table");
    return writer_monad(*spec.monoid);
  }
  throw Error(ErrorKind::unknown_kind, "unknown monad " + spec.kind, {{"kind", spec.kind}});
}

nlohmann::json monad_law_failure(const FinSetMonad& t, const std::string& law, const Value& element) {
  Value left, right;
  if (law == "left_unit") {
    left = t.multiply(t.unit(element));
    right = element;
  } else if (law == "right_unit") {
    left = t.multiply(t.fmap([&](const Value& v) { return t.unit(v); }, element));
    right = element;
  } else if (law == "associativity") {
    left = t.multiply(t.multiply(element));
    right = t.multiply(t.fmap([&](const Value& v) { return t.multiply(v); }, element));
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown monad law " + law, {{"law", law}});
  }
  if (left == right) return nullptr;
  return {{"law", law}, {"element", to_json(element)}, {"left", to_json(left)}, {"right", to_json(right)}};
}

namespace {

void require_size(std::uint64_t size, std::uint64_t budget, const std::string& what) {
  if (size > budget) {
    throw Error(ErrorKind::budget_exceeded, what + ": " + std::to_string(size) + " elements exceeds budget",
                {{"estimate", size}, {"budget", budget}});
  }
}

// Functions X → Y in lexicographic order of images, at most `cap` of them.
std::vector<ValueMap> some_functions(const Carrier& x, const Carrier& y, std::size_t cap) {
  std::vector<ValueMap> out;
  if (y.empty() && !x.empty()) return out;
  std::vector<std::size_t> idx(x.size(), 0);
  while (out.size() < cap) {
    ValueMap f;
    for (std::size_t i = 0; i < x.size(); ++i) f.emplace(x[i], y[idx[i]]);
    out.push_back(std::move(f));
    std::size_t i = x.size();
    bool carried = true;
    while (carried && i > 0) {
      --i;
      if (++idx[i] < y.size()) {
        carried = false;
      } else {
        idx[i] = 0;
      }
    }
    if (carried) break;
  }
  return out;
}

nlohmann::json map_json(const ValueMap& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, v] : f) j.push_back({to_json(k), to_json(v)});
  return j;
}

void check_naturality(const FinSetMonad& t, const Carrier& x, const Carrier& tx, const Carrier& ttx, Verdict& v) {
  constexpr std::size_t cap = 32;
  const Carrier targets[] = {x, Carrier{Value::atom("y0"), Value::atom("y1")}};
  for (const auto& y : targets) {
    for (const auto& f : some_functions(x, y, cap)) {
      ValueFn fn = [&](const Value& a) { return lookup(f, a); };
      for (const auto& a : x) {
        v.count("unit_naturality");
        if (t.fmap(fn, t.unit(a)) != t.unit(fn(a))) {
          v.fail({{"law", "unit_naturality"}, {"function", map_json(f)}, {"element", to_json(a)}});
        }
      }
      for (const auto& w : ttx) {
        v.count("mult_naturality");
        Value left = t.multiply(t.fmap([&](const Value& u) { return t.fmap(fn, u); }, w));
        Value right = t.fmap(fn, t.multiply(w));
        if (left != right) {
          v.fail({{"law", "mult_naturality"}, {"function", map_json(f)}, {"element", to_json(w)}});
        }
      }
      for (const auto& g : some_functions(y, x, 4)) {
        ValueFn gn = [&](const Value& b) { return lookup(g, b); };
        for (const auto& s : tx) {
          v.count("functoriality");
          Value left = t.fmap([&](const Value& a) { return gn(fn(a)); }, s);
          Value right = t.fmap(gn, t.fmap(fn, s));
          if (left != right) {
            v.fail({{"law", "functoriality"}, {"function", map_json(f)}, {"element", to_json(s)}});
          }
        }
      }
    }
  }
  for (const auto& s : tx) {
    v.count("functoriality");
    if (t.fmap([](const Value& a) { return a; }, s) != s) {
      v.fail({{"law", "functoriality"}, {"function", "identity"}, {"element", to_json(s)}});
    }
  }
}

}  // namespace

Verdict check_monad_laws(const FinSetMonad& t, const Carrier& x, const LawOptions& opts) {
  Verdict v("monad_laws");
  const bool exhaustive = opts.mode == LawMode::exhaustive;
  if (exhaustive && !t.finite_carrier()) {
    throw Error(ErrorKind::not_finite_carrier, t.name() + " has an infinite carrier; use bounded mode",
                {{"monad", t.name()}});
  }
  v.bounded = !exhaustive || !t.finite_carrier();
  const auto s1 = t.carrier_size(x.size());
  require_size(s1, opts.budget, "T X");
  const Carrier tx = t.enumerate(x);
  const auto s2 = t.carrier_size(tx.size());
  require_size(s2, opts.budget, "T T X");
  const Carrier ttx = t.enumerate(tx);
  const auto s3 = t.carrier_size(ttx.size());

  for (const auto& s : tx) {
    v.count("left_unit");
    if (auto w = monad_law_failure(t, "left_unit", s); !w.is_null()) v.fail(std::move(w));
    v.count("right_unit");
    if (auto w = monad_law_failure(t, "right_unit", s); !w.is_null()) v.fail(std::move(w));
  }

  auto check_assoc = [&](const Value& w) {
    v.count("associativity");
    if (auto f = monad_law_failure(t, "associativity", w); !f.is_null()) v.fail(std::move(f));
  };
  if (exhaustive || (!t.finite_carrier() && s3 <= opts.budget)) {
    require_size(s3, opts.budget, "T T T X");
    for (const auto& w : t.enumerate(ttx)) check_assoc(w);
  } else {
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t k = 0; k < opts.samples; ++k) check_assoc(t.sample(ttx, rng));
    v.count("samples", opts.samples);
  }

  if (opts.naturality) check_naturality(t, x, tx, ttx, v);
  return v;
}

KleisliArrow kleisli_identity(const FinSetMonad& t, const Carrier& x) {
  KleisliArrow k{x, x, {}};
  for (const auto& a : x) k.map.emplace(a, t.unit(a));
  return k;
}

KleisliArrow kleisli_compose(const FinSetMonad& t, const KleisliArrow& k, const KleisliArrow& h) {
  if (k.codomain != h.domain) {
    throw Error(ErrorKind::endpoint_mismatch, "Kleisli arrows do not meet");
  }
  KleisliArrow out{k.domain, h.codomain, {}};
  ValueFn hn = [&](const Value& y) { return lookup(h.map, y); };
  for (const auto& a : k.domain) out.map.emplace(a, t.multiply(t.fmap(hn, lookup(k.map, a))));
  return out;
}

namespace {

Name images_name(const Carrier& domain, const ValueMap& f) {
  Name s = "[";
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (i) s += ",";
    s += lookup(f, domain[i]).to_string();
  }
  return s + "]";
}

// Every function `domain` → `codomain` as a value map.
std::vector<ValueMap> all_value_maps(const Carrier& domain, const Carrier& codomain, std::uint64_t budget) {
  const auto count = saturating_pow(codomain.size(), domain.size());
  require_size(count, budget, "function enumeration");
  return some_functions(domain, codomain, static_cast<std::size_t>(count));
}

}  // namespace

RawCategory kleisli_raw(const FinSetMonad& t, const std::vector<NamedSet>& universe, std::uint64_t budget) {
  if (!t.finite_carrier()) {
    throw Error(ErrorKind::not_finite_carrier, "Kleisli category needs a finite carrier", {{"monad", t.name()}});
  }
  std::vector<Carrier> carriers;
  std::vector<Carrier> tcarriers;
  for (const auto& s : universe) {
    carriers.push_back(carrier_of(s.set));
    require_size(t.carrier_size(carriers.back().size()), budget, "T X");
    tcarriers.push_back(t.enumerate(carriers.back()));
  }
  std::uint64_t total = 0;
  for (const auto& a : carriers) {
    for (const auto& tb : tcarriers) total = saturating_add(total, saturating_pow(tb.size(), a.size()));
  }
  require_size(total, budget, "Kleisli morphisms");

  RawCategory raw;
  struct Arrow {
    std::size_t from, to;
    KleisliArrow k;
    Name name;
  };
  std::vector<Arrow> arrows;
  auto name_of = [&](std::size_t a, std::size_t b, const ValueMap& m) {
    return universe[a].name + "->" + universe[b].name + ":" + images_name(carriers[a], m);
  };
  for (std::size_t a = 0; a < universe.size(); ++a) {
    raw.objects.push_back(universe[a].name);
    for (std::size_t b = 0; b < universe.size(); ++b) {
      for (auto& m : all_value_maps(carriers[a], tcarriers[b], budget)) {
        Name n = name_of(a, b, m);
        raw.morphisms.push_back({n, universe[a].name, universe[b].name});
        arrows.push_back({a, b, KleisliArrow{carriers[a], carriers[b], std::move(m)}, std::move(n)});
      }
    }
    raw.identities[universe[a].name] = name_of(a, a, kleisli_identity(t, carriers[a]).map);
  }
  std::uint64_t entries = 0;
  for (const auto& f : arrows) {
    for (const auto& g : arrows) entries += f.to == g.from;
  }
  require_size(entries, budget, "Kleisli composition table");
  for (const auto& f : arrows) {
    for (const auto& g : arrows) {
      if (f.to != g.from) continue;
      raw.compose.push_back({f.name, g.name, name_of(f.from, g.to, kleisli_compose(t, f.k, g.k).map)});
    }
  }
  return raw;
}

FinCategory kleisli_category(const FinSetMonad& t, const std::vector<NamedSet>& universe, std::uint64_t budget) {
  return validate_category(kleisli_raw(t, universe, budget));
}

Algebra free_algebra(const FinSetMonad& t, const Carrier& x) {
  Algebra a{t.enumerate(x), {}};
  for (const auto& w : t.enumerate(a.carrier)) a.structure.emplace(w, t.multiply(w));
  return a;
}

namespace {

const Value* find_in(const ValueMap& m, const Value& v) {
  auto it = m.find(v);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

Verdict check_algebra(const FinSetMonad& t, const Algebra& a, std::uint64_t budget) {
  Verdict v("algebra");
  v.bounded = !t.finite_carrier();
  for (const auto& x : a.carrier) {
    v.count("unit");
    const Value* e = find_in(a.structure, t.unit(x));
    if (!e || *e != x) {
      v.fail({{"law", "unit"}, {"element", to_json(x)}, {"got", e ? to_json(*e) : nlohmann::json(nullptr)}});
    }
  }
  require_size(t.carrier_size(a.carrier.size()), budget, "T A");
  const Carrier ta = t.enumerate(a.carrier);
  require_size(t.carrier_size(ta.size()), budget, "T T A");
  for (const auto& w : t.enumerate(ta)) {
    const Value* via_mu = find_in(a.structure, t.multiply(w));
    if (!via_mu) {
      v.count("skipped");
      continue;
    }
    bool inside = true;
    Value te = t.fmap(
        [&](const Value& s) {
          const Value* r = find_in(a.structure, s);
          if (!r) inside = false;
          return r ? *r : s;
        },
        w);
    const Value* via_te = inside ? find_in(a.structure, te) : nullptr;
    if (!via_te) {
      v.count("skipped");
      continue;
    }
    v.count("composition");
    if (*via_mu != *via_te) {
      v.fail({{"law", "composition"},
              {"element", to_json(w)},
              {"multiply_first", to_json(*via_mu)},
              {"structure_first", to_json(*via_te)}});
    }
  }
  return v;
}

Verdict check_algebra_morphism(const FinSetMonad& t, const Algebra& a, const Algebra& b, const ValueMap& f) {
  Verdict v("algebra_morphism");
  v.bounded = !t.finite_carrier();
  ValueFn fn = [&](const Value& x) { return lookup(f, x); };
  for (const auto& [s, e] : a.structure) {
    const Value* right = find_in(b.structure, t.fmap(fn, s));
    if (!right) {
      v.count("skipped");
      continue;
    }
    v.count("square");
    if (fn(e) != *right) {
      v.fail({{"law", "morphism_square"},
              {"element", to_json(s)},
              {"map_after_structure", to_json(fn(e))},
              {"structure_after_map", to_json(*right)}});
    }
  }
  return v;
}

EmExtension em_extension(const FinSetMonad& t, const Carrier& x, const Algebra& a, const ValueMap& f,
                         std::uint64_t budget) {
  if (!t.finite_carrier()) {
    throw Error(ErrorKind::not_finite_carrier, "extension uniqueness needs a finite carrier", {{"monad", t.name()}});
  }
  EmExtension out;
  out.verdict = Verdict("em_extension");
  auto& v = out.verdict;
  const Algebra fx = free_algebra(t, x);
  ValueFn fn = [&](const Value& y) { return lookup(f, y); };
  for (const auto& s : fx.carrier) out.map.emplace(s, lookup(a.structure, t.fmap(fn, s)));
  for (const auto& y : x) {
    v.count("triangle");
    if (lookup(out.map, t.unit(y)) != fn(y)) {
      v.fail({{"law", "triangle"}, {"element", to_json(y)}});
    }
  }
  Verdict hom = check_algebra_morphism(t, fx, a, out.map);
  if (!hom.holds()) v.fail({{"law", "not_an_algebra_morphism"}, {"square", hom.witness}});

  std::uint64_t matching = 0;
  for (const auto& g : all_value_maps(fx.carrier, a.carrier, budget)) {
    v.count("candidates");
    bool triangle = std::all_of(x.begin(), x.end(), [&](const Value& y) { return lookup(g, t.unit(y)) == fn(y); });
    if (!triangle || !check_algebra_morphism(t, fx, a, g).holds()) continue;
    ++matching;
    if (g != out.map) {
      v.fail({{"law", "uniqueness"}, {"other", map_json(g)}});
    }
  }
  v.count("matching", matching);
  if (matching != 1 && v.holds()) v.fail({{"law", "uniqueness"}, {"matching", matching}});
  return out;
}

EmCategory materialize_em_category(const FinSetMonad& t, const std::vector<NamedSet>& universe,
                                   std::uint64_t budget) {
  if (!t.finite_carrier()) {
    throw Error(ErrorKind::not_finite_carrier, "Eilenberg-Moore category needs a finite carrier",
                {{"monad", t.name()}});
  }
  struct Obj {
    Name name;
    std::size_t set;
    Algebra alg;
  };
  std::vector<Obj> objs;
  std::vector<Carrier> carriers;
  for (std::size_t k = 0; k < universe.size(); ++k) {
    carriers.push_back(carrier_of(universe[k].set));
    const Carrier& a = carriers.back();
    require_size(t.carrier_size(a.size()), budget, "T A");
    const Carrier ta = t.enumerate(a);
    for (auto& e : all_value_maps(ta, a, budget)) {
      Algebra alg{a, std::move(e)};
      if (!check_algebra(t, alg, budget).holds()) continue;
      objs.push_back({universe[k].name + ":" + images_name(ta, alg.structure), k, std::move(alg)});
    }
  }
  RawCategory raw;
  struct Mor {
    std::size_t from, to;
    ValueMap f;
    Name name;
  };
  std::vector<Mor> mors;
  auto mor_name = [&](std::size_t p, std::size_t q, const ValueMap& f) {
    return objs[p].name + "->" + objs[q].name + ":" + images_name(objs[p].alg.carrier, f);
  };
  for (std::size_t p = 0; p < objs.size(); ++p) {
    raw.objects.push_back(objs[p].name);
    for (std::size_t q = 0; q < objs.size(); ++q) {
      for (auto& f : all_value_maps(objs[p].alg.carrier, objs[q].alg.carrier, budget)) {
        if (!check_algebra_morphism(t, objs[p].alg, objs[q].alg, f).holds()) continue;
        Name n = mor_name(p, q, f);
        raw.morphisms.push_back({n, objs[p].name, objs[q].name});
        mors.push_back({p, q, std::move(f), std::move(n)});
      }
    }
    ValueMap id;
    for (const auto& a : objs[p].alg.carrier) id.emplace(a, a);
    raw.identities[objs[p].name] = mor_name(p, p, id);
  }
  for (const auto& f : mors) {
    for (const auto& g : mors) {
      if (f.to != g.from) continue;
      ValueMap gf;
      for (const auto& [a, b] : f.f) gf.emplace(a, lookup(g.f, b));
      raw.compose.push_back({f.name, g.name, mor_name(f.from, g.to, gf)});
    }
  }
  EmCategory out;
  out.category = validate_category(raw);
  std::map<Name, std::size_t> by_name;
  for (std::size_t p = 0; p < objs.size(); ++p) by_name[objs[p].name] = p;
  for (const auto& n : out.category.object_names()) {
    const auto& o = objs[by_name.at(n)];
    out.algebras.push_back(o.alg);
    out.carriers.push_back(universe[o.set].name);
  }
  return out;
}

namespace {

class Reader final : public FinSetComonad {
 public:
  explicit Reader(Carrier e) : e_(std::move(e)) {}
  std::string name() const override { return "reader"; }
  Carrier enumerate(const Carrier& x) const override {
    Carrier out;
    for (const auto& a : x) {
      for (const auto& e : e_) out.push_back(Value::tuple({a, e}));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::uint64_t carrier_size(std::uint64_t n) const override { return saturating_mul(n, e_.size()); }
  Value counit(const Value& cx) const override { return cx.items().at(0); }
  Value comultiply(const Value& cx) const override { return Value::tuple({cx, cx.items().at(1)}); }
  Value fmap(const ValueFn& f, const Value& cx) const override {
    return Value::tuple({f(cx.items().at(0)), cx.items().at(1)});
  }

 private:
  Carrier e_;
};

}  // namespace

ComonadPtr reader_comonad(const Carrier& e) { return std::make_shared<Reader>(e); }

Verdict check_comonad_laws(const FinSetComonad& c, const Carrier& x, std::uint64_t budget) {
  Verdict v("comonad_laws");
  require_size(c.carrier_size(x.size()), budget, "C X");
  auto fail = [&](const char* law, const Value& w, const Value& left, const Value& right) {
    v.fail({{"law", law}, {"element", to_json(w)}, {"left", to_json(left)}, {"right", to_json(right)}});
  };
  for (const auto& w : c.enumerate(x)) {
    const Value nu = c.comultiply(w);
    v.count("left_counit");
    if (Value l = c.counit(nu); l != w) fail("left_counit", w, l, w);
    v.count("right_counit");
    if (Value r = c.fmap([&](const Value& u) { return c.counit(u); }, nu); r != w) fail("right_counit", w, r, w);
    v.count("coassociativity");
    Value l = c.comultiply(nu);
    Value r = c.fmap([&](const Value& u) { return c.comultiply(u); }, nu);
    if (l != r) fail("coassociativity", w, l, r);
  }
  return v;
}

CokleisliArrow cokleisli_identity(const FinSetComonad& c, const Carrier& x) {
  CokleisliArrow k{x, x, {}};
  for (const auto& w : c.enumerate(x)) k.map.emplace(w, c.counit(w));
  return k;
}

CokleisliArrow cokleisli_compose(const FinSetComonad& c, const CokleisliArrow& k, const CokleisliArrow& h) {
  if (k.codomain != h.domain) throw Error(ErrorKind::endpoint_mismatch, "co-Kleisli arrows do not meet");
  CokleisliArrow out{k.domain, h.codomain, {}};
  ValueFn kn = [&](const Value& w) { return lookup(k.map, w); };
  for (const auto& w : c.enumerate(k.domain)) out.map.emplace(w, lookup(h.map, c.fmap(kn, c.comultiply(w))));
  return out;
}

Verdict check_coalgebra(const FinSetComonad& c, const Coalgebra& a) {
  Verdict v("coalgebra");
  ValueFn in = [&](const Value& x) { return lookup(a.structure, x); };
  for (const auto& x : a.carrier) {
    v.count("counit");
    if (c.counit(in(x)) != x) v.fail({{"law", "counit"}, {"element", to_json(x)}});
    v.count("coassociativity");
    if (c.comultiply(in(x)) != c.fmap(in, in(x))) v.fail({{"law", "coassociativity"}, {"element", to_json(x)}});
  }
  return v;
}

StochasticMatrix to_matrix(const KleisliArrow& k) {
  StochasticMatrix m{k.domain, k.codomain, {}};
  for (const auto& x : k.domain) {
    const Value& p = lookup(k.map, x);
    std::vector<Rational> row;
    for (const auto& y : k.codomain) row.push_back(p.weight_of(y));
    m.entries.push_back(std::move(row));
  }
  return m;
}

KleisliArrow from_matrix(const StochasticMatrix& m) {
  KleisliArrow k{m.rows, m.cols, {}};
  if (m.entries.size() != m.rows.size()) throw Error(ErrorKind::invalid_argument, "matrix has the wrong row count");
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    const auto& row = m.entries[i];
    if (row.size() != m.cols.size()) throw Error(ErrorKind::invalid_argument, "matrix has the wrong column count");
    Rational sum = 0;
    std::vector<std::pair<Value, Rational>> w;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) {
        throw Error(ErrorKind::not_normalized, "negative entry in row " + m.rows[i].to_string(),
                    {{"row", to_json(m.rows[i])}, {"column", to_json(m.cols[j])}, {"entry", to_string(row[j])}});
      }
      sum += row[j];
      w.emplace_back(m.cols[j], row[j]);
    }
    if (sum != 1) {
      throw Error(ErrorKind::not_normalized, "row " + m.rows[i].to_string() + " sums to " + to_string(sum),
                  {{"row", to_json(m.rows[i])}, {"sum", to_string(sum)}});
    }
    k.map.emplace(m.rows[i], Value::dist(std::move(w)));
  }
  return k;
}

}  // namespace fincat
