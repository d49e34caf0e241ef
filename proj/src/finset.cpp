#include "fincat/finset.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>

#include <boost/pending/disjoint_sets.hpp>

namespace fincat {

struct FinSet::Data {
  std::vector<Name> elements;
  std::map<Name, std::size_t, std::less<>> index;
};

namespace {

const std::vector<Name>& no_elements() {
  static const std::vector<Name> none;
  return none;
}

}  // namespace

FinSet::FinSet(std::vector<Name> elements) {
  auto d = std::make_shared<Data>();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!d->index.emplace(elements[i], i).second) {
      throw Error(ErrorKind::duplicate_name, "duplicate element " + elements[i], {{"element", elements[i]}});
    }
  }
  d->elements = std::move(elements);
  d_ = std::move(d);
}

FinSet FinSet::range(std::size_t n) {
  std::vector<Name> els;
  for (std::size_t i = 0; i < n; ++i) els.push_back(std::to_string(i));
  return FinSet(std::move(els));
}

std::size_t FinSet::size() const noexcept { return d_ ? d_->elements.size() : 0; }
const Name& FinSet::element(std::size_t i) const { return elements().at(i); }
const std::vector<Name>& FinSet::elements() const noexcept { return d_ ? d_->elements : no_elements(); }

std::optional<std::size_t> FinSet::find(std::string_view name) const {
  if (!d_) return std::nullopt;
  auto it = d_->index.find(name);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FinSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::unknown_object, "no element named " + std::string(name), {{"element", std::string(name)}});
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.d_ == b.d_ || a.elements() == b.elements();
}

FinFunction::FinFunction(FinSet domain, FinSet codomain, std::vector<std::size_t> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) {
    throw Error(ErrorKind::not_a_function, "function is not total on its domain");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] >= codomain_.size()) {
      throw Error(ErrorKind::not_a_function, "image of " + domain_.element(i) + " lies outside the codomain",
                  {{"element", domain_.element(i)}});
    }
  }
}

FinFunction FinFunction::from_map(const FinSet& domain, const FinSet& codomain,
                                  const std::map<Name, Name>& mapping) {
  for (const auto& [k, v] : mapping) {
    if (!domain.find(k)) {
      throw Error(ErrorKind::not_a_function, "mapping mentions " + k + " outside the domain", {{"element", k}});
    }
  }
  std::vector<std::size_t> images;
  for (const auto& x : domain.elements()) {
    auto it = mapping.find(x);
    if (it == mapping.end()) {
      throw Error(ErrorKind::not_a_function, "no image for " + x, {{"element", x}});
    }
    auto y = codomain.find(it->second);
    if (!y) {
      throw Error(ErrorKind::not_a_function, "image " + it->second + " of " + x + " lies outside the codomain",
                  {{"element", x}, {"image", it->second}});
    }
    images.push_back(*y);
  }
  return FinFunction(domain, codomain, std::move(images));
}

FinFunction FinFunction::identity(const FinSet& s) {
  std::vector<std::size_t> images(s.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return FinFunction(s, s, std::move(images));
}

const Name& FinFunction::operator()(std::string_view x) const {
  return codomain_.element(images_.at(domain_.index_of(x)));
}

bool FinFunction::injective() const {
  std::set<std::size_t> seen(images_.begin(), images_.end());
  return seen.size() == images_.size();
}

bool FinFunction::surjective() const {
  std::set<std::size_t> seen(images_.begin(), images_.end());
  return seen.size() == codomain_.size();
}

std::map<Name, Name> FinFunction::to_map() const {
  std::map<Name, Name> m;
  for (std::size_t i = 0; i < images_.size(); ++i) m[domain_.element(i)] = codomain_.element(images_[i]);
  return m;
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
  if (!(f.codomain() == g.domain())) {
    throw Error(ErrorKind::endpoint_mismatch, "functions are not composable");
  }
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < f.domain().size(); ++i) images.push_back(g(f(i)));
  return FinFunction(f.domain(), g.codomain(), std::move(images));
}

std::vector<FinFunction> all_functions(const FinSet& a, const FinSet& b) {
  std::vector<FinFunction> out;
  if (b.empty() && !a.empty()) return out;
  std::vector<std::size_t> images(a.size(), 0);
  while (true) {
    out.emplace_back(a, b, images);
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (++images[i] < b.size()) break;
      images[i] = 0;
      if (i == 0) return out;
    }
    if (a.empty()) return out;
  }
}

SetFunctor::SetFunctor(FinCategory shape, std::vector<FinSet> sets, std::vector<FinFunction> arrows)
    : shape_(std::move(shape)), sets_(std::move(sets)), arrows_(std::move(arrows)) {
  const auto& c = shape_;
  if (sets_.size() != c.object_count() || arrows_.size() != c.morphism_count()) {
    throw Error(ErrorKind::missing_image, "set-valued functor is not total on its shape");
  }
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    if (!(arrows_[m].domain() == sets_[c.src(m)]) || !(arrows_[m].codomain() == sets_[c.tgt(m)])) {
      throw Error(ErrorKind::endpoint_mismatch, "function for " + c.morphism_name(m) + " has the wrong endpoints",
                  {{"morphism", c.morphism_name(m)}});
    }
  }
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    if (!(arrows_[c.identity(x)] == FinFunction::identity(sets_[x]))) {
      throw Error(ErrorKind::identity_not_preserved, "identity of " + c.object_name(x) + " acts non-trivially",
                  {{"object", c.object_name(x)}});
    }
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      for (MorphismId g : c.hom(c.tgt(f), z)) {
        const auto& gf = arrows_[c.compose(g, f)];
        for (std::size_t i = 0; i < sets_[c.src(f)].size(); ++i) {
          if (gf(i) != arrows_[g](arrows_[f](i))) {
            throw Error(ErrorKind::composition_not_preserved,
                        "action of " + c.morphism_name(g) + "∘" + c.morphism_name(f) + " differs on " +
                            sets_[c.src(f)].element(i),
                        {{"first", c.morphism_name(f)},
                         {"then", c.morphism_name(g)},
                         {"element", sets_[c.src(f)].element(i)}});
          }
        }
      }
    }
  }
}

nlohmann::json naturality_failure(const SetFunctor& p, const SetFunctor& q, const SetNat& alpha) {
  const auto& c = p.shape();
  if (alpha.components.size() != c.object_count()) return {{"reason", "wrong number of components"}};
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    if (!(alpha.components[x].domain() == p.at(x)) || !(alpha.components[x].codomain() == q.at(x))) {
      return {{"reason", "component has the wrong endpoints"}, {"object", c.object_name(x)}};
    }
  }
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const auto& a_src = alpha.components[c.src(m)];
    const auto& a_tgt = alpha.components[c.tgt(m)];
    for (std::size_t i = 0; i < p.at(c.src(m)).size(); ++i) {
      if (q.on(m)(a_src(i)) != a_tgt(p.on(m)(i))) {
        return {{"reason", "naturality square fails"},
                {"morphism", c.morphism_name(m)},
                {"element", p.at(c.src(m)).element(i)}};
      }
    }
  }
  return nullptr;
}

SetNat make_set_nat(const SetFunctor& p, const SetFunctor& q, std::vector<FinFunction> components) {
  SetNat alpha{std::move(components)};
  if (auto w = naturality_failure(p, q, alpha); !w.is_null()) {
    throw Error(ErrorKind::naturality_square_fails, w.value("reason", std::string("not natural")), w);
  }
  return alpha;
}

SetNat identity_set_nat(const SetFunctor& p) {
  SetNat alpha;
  for (const auto& s : p.sets()) alpha.components.push_back(FinFunction::identity(s));
  return alpha;
}

SetNat vertical_compose(const SetNat& beta, const SetNat& alpha) {
  if (beta.components.size() != alpha.components.size()) {
    throw Error(ErrorKind::shape_mismatch, "transformations live on different shapes");
  }
  SetNat out;
  for (std::size_t i = 0; i < alpha.components.size(); ++i) {
    out.components.push_back(compose(beta.components[i], alpha.components[i]));
  }
  return out;
}

bool is_set_iso(const SetNat& alpha) {
  return std::all_of(alpha.components.begin(), alpha.components.end(),
                     [](const FinFunction& f) { return f.injective() && f.surjective(); });
}

namespace {

// Morphisms checked once the later of their endpoints is assigned.
std::vector<std::vector<MorphismId>> checks_by_object(const FinCategory& c) {
  std::vector<std::vector<MorphismId>> checks(c.object_count());
  for (MorphismId m = 0; m < c.morphism_count(); ++m) checks[std::max(c.src(m), c.tgt(m))].push_back(m);
  return checks;
}

std::uint64_t count_families(const SetFunctor& d, std::size_t per_object_exponent, bool into) {
  std::uint64_t n = 1;
  for (const auto& s : d.sets()) {
    n = into ? saturating_mul(n, saturating_pow(s.size(), per_object_exponent))
             : saturating_mul(n, saturating_pow(per_object_exponent, s.size()));
  }
  return n;
}

}  // namespace

SetCone finset_limit(const SetFunctor& d) {
  const auto& c = d.shape();
  const std::size_t n = c.object_count();
  const auto checks = checks_by_object(c);
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> current(n);
  std::function<void(ObjectId)> step = [&](ObjectId i) {
    if (i == n) {
      tuples.push_back(current);
      return;
    }
    for (std::size_t e = 0; e < d.at(i).size(); ++e) {
      current[i] = e;
      bool ok = true;
      for (MorphismId m : checks[i]) {
        if (d.on(m)(current[c.src(m)]) != current[c.tgt(m)]) {
          ok = false;
          break;
        }
      }
      if (ok) step(i + 1);
    }
  };
  step(0);

  std::vector<Name> names;
  for (const auto& t : tuples) {
    Name s = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ",";
      s += d.at(i).element(t[i]);
    }
    names.push_back(s + ")");
  }
  SetCone cone{FinSet(std::move(names)), {}};
  for (ObjectId i = 0; i < n; ++i) {
    std::vector<std::size_t> images;
    for (const auto& t : tuples) images.push_back(t[i]);
    cone.legs.emplace_back(cone.tip, d.at(i), std::move(images));
  }
  if (spot_check_limit(d, cone) == false) {
    throw Error(ErrorKind::law_violation, "explicit limit failed its universal property check");
  }
  return cone;
}

SetCone finset_colimit(const SetFunctor& d) {
  const auto& c = d.shape();
  const std::size_t n = c.object_count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (ObjectId i = 0; i < n; ++i) offset[i + 1] = offset[i] + d.at(i).size();
  const std::size_t total = offset[n];

  std::vector<std::size_t> rank(total), parent(total);
  boost::disjoint_sets<std::size_t*, std::size_t*> classes(rank.data(), parent.data());
  for (std::size_t k = 0; k < total; ++k) classes.make_set(k);
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    for (std::size_t e = 0; e < d.at(c.src(m)).size(); ++e) {
      classes.union_set(offset[c.src(m)] + e, offset[c.tgt(m)] + d.on(m)(e));
    }
  }
  // Least member of each class, in disjoint-union order.
  std::map<std::size_t, std::size_t> least;
  for (std::size_t k = 0; k < total; ++k) least.emplace(classes.find_set(k), k);
  std::vector<std::size_t> reps;
  for (const auto& [root, k] : least) reps.push_back(k);
  std::sort(reps.begin(), reps.end());
  std::map<std::size_t, std::size_t> class_index;
  for (std::size_t r = 0; r < reps.size(); ++r) class_index[classes.find_set(reps[r])] = r;

  auto member_name = [&](std::size_t k) {
    ObjectId i = static_cast<ObjectId>(std::upper_bound(offset.begin(), offset.end(), k) - offset.begin() - 1);
    return c.object_name(i) + ":" + d.at(i).element(k - offset[i]);
  };
  std::vector<Name> names;
  for (std::size_t k : reps) names.push_back(member_name(k));
  SetCone cocone{FinSet(std::move(names)), {}};
  for (ObjectId i = 0; i < n; ++i) {
    std::vector<std::size_t> images;
    for (std::size_t e = 0; e < d.at(i).size(); ++e) images.push_back(class_index.at(classes.find_set(offset[i] + e)));
    cocone.legs.emplace_back(d.at(i), cocone.tip, std::move(images));
  }
  if (spot_check_colimit(d, cocone) == false) {
    throw Error(ErrorKind::law_violation, "explicit colimit failed its universal property check");
  }
  return cocone;
}

std::optional<bool> spot_check_limit(const SetFunctor& d, const SetCone& cone, std::uint64_t budget) {
  const auto& c = d.shape();
  const std::size_t n = c.object_count();
  const auto checks = checks_by_object(c);
  std::vector<const FinSet*> tips;
  for (const auto& s : d.sets()) tips.push_back(&s);
  for (const FinSet* t : tips) {
    if (count_families(d, t->size(), true) > budget) return std::nullopt;
  }
  for (const FinSet* t : tips) {
    // Families of functions t → D(I), each stored as an image vector.
    std::vector<std::vector<std::size_t>> family(n, std::vector<std::size_t>(t->size()));
    bool good = true;
    std::function<void(ObjectId, std::size_t)> step = [&](ObjectId i, std::size_t e) {
      if (!good) return;
      if (i == n) {
        for (std::size_t x = 0; x < t->size(); ++x) {
          std::size_t hits = 0;
          for (std::size_t y = 0; y < cone.tip.size(); ++y) {
            bool match = true;
            for (ObjectId k = 0; k < n && match; ++k) match = cone.legs[k](y) == family[k][x];
            hits += match;
          }
          if (hits != 1) {
            good = false;
            return;
          }
        }
        return;
      }
      if (e == t->size()) {
        for (MorphismId m : checks[i]) {
          for (std::size_t x = 0; x < t->size(); ++x) {
            if (d.on(m)(family[c.src(m)][x]) != family[c.tgt(m)][x]) return;
          }
        }
        step(i + 1, 0);
        return;
      }
      for (std::size_t v = 0; v < d.at(i).size(); ++v) {
        family[i][e] = v;
        step(i, e + 1);
      }
    };
    step(0, 0);
    if (!good) return false;
  }
  return true;
}

std::optional<bool> spot_check_colimit(const SetFunctor& d, const SetCone& cocone, std::uint64_t budget) {
  const auto& c = d.shape();
  const std::size_t n = c.object_count();
  const auto checks = checks_by_object(c);
  for (const auto& t : d.sets()) {
    if (count_families(d, t.size(), false) > budget) return std::nullopt;
  }
  for (const auto& t : d.sets()) {
    std::vector<std::vector<std::size_t>> family(n);
    for (ObjectId i = 0; i < n; ++i) family[i].assign(d.at(i).size(), 0);
    bool good = true;
    std::function<void(ObjectId, std::size_t)> step = [&](ObjectId i, std::size_t e) {
      if (!good) return;
      if (i == n) {
        // The mediating map is forced on each class; it must be well defined
        // and every class must be reached.
        std::vector<std::optional<std::size_t>> value(cocone.tip.size());
        for (ObjectId k = 0; k < n; ++k) {
          for (std::size_t x = 0; x < d.at(k).size(); ++x) {
            auto& slot = value[cocone.legs[k](x)];
            if (slot && *slot != family[k][x]) {
              good = false;
              return;
            }
            slot = family[k][x];
          }
        }
        for (const auto& v : value) {
          if (!v) {
            good = false;
            return;
          }
        }
        return;
      }
      if (e == d.at(i).size()) {
        for (MorphismId m : checks[i]) {
          for (std::size_t x = 0; x < d.at(c.src(m)).size(); ++x) {
            if (family[c.tgt(m)][d.on(m)(x)] != family[c.src(m)][x]) return;
          }
        }
        step(i + 1, 0);
        return;
      }
      for (std::size_t v = 0; v < t.size(); ++v) {
        family[i][e] = v;
        step(i, e + 1);
      }
    };
    step(0, 0);
    if (!good) return false;
  }
  return true;
}

std::optional<ShapeKind> parse_shape_kind(std::string_view s) {
  static const std::map<std::string_view, ShapeKind> kinds = {
      {"product", ShapeKind::product},   {"coproduct", ShapeKind::coproduct},
      {"equalizer", ShapeKind::equalizer}, {"coequalizer", ShapeKind::coequalizer},
      {"pullback", ShapeKind::pullback}, {"pushout", ShapeKind::pushout},
      {"terminal", ShapeKind::terminal}, {"initial", ShapeKind::initial}};
  auto it = kinds.find(s);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

namespace {

Name padded(std::size_t i) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%03zu", i);
  return buf;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::arity_mismatch, what);
}

SetCone pick_legs(SetCone cone, std::initializer_list<std::size_t> keep) {
  SetCone out{std::move(cone.tip), {}};
  for (std::size_t k : keep) out.legs.push_back(std::move(cone.legs[k]));
  return out;
}

}  // namespace

SetCone construct_shape(ShapeKind kind, std::span<const FinSet> sets, std::span<const FinFunction> arrows) {
  switch (kind) {
    case ShapeKind::product:
    case ShapeKind::coproduct: {
      require(arrows.empty(), "products and coproducts take sets only");
      std::vector<Name> names;
      for (std::size_t i = 0; i < sets.size(); ++i) names.push_back(padded(i));
      SetFunctor d(shapes::discrete(names), {sets.begin(), sets.end()}, [&] {
        std::vector<FinFunction> ids;
        for (const auto& s : sets) ids.push_back(FinFunction::identity(s));
        return ids;
      }());
      return kind == ShapeKind::product ? finset_limit(d) : finset_colimit(d);
    }
    case ShapeKind::terminal:
    case ShapeKind::initial: {
      require(sets.empty() && arrows.empty(), "terminal and initial objects take no arguments");
      SetFunctor d(shapes::empty(), {}, {});
      return kind == ShapeKind::terminal ? finset_limit(d) : finset_colimit(d);
    }
    case ShapeKind::equalizer:
    case ShapeKind::coequalizer: {
      require(sets.empty() && arrows.size() == 2, "(co)equalizers take two parallel functions");
      const auto& f = arrows[0];
      const auto& g = arrows[1];
      require(f.domain() == g.domain() && f.codomain() == g.codomain(), "functions are not parallel");
      // parallel_pair: objects A, B; morphisms f, g, id_A, id_B (sorted).
      FinCategory shape = shapes::parallel_pair();
      std::vector<FinFunction> acts(shape.morphism_count());
      acts[shape.morphism("f")] = f;
      acts[shape.morphism("g")] = g;
      acts[shape.morphism("id_A")] = FinFunction::identity(f.domain());
      acts[shape.morphism("id_B")] = FinFunction::identity(f.codomain());
      SetFunctor d(shape, {f.domain(), f.codomain()}, std::move(acts));
      return kind == ShapeKind::equalizer ? pick_legs(finset_limit(d), {0}) : pick_legs(finset_colimit(d), {1});
    }
    case ShapeKind::pullback: {
      require(sets.empty() && arrows.size() == 2, "pullbacks take a cospan of two functions");
      const auto& f = arrows[0];
      const auto& g = arrows[1];
      require(f.codomain() == g.codomain(), "pullback functions must share a codomain");
      FinCategory shape = shapes::cospan();
      std::vector<FinFunction> acts(shape.morphism_count());
      acts[shape.morphism("f")] = f;
      acts[shape.morphism("g")] = g;
      acts[shape.morphism("id_A")] = FinFunction::identity(f.domain());
      acts[shape.morphism("id_B")] = FinFunction::identity(g.domain());
      acts[shape.morphism("id_C")] = FinFunction::identity(f.codomain());
      SetFunctor d(shape, {f.domain(), g.domain(), f.codomain()}, std::move(acts));
      return pick_legs(finset_limit(d), {0, 1});
    }
    case ShapeKind::pushout: {
      require(sets.empty() && arrows.size() == 2, "pushouts take a span of two functions");
      const auto& f = arrows[0];
      const auto& g = arrows[1];
      require(f.domain() == g.domain(), "pushout functions must share a domain");
      FinCategory shape = shapes::span();
      std::vector<FinFunction> acts(shape.morphism_count());
      acts[shape.morphism("f")] = f;
      acts[shape.morphism("g")] = g;
      acts[shape.morphism("id_A")] = FinFunction::identity(f.domain());
      acts[shape.morphism("id_B")] = FinFunction::identity(f.codomain());
      acts[shape.morphism("id_C")] = FinFunction::identity(g.codomain());
      SetFunctor d(shape, {f.domain(), f.codomain(), g.codomain()}, std::move(acts));
      return pick_legs(finset_colimit(d), {1, 2});
    }
  }
  throw Error(ErrorKind::unknown_kind, "unknown shape kind");
}

std::pair<FinFunction, FinFunction> kernel_pair(const FinFunction& f) {
  const FinFunction args[] = {f, f};
  SetCone pb = construct_shape(ShapeKind::pullback, {}, args);
  return {pb.legs[0], pb.legs[1]};
}

namespace {

Name function_name(const Name& from, const Name& to, const FinSet& codomain, const std::vector<std::size_t>& images) {
  Name s = from + "->" + to + ":[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) s += ",";
    s += codomain.element(images[i]);
  }
  return s + "]";
}

}  // namespace

FinSetFragment::FinSetFragment(std::vector<NamedSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const NamedSet& a, const NamedSet& b) { return a.name < b.name; });
  sets_ = std::move(sets);
  RawCategory raw;
  struct Arrow {
    std::size_t from, to;
    std::vector<std::size_t> images;
    Name name;
  };
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::vector<std::size_t>>> by_pair_index(sets_.size() * sets_.size());
  for (const auto& s : sets_) raw.objects.push_back(s.name);
  for (std::size_t a = 0; a < sets_.size(); ++a) {
    for (std::size_t b = 0; b < sets_.size(); ++b) {
      for (auto& f : all_functions(sets_[a].set, sets_[b].set)) {
        Arrow arr{a, b, f.images(), function_name(sets_[a].name, sets_[b].name, sets_[b].set, f.images())};
        raw.morphisms.push_back({arr.name, sets_[a].name, sets_[b].name});
        if (a == b && f == FinFunction::identity(sets_[a].set)) raw.identities[sets_[a].name] = arr.name;
        arrows.push_back(std::move(arr));
      }
    }
  }
  for (const auto& f : arrows) {
    for (const auto& g : arrows) {
      if (f.to != g.from) continue;
      std::vector<std::size_t> images;
      for (std::size_t x : f.images) images.push_back(g.images[x]);
      raw.compose.push_back({f.name, g.name, function_name(sets_[f.from].name, sets_[g.to].name, sets_[g.to].set, images)});
    }
  }
  category_ = assemble_category(raw, false);
  images_.resize(category_.morphism_count());
  for (auto& a : arrows) images_[category_.morphism(a.name)] = std::move(a.images);
}

FinSetFragment FinSetFragment::canonical(std::size_t max_size) {
  std::vector<NamedSet> sets;
  for (std::size_t k = 0; k <= max_size; ++k) sets.push_back({std::to_string(k), FinSet::range(k)});
  return FinSetFragment(std::move(sets));
}

const FinSet& FinSetFragment::set_of(ObjectId x) const { return sets_.at(x).set; }

MorphismId FinSetFragment::morphism_of(ObjectId from, ObjectId to, const std::vector<std::size_t>& images) const {
  return category_.morphism(function_name(sets_.at(from).name, sets_.at(to).name, sets_.at(to).set, images));
}

FinFunction FinSetFragment::function_of(MorphismId m) const {
  return FinFunction(set_of(category_.src(m)), set_of(category_.tgt(m)), images_.at(m));
}

}  // namespace fincat
