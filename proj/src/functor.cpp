#include "fincat/functor.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <tuple>

namespace fincat {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) return std::numeric_limits<std::uint64_t>::max();
  return a + b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = saturating_mul(r, base);
    if (r == 0 || r == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return r;
}

namespace {

void require_budget(std::uint64_t estimate, std::uint64_t budget, const std::string& what) {
  if (estimate > budget) {
    throw Error(ErrorKind::budget_exceeded,
                what + ": estimated " + std::to_string(estimate) + " candidates exceeds budget " +
                    std::to_string(budget),
                {{"estimate", estimate}, {"budget", budget}});
  }
}

}  // namespace

RawFunctor FinFunctor::to_raw() const {
  RawFunctor raw;
  for (ObjectId x = 0; x < objects_.size(); ++x) {
    raw.objects[source_.object_name(x)] = target_.object_name(objects_[x]);
  }
  for (MorphismId f = 0; f < morphisms_.size(); ++f) {
    raw.morphisms[source_.morphism_name(f)] = target_.morphism_name(morphisms_[f]);
  }
  return raw;
}

FinFunctor functor_unchecked(FinCategory source, FinCategory target, std::vector<ObjectId> objects,
                             std::vector<MorphismId> morphisms) {
  FinFunctor f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.objects_ = std::move(objects);
  f.morphisms_ = std::move(morphisms);
  return f;
}

FinFunctor make_functor(FinCategory source, FinCategory target, std::vector<ObjectId> objects,
                        std::vector<MorphismId> morphisms) {
  const auto& c = source;
  const auto& d = target;
  if (objects.size() != c.object_count() || morphisms.size() != c.morphism_count()) {
    throw Error(ErrorKind::missing_image, "functor maps are not total on the source");
  }
  for (ObjectId x : objects) {
    if (x >= d.object_count()) throw Error(ErrorKind::unknown_object, "object image out of range");
  }
  for (MorphismId m : morphisms) {
    if (m >= d.morphism_count()) throw Error(ErrorKind::unknown_morphism, "morphism image out of range");
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    const MorphismId ff = morphisms[f];
    if (d.src(ff) != objects[c.src(f)] || d.tgt(ff) != objects[c.tgt(f)]) {
      throw Error(ErrorKind::endpoint_mismatch,
                  "image of " + c.morphism_name(f) + " has the wrong endpoints",
                  {{"morphism", c.morphism_name(f)}, {"image", d.morphism_name(ff)}});
    }
  }
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    if (morphisms[c.identity(x)] != d.identity(objects[x])) {
      throw Error(ErrorKind::identity_not_preserved,
                  "identity of " + c.object_name(x) + " is not sent to an identity",
                  {{"object", c.object_name(x)}, {"image", d.morphism_name(morphisms[c.identity(x)])}});
    }
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      for (MorphismId g : c.hom(c.tgt(f), z)) {
        const MorphismId lhs = morphisms[c.compose(g, f)];
        const MorphismId rhs = d.compose(morphisms[g], morphisms[f]);
        if (lhs != rhs) {
          throw Error(ErrorKind::composition_not_preserved,
                      "F(" + c.morphism_name(g) + "∘" + c.morphism_name(f) + ") != F" +
                          c.morphism_name(g) + "∘F" + c.morphism_name(f),
                      {{"first", c.morphism_name(f)},
                       {"then", c.morphism_name(g)},
                       {"image_of_composite", d.morphism_name(lhs)},
                       {"composite_of_images", d.morphism_name(rhs)}});
        }
      }
    }
  }
  return functor_unchecked(std::move(source), std::move(target), std::move(objects), std::move(morphisms));
}

FinFunctor validate_functor(const FinCategory& source, const FinCategory& target, const RawFunctor& raw) {
  for (const auto& [k, v] : raw.objects) source.object(k);
  for (const auto& [k, v] : raw.morphisms) source.morphism(k);
  std::vector<ObjectId> objects;
  for (const auto& name : source.object_names()) {
    auto it = raw.objects.find(name);
    if (it == raw.objects.end()) {
      throw Error(ErrorKind::missing_image, "object " + name + " has no image", {{"object", name}});
    }
    objects.push_back(target.object(it->second));
  }
  std::vector<MorphismId> morphisms;
  for (const auto& name : source.morphism_names()) {
    auto it = raw.morphisms.find(name);
    if (it == raw.morphisms.end()) {
      throw Error(ErrorKind::missing_image, "morphism " + name + " has no image", {{"morphism", name}});
    }
    morphisms.push_back(target.morphism(it->second));
  }
  return make_functor(source, target, std::move(objects), std::move(morphisms));
}

FinFunctor identity_functor(const FinCategory& c) {
  std::vector<ObjectId> objects(c.object_count());
  std::vector<MorphismId> morphisms(c.morphism_count());
  for (std::size_t i = 0; i < objects.size(); ++i) objects[i] = i;
  for (std::size_t i = 0; i < morphisms.size(); ++i) morphisms[i] = i;
  return functor_unchecked(c, c, std::move(objects), std::move(morphisms));
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (!(f.target() == g.source())) {
    throw Error(ErrorKind::shape_mismatch, "functors are not composable");
  }
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
  for (ObjectId x : f.object_map()) objects.push_back(g.on_object(x));
  for (MorphismId m : f.morphism_map()) morphisms.push_back(g.on_morphism(m));
  return functor_unchecked(f.source(), g.target(), std::move(objects), std::move(morphisms));
}

FinFunctor opposite(const FinFunctor& f) {
  return functor_unchecked(opposite(f.source()), opposite(f.target()), f.object_map(), f.morphism_map());
}

std::map<Name, Name> NatTrans::to_raw() const {
  std::map<Name, Name> raw;
  const auto& c = source_.source();
  const auto& d = source_.target();
  for (ObjectId x = 0; x < components_.size(); ++x) raw[c.object_name(x)] = d.morphism_name(components_[x]);
  return raw;
}

NatTrans nat_unchecked(FinFunctor f, FinFunctor g, std::vector<MorphismId> components) {
  NatTrans a;
  a.source_ = std::move(f);
  a.target_ = std::move(g);
  a.components_ = std::move(components);
  return a;
}

NatTrans make_nat(FinFunctor f, FinFunctor g, std::vector<MorphismId> components) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorKind::shape_mismatch, "functors of a transformation must be parallel");
  }
  const auto& c = f.source();
  const auto& d = f.target();
  if (components.size() != c.object_count()) {
    throw Error(ErrorKind::missing_image, "transformation is not total on objects");
  }
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    const MorphismId a = components[x];
    if (a >= d.morphism_count() || d.src(a) != f.on_object(x) || d.tgt(a) != g.on_object(x)) {
      throw Error(ErrorKind::endpoint_mismatch,
                  "component at " + c.object_name(x) + " has the wrong endpoints",
                  {{"object", c.object_name(x)}});
    }
  }
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const MorphismId lhs = d.compose(g.on_morphism(m), components[c.src(m)]);
    const MorphismId rhs = d.compose(components[c.tgt(m)], f.on_morphism(m));
    if (lhs != rhs) {
      throw Error(ErrorKind::naturality_square_fails,
                  "naturality square at " + c.morphism_name(m) + " does not commute",
                  {{"morphism", c.morphism_name(m)},
                   {"G(m)∘a", d.morphism_name(lhs)},
                   {"a∘F(m)", d.morphism_name(rhs)}});
    }
  }
  return nat_unchecked(std::move(f), std::move(g), std::move(components));
}

NatTrans validate_nat(const FinFunctor& f, const FinFunctor& g, const std::map<Name, Name>& components) {
  const auto& c = f.source();
  for (const auto& [k, v] : components) c.object(k);
  std::vector<MorphismId> comps;
  for (const auto& name : c.object_names()) {
    auto it = components.find(name);
    if (it == components.end()) {
      throw Error(ErrorKind::missing_image, "no component at " + name, {{"object", name}});
    }
    comps.push_back(f.target().morphism(it->second));
  }
  return make_nat(f, g, std::move(comps));
}

NatTrans identity_nat(const FinFunctor& f) {
  std::vector<MorphismId> comps;
  for (ObjectId x : f.object_map()) comps.push_back(f.target().identity(x));
  return nat_unchecked(f, f, std::move(comps));
}

NatTrans vertical_compose(const NatTrans& beta, const NatTrans& alpha) {
  if (!(alpha.target() == beta.source())) {
    throw Error(ErrorKind::shape_mismatch, "vertical composition needs target(α) = source(β)");
  }
  const auto& d = alpha.source().target();
  std::vector<MorphismId> comps;
  for (ObjectId x = 0; x < alpha.components().size(); ++x) {
    comps.push_back(d.compose(beta.component(x), alpha.component(x)));
  }
  return nat_unchecked(alpha.source(), beta.target(), std::move(comps));
}

NatTrans whisker(const NatTrans& beta, const FinFunctor& f) {
  if (!(f.target() == beta.source().source())) {
    throw Error(ErrorKind::shape_mismatch, "whiskering needs the functor to land in the transformation's domain");
  }
  std::vector<MorphismId> comps;
  for (ObjectId x : f.object_map()) comps.push_back(beta.component(x));
  return nat_unchecked(compose(beta.source(), f), compose(beta.target(), f), std::move(comps));
}

NatTrans whisker(const FinFunctor& h, const NatTrans& alpha) {
  if (!(alpha.source().target() == h.source())) {
    throw Error(ErrorKind::shape_mismatch, "whiskering needs the transformation to land in the functor's domain");
  }
  std::vector<MorphismId> comps;
  for (MorphismId a : alpha.components()) comps.push_back(h.on_morphism(a));
  return nat_unchecked(compose(h, alpha.source()), compose(h, alpha.target()), std::move(comps));
}

NatTrans horizontal_compose(const NatTrans& beta, const NatTrans& alpha) {
  if (!(alpha.source().target() == beta.source().source())) {
    throw Error(ErrorKind::shape_mismatch, "horizontal composition needs matching middle category");
  }
  return vertical_compose(whisker(beta, alpha.target()), whisker(beta.source(), alpha));
}

bool is_natural_iso(const NatTrans& alpha) {
  const auto& d = alpha.source().target();
  return std::all_of(alpha.components().begin(), alpha.components().end(),
                     [&](MorphismId a) { return is_iso(d, a); });
}

namespace {

// Backtracking over component families. `accept` filters candidates;
// `visit` returns false to stop.
void search_nats(const FinFunctor& f, const FinFunctor& g,
                 const std::function<bool(MorphismId)>& accept,
                 const std::function<bool(const std::vector<MorphismId>&)>& visit) {
  const auto& c = f.source();
  const auto& d = f.target();
  const std::size_t n = c.object_count();
  // Squares are checked once both endpoints of the morphism are assigned.
  std::vector<std::vector<MorphismId>> checks(n);
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    checks[std::max(c.src(m), c.tgt(m))].push_back(m);
  }
  std::vector<MorphismId> comps(n, npos);
  bool stop = false;
  std::function<void(ObjectId)> step = [&](ObjectId x) {
    if (stop) return;
    if (x == n) {
      if (!visit(comps)) stop = true;
      return;
    }
    for (MorphismId a : d.hom(f.on_object(x), g.on_object(x))) {
      if (!accept(a)) continue;
      comps[x] = a;
      bool ok = true;
      for (MorphismId m : checks[x]) {
        if (d.compose(g.on_morphism(m), comps[c.src(m)]) != d.compose(comps[c.tgt(m)], f.on_morphism(m))) {
          ok = false;
          break;
        }
      }
      if (ok) step(x + 1);
      if (stop) return;
    }
    comps[x] = npos;
  };
  step(0);
}

}  // namespace

std::vector<NatTrans> enumerate_nats(const FinFunctor& f, const FinFunctor& g, std::uint64_t budget) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorKind::shape_mismatch, "functors must be parallel");
  }
  std::uint64_t estimate = 1;
  for (ObjectId x = 0; x < f.source().object_count(); ++x) {
    estimate = saturating_mul(estimate, f.target().hom(f.on_object(x), g.on_object(x)).size());
  }
  require_budget(estimate, budget, "natural transformation enumeration");
  std::vector<NatTrans> out;
  search_nats(f, g, [](MorphismId) { return true; }, [&](const std::vector<MorphismId>& comps) {
    out.push_back(nat_unchecked(f, g, comps));
    return true;
  });
  return out;
}

std::optional<NatTrans> find_natural_iso(const FinFunctor& f, const FinFunctor& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorKind::shape_mismatch, "functors must be parallel");
  }
  std::optional<NatTrans> found;
  const auto& d = f.target();
  search_nats(f, g, [&](MorphismId a) { return is_iso(d, a); }, [&](const std::vector<MorphismId>& comps) {
    found = nat_unchecked(f, g, comps);
    return false;
  });
  return found;
}

FunctorClass classify_functor(const FinFunctor& f) {
  FunctorClass k;
  const auto& c = f.source();
  const auto& d = f.target();
  k.faithful = true;
  k.full = true;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      std::set<MorphismId> image;
      for (MorphismId m : c.hom(x, y)) {
        if (!image.insert(f.on_morphism(m)).second) k.faithful = false;
      }
      if (image.size() != d.hom(f.on_object(x), f.on_object(y)).size()) k.full = false;
    }
  }
  k.fully_faithful = k.faithful && k.full;
  k.essentially_surjective = true;
  for (ObjectId e = 0; e < d.object_count() && k.essentially_surjective; ++e) {
    bool reached = false;
    for (ObjectId x = 0; x < c.object_count() && !reached; ++x) {
      for (MorphismId m : d.hom(f.on_object(x), e)) {
        if (is_iso(d, m)) {
          reached = true;
          break;
        }
      }
    }
    k.essentially_surjective = reached;
  }
  if (k.fully_faithful && k.essentially_surjective) k.equivalence = check_equivalence(f);
  return k;
}

std::optional<EquivalenceWitness> check_equivalence(const FinFunctor& f) {
  const auto& c = f.source();
  const auto& d = f.target();

  // Choice of φ_e : F(G e) → e. Objects already in the image get the
  // identity; otherwise the first iso in canonical order.
  std::vector<ObjectId> g_obj(d.object_count(), npos);
  std::vector<MorphismId> phi(d.object_count(), npos);
  for (ObjectId e = 0; e < d.object_count(); ++e) {
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      if (f.on_object(x) == e) {
        g_obj[e] = x;
        phi[e] = d.identity(e);
        break;
      }
    }
    for (ObjectId x = 0; x < c.object_count() && phi[e] == npos; ++x) {
      for (MorphismId m : d.hom(f.on_object(x), e)) {
        if (is_iso(d, m)) {
          g_obj[e] = x;
          phi[e] = m;
          break;
        }
      }
    }
    if (phi[e] == npos) return std::nullopt;
  }

  // Unique preimage under F in Hom(x, y), if F is fully faithful there.
  auto lift = [&](ObjectId x, ObjectId y, MorphismId target) -> std::optional<MorphismId> {
    std::optional<MorphismId> found;
    for (MorphismId m : c.hom(x, y)) {
      if (f.on_morphism(m) == target) {
        if (found) return std::nullopt;
        found = m;
      }
    }
    return found;
  };
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      if (c.hom(x, y).size() != d.hom(f.on_object(x), f.on_object(y)).size()) return std::nullopt;
    }
  }

  std::vector<MorphismId> g_mor(d.morphism_count());
  for (MorphismId m = 0; m < d.morphism_count(); ++m) {
    const ObjectId s = d.src(m);
    const ObjectId t = d.tgt(m);
    const MorphismId conj = d.compose(*inverse_of(d, phi[t]), d.compose(m, phi[s]));
    auto pre = lift(g_obj[s], g_obj[t], conj);
    if (!pre) return std::nullopt;
    g_mor[m] = *pre;
  }
  FinFunctor g = make_functor(d, c, g_obj, g_mor);

  std::vector<MorphismId> unit(c.object_count());
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    auto pre = lift(x, g_obj[f.on_object(x)], *inverse_of(d, phi[f.on_object(x)]));
    if (!pre) return std::nullopt;
    unit[x] = *pre;
  }
  NatTrans eta = make_nat(identity_functor(c), compose(g, f), unit);
  NatTrans eps = make_nat(compose(f, g), identity_functor(d), phi);
  if (!is_natural_iso(eta) || !is_natural_iso(eps)) return std::nullopt;
  return EquivalenceWitness{std::move(g), std::move(eta), std::move(eps)};
}

std::vector<FinFunctor> enumerate_functors(const FinCategory& c, const FinCategory& d, std::uint64_t budget) {
  const std::uint64_t estimate = saturating_mul(saturating_pow(d.object_count(), c.object_count()),
                                                saturating_pow(d.morphism_count(), c.morphism_count()));
  require_budget(estimate, budget, "functor enumeration");

  const std::size_t n = c.object_count();
  const std::size_t m = c.morphism_count();
  // Composable pairs (f, g) are checked when the last of f, g, g∘f is assigned.
  std::vector<std::vector<std::pair<MorphismId, MorphismId>>> checks(m);
  for (MorphismId f = 0; f < m; ++f) {
    for (ObjectId z = 0; z < n; ++z) {
      for (MorphismId g : c.hom(c.tgt(f), z)) {
        checks[std::max({f, g, c.compose(g, f)})].emplace_back(f, g);
      }
    }
  }

  std::vector<FinFunctor> out;
  std::vector<ObjectId> objs(n, npos);
  std::vector<MorphismId> mors(m, npos);

  std::function<void(MorphismId)> assign_morphism = [&](MorphismId k) {
    if (k == m) {
      out.push_back(functor_unchecked(c, d, objs, mors));
      return;
    }
    auto consistent = [&]() {
      for (auto [f, g] : checks[k]) {
        if (mors[c.compose(g, f)] != d.compose(mors[g], mors[f])) return false;
      }
      return true;
    };
    if (c.is_identity(k)) {
      mors[k] = d.identity(objs[c.src(k)]);
      if (consistent()) assign_morphism(k + 1);
      return;
    }
    for (MorphismId cand : d.hom(objs[c.src(k)], objs[c.tgt(k)])) {
      mors[k] = cand;
      if (consistent()) assign_morphism(k + 1);
    }
    mors[k] = npos;
  };
  std::function<void(ObjectId)> assign_object = [&](ObjectId x) {
    if (x == n) {
      assign_morphism(0);
      return;
    }
    for (ObjectId y = 0; y < d.object_count(); ++y) {
      objs[x] = y;
      assign_object(x + 1);
    }
  };
  assign_object(0);
  return out;
}

Name functor_label(const FinFunctor& f) {
  const auto& d = f.target();
  Name s = "<";
  for (std::size_t i = 0; i < f.object_map().size(); ++i) {
    if (i) s += ",";
    s += d.object_name(f.object_map()[i]);
  }
  s += "|";
  bool first = true;
  for (MorphismId m = 0; m < f.morphism_map().size(); ++m) {
    if (f.source().is_identity(m)) continue;
    if (!first) s += ",";
    first = false;
    s += d.morphism_name(f.on_morphism(m));
  }
  return s + ">";
}

FunctorCategory functor_category(const FinCategory& c, const FinCategory& d, std::uint64_t budget) {
  FunctorCategory out;
  std::vector<FinFunctor> functors = enumerate_functors(c, d, budget);
  std::vector<Name> labels;
  for (const auto& f : functors) labels.push_back(functor_label(f));

  RawCategory raw;
  raw.objects = labels;
  std::vector<NatTrans> nats;
  std::vector<Name> nat_names;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<MorphismId>>, Name> by_data;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < functors.size(); ++i) {
    for (std::size_t j = 0; j < functors.size(); ++j) {
      for (auto& a : enumerate_nats(functors[i], functors[j], budget)) {
        Name name = labels[i] + "=>" + labels[j] + ":[";
        for (std::size_t k = 0; k < a.components().size(); ++k) {
          if (k) name += ",";
          name += d.morphism_name(a.component(k));
        }
        name += "]";
        raw.morphisms.push_back({name, labels[i], labels[j]});
        if (i == j && a == identity_nat(functors[i])) raw.identities[labels[i]] = name;
        by_data[{i, j, a.components()}] = name;
        nat_names.push_back(name);
        ends.emplace_back(i, j);
        nats.push_back(std::move(a));
      }
    }
  }
  for (std::size_t p = 0; p < nats.size(); ++p) {
    for (std::size_t q = 0; q < nats.size(); ++q) {
      if (ends[p].second != ends[q].first) continue;
      NatTrans comp = vertical_compose(nats[q], nats[p]);
      raw.compose.push_back({nat_names[p], nat_names[q], by_data.at({ends[p].first, ends[q].second, comp.components()})});
    }
  }
  out.category = validate_category(raw);
  // Re-index to the category's canonical order.
  for (const auto& name : out.category.object_names()) {
    out.functors.push_back(functors[std::find(labels.begin(), labels.end(), name) - labels.begin()]);
  }
  for (const auto& name : out.category.morphism_names()) {
    out.transformations.push_back(nats[std::find(nat_names.begin(), nat_names.end(), name) - nat_names.begin()]);
  }
  return out;
}

}  // namespace fincat
