#include "fincat/core.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace fincat {

struct FinCategory::Data {
  std::vector<Name> objects;
  std::vector<Name> morphisms;
  std::vector<ObjectId> src;
  std::vector<ObjectId> tgt;
  std::vector<MorphismId> identity;
  std::vector<bool> is_identity;
  // Morphisms grouped by source object, each group in canonical order.
  std::vector<std::vector<MorphismId>> out_of;
  std::vector<std::size_t> out_pos;
  // comp[f][out_pos[g]] = g ∘ f, for every g with src(g) = tgt(f).
  std::vector<std::vector<MorphismId>> comp;
  std::vector<std::vector<MorphismId>> homs;
};

namespace {

const std::shared_ptr<const FinCategory::Data>& empty_data() {
  static const auto d = std::make_shared<const FinCategory::Data>();
  return d;
}

std::optional<std::size_t> lookup(const std::vector<Name>& sorted, std::string_view name) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), name,
                             [](const Name& a, std::string_view b) { return a < b; });
  if (it == sorted.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

FinCategory::FinCategory() : d_(empty_data()) {}

std::size_t FinCategory::object_count() const noexcept { return d_->objects.size(); }
std::size_t FinCategory::morphism_count() const noexcept { return d_->morphisms.size(); }
const Name& FinCategory::object_name(ObjectId x) const { return d_->objects.at(x); }
const Name& FinCategory::morphism_name(MorphismId f) const { return d_->morphisms.at(f); }
const std::vector<Name>& FinCategory::object_names() const noexcept { return d_->objects; }
const std::vector<Name>& FinCategory::morphism_names() const noexcept { return d_->morphisms; }
ObjectId FinCategory::src(MorphismId f) const { return d_->src.at(f); }
ObjectId FinCategory::tgt(MorphismId f) const { return d_->tgt.at(f); }
MorphismId FinCategory::identity(ObjectId x) const { return d_->identity.at(x); }
bool FinCategory::is_identity(MorphismId f) const { return d_->is_identity.at(f); }

MorphismId FinCategory::compose(MorphismId g, MorphismId f) const {
  if (d_->tgt.at(f) != d_->src.at(g)) {
    throw Error(ErrorKind::endpoint_mismatch,
                "cannot compose " + d_->morphisms[g] + " after " + d_->morphisms[f],
                {{"first", d_->morphisms[f]}, {"then", d_->morphisms[g]}});
  }
  return d_->comp[f][d_->out_pos[g]];
}

const std::vector<MorphismId>& FinCategory::hom(ObjectId x, ObjectId y) const {
  return d_->homs.at(x * d_->objects.size() + y);
}

std::optional<ObjectId> FinCategory::find_object(std::string_view name) const {
  return lookup(d_->objects, name);
}

std::optional<MorphismId> FinCategory::find_morphism(std::string_view name) const {
  return lookup(d_->morphisms, name);
}

ObjectId FinCategory::object(std::string_view name) const {
  if (auto x = find_object(name)) return *x;
  throw Error(ErrorKind::unknown_object, "no object named " + std::string(name),
              {{"object", std::string(name)}});
}

MorphismId FinCategory::morphism(std::string_view name) const {
  if (auto f = find_morphism(name)) return *f;
  throw Error(ErrorKind::unknown_morphism, "no morphism named " + std::string(name),
              {{"morphism", std::string(name)}});
}

RawCategory FinCategory::to_raw() const {
  RawCategory raw;
  raw.objects = d_->objects;
  for (MorphismId f = 0; f < d_->morphisms.size(); ++f) {
    raw.morphisms.push_back({d_->morphisms[f], d_->objects[d_->src[f]], d_->objects[d_->tgt[f]]});
  }
  for (ObjectId x = 0; x < d_->objects.size(); ++x) {
    raw.identities[d_->objects[x]] = d_->morphisms[d_->identity[x]];
  }
  for (MorphismId f = 0; f < d_->morphisms.size(); ++f) {
    for (MorphismId g : d_->out_of[d_->tgt[f]]) {
      raw.compose.push_back({d_->morphisms[f], d_->morphisms[g], d_->morphisms[compose(g, f)]});
    }
  }
  return raw;
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (a.d_ == b.d_) return true;
  const auto& x = *a.d_;
  const auto& y = *b.d_;
  return x.objects == y.objects && x.morphisms == y.morphisms && x.src == y.src &&
         x.tgt == y.tgt && x.identity == y.identity && x.comp == y.comp;
}

FinCategory assemble_category(const RawCategory& raw, bool check_laws) {
  auto d = std::make_shared<FinCategory::Data>();

  d->objects = raw.objects;
  std::sort(d->objects.begin(), d->objects.end());
  for (std::size_t i = 1; i < d->objects.size(); ++i) {
    if (d->objects[i] == d->objects[i - 1]) {
      throw Error(ErrorKind::duplicate_name, "duplicate object " + d->objects[i],
                  {{"object", d->objects[i]}});
    }
  }
  const std::size_t n = d->objects.size();

  auto resolve_object = [&](const Name& name) {
    auto x = lookup(d->objects, name);
    if (!x) throw Error(ErrorKind::unknown_object, "no object named " + name, {{"object", name}});
    return *x;
  };

  std::vector<const MorphismSpec*> specs;
  for (const auto& m : raw.morphisms) specs.push_back(&m);
  std::sort(specs.begin(), specs.end(),
            [](const MorphismSpec* a, const MorphismSpec* b) { return a->name < b->name; });
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (i > 0 && specs[i]->name == specs[i - 1]->name) {
      throw Error(ErrorKind::duplicate_name, "duplicate morphism " + specs[i]->name,
                  {{"morphism", specs[i]->name}});
    }
    d->morphisms.push_back(specs[i]->name);
    d->src.push_back(resolve_object(specs[i]->src));
    d->tgt.push_back(resolve_object(specs[i]->tgt));
  }
  const std::size_t m = d->morphisms.size();

  auto resolve_morphism = [&](const Name& name) {
    auto f = lookup(d->morphisms, name);
    if (!f) {
      throw Error(ErrorKind::unknown_morphism, "no morphism named " + name, {{"morphism", name}});
    }
    return *f;
  };

  for (const auto& [obj, mor] : raw.identities) resolve_object(obj);
  d->identity.assign(n, npos);
  d->is_identity.assign(m, false);
  for (ObjectId x = 0; x < n; ++x) {
    auto it = raw.identities.find(d->objects[x]);
    if (it == raw.identities.end()) {
      throw Error(ErrorKind::missing_identity, "object " + d->objects[x] + " has no identity",
                  {{"object", d->objects[x]}});
    }
    MorphismId id = resolve_morphism(it->second);
    if (d->src[id] != x || d->tgt[id] != x) {
      throw Error(ErrorKind::endpoint_mismatch,
                  "identity " + it->second + " of " + d->objects[x] + " is not an endomorphism of it",
                  {{"object", d->objects[x]}, {"morphism", it->second}});
    }
    if (d->is_identity[id]) {
      throw Error(ErrorKind::endpoint_mismatch, "morphism " + it->second + " is the identity twice",
                  {{"morphism", it->second}});
    }
    d->identity[x] = id;
    d->is_identity[id] = true;
  }

  d->out_of.assign(n, {});
  d->out_pos.assign(m, 0);
  d->homs.assign(n * n, {});
  for (MorphismId f = 0; f < m; ++f) {
    d->out_pos[f] = d->out_of[d->src[f]].size();
    d->out_of[d->src[f]].push_back(f);
    d->homs[d->src[f] * n + d->tgt[f]].push_back(f);
  }

  d->comp.assign(m, {});
  for (MorphismId f = 0; f < m; ++f) d->comp[f].assign(d->out_of[d->tgt[f]].size(), npos);

  for (const auto& c : raw.compose) {
    MorphismId f = resolve_morphism(c.first);
    MorphismId g = resolve_morphism(c.then);
    MorphismId h = resolve_morphism(c.equals);
    nlohmann::json w = {{"first", c.first}, {"then", c.then}, {"equals", c.equals}};
    if (d->tgt[f] != d->src[g]) {
      throw Error(ErrorKind::endpoint_mismatch,
                  "composite listed for non-composable pair " + c.then + "∘" + c.first, w);
    }
    if (d->src[h] != d->src[f] || d->tgt[h] != d->tgt[g]) {
      throw Error(ErrorKind::endpoint_mismatch,
                  c.then + "∘" + c.first + " = " + c.equals + " has the wrong endpoints", w);
    }
    MorphismId& slot = d->comp[f][d->out_pos[g]];
    if (slot != npos && slot != h) {
      throw Error(ErrorKind::conflicting_composite,
                  c.then + "∘" + c.first + " is given two different values", w);
    }
    slot = h;
  }

  for (MorphismId f = 0; f < m; ++f) {
    for (std::size_t k = 0; k < d->comp[f].size(); ++k) {
      if (d->comp[f][k] == npos) {
        MorphismId g = d->out_of[d->tgt[f]][k];
        throw Error(ErrorKind::missing_composite,
                    "no composite " + d->morphisms[g] + "∘" + d->morphisms[f],
                    {{"first", d->morphisms[f]}, {"then", d->morphisms[g]}});
      }
    }
  }

  if (check_laws) {
    auto comp = [&](MorphismId g, MorphismId f) { return d->comp[f][d->out_pos[g]]; };
    for (MorphismId f = 0; f < m; ++f) {
      MorphismId left = comp(d->identity[d->tgt[f]], f);
      MorphismId right = comp(f, d->identity[d->src[f]]);
      if (left != f || right != f) {
        throw Error(ErrorKind::unitality_violation,
                    "identities are not neutral for " + d->morphisms[f],
                    {{"morphism", d->morphisms[f]},
                     {"id_after", d->morphisms[left]},
                     {"after_id", d->morphisms[right]}});
      }
    }
    for (MorphismId f = 0; f < m; ++f) {
      for (MorphismId g : d->out_of[d->tgt[f]]) {
        const MorphismId gf = comp(g, f);
        for (MorphismId h : d->out_of[d->tgt[g]]) {
          const MorphismId lhs = comp(h, gf);
          const MorphismId rhs = comp(comp(h, g), f);
          if (lhs != rhs) {
            throw Error(ErrorKind::associativity_violation,
                        "h∘(g∘f) != (h∘g)∘f for f=" + d->morphisms[f] + ", g=" + d->morphisms[g] +
                            ", h=" + d->morphisms[h],
                        {{"first", d->morphisms[f]},
                         {"second", d->morphisms[g]},
                         {"third", d->morphisms[h]},
                         {"left", d->morphisms[lhs]},
                         {"right", d->morphisms[rhs]}});
          }
        }
      }
    }
  }

  return FinCategory(std::move(d));
}

FinCategory validate_category(const RawCategory& raw) { return assemble_category(raw, true); }

RawCategory with_unit_composites(RawCategory raw) {
  std::set<std::pair<Name, Name>> present;
  for (const auto& c : raw.compose) present.emplace(c.first, c.then);
  auto add = [&](const Name& first, const Name& then, const Name& equals) {
    if (present.emplace(first, then).second) raw.compose.push_back({first, then, equals});
  };
  for (const auto& mor : raw.morphisms) {
    auto s = raw.identities.find(mor.src);
    auto t = raw.identities.find(mor.tgt);
    if (s != raw.identities.end()) add(s->second, mor.name, mor.name);
    if (t != raw.identities.end()) add(mor.name, t->second, mor.name);
  }
  return raw;
}

FinCategory opposite(const FinCategory& c) {
  RawCategory raw = c.to_raw();
  for (auto& mor : raw.morphisms) std::swap(mor.src, mor.tgt);
  for (auto& comp : raw.compose) std::swap(comp.first, comp.then);
  return assemble_category(raw, false);
}

std::optional<std::size_t> monoid_unit(const MonoidTable& m) {
  const std::size_t n = m.elements.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool unit = true;
    for (std::size_t a = 0; a < n && unit; ++a) {
      unit = m.product[e][a] == a && m.product[a][e] == a;
    }
    if (unit) return e;
  }
  return std::nullopt;
}

nlohmann::json monoid_violation(const MonoidTable& m) {
  const std::size_t n = m.elements.size();
  if (m.product.size() != n) return {{"reason", "table has the wrong number of rows"}};
  for (std::size_t a = 0; a < n; ++a) {
    if (m.product[a].size() != n) return {{"reason", "ragged row"}, {"row", m.elements[a]}};
    for (std::size_t b : m.product[a]) {
      if (b >= n) return {{"reason", "product outside the carrier"}, {"row", m.elements[a]}};
    }
  }
  if (n == 0) return {{"reason", "no unit element"}};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (m.product[m.product[a][b]][c] != m.product[a][m.product[b][c]]) {
          return {{"reason", "not associative"},
                  {"triple", {m.elements[a], m.elements[b], m.elements[c]}}};
        }
      }
    }
  }
  if (!monoid_unit(m)) return {{"reason", "no unit element"}};
  return nullptr;
}

FinCategory delooping(const MonoidTable& m) {
  if (auto w = monoid_violation(m); !w.is_null()) {
    throw Error(ErrorKind::not_a_monoid, w.value("reason", std::string("not a monoid")), w);
  }
  const std::size_t unit = *monoid_unit(m);
  RawCategory raw;
  raw.objects = {"*"};
  for (const auto& e : m.elements) raw.morphisms.push_back({e, "*", "*"});
  raw.identities["*"] = m.elements[unit];
  for (std::size_t f = 0; f < m.elements.size(); ++f) {
    for (std::size_t g = 0; g < m.elements.size(); ++g) {
      raw.compose.push_back({m.elements[f], m.elements[g], m.elements[m.product[g][f]]});
    }
  }
  return assemble_category(raw, false);
}

MorphismClass classify_morphism(const FinCategory& c, MorphismId f) {
  MorphismClass k;
  const ObjectId x = c.src(f);
  const ObjectId y = c.tgt(f);
  const std::size_t n = c.object_count();

  k.mono = true;
  for (ObjectId a = 0; a < n && k.mono; ++a) {
    std::set<MorphismId> seen;
    for (MorphismId u : c.hom(a, x)) {
      if (!seen.insert(c.compose(f, u)).second) {
        k.mono = false;
        break;
      }
    }
  }
  k.epi = true;
  for (ObjectId b = 0; b < n && k.epi; ++b) {
    std::set<MorphismId> seen;
    for (MorphismId u : c.hom(y, b)) {
      if (!seen.insert(c.compose(u, f)).second) {
        k.epi = false;
        break;
      }
    }
  }
  for (MorphismId g : c.hom(y, x)) {
    const bool retracts = c.compose(g, f) == c.identity(x);
    const bool sections = c.compose(f, g) == c.identity(y);
    if (retracts && !k.retraction) k.retraction = g;
    if (sections && !k.section) k.section = g;
    if (retracts && sections && !k.inverse) k.inverse = g;
  }
  k.split_mono = k.retraction.has_value();
  k.split_epi = k.section.has_value();
  k.iso = k.inverse.has_value();
  return k;
}

MorphismClass classify_morphism(const FinCategory& c, std::string_view f) {
  return classify_morphism(c, c.morphism(f));
}

std::optional<MorphismId> inverse_of(const FinCategory& c, MorphismId f) {
  for (MorphismId g : c.hom(c.tgt(f), c.src(f))) {
    if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.tgt(f))) {
      return g;
    }
  }
  return std::nullopt;
}

bool is_iso(const FinCategory& c, MorphismId f) { return inverse_of(c, f).has_value(); }

FinCategory core_groupoid(const FinCategory& c) {
  RawCategory raw;
  raw.objects = c.object_names();
  std::vector<bool> keep(c.morphism_count());
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    keep[f] = is_iso(c, f);
    if (keep[f]) {
      raw.morphisms.push_back({c.morphism_name(f), c.object_name(c.src(f)), c.object_name(c.tgt(f))});
    }
  }
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    raw.identities[c.object_name(x)] = c.morphism_name(c.identity(x));
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    if (!keep[f]) continue;
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      for (MorphismId g : c.hom(c.tgt(f), z)) {
        if (keep[g]) {
          raw.compose.push_back({c.morphism_name(f), c.morphism_name(g), c.morphism_name(c.compose(g, f))});
        }
      }
    }
  }
  return assemble_category(raw, false);
}

nlohmann::json to_json(const FinCategory& c, const MorphismClass& k) {
  auto opt = [&](const std::optional<MorphismId>& m) -> nlohmann::json {
    return m ? nlohmann::json(c.morphism_name(*m)) : nlohmann::json(nullptr);
  };
  return {{"mono", k.mono},           {"epi", k.epi},
          {"iso", k.iso},             {"split_mono", k.split_mono},
          {"split_epi", k.split_epi}, {"inverse", opt(k.inverse)},
          {"retraction", opt(k.retraction)}, {"section", opt(k.section)}};
}

namespace shapes {

namespace {

FinCategory with_identities(const std::vector<Name>& objects, std::vector<MorphismSpec> arrows) {
  RawCategory raw;
  raw.objects = objects;
  for (const auto& x : objects) {
    raw.morphisms.push_back({"id_" + x, x, x});
    raw.identities[x] = "id_" + x;
  }
  for (auto& a : arrows) raw.morphisms.push_back(std::move(a));
  return validate_category(with_unit_composites(std::move(raw)));
}

}  // namespace

FinCategory empty() { return FinCategory(); }
FinCategory terminal() { return with_identities({"*"}, {}); }
FinCategory discrete(const std::vector<Name>& objects) { return with_identities(objects, {}); }
FinCategory walking_arrow() { return with_identities({"A", "B"}, {{"f", "A", "B"}}); }
FinCategory parallel_pair() { return with_identities({"A", "B"}, {{"f", "A", "B"}, {"g", "A", "B"}}); }
FinCategory cospan() { return with_identities({"A", "B", "C"}, {{"f", "A", "C"}, {"g", "B", "C"}}); }
FinCategory span() { return with_identities({"A", "B", "C"}, {{"f", "A", "B"}, {"g", "A", "C"}}); }

}  // namespace shapes

}  // namespace fincat
