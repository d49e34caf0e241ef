#include "fincat/universal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>

namespace fincat {

namespace {

nlohmann::json path_names(const FinCategory& shape, const std::vector<MorphismId>& path) {
  nlohmann::json j = nlohmann::json::array();
  for (MorphismId m : path) j.push_back(shape.morphism_name(m));
  return j;
}

std::uint64_t cone_estimate(const Diagram& d) {
  const auto& a = d.ambient();
  std::uint64_t total = 0;
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    std::uint64_t per = 1;
    for (ObjectId i = 0; i < d.shape().object_count(); ++i) {
      per = saturating_mul(per, a.hom(x, d.body.on_object(i)).size());
    }
    total = saturating_add(total, per);
  }
  return total;
}

void require_cone_budget(const Diagram& d, std::uint64_t budget) {
  const auto estimate = cone_estimate(d);
  if (estimate > budget) {
    throw Error(ErrorKind::budget_exceeded,
                "cone enumeration: estimated " + std::to_string(estimate) + " candidates exceeds budget",
                {{"estimate", estimate}, {"budget", budget}});
  }
}

using ConeIndex = std::map<std::vector<MorphismId>, std::size_t>;

struct ConeTable {
  std::vector<std::vector<Cone>> by_tip;
  std::vector<ConeIndex> index;
};

ConeTable all_cones(const Diagram& d) {
  ConeTable t;
  for (ObjectId x = 0; x < d.ambient().object_count(); ++x) {
    t.by_tip.push_back(enumerate_cones(d, x));
    ConeIndex idx;
    for (std::size_t k = 0; k < t.by_tip.back().size(); ++k) idx.emplace(t.by_tip.back()[k].legs, k);
    t.index.push_back(std::move(idx));
  }
  return t;
}

// Null when `cone` is terminal, otherwise a witness cone.
nlohmann::json terminal_failure(const Diagram& d, const ConeTable& table, const Cone& cone,
                                std::uint64_t& checked) {
  const auto& a = d.ambient();
  const std::size_t n = d.shape().object_count();
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    std::vector<std::vector<MorphismId>> mediators(table.by_tip[x].size());
    for (MorphismId f : a.hom(x, cone.tip)) {
      std::vector<MorphismId> legs(n);
      for (ObjectId i = 0; i < n; ++i) legs[i] = a.compose(cone.legs[i], f);
      mediators[table.index[x].at(legs)].push_back(f);
    }
    for (std::size_t k = 0; k < mediators.size(); ++k) {
      ++checked;
      if (mediators[k].size() != 1) {
        nlohmann::json meds = nlohmann::json::array();
        for (MorphismId f : mediators[k]) meds.push_back(a.morphism_name(f));
        return {{"cone", to_json(d, table.by_tip[x][k])},
                {"mediators", meds},
                {"reason", mediators[k].empty() ? "no mediating morphism" : "mediating morphism not unique"}};
      }
    }
  }
  return nullptr;
}

}  // namespace

Verdict check_commutes(const Diagram& d) {
  Verdict v("commutes");
  const auto& shape = d.shape();
  const auto& a = d.ambient();
  for (ObjectId start = 0; start < shape.object_count(); ++start) {
    struct Seen {
      MorphismId composite;
      std::vector<MorphismId> path;
    };
    std::vector<std::optional<Seen>> seen(shape.object_count());
    std::deque<std::pair<ObjectId, std::vector<MorphismId>>> queue;
    // Ambient composite along each queued path.
    std::deque<MorphismId> composites;
    auto extend = [&](ObjectId from, MorphismId so_far, const std::vector<MorphismId>& path) {
      for (MorphismId m = 0; m < shape.morphism_count(); ++m) {
        if (shape.src(m) != from || shape.is_identity(m)) continue;
        auto next = path;
        next.push_back(m);
        MorphismId comp = so_far == npos ? d.body.on_morphism(m) : a.compose(d.body.on_morphism(m), so_far);
        queue.emplace_back(shape.tgt(m), std::move(next));
        composites.push_back(comp);
      }
    };
    extend(start, npos, {});
    while (!queue.empty()) {
      auto [at, path] = std::move(queue.front());
      queue.pop_front();
      MorphismId comp = composites.front();
      composites.pop_front();
      v.count("paths");
      if (!seen[at]) {
        seen[at] = Seen{comp, path};
        extend(at, comp, path);
      } else if (seen[at]->composite != comp) {
        v.fail({{"from", shape.object_name(start)},
                {"to", shape.object_name(at)},
                {"path", path_names(shape, seen[at]->path)},
                {"other_path", path_names(shape, path)},
                {"composite", a.morphism_name(seen[at]->composite)},
                {"other_composite", a.morphism_name(comp)}});
        return v;
      }
    }
  }
  return v;
}

bool is_cone(const Diagram& d, const Cone& cone) {
  const auto& shape = d.shape();
  const auto& a = d.ambient();
  if (cone.legs.size() != shape.object_count()) return false;
  for (ObjectId i = 0; i < shape.object_count(); ++i) {
    MorphismId leg = cone.legs[i];
    if (leg >= a.morphism_count() || a.src(leg) != cone.tip || a.tgt(leg) != d.body.on_object(i)) return false;
  }
  for (MorphismId m = 0; m < shape.morphism_count(); ++m) {
    if (a.compose(d.body.on_morphism(m), cone.legs[shape.src(m)]) != cone.legs[shape.tgt(m)]) return false;
  }
  return true;
}

std::vector<Cone> enumerate_cones(const Diagram& d, ObjectId tip) {
  const auto& shape = d.shape();
  const auto& a = d.ambient();
  const std::size_t n = shape.object_count();
  std::vector<std::vector<MorphismId>> checks(n);
  for (MorphismId m = 0; m < shape.morphism_count(); ++m) {
    checks[std::max(shape.src(m), shape.tgt(m))].push_back(m);
  }
  std::vector<Cone> out;
  Cone current{tip, std::vector<MorphismId>(n, npos)};
  std::function<void(ObjectId)> step = [&](ObjectId i) {
    if (i == n) {
      out.push_back(current);
      return;
    }
    for (MorphismId leg : a.hom(tip, d.body.on_object(i))) {
      current.legs[i] = leg;
      bool ok = true;
      for (MorphismId m : checks[i]) {
        if (a.compose(d.body.on_morphism(m), current.legs[shape.src(m)]) != current.legs[shape.tgt(m)]) {
          ok = false;
          break;
        }
      }
      if (ok) step(i + 1);
    }
    current.legs[i] = npos;
  };
  step(0);
  return out;
}

Verdict check_terminal_cone(const Diagram& d, const Cone& cone, std::uint64_t budget) {
  Verdict v("terminal_cone");
  if (!is_cone(d, cone)) {
    v.fail({{"reason", "not a cone"}});
    return v;
  }
  require_cone_budget(d, budget);
  const ConeTable table = all_cones(d);
  std::uint64_t checked = 0;
  auto w = terminal_failure(d, table, cone, checked);
  v.count("cones", checked);
  if (!w.is_null()) v.fail(std::move(w));
  return v;
}

SliceCategory slice_category(const Diagram& d, std::uint64_t budget) {
  require_cone_budget(d, budget);
  const auto& a = d.ambient();
  const std::size_t n = d.shape().object_count();
  std::vector<Cone> cones;
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    for (auto& c : enumerate_cones(d, x)) cones.push_back(std::move(c));
  }
  auto cone_name = [&](const Cone& c) {
    Name s = a.object_name(c.tip) + "[";
    for (std::size_t i = 0; i < c.legs.size(); ++i) {
      if (i) s += ",";
      s += a.morphism_name(c.legs[i]);
    }
    return s + "]";
  };
  RawCategory raw;
  std::vector<Name> names;
  for (const auto& c : cones) names.push_back(cone_name(c));
  raw.objects = names;
  // Morphisms grouped per (source cone, target cone).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<MorphismId>> between;
  auto mor_name = [&](std::size_t p, std::size_t q, MorphismId f) {
    return names[p] + "=>" + names[q] + ":" + a.morphism_name(f);
  };
  for (std::size_t p = 0; p < cones.size(); ++p) {
    for (std::size_t q = 0; q < cones.size(); ++q) {
      for (MorphismId f : a.hom(cones[p].tip, cones[q].tip)) {
        bool ok = true;
        for (ObjectId i = 0; i < n && ok; ++i) ok = a.compose(cones[q].legs[i], f) == cones[p].legs[i];
        if (!ok) continue;
        between[{p, q}].push_back(f);
        raw.morphisms.push_back({mor_name(p, q, f), names[p], names[q]});
      }
    }
    raw.identities[names[p]] = mor_name(p, p, a.identity(cones[p].tip));
  }
  for (const auto& [pq, fs] : between) {
    for (const auto& [qr, gs] : between) {
      if (pq.second != qr.first) continue;
      for (MorphismId f : fs) {
        for (MorphismId g : gs) {
          raw.compose.push_back({mor_name(pq.first, pq.second, f), mor_name(qr.first, qr.second, g),
                                 mor_name(pq.first, qr.second, a.compose(g, f))});
        }
      }
    }
  }
  SliceCategory out;
  out.category = validate_category(raw);
  for (const auto& name : out.category.object_names()) {
    out.cones.push_back(cones[std::find(names.begin(), names.end(), name) - names.begin()]);
  }
  return out;
}

std::optional<Cone> limit_of(const Diagram& d, std::uint64_t budget) {
  require_cone_budget(d, budget);
  const ConeTable table = all_cones(d);
  std::uint64_t checked = 0;
  for (ObjectId x = 0; x < d.ambient().object_count(); ++x) {
    for (const auto& cone : table.by_tip[x]) {
      if (terminal_failure(d, table, cone, checked).is_null()) return cone;
    }
  }
  return std::nullopt;
}

Diagram opposite(const Diagram& d) { return Diagram{opposite(d.body)}; }

std::optional<Cone> colimit_of(const Diagram& d, std::uint64_t budget) {
  return limit_of(opposite(d), budget);
}

Diagram apply(const FinFunctor& f, const Diagram& d) { return Diagram{compose(f, d.body)}; }

Verdict check_preservation(const FinFunctor& f, const Diagram& d, std::uint64_t budget) {
  auto lim = limit_of(d, budget);
  if (!lim) throw Error(ErrorKind::no_limit, "diagram has no limit");
  const Diagram image = apply(f, d);
  Cone mapped{f.on_object(lim->tip), {}};
  for (MorphismId leg : lim->legs) mapped.legs.push_back(f.on_morphism(leg));
  Verdict v = check_terminal_cone(image, mapped, budget);
  v.check = "preservation";
  if (!v.holds()) {
    v.witness["limit"] = to_json(d, *lim);
    v.witness["image_cone"] = to_json(image, mapped);
    if (auto target_lim = limit_of(image, budget)) {
      v.witness["image_limit"] = to_json(image, *target_lim);
    } else {
      v.witness["image_limit"] = nullptr;
    }
  }
  return v;
}

nlohmann::json to_json(const Diagram& d, const Cone& cone) {
  nlohmann::json legs = nlohmann::json::object();
  for (ObjectId i = 0; i < cone.legs.size(); ++i) {
    legs[d.shape().object_name(i)] = d.ambient().morphism_name(cone.legs[i]);
  }
  return {{"tip", d.ambient().object_name(cone.tip)}, {"legs", legs}};
}

}  // namespace fincat
