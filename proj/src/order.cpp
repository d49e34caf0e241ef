#include "fincat/order.hpp"

#include <algorithm>

namespace fincat {

namespace {

std::vector<std::vector<bool>> relation(const std::vector<Name>& elements,
                                        const std::vector<std::pair<Name, Name>>& leq) {
  std::vector<std::vector<bool>> r(elements.size(), std::vector<bool>(elements.size(), false));
  auto index = [&](const Name& n) {
    auto it = std::lower_bound(elements.begin(), elements.end(), n);
    if (it == elements.end() || *it != n) {
      throw Error(ErrorKind::unknown_object, "unknown element " + n, {{"element", n}});
    }
    return static_cast<std::size_t>(it - elements.begin());
  };
  for (const auto& [a, b] : leq) r[index(a)][index(b)] = true;
  return r;
}

std::vector<Name> sorted_unique(std::vector<Name> elements) {
  std::sort(elements.begin(), elements.end());
  if (auto it = std::adjacent_find(elements.begin(), elements.end()); it != elements.end()) {
    throw Error(ErrorKind::duplicate_name, "duplicate element " + *it, {{"element", *it}});
  }
  return elements;
}

}  // namespace

FinPreorder::FinPreorder(std::vector<Name> elements, const std::vector<std::pair<Name, Name>>& leq)
    : elements_(sorted_unique(std::move(elements))) {
  leq_ = relation(elements_, leq);
  const std::size_t n = elements_.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) {
      throw Error(ErrorKind::not_reflexive, elements_[a] + " is not below itself", {{"element", elements_[a]}});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq_[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[b][c] && !leq_[a][c]) {
          throw Error(ErrorKind::not_transitive, elements_[a] + " <= " + elements_[b] + " <= " + elements_[c],
                      {{"triple", {elements_[a], elements_[b], elements_[c]}}});
        }
      }
    }
  }
}

FinPreorder FinPreorder::generated(std::vector<Name> elements, const std::vector<std::pair<Name, Name>>& leq) {
  elements = sorted_unique(std::move(elements));
  auto r = relation(elements, leq);
  const std::size_t n = elements.size();
  for (std::size_t a = 0; a < n; ++a) r[a][a] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (r[a][k] && r[k][b]) r[a][b] = true;
      }
    }
  }
  std::vector<std::pair<Name, Name>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (r[a][b]) pairs.emplace_back(elements[a], elements[b]);
    }
  }
  return FinPreorder(std::move(elements), pairs);
}

std::size_t FinPreorder::index_of(std::string_view name) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), name);
  if (it == elements_.end() || *it != name) {
    throw Error(ErrorKind::unknown_object, "unknown element " + std::string(name), {{"element", std::string(name)}});
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FinPreorder::is_poset() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (equivalent(a, b)) return false;
    }
  }
  return true;
}

std::vector<std::pair<Name, Name>> FinPreorder::pairs() const {
  std::vector<std::pair<Name, Name>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (leq_[a][b]) out.emplace_back(elements_[a], elements_[b]);
    }
  }
  return out;
}

nlohmann::json monotonicity_failure(const FinPreorder& source, const FinPreorder& target,
                                    const std::vector<std::size_t>& images) {
  if (images.size() != source.size()) return {{"reason", "map is not total"}};
  for (std::size_t i : images) {
    if (i >= target.size()) return {{"reason", "image outside the target"}};
  }
  for (std::size_t a = 0; a < source.size(); ++a) {
    for (std::size_t b = 0; b < source.size(); ++b) {
      if (source.leq(a, b) && !target.leq(images[a], images[b])) {
        return {{"reason", "order not preserved"},
                {"pair", {source.element(a), source.element(b)}},
                {"images", {target.element(images[a]), target.element(images[b])}}};
      }
    }
  }
  return nullptr;
}

MonotoneMap make_monotone(FinPreorder source, FinPreorder target, std::vector<std::size_t> images) {
  if (auto w = monotonicity_failure(source, target, images); !w.is_null()) {
    throw Error(ErrorKind::not_monotone, w.value("reason", std::string("not monotone")), w);
  }
  return MonotoneMap{std::move(source), std::move(target), std::move(images)};
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.target == g.source)) throw Error(ErrorKind::endpoint_mismatch, "monotone maps do not meet");
  std::vector<std::size_t> images;
  for (std::size_t i : f.images) images.push_back(g.images[i]);
  return MonotoneMap{f.source, g.target, std::move(images)};
}

MonotoneMap identity_monotone(const FinPreorder& p) {
  std::vector<std::size_t> images(p.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return MonotoneMap{p, p, std::move(images)};
}

FinCategory as_thin_category(const FinPreorder& p) {
  auto arrow = [&](std::size_t a, std::size_t b) { return p.element(a) + "<=" + p.element(b); };
  RawCategory raw;
  raw.objects = p.elements();
  for (std::size_t a = 0; a < p.size(); ++a) {
    raw.identities[p.element(a)] = arrow(a, a);
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      raw.morphisms.push_back({arrow(a, b), p.element(a), p.element(b)});
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (p.leq(b, c)) raw.compose.push_back({arrow(a, b), arrow(b, c), arrow(a, c)});
      }
    }
  }
  return assemble_category(raw, false);
}

FinFunctor thin_functor(const MonotoneMap& f, const FinCategory& source, const FinCategory& target) {
  std::vector<ObjectId> objects;
  for (std::size_t a = 0; a < f.source.size(); ++a) objects.push_back(target.object(f.target.element(f.images[a])));
  std::vector<MorphismId> morphisms;
  for (MorphismId m = 0; m < source.morphism_count(); ++m) {
    morphisms.push_back(target.hom(objects[source.src(m)], objects[source.tgt(m)]).at(0));
  }
  return make_functor(source, target, std::move(objects), std::move(morphisms));
}

namespace {

std::optional<Bound> extremal_bound(const FinPreorder& p, const std::vector<std::size_t>& subset, bool lower) {
  auto below = [&](std::size_t a, std::size_t b) { return lower ? p.leq(a, b) : p.leq(b, a); };
  std::vector<std::size_t> bounds;
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (std::all_of(subset.begin(), subset.end(), [&](std::size_t s) { return below(l, s); })) bounds.push_back(l);
  }
  std::vector<std::size_t> best;
  for (std::size_t g : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](std::size_t l) { return below(l, g); })) best.push_back(g);
  }
  if (best.empty()) return std::nullopt;
  return Bound{best.front(), best.size() > 1};
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::uint64_t budget) {
  if (n >= 63 || (std::uint64_t{1} << n) > budget) {
    throw Error(ErrorKind::budget_exceeded, "subset enumeration exceeds budget", {{"size", n}, {"budget", budget}});
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

nlohmann::json names_of(const FinPreorder& p, const std::vector<std::size_t>& subset) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i : subset) j.push_back(p.element(i));
  return j;
}

Verdict preserves_bounds(const MonotoneMap& g, bool meets, std::uint64_t budget) {
  Verdict v(meets ? "preserves_meets" : "preserves_joins");
  for (const auto& s : all_subsets(g.source.size(), budget)) {
    auto b = extremal_bound(g.source, s, meets);
    if (!b) continue;
    v.count("subsets");
    std::vector<std::size_t> image;
    for (std::size_t i : s) image.push_back(g.images[i]);
    auto target_bound = extremal_bound(g.target, image, meets);
    if (!target_bound || !g.target.equivalent(target_bound->element, g.images[b->element])) {
      v.fail({{"subset", names_of(g.source, s)},
              {meets ? "meet" : "join", g.source.element(b->element)},
              {"image", g.target.element(g.images[b->element])},
              {meets ? "image_meet" : "image_join",
               target_bound ? nlohmann::json(g.target.element(target_bound->element)) : nlohmann::json(nullptr)}});
    }
  }
  return v;
}

}  // namespace

std::optional<Bound> meet(const FinPreorder& p, const std::vector<std::size_t>& subset) {
  return extremal_bound(p, subset, true);
}

std::optional<Bound> join(const FinPreorder& p, const std::vector<std::size_t>& subset) {
  return extremal_bound(p, subset, false);
}

Verdict preserves_meets(const MonotoneMap& g, std::uint64_t budget) { return preserves_bounds(g, true, budget); }
Verdict preserves_joins(const MonotoneMap& f, std::uint64_t budget) { return preserves_bounds(f, false, budget); }

AftResult aft_lower_adjoint(const MonotoneMap& g, std::uint64_t budget) {
  if (auto w = monotonicity_failure(g.source, g.target, g.images); !w.is_null()) {
    throw Error(ErrorKind::not_monotone, "upper map is not monotone", w);
  }
  const FinPreorder& y = g.source;
  const FinPreorder& x = g.target;
  AftResult out;
  const auto subsets = all_subsets(y.size(), budget);
  const bool all_meets = std::all_of(subsets.begin(), subsets.end(),
                                     [&](const auto& s) { return meet(y, s).has_value(); });
  if (all_meets) {
    out.method = "meets";
    Verdict pres = preserves_meets(g, budget);
    if (!pres.holds()) {
      out.witness = pres.witness;
      return out;
    }
  } else {
    out.method = "pointwise";
  }
  std::vector<std::size_t> images;
  for (std::size_t a = 0; a < x.size(); ++a) {
    std::vector<std::size_t> above;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (x.leq(a, g.images[b])) above.push_back(b);
    }
    auto m = meet(y, above);
    // The infimum must itself lie in the set for the formula to define an adjoint.
    if (!m || !x.leq(a, g.images[m->element])) {
      out.witness = {{"element", x.element(a)},
                     {"subset", names_of(y, above)},
                     {"reason", m ? "infimum is not above the element" : "no infimum"}};
      return out;
    }
    images.push_back(m->element);
  }
  out.lower = make_monotone(x, y, std::move(images));
  return out;
}

Verdict validate_galois(const MonotoneMap& f, const MonotoneMap& g) {
  Verdict v("galois");
  if (!(f.target == g.source) || !(g.target == f.source)) {
    throw Error(ErrorKind::endpoint_mismatch, "maps do not form a pair X → Y → X");
  }
  const auto& x = f.source;
  const auto& y = f.target;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      v.count("pairs");
      bool lower_side = y.leq(f.images[a], b);
      bool upper_side = x.leq(a, g.images[b]);
      if (lower_side != upper_side) {
        v.fail({{"x", x.element(a)}, {"y", y.element(b)}, {"f(x)<=y", lower_side}, {"x<=g(y)", upper_side}});
      }
    }
  }
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x.leq(a, g.images[f.images[a]])) v.count("unit_holds");
  }
  for (std::size_t b = 0; b < y.size(); ++b) {
    if (y.leq(f.images[g.images[b]], b)) v.count("counit_holds");
  }
  return v;
}

MonotoneMap closure_from_galois(const MonotoneMap& f, const MonotoneMap& g) { return compose(g, f); }

Verdict check_closure_operator(const FinPreorder& p, const std::vector<std::size_t>& t) {
  Verdict v("closure_operator");
  if (t.size() != p.size()) throw Error(ErrorKind::not_a_function, "closure map is not total");
  if (auto w = monotonicity_failure(p, p, t); !w.is_null()) {
    w["property"] = "monotone";
    v.fail(std::move(w));
  }
  for (std::size_t a = 0; a < p.size(); ++a) {
    v.count("elements");
    if (!p.leq(a, t[a])) {
      v.fail({{"property", "extensive"}, {"element", p.element(a)}, {"image", p.element(t[a])}});
    }
    if (t[t[a]] != t[a]) {
      v.fail({{"property", "idempotent"}, {"element", p.element(a)}, {"image", p.element(t[a])},
              {"image_of_image", p.element(t[t[a]])}});
    }
  }
  return v;
}

std::pair<FinPreorder, std::vector<std::size_t>> closed_elements(const FinPreorder& p,
                                                                 const std::vector<std::size_t>& t) {
  std::vector<std::size_t> fixed;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (t.at(a) == a) fixed.push_back(a);
  }
  std::vector<Name> names;
  std::vector<std::pair<Name, Name>> pairs;
  for (std::size_t a : fixed) {
    names.push_back(p.element(a));
    for (std::size_t b : fixed) {
      if (p.leq(a, b)) pairs.emplace_back(p.element(a), p.element(b));
    }
  }
  return {FinPreorder(std::move(names), pairs), std::move(fixed)};
}

}  // namespace fincat
