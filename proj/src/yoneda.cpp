#include "fincat/yoneda.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fincat {

Presheaf make_presheaf(const FinCategory& base, std::vector<FinSet> sets, std::vector<FinFunction> actions) {
  return Presheaf{base, SetFunctor(opposite(base), std::move(sets), std::move(actions))};
}

Presheaf representable(const FinCategory& c, ObjectId x) {
  if (x >= c.object_count()) throw Error(ErrorKind::unknown_object, "object index out of range");
  std::vector<FinSet> sets;
  for (ObjectId y = 0; y < c.object_count(); ++y) {
    std::vector<Name> els;
    for (MorphismId f : c.hom(y, x)) {
      els.push_back("hom(" + c.object_name(y) + "," + c.object_name(x) + "):" + c.morphism_name(f));
    }
    sets.emplace_back(std::move(els));
  }
  std::vector<FinFunction> actions;
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const auto& from = c.hom(c.tgt(m), x);
    const auto& to = c.hom(c.src(m), x);
    std::vector<std::size_t> images;
    for (MorphismId g : from) {
      MorphismId gm = c.compose(g, m);
      images.push_back(static_cast<std::size_t>(std::find(to.begin(), to.end(), gm) - to.begin()));
    }
    actions.emplace_back(sets[c.tgt(m)], sets[c.src(m)], std::move(images));
  }
  return make_presheaf(c, std::move(sets), std::move(actions));
}

Presheaf constant_presheaf(const FinCategory& c, const FinSet& s) {
  std::vector<FinSet> sets(c.object_count(), s);
  std::vector<FinFunction> actions(c.morphism_count(), FinFunction::identity(s));
  return make_presheaf(c, std::move(sets), std::move(actions));
}

Presheaf coproduct_presheaf(const Presheaf& p, const Presheaf& q) {
  const auto& c = p.base;
  std::vector<FinSet> sets;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    std::vector<Name> els;
    for (const auto& a : p.at(x).elements()) els.push_back("0:" + a);
    for (const auto& b : q.at(x).elements()) els.push_back("1:" + b);
    sets.emplace_back(std::move(els));
  }
  std::vector<FinFunction> actions;
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const std::size_t shift = p.at(c.src(m)).size();
    std::vector<std::size_t> images = p.on(m).images();
    for (std::size_t b : q.on(m).images()) images.push_back(shift + b);
    actions.emplace_back(sets[c.tgt(m)], sets[c.src(m)], std::move(images));
  }
  return make_presheaf(c, std::move(sets), std::move(actions));
}

Presheaf product_presheaf(const Presheaf& p, const Presheaf& q) {
  const auto& c = p.base;
  std::vector<FinSet> sets;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    std::vector<Name> els;
    for (const auto& a : p.at(x).elements()) {
      for (const auto& b : q.at(x).elements()) els.push_back("(" + a + "," + b + ")");
    }
    sets.emplace_back(std::move(els));
  }
  std::vector<FinFunction> actions;
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const std::size_t qs = q.at(c.src(m)).size();
    std::vector<std::size_t> images;
    for (std::size_t a = 0; a < p.at(c.tgt(m)).size(); ++a) {
      for (std::size_t b = 0; b < q.at(c.tgt(m)).size(); ++b) images.push_back(p.on(m)(a) * qs + q.on(m)(b));
    }
    actions.emplace_back(sets[c.tgt(m)], sets[c.src(m)], std::move(images));
  }
  return make_presheaf(c, std::move(sets), std::move(actions));
}

std::uint64_t family_count(const Presheaf& p, const Presheaf& q) {
  std::uint64_t n = 1;
  for (ObjectId x = 0; x < p.base.object_count(); ++x) {
    n = saturating_mul(n, saturating_pow(q.at(x).size(), p.at(x).size()));
  }
  return n;
}

std::vector<SetNat> nat_set(const Presheaf& p, const Presheaf& q, std::uint64_t budget) {
  const auto& c = p.base;
  const auto estimate = family_count(p, q);
  if (estimate > budget) {
    throw Error(ErrorKind::budget_exceeded,
                "natural transformation enumeration: " + std::to_string(estimate) + " families exceeds budget",
                {{"estimate", estimate}, {"budget", budget}});
  }
  const std::size_t n = c.object_count();
  // Squares α_{src m} ∘ P m = Q m ∘ α_{tgt m}, checked once both components exist.
  std::vector<std::vector<MorphismId>> checks(n);
  for (MorphismId m = 0; m < c.morphism_count(); ++m) checks[std::max(c.src(m), c.tgt(m))].push_back(m);

  std::vector<std::vector<std::size_t>> comp(n);
  for (ObjectId x = 0; x < n; ++x) comp[x].assign(p.at(x).size(), 0);
  std::vector<SetNat> out;
  std::function<void(ObjectId, std::size_t)> step = [&](ObjectId x, std::size_t e) {
    if (x == n) {
      SetNat alpha;
      for (ObjectId y = 0; y < n; ++y) alpha.components.emplace_back(p.at(y), q.at(y), comp[y]);
      out.push_back(std::move(alpha));
      return;
    }
    if (e == p.at(x).size()) {
      for (MorphismId m : checks[x]) {
        const ObjectId s = c.src(m);
        const ObjectId t = c.tgt(m);
        for (std::size_t a = 0; a < p.at(t).size(); ++a) {
          if (comp[s][p.on(m)(a)] != q.on(m)(comp[t][a])) return;
        }
      }
      step(x + 1, 0);
      return;
    }
    for (std::size_t v = 0; v < q.at(x).size(); ++v) {
      comp[x][e] = v;
      step(x, e + 1);
    }
  };
  step(0, 0);
  return out;
}

namespace {

std::size_t identity_index(const FinCategory& c, ObjectId x) {
  const auto& h = c.hom(x, x);
  return static_cast<std::size_t>(std::find(h.begin(), h.end(), c.identity(x)) - h.begin());
}

}  // namespace

std::size_t yoneda_forward(const Presheaf& f, ObjectId x, const SetNat& alpha) {
  return alpha.components.at(x)(identity_index(f.base, x));
}

SetNat yoneda_backward(const Presheaf& f, ObjectId x, std::size_t p) {
  const auto& c = f.base;
  const Presheaf yx = representable(c, x);
  SetNat alpha;
  for (ObjectId y = 0; y < c.object_count(); ++y) {
    std::vector<std::size_t> images;
    for (MorphismId g : c.hom(y, x)) images.push_back(f.on(g)(p));
    alpha.components.emplace_back(yx.at(y), f.at(y), std::move(images));
  }
  return alpha;
}

YonedaCorrespondence yoneda_correspondence(const Presheaf& f, ObjectId x, std::uint64_t budget) {
  const auto& c = f.base;
  YonedaCorrespondence out;
  out.verdict = Verdict("yoneda");
  auto& v = out.verdict;
  const Presheaf yx = representable(c, x);
  out.nats = nat_set(yx, f, budget);
  v.count("transformations", out.nats.size());
  v.count("elements", f.at(x).size());
  if (out.nats.size() != f.at(x).size()) {
    v.fail({{"reason", "cardinality mismatch"},
            {"object", c.object_name(x)},
            {"transformations", out.nats.size()},
            {"elements", f.at(x).size()}});
  }
  for (const auto& alpha : out.nats) out.forward.push_back(yoneda_forward(f, x, alpha));
  for (std::size_t p = 0; p < f.at(x).size(); ++p) {
    SetNat back = yoneda_backward(f, x, p);
    v.count("round_trips");
    if (auto w = naturality_failure(yx.values, f.values, back); !w.is_null()) {
      v.fail({{"reason", "backward image is not natural"}, {"element", f.at(x).element(p)}, {"square", w}});
    } else if (yoneda_forward(f, x, back) != p) {
      v.fail({{"reason", "forward after backward moves an element"}, {"element", f.at(x).element(p)}});
    }
    out.backward.push_back(std::move(back));
  }
  for (std::size_t k = 0; k < out.nats.size(); ++k) {
    v.count("round_trips");
    if (!(out.backward.at(out.forward[k]) == out.nats[k])) {
      v.fail({{"reason", "backward after forward changes a transformation"},
              {"transformation", k},
              {"element", f.at(x).element(out.forward[k])}});
    }
  }
  return out;
}

SetNat yoneda_image(const FinCategory& c, MorphismId f) {
  const ObjectId x = c.src(f);
  const ObjectId y = c.tgt(f);
  const Presheaf yx = representable(c, x);
  const Presheaf yy = representable(c, y);
  SetNat alpha;
  for (ObjectId z = 0; z < c.object_count(); ++z) {
    const auto& to = c.hom(z, y);
    std::vector<std::size_t> images;
    for (MorphismId g : c.hom(z, x)) {
      images.push_back(static_cast<std::size_t>(std::find(to.begin(), to.end(), c.compose(f, g)) - to.begin()));
    }
    alpha.components.emplace_back(yx.at(z), yy.at(z), std::move(images));
  }
  return alpha;
}

Verdict yoneda_embedding_check(const FinCategory& c, std::uint64_t budget) {
  Verdict v("yoneda_embedding");
  const std::size_t n = c.object_count();
  std::vector<Presheaf> y;
  for (ObjectId x = 0; x < n; ++x) y.push_back(representable(c, x));
  for (ObjectId a = 0; a < n; ++a) {
    for (ObjectId b = 0; b < n; ++b) {
      v.count("object_pairs");
      const auto nats = nat_set(y[a], y[b], budget);
      const auto& hom = c.hom(a, b);
      if (nats.size() != hom.size()) {
        v.fail({{"reason", "hom-set and transformation counts differ"},
                {"from", c.object_name(a)},
                {"to", c.object_name(b)},
                {"morphisms", hom.size()},
                {"transformations", nats.size()}});
        continue;
      }
      std::set<SetNat> images;
      for (MorphismId f : hom) {
        SetNat yf = yoneda_image(c, f);
        if (std::find(nats.begin(), nats.end(), yf) == nats.end()) {
          v.fail({{"reason", "image of a morphism is not among the transformations"},
                  {"morphism", c.morphism_name(f)}});
        }
        images.insert(std::move(yf));
      }
      if (images.size() != hom.size()) {
        v.fail({{"reason", "embedding is not faithful"}, {"from", c.object_name(a)}, {"to", c.object_name(b)}});
      }
      bool objects_iso = false;
      for (MorphismId f : hom) objects_iso = objects_iso || is_iso(c, f);
      bool presheaves_iso = std::any_of(nats.begin(), nats.end(), is_set_iso);
      if (objects_iso != presheaves_iso) {
        v.fail({{"reason", "isomorphism is not reflected"},
                {"from", c.object_name(a)},
                {"to", c.object_name(b)},
                {"objects_iso", objects_iso},
                {"presheaves_iso", presheaves_iso}});
      }
    }
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    for (ObjectId z = 0; z < n; ++z) {
      for (MorphismId g : c.hom(c.tgt(f), z)) {
        v.count("functoriality");
        if (!(yoneda_image(c, c.compose(g, f)) == vertical_compose(yoneda_image(c, g), yoneda_image(c, f)))) {
          v.fail({{"reason", "embedding does not preserve composition"},
                  {"first", c.morphism_name(f)},
                  {"then", c.morphism_name(g)}});
        }
      }
    }
  }
  return v;
}

std::optional<std::pair<ObjectId, SetNat>> is_representable(const Presheaf& f, std::uint64_t budget) {
  for (ObjectId x = 0; x < f.base.object_count(); ++x) {
    const Presheaf yx = representable(f.base, x);
    bool sizes_match = true;
    for (ObjectId z = 0; z < f.base.object_count() && sizes_match; ++z) {
      sizes_match = yx.at(z).size() == f.at(z).size();
    }
    if (!sizes_match) continue;
    for (auto& alpha : nat_set(yx, f, budget)) {
      if (is_set_iso(alpha)) return std::make_pair(x, std::move(alpha));
    }
  }
  return std::nullopt;
}

}  // namespace fincat
