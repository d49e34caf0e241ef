#include "fincat/adjunction.hpp"

#include <map>
#include <set>
#include <tuple>

namespace fincat {

namespace {

void require_shape(const Adjunction& adj) {
  const auto& c = adj.left.source();
  const auto& d = adj.left.target();
  bool ok = adj.right.source() == d && adj.right.target() == c &&
            adj.unit.source() == identity_functor(c) && adj.unit.target() == compose(adj.right, adj.left) &&
            adj.counit.source() == compose(adj.left, adj.right) && adj.counit.target() == identity_functor(d);
  if (!ok) {
    throw Error(ErrorKind::shape_mismatch,
                "adjunction data need F : C → D, G : D → C, η : id ⇒ G F and ε : F G ⇒ id");
  }
}

}  // namespace

MorphismId transpose_flat(const Adjunction& adj, ObjectId c, MorphismId g) {
  const auto& cc = adj.left.source();
  const auto& dd = adj.left.target();
  if (g >= dd.morphism_count() || dd.src(g) != adj.left.on_object(c)) {
    throw Error(ErrorKind::wrong_hom_set, "morphism does not start at F c",
                {{"object", cc.object_name(c)}, {"morphism", g < dd.morphism_count() ? dd.morphism_name(g) : "?"}});
  }
  return cc.compose(adj.right.on_morphism(g), adj.unit.component(c));
}

MorphismId transpose_sharp(const Adjunction& adj, ObjectId d, MorphismId f) {
  const auto& cc = adj.left.source();
  const auto& dd = adj.left.target();
  if (f >= cc.morphism_count() || cc.tgt(f) != adj.right.on_object(d)) {
    throw Error(ErrorKind::wrong_hom_set, "morphism does not end at G d",
                {{"object", dd.object_name(d)}, {"morphism", f < cc.morphism_count() ? cc.morphism_name(f) : "?"}});
  }
  return dd.compose(adj.counit.component(d), adj.left.on_morphism(f));
}

Verdict check_adjunction(const Adjunction& adj) {
  require_shape(adj);
  Verdict v("adjunction");
  const auto& cc = adj.left.source();
  const auto& dd = adj.left.target();
  nlohmann::json triangle = nullptr;
  nlohmann::json transpose = nullptr;
  for (ObjectId c = 0; c < cc.object_count(); ++c) {
    v.count("first_triangle");
    const ObjectId fc = adj.left.on_object(c);
    MorphismId got = dd.compose(adj.counit.component(fc), adj.left.on_morphism(adj.unit.component(c)));
    if (got != dd.identity(fc) && triangle.is_null()) {
      triangle = {{"side", "first"}, {"object", cc.object_name(c)}, {"got", dd.morphism_name(got)},
                  {"expected", dd.morphism_name(dd.identity(fc))}};
    }
  }
  for (ObjectId d = 0; d < dd.object_count(); ++d) {
    v.count("second_triangle");
    const ObjectId gd = adj.right.on_object(d);
    MorphismId got = cc.compose(adj.right.on_morphism(adj.counit.component(d)), adj.unit.component(gd));
    if (got != cc.identity(gd) && triangle.is_null()) {
      triangle = {{"side", "second"}, {"object", dd.object_name(d)}, {"got", cc.morphism_name(got)},
                  {"expected", cc.morphism_name(cc.identity(gd))}};
    }
  }
  for (ObjectId c = 0; c < cc.object_count() && transpose.is_null(); ++c) {
    for (ObjectId d = 0; d < dd.object_count() && transpose.is_null(); ++d) {
      v.count("hom_pairs");
      for (MorphismId g : dd.hom(adj.left.on_object(c), d)) {
        MorphismId back = transpose_sharp(adj, d, transpose_flat(adj, c, g));
        if (back != g) {
          transpose = {{"pair", {cc.object_name(c), dd.object_name(d)}},
                       {"direction", "sharp after flat"},
                       {"morphism", dd.morphism_name(g)},
                       {"got", dd.morphism_name(back)}};
          break;
        }
      }
      if (!transpose.is_null()) break;
      for (MorphismId f : cc.hom(c, adj.right.on_object(d))) {
        MorphismId back = transpose_flat(adj, c, transpose_sharp(adj, d, f));
        if (back != f) {
          transpose = {{"pair", {cc.object_name(c), dd.object_name(d)}},
                       {"direction", "flat after sharp"},
                       {"morphism", cc.morphism_name(f)},
                       {"got", cc.morphism_name(back)}};
          break;
        }
      }
    }
  }
  if (!triangle.is_null() || !transpose.is_null()) {
    v.fail({{"error", triangle.is_null() ? "TransposeNotBijective" : "TriangleViolation"},
            {"triangle", triangle},
            {"transpose", transpose}});
  }
  return v;
}

Adjunction validate_adjunction(Adjunction adj) {
  Verdict v = check_adjunction(adj);
  if (!v.holds()) {
    const bool triangle = !v.witness["triangle"].is_null();
    throw Error(triangle ? ErrorKind::triangle_violation : ErrorKind::transpose_not_bijective,
                triangle ? "triangle identity fails" : "transposition is not a bijection", v.witness);
  }
  return adj;
}

Adjunction identity_adjunction(const FinCategory& c) {
  FinFunctor id = identity_functor(c);
  return Adjunction{id, id, identity_nat(id), identity_nat(id)};
}

Adjunction galois_adjunction(const MonotoneMap& f, const MonotoneMap& g) {
  const FinCategory cx = as_thin_category(f.source);
  const FinCategory cy = as_thin_category(f.target);
  FinFunctor lf = thin_functor(f, cx, cy);
  FinFunctor rg = thin_functor(g, cy, cx);
  FinFunctor gf = compose(rg, lf);
  FinFunctor fg = compose(lf, rg);
  std::vector<MorphismId> unit;
  for (ObjectId x = 0; x < cx.object_count(); ++x) {
    const auto& h = cx.hom(x, gf.on_object(x));
    if (h.empty()) {
      throw Error(ErrorKind::triangle_violation, "no unit: x is not below g(f(x))",
                  {{"side", "unit"}, {"element", cx.object_name(x)}});
    }
    unit.push_back(h[0]);
  }
  std::vector<MorphismId> counit;
  for (ObjectId y = 0; y < cy.object_count(); ++y) {
    const auto& h = cy.hom(fg.on_object(y), y);
    if (h.empty()) {
      throw Error(ErrorKind::triangle_violation, "no counit: f(g(y)) is not below y",
                  {{"side", "counit"}, {"element", cy.object_name(y)}});
    }
    counit.push_back(h[0]);
  }
  FinFunctor idx = identity_functor(cx);
  FinFunctor idy = identity_functor(cy);
  return validate_adjunction(Adjunction{lf, rg, make_nat(idx, gf, std::move(unit)),
                                        make_nat(fg, idy, std::move(counit))});
}

CatMonad induced_monad(const Adjunction& adj) {
  FinFunctor t = compose(adj.right, adj.left);
  const auto& cc = adj.left.source();
  std::vector<MorphismId> mu;
  for (ObjectId c = 0; c < cc.object_count(); ++c) {
    mu.push_back(adj.right.on_morphism(adj.counit.component(adj.left.on_object(c))));
  }
  return CatMonad{t, adj.unit, make_nat(compose(t, t), t, std::move(mu))};
}

CatComonad induced_comonad(const Adjunction& adj) {
  FinFunctor s = compose(adj.left, adj.right);
  const auto& dd = adj.left.target();
  std::vector<MorphismId> nu;
  for (ObjectId d = 0; d < dd.object_count(); ++d) {
    nu.push_back(adj.left.on_morphism(adj.unit.component(adj.right.on_object(d))));
  }
  return CatComonad{s, adj.counit, make_nat(s, compose(s, s), std::move(nu))};
}

namespace {

// Kleisli morphism by (source, target, underlying k).
std::map<std::tuple<ObjectId, ObjectId, MorphismId>, MorphismId> kleisli_index(const CatKleisli& kl) {
  std::map<std::tuple<ObjectId, ObjectId, MorphismId>, MorphismId> idx;
  for (MorphismId m = 0; m < kl.category.morphism_count(); ++m) {
    idx[{kl.category.src(m), kl.arrows[m].second, kl.arrows[m].first}] = m;
  }
  return idx;
}

ObjectId em_object(const CatEmCategory& em, CatAlgebra a) {
  for (ObjectId p = 0; p < em.algebras.size(); ++p) {
    if (em.algebras[p] == a) return p;
  }
  throw Error(ErrorKind::law_violation, "expected algebra is missing from the Eilenberg-Moore category");
}

MorphismId em_morphism(const CatEmCategory& em, ObjectId p, ObjectId q, MorphismId m) {
  for (MorphismId e : em.category.hom(p, q)) {
    if (em.morphisms[e] == m) return e;
  }
  throw Error(ErrorKind::law_violation, "expected algebra morphism is missing from the Eilenberg-Moore category");
}

}  // namespace

FinFunctor kleisli_left(const CatMonad& t, const CatKleisli& kl) {
  const auto& c = t.functor.source();
  const auto idx = kleisli_index(kl);
  std::vector<ObjectId> objects;
  for (ObjectId x = 0; x < c.object_count(); ++x) objects.push_back(kl.category.object(c.object_name(x)));
  std::vector<MorphismId> morphisms;
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    MorphismId k = c.compose(t.unit.component(c.tgt(f)), f);
    morphisms.push_back(idx.at({objects[c.src(f)], objects[c.tgt(f)], k}));
  }
  return make_functor(c, kl.category, std::move(objects), std::move(morphisms));
}

FinFunctor kleisli_right(const CatMonad& t, const CatKleisli& kl) {
  const auto& c = t.functor.source();
  const auto& k = kl.category;
  std::vector<ObjectId> objects;
  for (ObjectId x = 0; x < k.object_count(); ++x) objects.push_back(t.functor.on_object(c.object(k.object_name(x))));
  std::vector<MorphismId> morphisms;
  for (MorphismId m = 0; m < k.morphism_count(); ++m) {
    const auto& [under, y] = kl.arrows[m];
    morphisms.push_back(c.compose(t.mult.component(y), t.functor.on_morphism(under)));
  }
  return make_functor(k, c, std::move(objects), std::move(morphisms));
}

FinFunctor em_left(const CatMonad& t, const CatEmCategory& em) {
  const auto& c = t.functor.source();
  std::vector<ObjectId> objects;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    objects.push_back(em_object(em, {t.functor.on_object(x), t.mult.component(x)}));
  }
  std::vector<MorphismId> morphisms;
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    morphisms.push_back(em_morphism(em, objects[c.src(f)], objects[c.tgt(f)], t.functor.on_morphism(f)));
  }
  return make_functor(c, em.category, std::move(objects), std::move(morphisms));
}

FinFunctor em_forget(const CatMonad& t, const CatEmCategory& em) {
  std::vector<ObjectId> objects;
  for (const auto& a : em.algebras) objects.push_back(a.carrier);
  return make_functor(em.category, t.functor.source(), std::move(objects), em.morphisms);
}

Comparison comparison_functors(const Adjunction& adj) {
  Comparison out;
  out.monad = induced_monad(adj);
  out.kleisli = cat_kleisli_category(out.monad);
  out.em = cat_em_category(out.monad);
  const auto& cc = adj.left.source();
  const auto& dd = adj.left.target();

  std::vector<ObjectId> j_objects;
  for (ObjectId x = 0; x < out.kleisli.category.object_count(); ++x) {
    j_objects.push_back(adj.left.on_object(cc.object(out.kleisli.category.object_name(x))));
  }
  std::vector<MorphismId> j_morphisms;
  for (const auto& [k, y] : out.kleisli.arrows) {
    j_morphisms.push_back(transpose_sharp(adj, adj.left.on_object(y), k));
  }
  out.j = make_functor(out.kleisli.category, dd, std::move(j_objects), std::move(j_morphisms));

  std::vector<ObjectId> k_objects;
  for (ObjectId d = 0; d < dd.object_count(); ++d) {
    k_objects.push_back(em_object(out.em, {adj.right.on_object(d), adj.right.on_morphism(adj.counit.component(d))}));
  }
  std::vector<MorphismId> k_morphisms;
  for (MorphismId h = 0; h < dd.morphism_count(); ++h) {
    k_morphisms.push_back(em_morphism(out.em, k_objects[dd.src(h)], k_objects[dd.tgt(h)], adj.right.on_morphism(h)));
  }
  out.k = make_functor(dd, out.em.category, std::move(k_objects), std::move(k_morphisms));

  out.verdict = Verdict("comparison");
  auto square = [&](const char* name, const FinFunctor& lhs, const FinFunctor& rhs) {
    out.verdict.count("squares");
    if (!find_natural_iso(lhs, rhs)) out.verdict.fail({{"square", name}, {"reason", "no natural isomorphism found"}});
  };
  square("J L_T = F", compose(out.j, kleisli_left(out.monad, out.kleisli)), adj.left);
  square("G J = R_T", compose(adj.right, out.j), kleisli_right(out.monad, out.kleisli));
  square("K F = L^T", compose(out.k, adj.left), em_left(out.monad, out.em));
  square("U^T K = G", compose(em_forget(out.monad, out.em), out.k), adj.right);
  return out;
}

Verdict monadicity_check(const Adjunction& adj) {
  Verdict v("monadicity");
  Comparison cmp = comparison_functors(adj);
  if (!cmp.verdict.holds()) {
    v.fail({{"reason", "comparison squares fail"}, {"squares", cmp.verdict.witness}});
    return v;
  }
  const auto& dd = cmp.k.source();
  const auto& em = cmp.k.target();
  v.count("em_objects", em.object_count());
  v.count("d_objects", dd.object_count());
  if (check_equivalence(cmp.k)) return v;

  FunctorClass cls = classify_functor(cmp.k);
  nlohmann::json w = {{"faithful", cls.faithful},
                      {"full", cls.full},
                      {"essentially_surjective", cls.essentially_surjective}};
  for (ObjectId a = 0; a < dd.object_count() && !w.contains("pair"); ++a) {
    for (ObjectId b = 0; b < dd.object_count(); ++b) {
      std::set<MorphismId> images;
      for (MorphismId h : dd.hom(a, b)) images.insert(cmp.k.on_morphism(h));
      if (images.size() != dd.hom(a, b).size() ||
          images.size() != em.hom(cmp.k.on_object(a), cmp.k.on_object(b)).size()) {
        w["pair"] = {dd.object_name(a), dd.object_name(b)};
        break;
      }
    }
  }
  for (ObjectId e = 0; e < em.object_count(); ++e) {
    bool reached = false;
    for (ObjectId d = 0; d < dd.object_count() && !reached; ++d) {
      for (MorphismId m : em.hom(cmp.k.on_object(d), e)) reached = reached || is_iso(em, m);
    }
    if (!reached) {
      w["unreached_algebra"] = em.object_name(e);
      break;
    }
  }
  v.fail(std::move(w));
  return v;
}

Verdict check_cone_bijection(const FinFunctor& left, const FinFunctor& right, const Diagram& e,
                             const std::optional<Adjunction>& adj, std::uint64_t budget) {
  Verdict v("cone_bijection");
  const Diagram re = apply(right, e);
  const auto& cc = left.source();
  (void)budget;
  for (ObjectId c = 0; c < cc.object_count(); ++c) {
    v.count("objects");
    const auto upstairs = enumerate_cones(e, left.on_object(c));
    const auto downstairs = enumerate_cones(re, c);
    v.count("cones", upstairs.size() + downstairs.size());
    if (upstairs.size() != downstairs.size()) {
      v.fail({{"object", cc.object_name(c)},
              {"cones_over_image", upstairs.size()},
              {"cones_over_composite", downstairs.size()}});
      continue;
    }
    if (!adj) continue;
    std::set<std::vector<MorphismId>> seen;
    for (const auto& cone : upstairs) {
      Cone t{c, {}};
      for (MorphismId leg : cone.legs) t.legs.push_back(transpose_flat(*adj, c, leg));
      if (!is_cone(re, t)) {
        v.fail({{"object", cc.object_name(c)}, {"reason", "transposed legs do not form a cone"},
                {"cone", to_json(e, cone)}});
      } else if (!seen.insert(t.legs).second) {
        v.fail({{"object", cc.object_name(c)}, {"reason", "transposition is not injective on cones"},
                {"cone", to_json(e, cone)}});
      }
    }
  }
  return v;
}

Verdict check_radj_continuity(const Adjunction& adj, const Diagram& d, std::uint64_t budget) {
  Verdict v = check_preservation(adj.right, d, budget);
  v.merge(check_cone_bijection(adj.left, adj.right, d, adj, budget));
  v.check = "radj_continuity";
  return v;
}

}  // namespace fincat
