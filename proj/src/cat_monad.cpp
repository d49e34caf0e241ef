#include <map>

#include "fincat/monad.hpp"

namespace fincat {

Verdict check_cat_monad_laws(const CatMonad& t) {
  Verdict v("cat_monad_laws");
  const auto& c = t.functor.source();
  const auto& f = t.functor;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    const ObjectId tx = f.on_object(x);
    const MorphismId mu = t.mult.component(x);
    const MorphismId id_tx = c.identity(tx);
    auto fail = [&](const char* law, MorphismId left, MorphismId right) {
      v.fail({{"law", law},
              {"object", c.object_name(x)},
              {"left", c.morphism_name(left)},
              {"right", c.morphism_name(right)}});
    };
    v.count("left_unit");
    if (MorphismId l = c.compose(mu, t.unit.component(tx)); l != id_tx) fail("left_unit", l, id_tx);
    v.count("right_unit");
    if (MorphismId r = c.compose(mu, f.on_morphism(t.unit.component(x))); r != id_tx) fail("right_unit", r, id_tx);
    v.count("associativity");
    MorphismId l = c.compose(mu, f.on_morphism(mu));
    MorphismId r = c.compose(mu, t.mult.component(tx));
    if (l != r) fail("associativity", l, r);
  }
  return v;
}

Verdict check_cat_comonad_laws(const CatComonad& t) {
  Verdict v("cat_comonad_laws");
  const auto& c = t.functor.source();
  const auto& f = t.functor;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    const ObjectId cx = f.on_object(x);
    const MorphismId nu = t.comult.component(x);
    const MorphismId id_cx = c.identity(cx);
    auto fail = [&](const char* law, MorphismId left, MorphismId right) {
      v.fail({{"law", law},
              {"object", c.object_name(x)},
              {"left", c.morphism_name(left)},
              {"right", c.morphism_name(right)}});
    };
    v.count("left_counit");
    if (MorphismId l = c.compose(t.counit.component(cx), nu); l != id_cx) fail("left_counit", l, id_cx);
    v.count("right_counit");
    if (MorphismId r = c.compose(f.on_morphism(t.counit.component(x)), nu); r != id_cx) fail("right_counit", r, id_cx);
    v.count("coassociativity");
    MorphismId l = c.compose(t.comult.component(cx), nu);
    MorphismId r = c.compose(f.on_morphism(nu), nu);
    if (l != r) fail("coassociativity", l, r);
  }
  return v;
}

CatKleisli cat_kleisli_category(const CatMonad& t) {
  const auto& c = t.functor.source();
  const auto& f = t.functor;
  auto name_of = [&](ObjectId x, ObjectId y, MorphismId k) {
    return c.object_name(x) + "->" + c.object_name(y) + ":" + c.morphism_name(k);
  };
  struct Arrow {
    ObjectId x, y;
    MorphismId k;
  };
  std::vector<Arrow> arrows;
  RawCategory raw;
  raw.objects = c.object_names();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      for (MorphismId k : c.hom(x, f.on_object(y))) {
        arrows.push_back({x, y, k});
        raw.morphisms.push_back({name_of(x, y, k), c.object_name(x), c.object_name(y)});
      }
    }
    raw.identities[c.object_name(x)] = name_of(x, x, t.unit.component(x));
  }
  for (const auto& a : arrows) {
    for (const auto& b : arrows) {
      if (a.y != b.x) continue;
      MorphismId composite = c.compose(t.mult.component(b.y), c.compose(f.on_morphism(b.k), a.k));
      raw.compose.push_back({name_of(a.x, a.y, a.k), name_of(b.x, b.y, b.k), name_of(a.x, b.y, composite)});
    }
  }
  CatKleisli out;
  out.category = validate_category(raw);
  std::map<Name, std::pair<MorphismId, ObjectId>> by_name;
  for (const auto& a : arrows) by_name[name_of(a.x, a.y, a.k)] = {a.k, a.y};
  for (const auto& n : out.category.morphism_names()) out.arrows.push_back(by_name.at(n));
  return out;
}

CatEmCategory cat_em_category(const CatMonad& t) {
  const auto& c = t.functor.source();
  const auto& f = t.functor;
  std::vector<CatAlgebra> algs;
  for (ObjectId a = 0; a < c.object_count(); ++a) {
    for (MorphismId s : c.hom(f.on_object(a), a)) {
      if (c.compose(s, t.unit.component(a)) != c.identity(a)) continue;
      if (c.compose(s, f.on_morphism(s)) != c.compose(s, t.mult.component(a))) continue;
      algs.push_back({a, s});
    }
  }
  auto obj_name = [&](const CatAlgebra& a) { return c.object_name(a.carrier) + ":" + c.morphism_name(a.structure); };
  auto mor_name = [&](std::size_t p, std::size_t q, MorphismId m) {
    return obj_name(algs[p]) + "->" + obj_name(algs[q]) + ":" + c.morphism_name(m);
  };
  struct Mor {
    std::size_t p, q;
    MorphismId m;
  };
  std::vector<Mor> mors;
  RawCategory raw;
  for (std::size_t p = 0; p < algs.size(); ++p) {
    raw.objects.push_back(obj_name(algs[p]));
    for (std::size_t q = 0; q < algs.size(); ++q) {
      for (MorphismId m : c.hom(algs[p].carrier, algs[q].carrier)) {
        if (c.compose(m, algs[p].structure) != c.compose(algs[q].structure, f.on_morphism(m))) continue;
        mors.push_back({p, q, m});
        raw.morphisms.push_back({mor_name(p, q, m), obj_name(algs[p]), obj_name(algs[q])});
      }
    }
    raw.identities[obj_name(algs[p])] = mor_name(p, p, c.identity(algs[p].carrier));
  }
  for (const auto& a : mors) {
    for (const auto& b : mors) {
      if (a.q != b.p) continue;
      raw.compose.push_back({mor_name(a.p, a.q, a.m), mor_name(b.p, b.q, b.m), mor_name(a.p, b.q, c.compose(b.m, a.m))});
    }
  }
  CatEmCategory out;
  out.category = validate_category(raw);
  std::map<Name, CatAlgebra> algs_by_name;
  for (const auto& a : algs) algs_by_name[obj_name(a)] = a;
  for (const auto& n : out.category.object_names()) out.algebras.push_back(algs_by_name.at(n));
  std::map<Name, MorphismId> mors_by_name;
  for (const auto& m : mors) mors_by_name[mor_name(m.p, m.q, m.m)] = m.m;
  for (const auto& n : out.category.morphism_names()) out.morphisms.push_back(mors_by_name.at(n));
  return out;
}

}  // namespace fincat
