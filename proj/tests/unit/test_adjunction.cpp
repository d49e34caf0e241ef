#include <doctest.h>

#include "corpus.hpp"

using namespace fincat;
using namespace fincat::testing;

namespace {

bool reflects_order(const MonotoneMap& g) {
  for (std::size_t a = 0; a < g.source.size(); ++a) {
    for (std::size_t b = 0; b < g.source.size(); ++b) {
      if (g.target.leq(g.images[a], g.images[b]) && !g.source.leq(a, b)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("adjunction") {
  TEST_CASE("corpus adjunctions satisfy every law") {
    const auto corpus = adjunction_corpus();
    CHECK(corpus.size() > 20);
    for (const auto& [name, adj] : corpus) {
      INFO(name);
      const Verdict v = check_adjunction(adj);
      CHECK(v.holds());
      const FinCategory& c = adj.left.source();
      const FinCategory& d = adj.left.target();
      std::uint64_t pairs = 0;
      for (ObjectId x = 0; x < c.object_count(); ++x) {
        for (ObjectId y = 0; y < d.object_count(); ++y) {
          CHECK(d.hom(adj.left.on_object(x), y).size() == c.hom(x, adj.right.on_object(y)).size());
          for (MorphismId g : d.hom(adj.left.on_object(x), y)) {
            CHECK(transpose_sharp(adj, y, transpose_flat(adj, x, g)) == g);
          }
          ++pairs;
        }
      }
      CHECK(v.stats.at("hom_pairs") == pairs);
      CHECK(check_cat_monad_laws(induced_monad(adj)).holds());
      CHECK(check_cat_comonad_laws(induced_comonad(adj)).holds());
    }
  }

  TEST_CASE("a broken counit violates the first triangle") {
    const Document doc = read_document(fixture_path("adjunction-triangle-broken.json"));
    const Adjunction adj = load_adjunction_data(doc.json, doc.dir);
    const Verdict v = check_adjunction(adj);
    REQUIRE_FALSE(v.holds());
    CHECK(v.witness["error"] == "TriangleViolation");
    CHECK(v.witness["triangle"]["side"] == "first");
    CHECK(v.witness["triangle"]["object"] == "*");
    CHECK(thrown_kind([&] { validate_adjunction(adj); }) == ErrorKind::triangle_violation);
  }

  TEST_CASE("shape and hom-set errors") {
    const Adjunction id = identity_adjunction(shapes::walking_arrow());
    const FinCategory w = shapes::walking_arrow();
    CHECK(thrown_kind([&] { transpose_flat(id, w.object("B"), w.morphism("f")); }) == ErrorKind::wrong_hom_set);
    CHECK(thrown_kind([&] { transpose_sharp(id, w.object("A"), w.morphism("f")); }) == ErrorKind::wrong_hom_set);
    Adjunction bad = id;
    bad.unit = identity_nat(identity_functor(chain_category(2)));
    CHECK(thrown_kind([&] { check_adjunction(bad); }) == ErrorKind::shape_mismatch);
  }

  TEST_CASE("comparison functors") {
    for (const auto& [name, adj] : adjunction_corpus()) {
      INFO(name);
      const Comparison cmp = comparison_functors(adj);
      CHECK(cmp.verdict.holds());
      CHECK(cmp.kleisli.category.object_count() == adj.left.source().object_count());
      CHECK(compose(em_forget(cmp.monad, cmp.em), em_left(cmp.monad, cmp.em)) == cmp.monad.functor);
      CHECK(compose(kleisli_right(cmp.monad, cmp.kleisli), kleisli_left(cmp.monad, cmp.kleisli)) ==
            cmp.monad.functor);
    }
  }

  TEST_CASE("monadicity of Galois connections is order reflection") {
    std::size_t monadic = 0, total = 0;
    for (const auto& [f, g] : galois_corpus()) {
      const Verdict v = monadicity_check(galois_adjunction(f, g));
      CHECK(v.holds() == reflects_order(g));
      monadic += v.holds();
      ++total;
    }
    CHECK(monadic > 0);
    CHECK(monadic < total);
    CHECK(monadicity_check(identity_adjunction(delooping(symmetric_group3()))).holds());
  }

  TEST_CASE("the terminal object adjunction on the walking arrow") {
    for (const auto& [name, adj] : adjunction_corpus()) {
      if (name != "terminal:walking-arrow") continue;
      // T is constant at B and (B, id) is the only algebra.
      CHECK(monadicity_check(adj).holds());
      const Comparison cmp = comparison_functors(adj);
      CHECK(cmp.em.category.object_count() == 1);
    }
  }

  TEST_CASE("right adjoints preserve limits") {
    for (const auto& [f, g] : galois_corpus()) {
      const Adjunction adj = galois_adjunction(f, g);
      const FinCategory& d = adj.left.target();
      if (d.object_count() < 2) continue;
      const FinCategory shape = shapes::discrete({"X", "Y"});
      const Diagram pair{make_functor(shape, d, {0, 1}, {d.identity(0), d.identity(1)})};
      if (!limit_of(pair)) {
        CHECK(thrown_kind([&] { check_radj_continuity(adj, pair); }) == ErrorKind::no_limit);
        continue;
      }
      const Verdict v = check_radj_continuity(adj, pair);
      CHECK(v.holds());
      CHECK(check_cone_bijection(adj.left, adj.right, pair, adj).holds());
    }
  }

  TEST_CASE("cone counts differ for a non-adjoint pair") {
    const FinPreorder two = poset({"a0", "a1"}, {{"a0", "a1"}});
    const FinCategory c = as_thin_category(two);
    // The constant functor at a1 has no right adjoint pairing with itself.
    const MonotoneMap top = make_monotone(two, two, {1, 1});
    const FinFunctor k = thin_functor(top, c, c);
    const Diagram d{make_functor(shapes::discrete({"X"}), c, {0}, {c.identity(0)})};
    CHECK_FALSE(check_cone_bijection(k, k, d).holds());
  }
}
