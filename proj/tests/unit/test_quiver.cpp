#include <doctest.h>

#include <random>

#include "corpus.hpp"

using namespace fincat;
using namespace fincat::testing;

namespace {

MultiGraph xyz() { return MultiGraph({"x", "y", "z"}, {{"f", "x", "y"}, {"g", "y", "z"}}); }

MultiGraph path_graph(std::size_t n) {
  std::vector<Name> vs;
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("w" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) es.push_back({"f" + std::to_string(i), vs[i - 1], vs[i]});
  return MultiGraph(vs, es);
}

// Chains of each length from powers of the adjacency matrix.
std::vector<std::uint64_t> walk_counts(const MultiGraph& g, std::size_t n) {
  const std::size_t v = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> a(v, std::vector<std::uint64_t>(v, 0)), p(v, std::vector<std::uint64_t>(v, 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) ++a[g.src(e)][g.tgt(e)];
  for (std::size_t i = 0; i < v; ++i) p[i][i] = 1;
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint64_t total = 0;
    for (const auto& row : p) {
      for (auto x : row) total += x;
    }
    out.push_back(total);
    std::vector<std::vector<std::uint64_t>> next(v, std::vector<std::uint64_t>(v, 0));
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        for (std::size_t l = 0; l < v; ++l) next[i][l] += p[i][j] * a[j][l];
      }
    }
    p = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("free category on x → y → z") {
    const FreeCategory pg = free_category(xyz());
    CHECK(pg.category.object_count() == 3);
    CHECK(pg.category.morphism_count() == 6);
    const MorphismId fg = pg.category.morphism("f;g");
    CHECK(pg.category.compose(pg.category.morphism("g"), pg.category.morphism("f")) == fg);
    CHECK(pg.category.object_name(pg.category.src(fg)) == "x");
  }

  TEST_CASE("free category of a path has n(n+1)/2 morphisms") {
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(free_category(path_graph(n)).category.morphism_count() == n * (n + 1) / 2);
    }
  }

  TEST_CASE("cycles are refused with a witness") {
    const MultiGraph loop({"v"}, {{"e", "v", "v"}});
    REQUIRE(find_cycle(loop).has_value());
    CHECK(thrown_kind([&] { free_category(loop); }) == ErrorKind::cyclic_graph);
    CHECK(chains_up_to(loop, 3).counts == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK_FALSE(find_cycle(xyz()).has_value());
  }

  TEST_CASE("chain counts agree with adjacency powers") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const MultiGraph g = random_graph(rng, 5);
      const auto e = chains_up_to(g, 4);
      const auto oracle = walk_counts(g, 4);
      REQUIRE(e.counts.size() == oracle.size());
      for (std::size_t k = 0; k < oracle.size(); ++k) CHECK(e.counts[k] == oracle[k]);
      std::size_t total = 0;
      for (auto c : e.counts) total += c;
      CHECK(e.chains.size() == total);
      CHECK(std::is_sorted(e.chains.begin(), e.chains.end()));
    }
  }

  TEST_CASE("chain concatenation and naming") {
    const MultiGraph g = xyz();
    const Chain f{g.vertex("x"), {g.edge("f")}};
    const Chain h{g.vertex("y"), {g.edge("g")}};
    const Chain fg = concatenate(g, f, h);
    CHECK(chain_name(g, fg) == "f;g");
    CHECK(chain_name(g, Chain{g.vertex("y"), {}}) == "id:y");
    CHECK(concatenate(g, Chain{g.vertex("x"), {}}, f) == f);
    CHECK(thrown_kind([&] { concatenate(g, h, f); }) == ErrorKind::endpoint_mismatch);
    CHECK(chain_target(g, fg) == g.vertex("z"));
  }

  TEST_CASE("underlying graph keeps every morphism") {
    const FinCategory c = commutative_square();
    const MultiGraph u = underlying_graph(c);
    CHECK(u.vertex_count() == c.object_count());
    CHECK(u.edge_count() == c.morphism_count());
    for (MorphismId m = 0; m < c.morphism_count(); ++m) CHECK(u.edge_name(m) == c.morphism_name(m));
  }

  TEST_CASE("counit composes chains") {
    const FreeCategory pg = free_category(path_graph(4));
    const FinCategory& c = pg.category;
    const MultiGraph u = underlying_graph(c);
    const Chain ch{u.vertex("w0"), {u.edge("f1"), u.edge("f2"), u.edge("f3")}};
    CHECK(c.morphism_name(composite_counit(c, ch)) == "f1;f2;f3");
    CHECK(composite_counit(c, Chain{u.vertex("w2"), {}}) == c.identity(c.object("w2")));
  }

  TEST_CASE("P ⊣ U holds on graphs and categories") {
    CHECK(verify_pu_adjunction(xyz(), std::nullopt, 4).holds());
    CHECK(verify_pu_adjunction(xyz(), commutative_square(), 4).holds());
    CHECK(verify_pu_adjunction(path_graph(4), chain_category(4), 3).holds());
    const Verdict cyclic = verify_pu_adjunction(MultiGraph({"v"}, {{"e", "v", "v"}}), delooping(cyclic_group(2)), 3);
    CHECK(cyclic.holds());
    CHECK(cyclic.bounded);
  }

  TEST_CASE("a counit that drops identities breaks the second triangle") {
    const FinCategory c = chain_category(3);
    const Counit broken = [](const FinCategory& cat, const Chain& chain) -> MorphismId {
      if (chain.length() == 1 && cat.is_identity(chain.edges[0])) return npos;
      return composite_counit(cat, chain);
    };
    const Verdict v = verify_pu_adjunction(path_graph(2), c, 3, broken);
    REQUIRE_FALSE(v.holds());
    CHECK(v.witness["error"] == "TriangleViolation");
    CHECK(v.witness["side"] == "second");
    CHECK(v.witness["edge"] == "a0<=a0");
  }

  TEST_CASE("monad laws of U P") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
      const MultiGraph g = random_graph(rng, 3);
      const Verdict v = verify_up_monad_laws(g, 4);
      CHECK(v.holds());
      CHECK(v.bounded);
    }
  }

  TEST_CASE("categories are U P algebras") {
    for (const FinCategory& c : {commutative_square(), chain_category(3), delooping(cyclic_group(3))}) {
      const MultiGraph u = underlying_graph(c);
      const ChainStructure a = [&](const Chain& chain) { return composite_counit(c, chain); };
      CHECK(check_chain_algebra(u, a, 4).holds());
      CHECK(category_from_chain_algebra(u, a) == c);
    }
    const FinCategory z3 = delooping(cyclic_group(3));
    const MultiGraph u = underlying_graph(z3);
    // Always answering the first element breaks a((e)) = e.
    const ChainStructure constant = [](const Chain&) -> EdgeId { return 0; };
    CHECK_FALSE(check_chain_algebra(u, constant, 3).holds());
  }

  TEST_CASE("graph morphisms and P on arrows") {
    const MultiGraph g = xyz();
    const MultiGraph h = path_graph(3);
    const GraphMorphism m = make_graph_morphism(g, h, {0, 1, 2}, {0, 1});
    const FreeCategory pg = free_category(g), ph = free_category(h);
    const FinFunctor pm = free_functor(m, pg, ph);
    CHECK(ph.category.morphism_name(pm.on_morphism(pg.category.morphism("f;g"))) == "f1;f2");
    CHECK(thrown_kind([&] { make_graph_morphism(g, h, {0, 2, 1}, {0, 1}); }) == ErrorKind::endpoint_mismatch);
    const GraphMorphism unit = free_unit(g, pg);
    CHECK(unit.edges.size() == g.edge_count());
  }
}
