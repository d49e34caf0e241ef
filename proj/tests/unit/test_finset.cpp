#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"

using namespace fincat;
using namespace fincat::testing;

namespace {

FinFunction random_function(std::mt19937_64& rng, const FinSet& a, const FinSet& b) {
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < a.size(); ++i) images.push_back(std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng));
  return FinFunction(a, b, images);
}

// Connected components of the relation generated by x ~ f(x), x ~ g(x)
// on A ⊔ B, by repeated relabelling.
std::size_t coequalizer_classes(const FinFunction& f, const FinFunction& g) {
  const std::size_t b = f.codomain().size();
  std::vector<std::size_t> label(b);
  for (std::size_t i = 0; i < b; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < f.domain().size(); ++a) {
      const std::size_t x = f(a), y = g(a);
      const std::size_t lo = std::min(label[x], label[y]);
      for (auto& l : label) {
        if ((l == label[x] || l == label[y]) && l != lo) {
          l = lo;
          changed = true;
        }
      }
    }
  }
  return std::set<std::size_t>(label.begin(), label.end()).size();
}

}  // namespace

TEST_SUITE("finset") {
  TEST_CASE("sets and functions") {
    CHECK(thrown_kind([] { FinSet({"a", "a"}); }) == ErrorKind::duplicate_name);
    const FinSet s = FinSet::range(3);
    CHECK(s.elements() == std::vector<Name>{"0", "1", "2"});
    CHECK(s.index_of("2") == 2);
    CHECK_FALSE(s.find("3").has_value());
    const FinFunction f = FinFunction::from_map(s, FinSet({"x", "y"}), {{"0", "x"}, {"1", "y"}, {"2", "x"}});
    CHECK(f("2") == "x");
    CHECK(f.surjective());
    CHECK_FALSE(f.injective());
    CHECK(compose(f, FinFunction::identity(s)) == f);
    CHECK(thrown_kind([&] { FinFunction::from_map(s, FinSet({"x"}), {{"0", "x"}}); }).has_value());
  }

  TEST_CASE("function counts") {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t n = 0; n <= 3; ++n) {
        const auto fs = all_functions(FinSet::range(m), FinSet::range(n));
        CHECK(fs.size() == saturating_pow(n, m));
        std::size_t inj = 0, surj = 0;
        for (const auto& f : fs) {
          inj += f.injective();
          surj += f.surjective();
        }
        std::size_t falling = 1;
        for (std::size_t i = 0; i < m; ++i) falling *= (n >= i ? n - i : 0);
        CHECK(inj == falling);
        if (m == n) CHECK(surj == inj);
      }
    }
  }

  TEST_CASE("canonical fragment sizes") {
    CHECK(FinSetFragment::canonical(2).category().morphism_count() == 11);
    const FinSetFragment f3 = FinSetFragment::canonical(3);
    std::size_t expected = 0;
    for (std::size_t a = 0; a <= 3; ++a) {
      for (std::size_t b = 0; b <= 3; ++b) expected += saturating_pow(b, a);
    }
    CHECK(f3.category().morphism_count() == expected);
    const ObjectId two = f3.object_named("2");
    const MorphismId swap = f3.morphism_of(two, two, {1, 0});
    CHECK(f3.function_of(swap).images() == std::vector<std::size_t>{1, 0});
    CHECK(f3.category().compose(swap, swap) == f3.category().identity(two));
  }

  TEST_CASE("pullbacks match the fibre-product count") {
    std::mt19937_64 rng(7);
    const FinCategory shape = shapes::cospan();
    for (int trial = 0; trial < 40; ++trial) {
      const FinSet a = FinSet::range(1 + trial % 3), b = FinSet::range(1 + trial / 3 % 4), c = FinSet::range(1 + trial % 2);
      const FinFunction f = random_function(rng, a, c), g = random_function(rng, b, c);
      const SetFunctor d = set_functor(shape, {a, b, c}, {{"f", f}, {"g", g}});
      const SetCone lim = finset_limit(d);
      std::size_t oracle = 0;
      for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) oracle += f(x) == g(y);
      }
      CHECK(lim.tip.size() == oracle);
      CHECK(spot_check_limit(d, lim).value_or(true));

      const SetCone named = construct_shape(ShapeKind::pullback, {}, std::vector<FinFunction>{f, g});
      CHECK(named.tip.size() == oracle);
    }
  }

  TEST_CASE("coequalizers match a component count") {
    std::mt19937_64 rng(11);
    const FinCategory shape = shapes::parallel_pair();
    for (int trial = 0; trial < 40; ++trial) {
      const FinSet a = FinSet::range(trial % 4), b = FinSet::range(1 + trial % 5);
      const FinFunction f = random_function(rng, a, b), g = random_function(rng, a, b);
      const SetFunctor d = set_functor(shape, {a, b}, {{"f", f}, {"g", g}});
      const SetCone colim = finset_colimit(d);
      CHECK(colim.tip.size() == coequalizer_classes(f, g));
      CHECK(spot_check_colimit(d, colim).value_or(true));
      std::size_t fixed = 0;
      for (std::size_t x = 0; x < a.size(); ++x) fixed += f(x) == g(x);
      CHECK(finset_limit(d).tip.size() == fixed);
    }
  }

  TEST_CASE("products, coproducts, terminal and initial") {
    const std::vector<FinSet> sets = {FinSet::range(2), FinSet::range(3)};
    CHECK(construct_shape(ShapeKind::product, sets, {}).tip.size() == 6);
    CHECK(construct_shape(ShapeKind::coproduct, sets, {}).tip.size() == 5);
    CHECK(construct_shape(ShapeKind::terminal, {}, {}).tip.size() == 1);
    CHECK(construct_shape(ShapeKind::initial, {}, {}).tip.size() == 0);
    CHECK(parse_shape_kind("pushout") == ShapeKind::pushout);
    CHECK_FALSE(parse_shape_kind("fibre").has_value());
  }

  TEST_CASE("kernel pair") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const FinFunction f = random_function(rng, FinSet::range(1 + trial % 5), FinSet::range(1 + trial % 3));
      const auto [p, q] = kernel_pair(f);
      std::vector<std::size_t> fibre(f.codomain().size(), 0);
      for (std::size_t x = 0; x < f.domain().size(); ++x) ++fibre[f(x)];
      std::size_t oracle = 0;
      for (auto k : fibre) oracle += k * k;
      CHECK(p.domain().size() == oracle);
      CHECK(compose(f, p) == compose(f, q));
    }
  }

  TEST_CASE("set functors reject non-functorial data") {
    const FinCategory w = shapes::walking_arrow();
    const FinSet a = FinSet::range(2);
    CHECK(thrown_kind([&] { set_functor(w, {a, a}, {{"f", FinFunction(a, FinSet::range(1), {0, 0})}}); }) ==
          ErrorKind::endpoint_mismatch);
    const FinCategory z2 = delooping(cyclic_group(2));
    // The non-identity element must square to the identity.
    const FinFunction cycle3 = FinFunction(FinSet::range(3), FinSet::range(3), {1, 2, 0});
    CHECK(thrown_kind([&] { set_functor(z2, {FinSet::range(3)}, {{"1", cycle3}}); }) ==
          ErrorKind::composition_not_preserved);
  }

  TEST_CASE("set natural transformations") {
    const FinCategory w = shapes::walking_arrow();
    const FinSet two = FinSet::range(2), one = FinSet::range(1);
    const SetFunctor p = set_functor(w, {two, two}, {{"f", FinFunction::identity(two)}});
    const SetFunctor q = set_functor(w, {two, one}, {{"f", FinFunction(two, one, {0, 0})}});
    const SetNat alpha = make_set_nat(p, q, {FinFunction::identity(two), FinFunction(two, one, {0, 0})});
    CHECK(vertical_compose(alpha, identity_set_nat(p)) == alpha);
    CHECK_FALSE(is_set_iso(alpha));
    CHECK(is_set_iso(identity_set_nat(p)));
    const SetFunctor swap = set_functor(w, {two, two}, {{"f", FinFunction(two, two, {1, 0})}});
    CHECK_FALSE(naturality_failure(p, swap, identity_set_nat(p)).is_null());
  }
}
