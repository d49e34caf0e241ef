#include <doctest.h>

#include "corpus.hpp"

using namespace fincat;
using namespace fincat::testing;

namespace {

// Monoid homomorphisms by brute force over all element maps.
std::size_t monoid_homs(const MonoidTable& a, const MonoidTable& b) {
  const std::size_t n = a.elements.size(), m = b.elements.size();
  std::vector<std::size_t> phi(n, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = phi[*monoid_unit(a)] == *monoid_unit(b);
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) ok = phi[a.product[x][y]] == b.product[phi[x]][phi[y]];
    }
    count += ok;
    std::size_t i = 0;
    while (i < n && ++phi[i] == m) phi[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// Natural transformations by brute force over all component choices.
std::size_t nat_count(const FinFunctor& f, const FinFunctor& g) {
  const FinCategory& c = f.source();
  const FinCategory& d = f.target();
  std::vector<std::vector<MorphismId>> choices;
  for (ObjectId x = 0; x < c.object_count(); ++x) choices.push_back(d.hom(f.on_object(x), g.on_object(x)));
  for (const auto& ch : choices) {
    if (ch.empty()) return 0;
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (MorphismId m = 0; m < c.morphism_count() && ok; ++m) {
      const MorphismId ax = choices[c.src(m)][idx[c.src(m)]];
      const MorphismId ay = choices[c.tgt(m)][idx[c.tgt(m)]];
      ok = d.compose(g.on_morphism(m), ax) == d.compose(ay, f.on_morphism(m));
    }
    count += ok;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return count;
}

}  // namespace

TEST_SUITE("functor") {
  TEST_CASE("functors between deloopings are monoid homomorphisms") {
    const std::vector<MonoidTable> groups = {cyclic_group(2), cyclic_group(3), symmetric_group3()};
    for (const auto& a : groups) {
      for (const auto& b : groups) {
        CHECK(enumerate_functors(delooping(a), delooping(b)).size() == monoid_homs(a, b));
      }
    }
    CHECK(monoid_homs(cyclic_group(2), symmetric_group3()) == 4);
  }

  TEST_CASE("functors from the walking arrow into a poset are related pairs") {
    const FinPreorder p = poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"c", "d"}});
    CHECK(enumerate_functors(shapes::walking_arrow(), as_thin_category(p)).size() == p.pairs().size());
  }

  TEST_CASE("validation names the broken law") {
    const FinCategory w = shapes::walking_arrow();
    const FinCategory z2 = delooping(cyclic_group(2));
    SUBCASE("identity not preserved") {
      RawFunctor raw{{{"*", "*"}}, {{"0", "1"}, {"1", "1"}}};
      CHECK(thrown_kind([&] { validate_functor(z2, z2, raw); }) == ErrorKind::identity_not_preserved);
    }
    SUBCASE("composition not preserved") {
      const FinCategory z3 = delooping(cyclic_group(3));
      RawFunctor raw{{{"*", "*"}}, {{"0", "0"}, {"1", "1"}, {"2", "1"}}};
      CHECK(thrown_kind([&] { validate_functor(z3, z3, raw); }) == ErrorKind::composition_not_preserved);
    }
    SUBCASE("missing image") {
      RawFunctor raw{{{"A", "A"}}, {}};
      CHECK(thrown_kind([&] { validate_functor(w, w, raw); }) == ErrorKind::missing_image);
    }
  }

  TEST_CASE("composition of functors is associative and unital") {
    const FinCategory c = chain_category(3);
    const auto fs = enumerate_functors(c, c, 2'000'000);
    REQUIRE(fs.size() == 10);
    for (const auto& f : fs) {
      CHECK(compose(f, identity_functor(c)) == f);
      CHECK(compose(identity_functor(c), f) == f);
      for (const auto& g : fs) {
        for (const auto& h : {fs[1], fs[5]}) CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
      }
    }
  }

  TEST_CASE("natural transformations match brute force") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const FinCategory c = shapes::walking_arrow();
      const FinCategory d = random_category(seed);
      const auto fs = enumerate_functors(c, d);
      for (std::size_t i = 0; i < fs.size(); i += 3) {
        for (std::size_t j = 0; j < fs.size(); j += 2) CHECK(enumerate_nats(fs[i], fs[j]).size() == nat_count(fs[i], fs[j]));
      }
    }
  }

  TEST_CASE("naturality failure is reported") {
    const FinCategory c = shapes::walking_arrow();
    const FinCategory d = commutative_square();
    const FinFunctor f = validate_functor(c, d, {{{"A", "A"}, {"B", "B"}}, {{"f", "f"}, {"id_A", "1A"}, {"id_B", "1B"}}});
    const FinFunctor g = validate_functor(c, d, {{{"A", "A"}, {"B", "D"}}, {{"f", "d"}, {"id_A", "1A"}, {"id_B", "1D"}}});
    CHECK(thrown_kind([&] { validate_nat(f, g, {{"A", "1A"}, {"B", "h"}}); }) == std::nullopt);
    CHECK(thrown_kind([&] { make_nat(g, g, {d.morphism("1A"), d.morphism("1A")}); }).has_value());
    CHECK(enumerate_nats(f, g).size() == 1);

    const FinCategory s3 = delooping(symmetric_group3());
    const FinFunctor id = identity_functor(s3);
    CHECK(thrown_kind([&] { make_nat(id, id, {s3.morphism("102")}); }) == ErrorKind::naturality_square_fails);
    // Natural endo-transformations of the identity are the centre.
    CHECK(enumerate_nats(id, id).size() == 1);
  }

  TEST_CASE("vertical and horizontal composition") {
    const FinCategory c = shapes::walking_arrow();
    const FinCategory d = chain_category(3);
    const auto fs = enumerate_functors(c, d);
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        for (const auto& alpha : enumerate_nats(f, g)) {
          CHECK(vertical_compose(alpha, identity_nat(f)) == alpha);
          CHECK(vertical_compose(identity_nat(g), alpha) == alpha);
          for (const auto& h : fs) {
            for (const auto& beta : enumerate_nats(g, h)) {
              NatTrans ba = vertical_compose(beta, alpha);
              CHECK(ba.source() == f);
              CHECK(ba.target() == h);
            }
          }
        }
      }
    }
    // Interchange law on the identity functor of the target.
    const FinFunctor id = identity_functor(d);
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        for (const auto& alpha : enumerate_nats(f, g)) {
          CHECK(horizontal_compose(identity_nat(id), alpha) == whisker(id, alpha));
        }
      }
    }
  }

  TEST_CASE("equivalences") {
    // Two isomorphic objects collapse to one.
    const FinPreorder p({"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}});
    const FinCategory c = as_thin_category(p);
    const FinCategory one = shapes::terminal();
    const FinFunctor f = make_functor(c, one, {0, 0}, std::vector<MorphismId>(c.morphism_count(), 0));
    const FunctorClass k = classify_functor(f);
    CHECK(k.fully_faithful);
    CHECK(k.essentially_surjective);
    REQUIRE(k.equivalence.has_value());
    CHECK(is_natural_iso(k.equivalence->unit));
    CHECK(is_natural_iso(k.equivalence->counit));

    const FinCategory w = shapes::walking_arrow();
    const FinFunctor incl = make_functor(shapes::discrete({"A", "B"}), w, {0, 1}, {w.identity(0), w.identity(1)});
    const FunctorClass ki = classify_functor(incl);
    CHECK(ki.faithful);
    CHECK_FALSE(ki.full);
    CHECK_FALSE(check_equivalence(incl).has_value());
  }

  TEST_CASE("functor category of the walking arrow into itself") {
    const FinCategory w = shapes::walking_arrow();
    const FunctorCategory fc = functor_category(w, w);
    CHECK(fc.category.object_count() == 3);
    std::size_t nats = 0;
    for (const auto& f : fc.functors) {
      for (const auto& g : fc.functors) nats += nat_count(f, g);
    }
    CHECK(fc.category.morphism_count() == nats);
  }

  TEST_CASE("enumeration respects the budget") {
    const FinCategory s3 = delooping(symmetric_group3());
    CHECK(thrown_kind([&] { enumerate_functors(s3, s3, 10); }) == ErrorKind::budget_exceeded);
  }

  TEST_CASE("saturating arithmetic") {
    const auto max = std::numeric_limits<std::uint64_t>::max();
    CHECK(saturating_add(max, 1) == max);
    CHECK(saturating_mul(max / 2, 3) == max);
    CHECK(saturating_pow(2, 10) == 1024);
    CHECK(saturating_pow(2, 64) == max);
    CHECK(saturating_pow(0, 0) == 1);
  }
}
