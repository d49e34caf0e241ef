#include <doctest.h>

#include <random>

#include "corpus.hpp"

using namespace fincat;
using namespace fincat::testing;

namespace {

Value coin(const Rational& heads) {
  return Value::dist({{Value::atom("heads"), heads}, {Value::atom("tails"), 1 - heads}});
}

// Boolean matrix product as the relational composite.
std::vector<std::vector<bool>> relation_of(const KleisliArrow& k) {
  std::vector<std::vector<bool>> r(k.domain.size(), std::vector<bool>(k.codomain.size(), false));
  for (std::size_t i = 0; i < k.domain.size(); ++i) {
    for (const auto& y : k.map.at(k.domain[i]).items()) {
      r[i][std::find(k.codomain.begin(), k.codomain.end(), y) - k.codomain.begin()] = true;
    }
  }
  return r;
}

KleisliArrow random_relation(std::mt19937_64& rng, const Carrier& x, const Carrier& y) {
  KleisliArrow k{x, y, {}};
  for (const auto& a : x) {
    std::vector<Value> items;
    for (const auto& b : y) {
      if (rng() % 2) items.push_back(b);
    }
    k.map.emplace(a, Value::set(items));
  }
  return k;
}

}  // namespace

TEST_SUITE("monad") {
  TEST_CASE("values are canonical") {
    const Value a = Value::atom("a"), b = Value::atom("b");
    CHECK(Value::set({b, a, b}) == Value::set({a, b}));
    CHECK(Value::set({b, a}).to_string() == "{a,b}");
    CHECK(Value::list({b, a}).to_string() == "[b,a]");
    CHECK(Value::tuple({a, b}).to_string() == "(a,b)");
    CHECK(Value::just(a).to_string() == "just(a)");
    CHECK(Value::nothing().to_string() == "nothing");
    const Value d = Value::dist({{a, Rational(1, 4)}, {b, Rational(1, 2)}, {a, Rational(1, 4)}, {b, Rational(0)}});
    CHECK(d.to_string() == "{a:1/2,b:1/2}");
    CHECK(d.weight_of(a) == Rational(1, 2));
    CHECK(value_from_json(to_json(d)) == d);
    CHECK(value_from_json(to_json(Value::just(Value::set({a})))) == Value::just(Value::set({a})));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(thrown_kind([] { parse_rational("1/0x"); }) == ErrorKind::syntax);
  }

  TEST_CASE("powerset laws count every instance") {
    const MonadPtr p = powerset_monad();
    const Verdict one = check_monad_laws(*p, standard_carrier(1));
    CHECK(one.holds());
    CHECK(one.stats.at("associativity") == 16);
    const Verdict two = check_monad_laws(*p, standard_carrier(2), {.naturality = false});
    CHECK(two.holds());
    CHECK(two.stats.at("associativity") == 65536);
    CHECK_FALSE(two.bounded);
  }

  TEST_CASE("finite carriers of the built-in monads") {
    for (const auto& m : {maybe_monad(), writer_monad(cyclic_group(2)), writer_monad(cyclic_group(3))}) {
      const Verdict v = check_monad_laws(*m, standard_carrier(2));
      CHECK_MESSAGE(v.holds(), m->name());
      CHECK(m->enumerate(standard_carrier(2)).size() == m->carrier_size(2));
    }
    CHECK(powerset_monad()->carrier_size(3) == 8);
  }

  TEST_CASE("bounded checks of infinite carriers") {
    const MonadPtr d = distribution_monad(2);
    CHECK(thrown_kind([&] { check_monad_laws(*d, standard_carrier(2)); }) == ErrorKind::not_finite_carrier);
    const Verdict v = check_monad_laws(*d, standard_carrier(2), {.mode = LawMode::bounded, .samples = 200});
    CHECK(v.holds());
    CHECK(v.bounded);
    const Verdict l = check_monad_laws(*list_monad(2), standard_carrier(2), {.mode = LawMode::bounded, .samples = 200});
    CHECK(l.holds());
    CHECK(l.bounded);
  }

  TEST_CASE("sampling is reproducible") {
    const MonadPtr p = powerset_monad();
    const LawOptions opts{.mode = LawMode::bounded, .seed = 42, .samples = 50};
    CHECK(check_monad_laws(*p, standard_carrier(3), opts).to_json() ==
          check_monad_laws(*p, standard_carrier(3), opts).to_json());
  }

  TEST_CASE("writer over a broken table fails associativity") {
    CHECK(thrown_kind([] { writer_monad(broken_monoid()); }) == ErrorKind::not_a_monoid);
    const MonadPtr w = writer_monad_unchecked(broken_monoid());
    const Verdict v = check_monad_laws(*w, standard_carrier(1));
    REQUIRE_FALSE(v.holds());
    CHECK(v.witness["law"] == "associativity");
    // The witness replays.
    CHECK_FALSE(monad_law_failure(*w, "associativity", value_from_json(v.witness["element"])).is_null());
    CHECK(v.stats.at("failures") >= 1);
  }

  TEST_CASE("the two-coin mixture") {
    const MonadPtr d = distribution_monad(4);
    const Value pi = Value::dist({{coin(Rational(1, 2)), Rational(1, 2)}, {coin(Rational(1)), Rational(1, 2)}});
    const Value mix = d->multiply(pi);
    CHECK(mix.weight_of(Value::atom("heads")) == Rational(3, 4));
    CHECK(mix.weight_of(Value::atom("tails")) == Rational(1, 4));
  }

  TEST_CASE("powerset Kleisli composition is relational composition") {
    std::mt19937_64 rng(1);
    const MonadPtr p = powerset_monad();
    const Carrier x = standard_carrier(3), y = atoms({"y0", "y1"}), z = atoms({"z0", "z1", "z2"});
    for (int trial = 0; trial < 50; ++trial) {
      const KleisliArrow k = random_relation(rng, x, y), h = random_relation(rng, y, z);
      const auto rk = relation_of(k), rh = relation_of(h), rc = relation_of(kleisli_compose(*p, k, h));
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t l = 0; l < z.size(); ++l) {
          bool any = false;
          for (std::size_t j = 0; j < y.size(); ++j) any = any || (rk[i][j] && rh[j][l]);
          CHECK(rc[i][l] == any);
        }
      }
      CHECK(kleisli_compose(*p, kleisli_identity(*p, x), k) == k);
      CHECK(kleisli_compose(*p, k, kleisli_identity(*p, y)) == k);
    }
    CHECK(thrown_kind([&] { kleisli_compose(*p, random_relation(rng, x, y), random_relation(rng, z, x)); }) ==
          ErrorKind::endpoint_mismatch);
  }

  TEST_CASE("stochastic matrices") {
    std::mt19937_64 rng(2);
    const Carrier x = standard_carrier(2), y = atoms({"a", "b", "c"});
    const StochasticMatrix m = random_kernel(rng, x, y);
    CHECK(to_matrix(from_matrix(m)) == m);
    StochasticMatrix bad = m;
    bad.entries[1][0] += Rational(1, 3);
    try {
      from_matrix(bad);
      FAIL("expected NotNormalized");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_normalized);
      CHECK(e.witness()["row"] == "x1");
    }
  }

  TEST_CASE("Kleisli categories") {
    const MonadPtr m = maybe_monad();
    const std::vector<NamedSet> universe = {{"0", FinSet::range(0)}, {"1", FinSet::range(1)}, {"2", FinSet::range(2)}};
    const FinCategory kl = kleisli_category(*m, universe);
    // Hom(X, Y) = (|Y| + 1)^|X|
    std::size_t expected = 0;
    for (std::size_t a = 0; a <= 2; ++a) {
      for (std::size_t b = 0; b <= 2; ++b) expected += saturating_pow(b + 1, a);
    }
    CHECK(kl.morphism_count() == expected);
    CHECK(thrown_kind([&] { kleisli_raw(*distribution_monad(2), universe); }) == ErrorKind::not_finite_carrier);
    // A broken writer's Kleisli table fails validation.
    const MonadPtr w = writer_monad_unchecked(broken_monoid());
    CHECK(thrown_kind([&] { kleisli_category(*w, {{"1", FinSet::range(1)}}); }) ==
          ErrorKind::associativity_violation);
  }

  TEST_CASE("Eilenberg-Moore algebras") {
    const MonadPtr m = maybe_monad();
    for (std::size_t n = 1; n <= 3; ++n) {
      const EmCategory em = materialize_em_category(*m, {{"A", FinSet::range(n)}});
      // e(just a) = a is forced, e(nothing) is free.
      CHECK(em.algebras.size() == n);
    }
    // Powerset algebras are complete join-semilattices.
    const MonadPtr p = powerset_monad();
    const std::vector<NamedSet> universe = {{"0", FinSet::range(0)}, {"1", FinSet::range(1)}, {"2", FinSet::range(2)}};
    CHECK(materialize_em_category(*p, universe).algebras.size() == 3);

    const Algebra free = free_algebra(*p, standard_carrier(2));
    CHECK(check_algebra(*p, free).holds());
    Algebra broken = free;
    broken.structure.begin()->second = Value::set(standard_carrier(2));
    CHECK_FALSE(check_algebra(*p, broken).holds());
  }

  TEST_CASE("free extension along the unit") {
    const MonadPtr p = powerset_monad();
    const Carrier x = standard_carrier(2);
    const EmCategory em = materialize_em_category(*p, {{"2", FinSet::range(2)}});
    REQUIRE(em.algebras.size() == 2);
    for (const auto& a : em.algebras) {
      for (const auto& f : {ValueMap{{x[0], a.carrier[0]}, {x[1], a.carrier[1]}}, ValueMap{{x[0], a.carrier[1]}, {x[1], a.carrier[1]}}}) {
        const EmExtension ext = em_extension(*p, x, a, f);
        CHECK(ext.verdict.holds());
        for (const auto& v : x) CHECK(ext.map.at(p->unit(v)) == f.at(v));
        CHECK(check_algebra_morphism(*p, free_algebra(*p, x), a, ext.map).holds());
      }
    }
  }

  TEST_CASE("reader comonad") {
    const ComonadPtr c = reader_comonad(atoms({"e0", "e1"}));
    CHECK(check_comonad_laws(*c, standard_carrier(2)).holds());
    CHECK(c->carrier_size(3) == 6);
    const Carrier x = standard_carrier(2);
    const CokleisliArrow id = cokleisli_identity(*c, x);
    CHECK(cokleisli_compose(*c, id, id) == id);
    // (x, e) ↦ (x, e0) is a coalgebra only if it agrees with ν, which
    // forces e to be constant; the map into e0 is.
    Coalgebra k{x, {}};
    for (const auto& v : x) k.structure.emplace(v, Value::tuple({v, Value::atom("e0")}));
    CHECK(check_coalgebra(*c, k).holds());
    Coalgebra bad{x, {}};
    for (const auto& v : x) bad.structure.emplace(v, Value::tuple({x[0], Value::atom("e0")}));
    CHECK_FALSE(check_coalgebra(*c, bad).holds());
  }

  TEST_CASE("built-in monads by name") {
    CHECK(builtin_monad({.kind = "powerset"})->name() == powerset_monad()->name());
    CHECK(thrown_kind([] { builtin_monad({.kind = "state"}); }) == ErrorKind::unknown_kind);
    CHECK(thrown_kind([] { builtin_monad({.kind = "writer"}); }) == ErrorKind::invalid_argument);
  }
}
