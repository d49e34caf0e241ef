#include <doctest.h>

#include "corpus.hpp"

using namespace fincat;
using namespace fincat::testing;

namespace {

// Natural transformations by trying every family of functions.
std::size_t brute_nat_count(const Presheaf& p, const Presheaf& q) {
  const FinCategory& c = p.base;
  std::vector<std::vector<FinFunction>> choices;
  for (ObjectId x = 0; x < c.object_count(); ++x) choices.push_back(all_functions(p.at(x), q.at(x)));
  for (const auto& ch : choices) {
    if (ch.empty()) return 0;
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (MorphismId f = 0; f < c.morphism_count() && ok; ++f) {
      const ObjectId a = c.src(f), b = c.tgt(f);
      // α_a ∘ P f = Q f ∘ α_b on P b
      ok = compose(choices[a][idx[a]], p.on(f)) == compose(q.on(f), choices[b][idx[b]]);
    }
    count += ok;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return count;
}

}  // namespace

TEST_SUITE("yoneda") {
  TEST_CASE("representables on the walking arrow") {
    const FinCategory w = shapes::walking_arrow();
    const Presheaf ya = representable(w, w.object("A"));
    const Presheaf yb = representable(w, w.object("B"));
    CHECK(ya.at(w.object("A")).size() == 1);
    CHECK(ya.at(w.object("B")).size() == 0);
    CHECK(yb.at(w.object("A")).size() == 1);
    CHECK(yb.at(w.object("B")).size() == 1);
    CHECK(nat_set(ya, yb).size() == 1);
    CHECK(nat_set(yb, ya).size() == 0);
  }

  TEST_CASE("nat sets match brute force") {
    std::vector<FinCategory> cats = {shapes::walking_arrow(), commutative_square(), delooping(cyclic_group(2)),
                                     delooping(cyclic_group(3))};
    for (std::uint64_t seed = 0; seed < 3; ++seed) cats.push_back(random_category(seed));
    for (const auto& c : cats) {
      const auto ps = presheaf_corpus(c);
      for (const auto& p : ps) {
        for (const auto& q : ps) {
          if (family_count(p, q) > 50'000) continue;
          CHECK(nat_set(p, q).size() == brute_nat_count(p, q));
        }
      }
    }
  }

  TEST_CASE("the Yoneda correspondence is a bijection") {
    for (const auto& c : {shapes::walking_arrow(), commutative_square(), delooping(cyclic_group(3))}) {
      for (const auto& f : presheaf_corpus(c)) {
        for (ObjectId x = 0; x < c.object_count(); ++x) {
          const auto y = yoneda_correspondence(f, x);
          CHECK(y.verdict.holds());
          CHECK(y.nats.size() == f.at(x).size());
          for (std::size_t p = 0; p < f.at(x).size(); ++p) CHECK(yoneda_forward(f, x, yoneda_backward(f, x, p)) == p);
        }
      }
    }
  }

  TEST_CASE("the embedding is fully faithful") {
    CHECK(yoneda_embedding_check(commutative_square()).holds());
    CHECK(yoneda_embedding_check(delooping(symmetric_group3())).holds());
    CHECK(yoneda_embedding_check(chain_category(4)).holds());
  }

  TEST_CASE("representability") {
    const FinCategory c = commutative_square();
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      const auto r = is_representable(representable(c, x));
      REQUIRE(r.has_value());
      CHECK(r->first == x);
    }
    // No object receives two arrows from every object; D is terminal.
    CHECK_FALSE(is_representable(constant_presheaf(c, FinSet({"a", "b"}))).has_value());
    const auto terminal = is_representable(constant_presheaf(c, FinSet({"a"})));
    REQUIRE(terminal.has_value());
    CHECK(c.object_name(terminal->first) == "D");
  }

  TEST_CASE("presheaf validation") {
    const FinCategory w = shapes::walking_arrow();
    const FinSet two = FinSet::range(2), one = FinSet::range(1);
    // P f : P B → P A
    CHECK(thrown_kind([&] {
            make_presheaf(w, {two, one}, {FinFunction(two, one, {0, 0}), FinFunction::identity(two),
                                          FinFunction::identity(one)});
          }).has_value());
    // Morphisms in name order: f, id_A, id_B.
    const Presheaf ok = make_presheaf(w, {two, one}, {FinFunction(one, two, {1}), FinFunction::identity(two),
                                                     FinFunction::identity(one)});
    CHECK(ok.on(w.morphism("f"))(0) == 1);
  }

  TEST_CASE("budget") {
    const FinCategory z3 = delooping(cyclic_group(3));
    const Presheaf big = constant_presheaf(z3, FinSet::range(6));
    CHECK(family_count(big, big) == 46656);
    CHECK(thrown_kind([&] { nat_set(big, big, 1000); }) == ErrorKind::budget_exceeded);
  }
}
