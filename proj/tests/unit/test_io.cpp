#include <doctest.h>

#include <filesystem>
#include <set>

#include "corpus.hpp"

using namespace fincat;
using namespace fincat::testing;

namespace {

const std::set<std::string> unparseable = {"malformed.json", "duplicate-key.json", "duplicate-morphism.json"};

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("malformed text reports line and column") {
    try {
      parse_json_text("{\n  \"a\": [1,\n  2,, 3]\n}");
      FAIL("expected Syntax");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::syntax);
      CHECK(e.witness()["line"] == 3);
      CHECK(e.witness().contains("col"));
    }
    try {
      parse_json_text("{\"a\": 1,\n \"a\": 2}");
      FAIL("expected Syntax");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::syntax);
      CHECK(e.witness()["duplicate"] == "a");
      CHECK(e.witness()["line"] == 2);
    }
  }

  TEST_CASE("fixture errors") {
    CHECK(thrown_kind([] { read_document(fixture_path("no-such-file.json")); }) == ErrorKind::io);
    CHECK(thrown_kind([] { read_document(fixture_path("malformed.json")); }) == ErrorKind::syntax);
    try {
      parse_file(fixture_path("duplicate-morphism.json"), DocKind::category);
      FAIL("expected Syntax");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::syntax);
      CHECK(e.witness()["line"] == 7);
      CHECK(e.witness()["col"] == 6);
    }
    CHECK(thrown_kind([] { parse_doc_kind("sheaf"); }) == ErrorKind::unknown_kind);
    CHECK(thrown_kind([] { detect_kind(nlohmann::json{{"colour", 1}}); }) == ErrorKind::unknown_kind);
  }

  TEST_CASE("schema errors name the field") {
    CHECK(thrown_kind([] { parse_category({{"objects", {"A"}}}); }) == ErrorKind::syntax);
    CHECK(thrown_kind([] { parse_category({{"objects", "A"}, {"morphisms", nlohmann::json::array()}}); }) ==
          ErrorKind::syntax);
    CHECK(thrown_kind([] { parse_poset({{"elements", {"a", "a"}}, {"leq", nlohmann::json::array()}}); }) ==
          ErrorKind::syntax);
  }

  TEST_CASE("every fixture canonicalizes to a fixed point") {
    std::size_t checked = 0;
    for (const auto& entry : std::filesystem::directory_iterator(fixture_path(""))) {
      const std::string name = entry.path().filename().string();
      if (unparseable.count(name)) continue;
      INFO(name);
      const Document doc = read_document(entry.path());
      const DocKind kind = detect_kind(doc.json);
      const std::string once = canonical_text(canonicalize(kind, doc.json));
      const std::string twice = canonical_text(canonicalize(kind, parse_json_text(once)));
      CHECK(once == twice);
      CHECK(parse_file(entry.path(), kind).json == parse_json_text(once));
      ++checked;
    }
    CHECK(checked >= 30);
  }

  TEST_CASE("detected kinds") {
    const std::vector<std::pair<std::string, DocKind>> expected = {
        {"walking-arrow.json", DocKind::category},   {"chain-xyz.json", DocKind::graph},
        {"functor-id-walking-arrow.json", DocKind::functor}, {"diamond.json", DocKind::poset},
        {"galois-lower.json", DocKind::monotone},   {"set-pullback.json", DocKind::set_diagram},
        {"representable-presheaf.json", DocKind::presheaf}, {"adjunction-terminal.json", DocKind::adjunction},
        {"z2.json", DocKind::monoid},               {"coin-flip.json", DocKind::kleisli_arrow},
    };
    for (const auto& [file, kind] : expected) {
      INFO(file);
      CHECK(detect_kind(read_document(fixture_path(file)).json) == kind);
      CHECK(parse_doc_kind(to_string(kind)) == kind);
    }
  }

  TEST_CASE("categories round-trip through their serialization") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const FinCategory c = random_category(seed);
      const nlohmann::json j = serialize(c);
      CHECK(validate_category(parse_category(j)) == c);
      CHECK(canonical_text(j) == canonical_text(canonicalize(DocKind::category, j)));
    }
    for (const auto& entry : category_corpus()) {
      if (!entry.valid) continue;
      const FinCategory c = validate_category(entry.raw);
      CHECK(load_category(serialize(c), ".") == c);
    }
  }

  TEST_CASE("other structures round-trip") {
    const FinPreorder p = poset({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    CHECK(load_poset(serialize(p), ".") == p);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10; ++i) {
      const MultiGraph g = random_graph(rng, 4);
      CHECK(load_graph(serialize(g), ".") == g);
    }
    const MonoidTable z3 = cyclic_group(3);
    const MonoidTable back = parse_monoid(serialize(z3));
    CHECK(back.elements == z3.elements);
    CHECK(back.product == z3.product);
    const FinFunction f(FinSet::range(3), FinSet({"x", "y"}), {0, 1, 0});
    CHECK(load_function(serialize(f), ".") == f);
    const KleisliArrow k{standard_carrier(1), atoms({"h", "t"}),
                         {{Value::atom("x0"), Value::dist({{Value::atom("h"), Rational(1, 3)}, {Value::atom("t"), Rational(2, 3)}})}}};
    CHECK(parse_kleisli_arrow(serialize(k)) == k);
  }

  TEST_CASE("references resolve against the document directory") {
    const Document doc = read_document(fixture_path("functor-id-walking-arrow.json"));
    const FinFunctor f = load_functor(doc.json, doc.dir);
    CHECK(f == identity_functor(f.source()));
    CHECK(f.source().object_names() == std::vector<Name>{"A", "B"});
    CHECK(thrown_kind([&] { load_functor(doc.json, "/nonexistent"); }) == ErrorKind::io);

    const Document ps = read_document(fixture_path("representable-presheaf.json"));
    const Presheaf p = load_presheaf(ps.json, ps.dir);
    CHECK(is_representable(p).has_value());
  }
}
