#pragma once

// JSON documents for every structure: schema parsing into raw data,
// canonical serialization, and loaders that resolve file references and
// validate.
//
// Where a document embeds another structure (the source of a functor, the
// base of a presheaf) the field holds either the inline document or a path
// relative to the referencing file.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fincat/adjunction.hpp"
#include "fincat/finset.hpp"
#include "fincat/monad.hpp"
#include "fincat/order.hpp"
#include "fincat/quiver.hpp"
#include "fincat/universal.hpp"
#include "fincat/yoneda.hpp"

namespace fincat {

enum class DocKind {
  category,
  graph,
  functor,
  nat,
  poset,
  monotone,
  function,
  set_diagram,
  presheaf,
  adjunction,
  monoid,
  kleisli_arrow,
};

std::string_view to_string(DocKind kind);
/// Throws UnknownKind.
DocKind parse_doc_kind(std::string_view s);
/// Guesses the kind from the fields present; throws UnknownKind.
DocKind detect_kind(const nlohmann::json& j);

/// A document as read from disk. `dir` resolves references.
struct Document {
  nlohmann::json json;
  std::filesystem::path dir;
};

/// Throws Syntax with "line" and "col" on malformed JSON or a repeated
/// object key.
nlohmann::json parse_json_text(const std::string& text);
/// Throws Io or Syntax.
Document read_document(const std::filesystem::path& path);

struct GraphSpec {
  std::vector<Name> vertices;
  std::vector<EdgeSpec> edges;
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct FunctorSpec {
  nlohmann::json source;
  nlohmann::json target;
  RawFunctor map;
  friend bool operator==(const FunctorSpec&, const FunctorSpec&) = default;
};

struct NatSpec {
  nlohmann::json source;
  nlohmann::json target;
  std::map<Name, Name> components;
  friend bool operator==(const NatSpec&, const NatSpec&) = default;
};

struct PosetSpec {
  std::vector<Name> elements;
  std::vector<std::pair<Name, Name>> leq;
  friend bool operator==(const PosetSpec&, const PosetSpec&) = default;
};

struct MonotoneSpec {
  nlohmann::json source;
  nlohmann::json target;
  std::map<Name, Name> map;
  friend bool operator==(const MonotoneSpec&, const MonotoneSpec&) = default;
};

struct FunctionSpec {
  std::vector<Name> domain;
  std::vector<Name> codomain;
  std::map<Name, Name> map;
  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

/// A FinSet-valued diagram: a set per shape object, a function per shape
/// morphism. For presheaves the functions run P(tgt f) → P(src f).
struct SetValuesSpec {
  nlohmann::json shape;
  std::map<Name, std::vector<Name>> sets;
  std::map<Name, std::map<Name, Name>> functions;
  friend bool operator==(const SetValuesSpec&, const SetValuesSpec&) = default;
};

struct AdjunctionSpec {
  nlohmann::json left;
  nlohmann::json right;
  std::map<Name, Name> unit;
  std::map<Name, Name> counit;
  friend bool operator==(const AdjunctionSpec&, const AdjunctionSpec&) = default;
};

/// Schema parsing. Throws Syntax naming the offending field or the repeated
/// name; no semantic validation happens here.
RawCategory parse_category(const nlohmann::json& j);
GraphSpec parse_graph(const nlohmann::json& j);
FunctorSpec parse_functor(const nlohmann::json& j);
NatSpec parse_nat(const nlohmann::json& j);
PosetSpec parse_poset(const nlohmann::json& j);
MonotoneSpec parse_monotone(const nlohmann::json& j);
FunctionSpec parse_function(const nlohmann::json& j);
SetValuesSpec parse_set_diagram(const nlohmann::json& j);
SetValuesSpec parse_presheaf(const nlohmann::json& j);
AdjunctionSpec parse_adjunction(const nlohmann::json& j);
MonoidTable parse_monoid(const nlohmann::json& j);
KleisliArrow parse_kleisli_arrow(const nlohmann::json& j);

/// Canonical forms: keys sorted, name lists and entry lists sorted.
nlohmann::json serialize(const RawCategory& c);
nlohmann::json serialize(const GraphSpec& g);
nlohmann::json serialize(const FunctorSpec& f);
nlohmann::json serialize(const NatSpec& n);
nlohmann::json serialize(const PosetSpec& p);
nlohmann::json serialize(const MonotoneSpec& m);
nlohmann::json serialize(const FunctionSpec& f);
/// `actions` selects the presheaf field name.
nlohmann::json serialize(const SetValuesSpec& s, bool actions = false);
nlohmann::json serialize(const AdjunctionSpec& a);
nlohmann::json serialize(const MonoidTable& m);
nlohmann::json serialize(const KleisliArrow& k);

nlohmann::json serialize(const FinCategory& c);
nlohmann::json serialize(const MultiGraph& g);
nlohmann::json serialize(const FinPreorder& p);
/// Inline source and target documents.
nlohmann::json serialize(const FinFunctor& f);
nlohmann::json serialize(const MonotoneMap& f);
nlohmann::json serialize(const FinFunction& f);

/// Schema-checks `j` as `kind` and returns its canonical form.
nlohmann::json canonicalize(DocKind kind, const nlohmann::json& j);
/// Pretty-printed canonical text with a trailing newline.
std::string canonical_text(const nlohmann::json& j);

/// parse(path, kind): reads, schema-checks and canonicalizes. A repeated
/// name is reported with the line and column of its second occurrence.
Document parse_file(const std::filesystem::path& path, DocKind kind);

/// Loaders resolve references relative to `dir` and validate.
FinCategory load_category(const nlohmann::json& j, const std::filesystem::path& dir);
MultiGraph load_graph(const nlohmann::json& j, const std::filesystem::path& dir);
FinFunctor load_functor(const nlohmann::json& j, const std::filesystem::path& dir);
NatTrans load_nat(const nlohmann::json& j, const std::filesystem::path& dir);
FinPreorder load_poset(const nlohmann::json& j, const std::filesystem::path& dir);
MonotoneMap load_monotone(const nlohmann::json& j, const std::filesystem::path& dir);
FinFunction load_function(const nlohmann::json& j, const std::filesystem::path& dir);
SetFunctor load_set_diagram(const nlohmann::json& j, const std::filesystem::path& dir);
Presheaf load_presheaf(const nlohmann::json& j, const std::filesystem::path& dir);
/// Validated with validate_adjunction.
Adjunction load_adjunction(const nlohmann::json& j, const std::filesystem::path& dir);
/// Unchecked data, for check_adjunction.
Adjunction load_adjunction_data(const nlohmann::json& j, const std::filesystem::path& dir);
MonoidTable load_monoid(const nlohmann::json& j, const std::filesystem::path& dir);

}  // namespace fincat
