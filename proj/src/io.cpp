#include "fincat/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace fincat {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::pair<DocKind, std::string_view> kind_names[] = {
    {DocKind::category, "category"},   {DocKind::graph, "graph"},
    {DocKind::functor, "functor"},     {DocKind::nat, "nat"},
    {DocKind::poset, "poset"},         {DocKind::monotone, "monotone"},
    {DocKind::function, "function"},   {DocKind::set_diagram, "set-diagram"},
    {DocKind::presheaf, "presheaf"},   {DocKind::adjunction, "adjunction"},
    {DocKind::monoid, "monoid"},       {DocKind::kleisli_arrow, "kleisli-arrow"},
};

[[noreturn]] void schema_error(const std::string& where, const std::string& what, json extra = json::object()) {
  extra["field"] = where;
  throw Error(ErrorKind::syntax, where + ": " + what, std::move(extra));
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

std::string path_of(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

Name name_of(const json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

std::vector<Name> name_list(const json& j, const std::string& where, bool unique = true) {
  if (!j.is_array()) schema_error(where, "expected an array of names");
  std::vector<Name> out;
  std::set<Name> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    Name n = name_of(j[i], where + "[" + std::to_string(i) + "]");
    if (unique && !seen.insert(n).second) schema_error(where, "duplicate name " + n, {{"duplicate", n}});
    out.push_back(std::move(n));
  }
  return out;
}

std::map<Name, Name> name_map(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object of names");
  std::map<Name, Name> out;
  for (const auto& [k, v] : j.items()) out[k] = name_of(v, path_of(where, k));
  return out;
}

// Inline documents are kept; path references stay strings.
json embedded(const json& j, const std::string& where) {
  if (!j.is_string() && !j.is_object()) schema_error(where, "expected an inline document or a file path");
  return j;
}

json sorted_names(std::vector<Name> names) {
  std::sort(names.begin(), names.end());
  return names;
}

std::pair<json, fs::path> resolve(const json& j, const fs::path& dir) {
  if (j.is_string()) {
    Document d = read_document(dir / j.get<std::string>());
    return {std::move(d.json), std::move(d.dir)};
  }
  return {j, dir};
}

json embedded_canonical(const json& j, DocKind kind) { return j.is_string() ? j : canonicalize(kind, j); }

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string regex_escape(const std::string& s) {
  static const std::regex special(R"([.^$|()\[\]{}*+?\\])");
  return std::regex_replace(s, special, R"(\$&)");
}

// Offset of the second occurrence of a repeated name inside the list
// stored under `list_field`, or of a repeated object key.
std::optional<std::size_t> locate_duplicate(const std::string& text, const std::string& list_field,
                                            const std::string& name) {
  const std::string quoted = regex_escape(json(name).dump());
  std::regex start_re("\"" + regex_escape(list_field) + "\"\\s*:\\s*[\\[{]");
  std::smatch start;
  std::size_t from = 0;
  if (!list_field.empty() && std::regex_search(text, start, start_re)) {
    from = static_cast<std::size_t>(start.position(0) + start.length(0));
  }
  std::regex item_re(list_field == "morphisms" || list_field == "edges" ? "\"name\"\\s*:\\s*" + quoted
                     : list_field.empty()                               ? quoted + "\\s*:"
                                                                        : quoted);
  auto begin = std::sregex_iterator(text.begin() + static_cast<std::ptrdiff_t>(from), text.end(), item_re);
  int seen = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    if (++seen == 2) return from + static_cast<std::size_t>(it->position(0));
  }
  return std::nullopt;
}

std::string last_segment(const std::string& where) {
  auto dot = where.rfind('.');
  std::string s = dot == std::string::npos ? where : where.substr(dot + 1);
  auto br = s.find('[');
  return br == std::string::npos ? s : s.substr(0, br);
}

json set_values_body(const SetValuesSpec& s) {
  json sets = json::object();
  for (const auto& [k, v] : s.sets) sets[k] = sorted_names(v);
  json fns = json::object();
  for (const auto& [k, v] : s.functions) fns[k] = v;
  return {{"sets", sets}, {"fns", fns}};
}

SetValuesSpec parse_set_values(const json& j, const std::string& shape_key, const std::string& fn_key) {
  SetValuesSpec s;
  s.shape = embedded(field(j, shape_key, ""), shape_key);
  const json& sets = field(j, "sets", "");
  if (!sets.is_object()) schema_error("sets", "expected an object of element lists");
  for (const auto& [k, v] : sets.items()) s.sets[k] = name_list(v, "sets." + k);
  if (j.contains(fn_key)) {
    const json& fns = j.at(fn_key);
    if (!fns.is_object()) schema_error(fn_key, "expected an object of maps");
    for (const auto& [k, v] : fns.items()) s.functions[k] = name_map(v, fn_key + "." + k);
  }
  return s;
}

// The function for every shape morphism, identities defaulting to identity
// functions. `contravariant` reads each entry as P(tgt) → P(src).
std::pair<std::vector<FinSet>, std::vector<FinFunction>> set_values(const SetValuesSpec& s, const FinCategory& c,
                                                                     bool contravariant) {
  for (const auto& [k, v] : s.sets) c.object(k);
  for (const auto& [k, v] : s.functions) c.morphism(k);
  std::vector<FinSet> sets;
  for (const auto& name : c.object_names()) {
    auto it = s.sets.find(name);
    if (it == s.sets.end()) throw Error(ErrorKind::missing_image, "no set for " + name, {{"object", name}});
    sets.emplace_back(it->second);
  }
  std::vector<FinFunction> fns;
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const FinSet& from = sets[contravariant ? c.tgt(m) : c.src(m)];
    const FinSet& to = sets[contravariant ? c.src(m) : c.tgt(m)];
    auto it = s.functions.find(c.morphism_name(m));
    if (it != s.functions.end()) {
      fns.push_back(FinFunction::from_map(from, to, it->second));
    } else if (c.is_identity(m)) {
      fns.push_back(FinFunction::identity(from));
    } else {
      throw Error(ErrorKind::missing_image, "no function for " + c.morphism_name(m),
                  {{"morphism", c.morphism_name(m)}});
    }
  }
  return {std::move(sets), std::move(fns)};
}

}  // namespace

std::string_view to_string(DocKind kind) {
  for (const auto& [k, n] : kind_names) {
    if (k == kind) return n;
  }
  return "unknown";
}

DocKind parse_doc_kind(std::string_view s) {
  for (const auto& [k, n] : kind_names) {
    if (n == s) return k;
  }
  throw Error(ErrorKind::unknown_kind, "unknown document kind " + std::string(s), {{"kind", std::string(s)}});
}

DocKind detect_kind(const json& j) {
  if (j.is_object()) {
    auto has = [&](const char* k) { return j.contains(k); };
    if (has("left") && has("right")) return DocKind::adjunction;
    if (has("components")) return DocKind::nat;
    if (has("vertices")) return DocKind::graph;
    if (has("base")) return DocKind::presheaf;
    if (has("shape") && has("sets")) return DocKind::set_diagram;
    if (has("source") && has("objects")) return DocKind::functor;
    if (has("source") && has("map")) return DocKind::monotone;
    if (has("domain") && has("map")) return j.at("map").is_array() ? DocKind::kleisli_arrow : DocKind::function;
    if (has("elements") && has("leq")) return DocKind::poset;
    if (has("elements") && has("product")) return DocKind::monoid;
    if (has("objects") && has("morphisms")) return DocKind::category;
  }
  throw Error(ErrorKind::unknown_kind, "cannot tell what kind of document this is");
}

json parse_json_text(const std::string& text) {
  std::vector<std::set<std::string>> keys;
  std::optional<std::string> duplicate;
  json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: keys.emplace_back(); break;
      case json::parse_event_t::object_end: keys.pop_back(); break;
      case json::parse_event_t::key:
        if (!keys.back().insert(parsed.get<std::string>()).second && !duplicate) duplicate = parsed.get<std::string>();
        break;
      default: break;
    }
    return true;
  };
  json j;
  try {
    j = json::parse(text, cb);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorKind::syntax, "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col),
                {{"line", line}, {"col", col}});
  }
  if (duplicate) {
    json w = {{"duplicate", *duplicate}};
    std::string msg = "repeated key " + *duplicate;
    if (auto at = locate_duplicate(text, "", *duplicate)) {
      auto [line, col] = line_col(text, *at);
      w["line"] = line;
      w["col"] = col;
      msg += " at line " + std::to_string(line) + ", column " + std::to_string(col);
    }
    throw Error(ErrorKind::syntax, msg, w);
  }
  return j;
}

Document read_document(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path.string(), {{"path", path.string()}});
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Document{parse_json_text(ss.str()), path.parent_path()};
  } catch (Error& e) {
    json w = e.witness();
    w["path"] = path.string();
    throw Error(e.kind(), path.string() + ": " + e.message(), w);
  }
}

RawCategory parse_category(const json& j) {
  RawCategory raw;
  raw.objects = name_list(field(j, "objects", ""), "objects");
  const json& ms = field(j, "morphisms", "");
  if (!ms.is_array()) schema_error("morphisms", "expected an array");
  std::set<Name> seen;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string where = "morphisms[" + std::to_string(i) + "]";
    MorphismSpec m{name_of(field(ms[i], "name", where), where + ".name"), name_of(field(ms[i], "src", where), where + ".src"),
                   name_of(field(ms[i], "tgt", where), where + ".tgt")};
    if (!seen.insert(m.name).second) {
      schema_error("morphisms", "duplicate morphism name " + m.name, {{"duplicate", m.name}});
    }
    raw.morphisms.push_back(std::move(m));
  }
  if (j.contains("identities")) raw.identities = name_map(j.at("identities"), "identities");
  if (j.contains("compose")) {
    const json& cs = j.at("compose");
    if (!cs.is_array()) schema_error("compose", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string where = "compose[" + std::to_string(i) + "]";
      raw.compose.push_back({name_of(field(cs[i], "first", where), where + ".first"),
                             name_of(field(cs[i], "then", where), where + ".then"),
                             name_of(field(cs[i], "equals", where), where + ".equals")});
    }
  }
  return raw;
}

GraphSpec parse_graph(const json& j) {
  GraphSpec g;
  g.vertices = name_list(field(j, "vertices", ""), "vertices");
  const json& es = field(j, "edges", "");
  if (!es.is_array()) schema_error("edges", "expected an array");
  std::set<Name> seen;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    EdgeSpec e{name_of(field(es[i], "name", where), where + ".name"), name_of(field(es[i], "src", where), where + ".src"),
               name_of(field(es[i], "tgt", where), where + ".tgt")};
    if (!seen.insert(e.name).second) schema_error("edges", "duplicate edge name " + e.name, {{"duplicate", e.name}});
    g.edges.push_back(std::move(e));
  }
  return g;
}

FunctorSpec parse_functor(const json& j) {
  FunctorSpec f;
  f.source = embedded(field(j, "source", ""), "source");
  f.target = embedded(field(j, "target", ""), "target");
  f.map.objects = name_map(field(j, "objects", ""), "objects");
  if (j.contains("morphisms")) f.map.morphisms = name_map(j.at("morphisms"), "morphisms");
  return f;
}

NatSpec parse_nat(const json& j) {
  NatSpec n;
  n.source = embedded(field(j, "source", ""), "source");
  n.target = embedded(field(j, "target", ""), "target");
  n.components = name_map(field(j, "components", ""), "components");
  return n;
}

PosetSpec parse_poset(const json& j) {
  PosetSpec p;
  p.elements = name_list(field(j, "elements", ""), "elements");
  const json& leq = field(j, "leq", "");
  if (!leq.is_array()) schema_error("leq", "expected an array of pairs");
  for (std::size_t i = 0; i < leq.size(); ++i) {
    const std::string where = "leq[" + std::to_string(i) + "]";
    if (!leq[i].is_array() || leq[i].size() != 2) schema_error(where, "expected a pair [a, b]");
    p.leq.emplace_back(name_of(leq[i][0], where), name_of(leq[i][1], where));
  }
  return p;
}

MonotoneSpec parse_monotone(const json& j) {
  MonotoneSpec m;
  m.source = embedded(field(j, "source", ""), "source");
  m.target = embedded(field(j, "target", ""), "target");
  m.map = name_map(field(j, "map", ""), "map");
  return m;
}

FunctionSpec parse_function(const json& j) {
  FunctionSpec f;
  f.domain = name_list(field(j, "domain", ""), "domain");
  f.codomain = name_list(field(j, "codomain", ""), "codomain");
  f.map = name_map(field(j, "map", ""), "map");
  return f;
}

SetValuesSpec parse_set_diagram(const json& j) { return parse_set_values(j, "shape", "functions"); }

SetValuesSpec parse_presheaf(const json& j) { return parse_set_values(j, "base", "actions"); }

AdjunctionSpec parse_adjunction(const json& j) {
  AdjunctionSpec a;
  a.left = embedded(field(j, "left", ""), "left");
  a.right = embedded(field(j, "right", ""), "right");
  a.unit = name_map(field(j, "unit", ""), "unit");
  a.counit = name_map(field(j, "counit", ""), "counit");
  return a;
}

MonoidTable parse_monoid(const json& j) {
  MonoidTable m;
  m.elements = name_list(field(j, "elements", ""), "elements");
  const json& prod = field(j, "product", "");
  if (!prod.is_object()) schema_error("product", "expected an object of rows");
  auto index = [&](const Name& n, const std::string& where) {
    auto it = std::find(m.elements.begin(), m.elements.end(), n);
    if (it == m.elements.end()) schema_error(where, "unknown element " + n, {{"element", n}});
    return static_cast<std::size_t>(it - m.elements.begin());
  };
  m.product.assign(m.elements.size(), std::vector<std::size_t>(m.elements.size(), npos));
  for (const auto& [a, row] : prod.items()) {
    const std::size_t ia = index(a, "product");
    for (const auto& [b, v] : name_map(row, "product." + a)) {
      m.product[ia][index(b, "product." + a)] = index(v, "product." + a + "." + b);
    }
  }
  for (std::size_t a = 0; a < m.elements.size(); ++a) {
    for (std::size_t b = 0; b < m.elements.size(); ++b) {
      if (m.product[a][b] == npos) {
        schema_error("product." + m.elements[a] + "." + m.elements[b], "missing product entry");
      }
    }
  }
  return m;
}

KleisliArrow parse_kleisli_arrow(const json& j) {
  auto carrier = [](const json& arr, const std::string& where) {
    if (!arr.is_array()) schema_error(where, "expected an array of values");
    Carrier c;
    for (const auto& v : arr) c.push_back(value_from_json(v));
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) schema_error(where, "repeated value");
    return c;
  };
  KleisliArrow k;
  k.domain = carrier(field(j, "domain", ""), "domain");
  k.codomain = carrier(field(j, "codomain", ""), "codomain");
  const json& map = field(j, "map", "");
  if (!map.is_array()) schema_error("map", "expected an array of [x, t] pairs");
  for (std::size_t i = 0; i < map.size(); ++i) {
    const std::string where = "map[" + std::to_string(i) + "]";
    if (!map[i].is_array() || map[i].size() != 2) schema_error(where, "expected a pair [x, t]");
    Value x = value_from_json(map[i][0]);
    if (!k.map.emplace(x, value_from_json(map[i][1])).second) {
      schema_error("map", "repeated argument " + x.to_string(), {{"duplicate", x.to_string()}});
    }
  }
  return k;
}

json serialize(const RawCategory& c) {
  std::vector<MorphismSpec> ms = c.morphisms;
  std::sort(ms.begin(), ms.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  json morphisms = json::array();
  for (const auto& m : ms) morphisms.push_back({{"name", m.name}, {"src", m.src}, {"tgt", m.tgt}});
  std::vector<CompositeSpec> cs = c.compose;
  std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.then, a.equals) < std::tie(b.first, b.then, b.equals);
  });
  json compose = json::array();
  for (const auto& e : cs) compose.push_back({{"equals", e.equals}, {"first", e.first}, {"then", e.then}});
  return {{"objects", sorted_names(c.objects)},
          {"morphisms", morphisms},
          {"identities", json(c.identities)},
          {"compose", compose}};
}

json serialize(const GraphSpec& g) {
  std::vector<EdgeSpec> es = g.edges;
  std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  json edges = json::array();
  for (const auto& e : es) edges.push_back({{"name", e.name}, {"src", e.src}, {"tgt", e.tgt}});
  return {{"vertices", sorted_names(g.vertices)}, {"edges", edges}};
}

json serialize(const FunctorSpec& f) {
  return {{"source", embedded_canonical(f.source, DocKind::category)},
          {"target", embedded_canonical(f.target, DocKind::category)},
          {"objects", json(f.map.objects)},
          {"morphisms", json(f.map.morphisms)}};
}

json serialize(const NatSpec& n) {
  return {{"source", embedded_canonical(n.source, DocKind::functor)},
          {"target", embedded_canonical(n.target, DocKind::functor)},
          {"components", json(n.components)}};
}

json serialize(const PosetSpec& p) {
  auto leq = p.leq;
  std::sort(leq.begin(), leq.end());
  leq.erase(std::unique(leq.begin(), leq.end()), leq.end());
  json pairs = json::array();
  for (const auto& [a, b] : leq) pairs.push_back({a, b});
  return {{"elements", sorted_names(p.elements)}, {"leq", pairs}};
}

json serialize(const MonotoneSpec& m) {
  return {{"source", embedded_canonical(m.source, DocKind::poset)},
          {"target", embedded_canonical(m.target, DocKind::poset)},
          {"map", json(m.map)}};
}

json serialize(const FunctionSpec& f) {
  return {{"domain", sorted_names(f.domain)}, {"codomain", sorted_names(f.codomain)}, {"map", json(f.map)}};
}

json serialize(const SetValuesSpec& s, bool actions) {
  json body = set_values_body(s);
  if (actions) {
    return {{"base", embedded_canonical(s.shape, DocKind::category)}, {"sets", body["sets"]}, {"actions", body["fns"]}};
  }
  return {{"shape", embedded_canonical(s.shape, DocKind::category)}, {"sets", body["sets"]}, {"functions", body["fns"]}};
}

json serialize(const AdjunctionSpec& a) {
  return {{"left", embedded_canonical(a.left, DocKind::functor)},
          {"right", embedded_canonical(a.right, DocKind::functor)},
          {"unit", json(a.unit)},
          {"counit", json(a.counit)}};
}

json serialize(const MonoidTable& m) {
  json prod = json::object();
  for (std::size_t a = 0; a < m.elements.size(); ++a) {
    for (std::size_t b = 0; b < m.elements.size(); ++b) {
      prod[m.elements[a]][m.elements[b]] = m.elements[m.product[a][b]];
    }
  }
  return {{"elements", sorted_names(m.elements)}, {"product", prod}};
}

json serialize(const KleisliArrow& k) {
  json dom = json::array(), cod = json::array(), map = json::array();
  for (const auto& v : k.domain) dom.push_back(to_json(v));
  for (const auto& v : k.codomain) cod.push_back(to_json(v));
  for (const auto& [x, t] : k.map) map.push_back({to_json(x), to_json(t)});
  return {{"domain", dom}, {"codomain", cod}, {"map", map}};
}

json serialize(const FinCategory& c) { return serialize(c.to_raw()); }

json serialize(const MultiGraph& g) { return serialize(GraphSpec{g.vertices(), g.edges()}); }

json serialize(const FinPreorder& p) { return serialize(PosetSpec{p.elements(), p.pairs()}); }

json serialize(const FinFunctor& f) {
  return serialize(FunctorSpec{serialize(f.source()), serialize(f.target()), f.to_raw()});
}

json serialize(const MonotoneMap& f) {
  std::map<Name, Name> map;
  for (std::size_t i = 0; i < f.images.size(); ++i) map[f.source.element(i)] = f.target.element(f.images[i]);
  return serialize(MonotoneSpec{serialize(f.source), serialize(f.target), map});
}

json serialize(const FinFunction& f) {
  return serialize(FunctionSpec{f.domain().elements(), f.codomain().elements(), f.to_map()});
}

json canonicalize(DocKind kind, const json& j) {
  switch (kind) {
    case DocKind::category: return serialize(parse_category(j));
    case DocKind::graph: return serialize(parse_graph(j));
    case DocKind::functor: return serialize(parse_functor(j));
    case DocKind::nat: return serialize(parse_nat(j));
    case DocKind::poset: return serialize(parse_poset(j));
    case DocKind::monotone: return serialize(parse_monotone(j));
    case DocKind::function: return serialize(parse_function(j));
    case DocKind::set_diagram: return serialize(parse_set_diagram(j), false);
    case DocKind::presheaf: return serialize(parse_presheaf(j), true);
    case DocKind::adjunction: return serialize(parse_adjunction(j));
    case DocKind::monoid: return serialize(parse_monoid(j));
    case DocKind::kleisli_arrow: return serialize(parse_kleisli_arrow(j));
  }
  throw Error(ErrorKind::unknown_kind, "unknown document kind");
}

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

Document parse_file(const fs::path& path, DocKind kind) {
  Document d = read_document(path);
  try {
    d.json = canonicalize(kind, d.json);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::syntax || !e.witness().contains("duplicate")) throw;
    json w = e.witness();
    w["path"] = path.string();
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string name = w["duplicate"].get<std::string>();
    std::string msg = path.string() + ": " + e.message();
    if (auto at = locate_duplicate(ss.str(), last_segment(w.value("field", "")), name)) {
      auto [line, col] = line_col(ss.str(), *at);
      w["line"] = line;
      w["col"] = col;
      msg += " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
    }
    throw Error(ErrorKind::syntax, msg, w);
  }
  return d;
}

FinCategory load_category(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  // Unit composites may be left out of the table.
  return validate_category(with_unit_composites(parse_category(doc)));
}

MultiGraph load_graph(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  GraphSpec g = parse_graph(doc);
  return MultiGraph(std::move(g.vertices), std::move(g.edges));
}

FinFunctor load_functor(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  FunctorSpec f = parse_functor(doc);
  FinCategory source = load_category(f.source, base);
  FinCategory target = load_category(f.target, base);
  // Identities may be left out of the morphism map.
  for (ObjectId x = 0; x < source.object_count(); ++x) {
    const Name& id = source.morphism_name(source.identity(x));
    auto obj = f.map.objects.find(source.object_name(x));
    if (f.map.morphisms.count(id) || obj == f.map.objects.end()) continue;
    if (auto y = target.find_object(obj->second)) f.map.morphisms[id] = target.morphism_name(target.identity(*y));
  }
  return validate_functor(source, target, f.map);
}

NatTrans load_nat(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  NatSpec n = parse_nat(doc);
  return validate_nat(load_functor(n.source, base), load_functor(n.target, base), n.components);
}

FinPreorder load_poset(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  PosetSpec p = parse_poset(doc);
  return FinPreorder(std::move(p.elements), p.leq);
}

MonotoneMap load_monotone(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  MonotoneSpec m = parse_monotone(doc);
  FinPreorder source = load_poset(m.source, base);
  FinPreorder target = load_poset(m.target, base);
  for (const auto& [k, v] : m.map) source.index_of(k);
  std::vector<std::size_t> images;
  for (const auto& x : source.elements()) {
    auto it = m.map.find(x);
    if (it == m.map.end()) throw Error(ErrorKind::missing_image, "no image for " + x, {{"element", x}});
    images.push_back(target.index_of(it->second));
  }
  return make_monotone(std::move(source), std::move(target), std::move(images));
}

FinFunction load_function(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  FunctionSpec f = parse_function(doc);
  return FinFunction::from_map(FinSet(f.domain), FinSet(f.codomain), f.map);
}

SetFunctor load_set_diagram(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  SetValuesSpec s = parse_set_diagram(doc);
  FinCategory shape = load_category(s.shape, base);
  auto [sets, fns] = set_values(s, shape, false);
  return SetFunctor(shape, std::move(sets), std::move(fns));
}

Presheaf load_presheaf(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  SetValuesSpec s = parse_presheaf(doc);
  FinCategory c = load_category(s.shape, base);
  auto [sets, fns] = set_values(s, c, true);
  return make_presheaf(c, std::move(sets), std::move(fns));
}

Adjunction load_adjunction_data(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  AdjunctionSpec a = parse_adjunction(doc);
  FinFunctor left = load_functor(a.left, base);
  FinFunctor right = load_functor(a.right, base);
  NatTrans unit = validate_nat(identity_functor(left.source()), compose(right, left), a.unit);
  NatTrans counit = validate_nat(compose(left, right), identity_functor(left.target()), a.counit);
  return Adjunction{std::move(left), std::move(right), std::move(unit), std::move(counit)};
}

Adjunction load_adjunction(const json& j, const fs::path& dir) {
  return validate_adjunction(load_adjunction_data(j, dir));
}

MonoidTable load_monoid(const json& j, const fs::path& dir) {
  auto [doc, base] = resolve(j, dir);
  return parse_monoid(doc);
}

}  // namespace fincat
