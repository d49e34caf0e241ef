#include "fincat/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fincat {

MultiGraph::MultiGraph(std::vector<Name> vertices, std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (auto it = std::adjacent_find(vertices.begin(), vertices.end()); it != vertices.end()) {
    throw Error(ErrorKind::duplicate_name, "duplicate vertex " + *it, {{"vertex", *it}});
  }
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].name == edges[i - 1].name) {
      throw Error(ErrorKind::duplicate_name, "duplicate edge " + edges[i].name, {{"edge", edges[i].name}});
    }
  }
  vertices_ = std::move(vertices);
  edges_ = std::move(edges);
  out_.resize(vertices_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    src_.push_back(vertex(edges_[e].src));
    tgt_.push_back(vertex(edges_[e].tgt));
    out_[src_.back()].push_back(e);
  }
}

VertexId MultiGraph::vertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) {
    throw Error(ErrorKind::unknown_object, "unknown vertex " + std::string(name), {{"vertex", std::string(name)}});
  }
  return static_cast<VertexId>(it - vertices_.begin());
}

EdgeId MultiGraph::edge(std::string_view name) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), name,
                             [](const EdgeSpec& e, std::string_view n) { return e.name < n; });
  if (it == edges_.end() || it->name != name) {
    throw Error(ErrorKind::unknown_morphism, "unknown edge " + std::string(name), {{"edge", std::string(name)}});
  }
  return static_cast<EdgeId>(it - edges_.begin());
}

GraphMorphism make_graph_morphism(MultiGraph source, MultiGraph target, std::vector<VertexId> vertices,
                                  std::vector<EdgeId> edges) {
  if (vertices.size() != source.vertex_count() || edges.size() != source.edge_count()) {
    throw Error(ErrorKind::missing_image, "graph morphism is not total");
  }
  for (VertexId v : vertices) {
    if (v >= target.vertex_count()) throw Error(ErrorKind::unknown_object, "vertex image out of range");
  }
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (edges[e] >= target.edge_count()) throw Error(ErrorKind::unknown_morphism, "edge image out of range");
    if (target.src(edges[e]) != vertices[source.src(e)] || target.tgt(edges[e]) != vertices[source.tgt(e)]) {
      throw Error(ErrorKind::endpoint_mismatch, "image of " + source.edge_name(e) + " breaks incidence",
                  {{"edge", source.edge_name(e)}, {"image", target.edge_name(edges[e])}});
    }
  }
  return GraphMorphism{std::move(source), std::move(target), std::move(vertices), std::move(edges)};
}

VertexId chain_target(const MultiGraph& g, const Chain& c) {
  return c.edges.empty() ? c.base : g.tgt(c.edges.back());
}

Name chain_name(const MultiGraph& g, const Chain& c) {
  if (c.edges.empty()) return "id:" + g.vertex_name(c.base);
  Name s;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    if (i) s += ";";
    s += g.edge_name(c.edges[i]);
  }
  return s;
}

nlohmann::json chain_json(const MultiGraph& g, const Chain& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (EdgeId e : c.edges) edges.push_back(g.edge_name(e));
  return {{"base", g.vertex_name(c.base)}, {"edges", edges}};
}

Chain concatenate(const MultiGraph& g, const Chain& a, const Chain& b) {
  if (chain_target(g, a) != b.base) {
    throw Error(ErrorKind::endpoint_mismatch, "chains do not meet",
                {{"first", chain_name(g, a)}, {"then", chain_name(g, b)}});
  }
  Chain c = a;
  c.edges.insert(c.edges.end(), b.edges.begin(), b.edges.end());
  return c;
}

Chain map_chain(const GraphMorphism& f, const Chain& c) {
  Chain out{f.vertices.at(c.base), {}};
  for (EdgeId e : c.edges) out.edges.push_back(f.edges.at(e));
  return out;
}

std::optional<std::vector<EdgeId>> find_cycle(const MultiGraph& g) {
  enum Color { white, grey, black };
  std::vector<Color> color(g.vertex_count(), white);
  std::vector<EdgeId> stack;
  std::optional<std::vector<EdgeId>> found;
  std::function<void(VertexId)> visit = [&](VertexId v) {
    color[v] = grey;
    for (EdgeId e : g.out_edges(v)) {
      if (found) return;
      VertexId w = g.tgt(e);
      stack.push_back(e);
      if (color[w] == grey) {
        auto start = std::find_if(stack.begin(), stack.end(), [&](EdgeId s) { return g.src(s) == w; });
        found = std::vector<EdgeId>(start, stack.end());
        return;
      }
      if (color[w] == white) visit(w);
      if (found) return;
      stack.pop_back();
    }
    color[v] = black;
  };
  for (VertexId v = 0; v < g.vertex_count() && !found; ++v) {
    if (color[v] == white) visit(v);
  }
  return found;
}

ChainEnumeration chains_up_to(const MultiGraph& g, std::size_t n, std::uint64_t budget) {
  ChainEnumeration out;
  std::vector<Chain> level;
  for (VertexId v = 0; v < g.vertex_count(); ++v) level.push_back(Chain{v, {}});
  for (std::size_t len = 0;; ++len) {
    if (out.chains.size() + level.size() > budget) {
      throw Error(ErrorKind::budget_exceeded, "chain enumeration exceeds budget",
                  {{"length", len}, {"budget", budget}});
    }
    out.counts.push_back(level.size());
    out.chains.insert(out.chains.end(), level.begin(), level.end());
    if (len == n) break;
    std::vector<Chain> next;
    for (const auto& c : level) {
      for (EdgeId e : g.out_edges(chain_target(g, c))) {
        Chain d = c;
        d.edges.push_back(e);
        next.push_back(std::move(d));
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

FreeCategory free_category(const MultiGraph& g, std::uint64_t budget) {
  if (auto cycle = find_cycle(g)) {
    nlohmann::json names = nlohmann::json::array();
    for (EdgeId e : *cycle) names.push_back(g.edge_name(e));
    throw Error(ErrorKind::cyclic_graph, "graph has a directed cycle; its free category is infinite",
                {{"cycle", names}});
  }
  // Acyclic: no chain is longer than the vertex count.
  auto all = chains_up_to(g, g.vertex_count(), budget);
  RawCategory raw;
  raw.objects = g.vertices();
  std::vector<std::vector<std::size_t>> starting_at(g.vertex_count());
  for (std::size_t i = 0; i < all.chains.size(); ++i) {
    const auto& c = all.chains[i];
    raw.morphisms.push_back({chain_name(g, c), g.vertex_name(c.base), g.vertex_name(chain_target(g, c))});
    if (c.edges.empty()) raw.identities[g.vertex_name(c.base)] = chain_name(g, c);
    starting_at[c.base].push_back(i);
  }
  std::uint64_t entries = 0;
  for (const auto& f : all.chains) entries += starting_at[chain_target(g, f)].size();
  if (entries > budget) {
    throw Error(ErrorKind::budget_exceeded, "free category composition table exceeds budget",
                {{"entries", entries}, {"budget", budget}});
  }
  for (const auto& f : all.chains) {
    for (std::size_t j : starting_at[chain_target(g, f)]) {
      const auto& h = all.chains[j];
      raw.compose.push_back({chain_name(g, f), chain_name(g, h), chain_name(g, concatenate(g, f, h))});
    }
  }
  FreeCategory out;
  out.category = assemble_category(raw, false);
  std::map<Name, Chain> by_name;
  for (auto& c : all.chains) by_name.emplace(chain_name(g, c), std::move(c));
  for (const auto& name : out.category.morphism_names()) out.chains.push_back(by_name.at(name));
  return out;
}

MultiGraph underlying_graph(const FinCategory& c) {
  std::vector<EdgeSpec> edges;
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    edges.push_back({c.morphism_name(m), c.object_name(c.src(m)), c.object_name(c.tgt(m))});
  }
  return MultiGraph(c.object_names(), std::move(edges));
}

GraphMorphism free_unit(const MultiGraph& g, const FreeCategory& pg) {
  const auto& c = pg.category;
  std::vector<VertexId> vertices;
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(c.object(g.vertex_name(v)));
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back(c.morphism(g.edge_name(e)));
  return make_graph_morphism(g, underlying_graph(c), std::move(vertices), std::move(edges));
}

FinFunctor free_functor(const GraphMorphism& f, const FreeCategory& pg, const FreeCategory& ph) {
  std::vector<ObjectId> objects;
  for (VertexId v = 0; v < f.source.vertex_count(); ++v) objects.push_back(f.vertices[v]);
  std::vector<MorphismId> morphisms;
  for (const auto& c : pg.chains) {
    morphisms.push_back(ph.category.morphism(chain_name(f.target, map_chain(f, c))));
  }
  return make_functor(pg.category, ph.category, std::move(objects), std::move(morphisms));
}

MorphismId composite_counit(const FinCategory& c, const Chain& chain) {
  MorphismId acc = c.identity(chain.base);
  for (EdgeId e : chain.edges) acc = c.compose(e, acc);
  return acc;
}

namespace {

nlohmann::json morphism_or_null(const FinCategory& c, MorphismId m) {
  if (m >= c.morphism_count()) return nullptr;
  return c.morphism_name(m);
}

bool has_chains_longer_than(const MultiGraph& g, std::size_t n) {
  if (find_cycle(g)) return true;
  return n < g.vertex_count() && chains_up_to(g, n + 1).counts.back() > 0;
}

// Finite lists of composable items of one nesting level, with weights.
struct Item {
  VertexId src;
  VertexId tgt;
  std::size_t weight;
};

struct Sequence {
  VertexId base;
  std::vector<std::size_t> items;
};

std::vector<Sequence> sequences(const std::vector<Item>& items, std::size_t vertex_count, std::size_t maxweight,
                                std::uint64_t budget) {
  std::vector<std::vector<std::size_t>> from(vertex_count);
  for (std::size_t i = 0; i < items.size(); ++i) from[items[i].src].push_back(i);
  std::vector<Sequence> out;
  for (VertexId v = 0; v < vertex_count; ++v) {
    out.push_back(Sequence{v, {}});
    Sequence current{v, {}};
    std::function<void(VertexId, std::size_t)> extend = [&](VertexId at, std::size_t used) {
      for (std::size_t i : from[at]) {
        if (used + items[i].weight > maxweight) continue;
        current.items.push_back(i);
        out.push_back(current);
        if (out.size() > budget) {
          throw Error(ErrorKind::budget_exceeded, "nested chain enumeration exceeds budget", {{"budget", budget}});
        }
        extend(items[i].tgt, used + items[i].weight);
        current.items.pop_back();
      }
    };
    extend(v, 0);
  }
  return out;
}

std::size_t weight_of(const Sequence& s, const std::vector<Item>& items) {
  if (s.items.empty()) return 1;
  std::size_t w = 0;
  for (std::size_t i : s.items) w += items[i].weight;
  return w;
}

struct Levels {
  std::vector<Chain> one;        // chains of g
  std::vector<Item> one_items;
  std::vector<Sequence> two;     // chains of chains
  std::vector<Item> two_items;
  std::vector<Sequence> three;   // chains of chains of chains
};

Levels nested_chains(const MultiGraph& g, std::size_t maxweight, std::uint64_t budget, bool with_three) {
  Levels l;
  const std::size_t nv = g.vertex_count();
  std::vector<Item> edge_items;
  for (EdgeId e = 0; e < g.edge_count(); ++e) edge_items.push_back({g.src(e), g.tgt(e), 1});
  for (const auto& s : sequences(edge_items, nv, maxweight, budget)) {
    l.one.push_back(Chain{s.base, s.items});
    l.one_items.push_back({s.base, chain_target(g, l.one.back()), weight_of(s, edge_items)});
  }
  l.two = sequences(l.one_items, nv, maxweight, budget);
  for (const auto& s : l.two) {
    VertexId tgt = s.items.empty() ? s.base : l.one_items[s.items.back()].tgt;
    l.two_items.push_back({s.base, tgt, weight_of(s, l.one_items)});
  }
  if (with_three) l.three = sequences(l.two_items, nv, maxweight, budget);
  return l;
}

Chain flatten(const MultiGraph& g, VertexId base, const std::vector<Chain>& parts) {
  Chain out{base, {}};
  for (const auto& p : parts) out = concatenate(g, out, p);
  return out;
}

std::vector<Chain> parts_of(const Levels& l, const Sequence& s) {
  std::vector<Chain> parts;
  for (std::size_t i : s.items) parts.push_back(l.one[i]);
  return parts;
}

nlohmann::json nested_json(const MultiGraph& g, const std::vector<Chain>& parts) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : parts) j.push_back(chain_name(g, p));
  return j;
}

}  // namespace

Verdict verify_pu_adjunction(const MultiGraph& g, const std::optional<FinCategory>& c, std::size_t maxlen,
                             const Counit& counit, std::uint64_t budget) {
  if (maxlen < 1) throw Error(ErrorKind::invalid_argument, "maxlen must be at least 1");
  Verdict v("pu_adjunction");
  v.bounded = has_chains_longer_than(g, maxlen);
  const auto g_chains = chains_up_to(g, maxlen, budget);

  // η_G sends each edge to its length-one chain.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    v.count("unit_edges");
    Chain image{g.src(e), {e}};
    if (image.base != g.src(e) || chain_target(g, image) != g.tgt(e)) {
      v.fail({{"error", "EndpointMismatch"}, {"law", "unit"}, {"edge", g.edge_name(e)}});
      return v;
    }
  }

  // First triangle: ε_{PG} ∘ P η_G flattens ((e1),...,(en)) back to the chain.
  for (const auto& chain : g_chains.chains) {
    v.count("first_triangle");
    std::vector<Chain> singletons;
    for (EdgeId e : chain.edges) singletons.push_back(Chain{g.src(e), {e}});
    Chain back = flatten(g, chain.base, singletons);
    if (back != chain) {
      v.fail({{"error", "TriangleViolation"},
              {"side", "first"},
              {"chain", chain_json(g, chain)},
              {"got", chain_json(g, back)}});
      return v;
    }
  }
  if (!c) return v;

  const MultiGraph uc = underlying_graph(*c);
  // Second triangle: U ε_C ∘ η_{UC} is the identity on edges of U C.
  for (EdgeId f = 0; f < uc.edge_count(); ++f) {
    v.count("second_triangle");
    MorphismId got = counit(*c, Chain{uc.src(f), {f}});
    if (got != f) {
      v.fail({{"error", "TriangleViolation"},
              {"side", "second"},
              {"edge", uc.edge_name(f)},
              {"got", morphism_or_null(*c, got)}});
      return v;
    }
  }

  for (const auto& chain : chains_up_to(uc, maxlen, budget).chains) {
    v.count("counit_chains");
    MorphismId want = composite_counit(*c, chain);
    MorphismId got = counit(*c, chain);
    if (got != want) {
      v.fail({{"error", "CompositionNotPreserved"},
              {"law", "counit"},
              {"chain", chain_json(uc, chain)},
              {"expected", c->morphism_name(want)},
              {"got", morphism_or_null(*c, got)}});
      return v;
    }
  }
  v.bounded = v.bounded || has_chains_longer_than(uc, maxlen);
  return v;
}

Verdict verify_up_monad_laws(const MultiGraph& g, std::size_t maxweight, std::uint64_t budget) {
  Verdict v("up_monad_laws");
  v.bounded = true;
  const Levels l = nested_chains(g, maxweight, budget, true);

  for (const auto& chain : l.one) {
    v.count("unit_instances");
    // μ ∘ η_T: the one-element chain of chains.
    if (flatten(g, chain.base, {chain}) != chain) {
      v.fail({{"law", "left_unit"}, {"chain", chain_json(g, chain)}});
      return v;
    }
    // μ ∘ T η: the chain of singleton chains.
    std::vector<Chain> singletons;
    for (EdgeId e : chain.edges) singletons.push_back(Chain{g.src(e), {e}});
    if (flatten(g, chain.base, singletons) != chain) {
      v.fail({{"law", "right_unit"}, {"chain", chain_json(g, chain)}});
      return v;
    }
  }

  for (const auto& x : l.three) {
    v.count("associativity_instances");
    // μ ∘ μ_T: concatenate the outer level first.
    std::vector<Chain> joined;
    for (std::size_t j : x.items) {
      for (auto& p : parts_of(l, l.two[j])) joined.push_back(std::move(p));
    }
    Chain left = flatten(g, x.base, joined);
    // μ ∘ T μ: flatten each inner chain of chains first.
    std::vector<Chain> inner;
    for (std::size_t j : x.items) inner.push_back(flatten(g, l.two[j].base, parts_of(l, l.two[j])));
    Chain right = flatten(g, x.base, inner);
    if (left != right) {
      nlohmann::json outer = nlohmann::json::array();
      for (std::size_t j : x.items) outer.push_back(nested_json(g, parts_of(l, l.two[j])));
      v.fail({{"law", "associativity"},
              {"element", outer},
              {"left", chain_json(g, left)},
              {"right", chain_json(g, right)}});
      return v;
    }
  }
  return v;
}

Verdict check_chain_algebra(const MultiGraph& g, const ChainStructure& a, std::size_t maxweight,
                            std::uint64_t budget) {
  Verdict v("chain_algebra");
  v.bounded = true;
  const Levels l = nested_chains(g, maxweight, budget, false);

  for (const auto& chain : l.one) {
    v.count("endpoint_instances");
    EdgeId e = a(chain);
    if (e >= g.edge_count() || g.src(e) != chain.base || g.tgt(e) != chain_target(g, chain)) {
      v.fail({{"law", "endpoints"}, {"chain", chain_json(g, chain)}});
      return v;
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    v.count("unit_instances");
    if (a(Chain{g.src(e), {e}}) != e) {
      v.fail({{"law", "unit"}, {"edge", g.edge_name(e)}, {"got", g.edge_name(a(Chain{g.src(e), {e}}))}});
      return v;
    }
  }
  for (const auto& s : l.two) {
    v.count("composition_instances");
    const auto parts = parts_of(l, s);
    EdgeId via_mu = a(flatten(g, s.base, parts));
    Chain images{s.base, {}};
    for (const auto& p : parts) images.edges.push_back(a(p));
    EdgeId via_ta = a(images);
    if (via_mu != via_ta) {
      v.fail({{"law", "composition"},
              {"element", nested_json(g, parts)},
              {"flatten_first", g.edge_name(via_mu)},
              {"structure_first", g.edge_name(via_ta)}});
      return v;
    }
  }
  return v;
}

FinCategory category_from_chain_algebra(const MultiGraph& g, const ChainStructure& a) {
  RawCategory raw;
  raw.objects = g.vertices();
  for (const auto& e : g.edges()) raw.morphisms.push_back({e.name, e.src, e.tgt});
  for (VertexId v = 0; v < g.vertex_count(); ++v) raw.identities[g.vertex_name(v)] = g.edge_name(a(Chain{v, {}}));
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    for (EdgeId h : g.out_edges(g.tgt(f))) {
      raw.compose.push_back({g.edge_name(f), g.edge_name(h), g.edge_name(a(Chain{g.src(f), {f, h}}))});
    }
  }
  return validate_category(raw);
}

}  // namespace fincat
