#pragma once

// Directed multigraphs, chains of edges and the free category P(G), with
// bounded checks of the adjunction P ⊣ U between graphs and categories.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fincat/functor.hpp"
#include "fincat/verdict.hpp"

namespace fincat {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct EdgeSpec {
  Name name;
  Name src;
  Name tgt;
  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Vertices and edges are kept sorted by name; ids index that order.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Throws DuplicateName or UnknownObject.
  MultiGraph(std::vector<Name> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Name& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Name& edge_name(EdgeId e) const { return edges_.at(e).name; }
  VertexId src(EdgeId e) const { return src_.at(e); }
  VertexId tgt(EdgeId e) const { return tgt_.at(e); }
  const std::vector<Name>& vertices() const noexcept { return vertices_; }
  const std::vector<EdgeSpec>& edges() const noexcept { return edges_; }
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(v); }
  VertexId vertex(std::string_view name) const;
  EdgeId edge(std::string_view name) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Name> vertices_;
  std::vector<EdgeSpec> edges_;
  std::vector<VertexId> src_;
  std::vector<VertexId> tgt_;
  std::vector<std::vector<EdgeId>> out_;
};

struct GraphMorphism {
  MultiGraph source;
  MultiGraph target;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

/// Throws MissingImage or EndpointMismatch when incidence is not preserved.
GraphMorphism make_graph_morphism(MultiGraph source, MultiGraph target, std::vector<VertexId> vertices,
                                  std::vector<EdgeId> edges);

/// A head-to-tail sequence of edges starting at `base`.
struct Chain {
  VertexId base = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain& a, const Chain& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() <=> b.edges.size();
    if (a.edges.empty()) return a.base <=> b.base;
    return a.edges <=> b.edges;
  }
};

VertexId chain_target(const MultiGraph& g, const Chain& c);
/// "id:v" for length 0, otherwise edge names joined by ";".
Name chain_name(const MultiGraph& g, const Chain& c);
nlohmann::json chain_json(const MultiGraph& g, const Chain& c);
/// Throws EndpointMismatch unless `b` starts where `a` ends.
Chain concatenate(const MultiGraph& g, const Chain& a, const Chain& b);
Chain map_chain(const GraphMorphism& f, const Chain& c);

/// A directed cycle as a list of edges, if any.
std::optional<std::vector<EdgeId>> find_cycle(const MultiGraph& g);

struct ChainEnumeration {
  std::vector<Chain> chains;         // ordered by (length, edge names)
  std::vector<std::size_t> counts;   // per length 0..n
};

/// Throws BudgetExceeded when more than `budget` chains would be produced.
ChainEnumeration chains_up_to(const MultiGraph& g, std::size_t n, std::uint64_t budget = default_budget);

struct FreeCategory {
  FinCategory category;
  std::vector<Chain> chains;  // indexed like category morphisms
};

/// Objects are vertices, morphisms all chains, composition concatenation.
/// Throws CyclicGraph with the offending cycle.
FreeCategory free_category(const MultiGraph& g, std::uint64_t budget = default_budget);

/// Vertices are objects and edges all morphisms, identities included. Ids
/// coincide with the category's ids.
MultiGraph underlying_graph(const FinCategory& c);

/// The unit η_G : G → U P G of an acyclic graph.
GraphMorphism free_unit(const MultiGraph& g, const FreeCategory& pg);
/// P f : P G → P H for acyclic G and H.
FinFunctor free_functor(const GraphMorphism& f, const FreeCategory& pg, const FreeCategory& ph);

/// A candidate counit ε_C : P U C → C given on chains of U C. May return
/// npos for chains it leaves undefined.
using Counit = std::function<MorphismId(const FinCategory&, const Chain&)>;
/// The genuine counit: composes the chain, identities for length 0.
MorphismId composite_counit(const FinCategory& c, const Chain& chain);

/// Checks the unit, both triangle identities and the counit's composites
/// on chains of length at most `maxlen`. The verdict is bounded whenever
/// longer chains exist. Without `c` only the graph-side checks run.
Verdict verify_pu_adjunction(const MultiGraph& g, const std::optional<FinCategory>& c, std::size_t maxlen,
                             const Counit& counit = composite_counit, std::uint64_t budget = default_budget);

/// Unit and associativity laws of the monad U P on `g`, over nested chains
/// whose weight (edges, with each empty chain counting one) is at most
/// `maxweight`. Always bounded.
Verdict verify_up_monad_laws(const MultiGraph& g, std::size_t maxweight, std::uint64_t budget = default_budget);

/// A U P-algebra on a graph: a map from chains to edges, fixing endpoints.
using ChainStructure = std::function<EdgeId(const Chain&)>;

/// Algebra laws on chains up to `maxweight`: a((e)) = e and
/// a(flatten(x)) = a(T a (x)) on chains of chains.
Verdict check_chain_algebra(const MultiGraph& g, const ChainStructure& a, std::size_t maxweight,
                            std::uint64_t budget = default_budget);

/// Reads off the category of an algebra: identities a(id:v), composites
/// a((f,g)). Validated.
FinCategory category_from_chain_algebra(const MultiGraph& g, const ChainStructure& a);

}  // namespace fincat
