#pragma once

// Shared fixtures and generators for the unit and acceptance suites.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fincat/adjunction.hpp"
#include "fincat/finset.hpp"
#include "fincat/io.hpp"
#include "fincat/monad.hpp"
#include "fincat/order.hpp"
#include "fincat/quiver.hpp"
#include "fincat/yoneda.hpp"

namespace fincat::testing {

std::string fixture_path(const std::string& name);

/// The kind of the Error thrown by `f`, if any.
template <class F>
std::optional<ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

/// ℤ/n with elements "0", ..., "n-1".
MonoidTable cyclic_group(std::size_t n);
/// Permutations of {0,1,2} in one-line notation, a·b = a ∘ b.
MonoidTable symmetric_group3();
/// A table with a two-sided unit "e" that is not associative.
MonoidTable broken_monoid();

/// A → B, A → C, B → D, C → D with one diagonal A → D.
FinCategory commutative_square();
/// Thin category of the preorder generated by `covers`.
FinCategory poset_category(const std::vector<Name>& elements, const std::vector<std::pair<Name, Name>>& covers);
FinPreorder poset(const std::vector<Name>& elements, const std::vector<std::pair<Name, Name>>& covers);
/// a0 < a1 < ... < a{n-1}
FinCategory chain_category(std::size_t n);

struct NamedRaw {
  std::string name;
  RawCategory raw;
  bool valid;
  ErrorKind violation;  // meaningful when !valid
};

/// Walking arrow, commutative square, deloopings of ℤ/2, ℤ/3, S₃, three
/// poset categories, and two broken tables.
std::vector<NamedRaw> category_corpus();

/// A concrete category on three objects: small sets and the closure of a
/// few random functions between them under composition.
FinCategory random_category(std::uint64_t seed, std::size_t objects = 3);

/// Representables, a constant, and a coproduct and product of representables.
std::vector<Presheaf> presheaf_corpus(const FinCategory& c);

/// Random graph on up to four vertices with at most `max_edges` edges.
MultiGraph random_graph(std::mt19937_64& rng, std::size_t max_edges);

/// Posets up to isomorphism with at most `n` elements, elements "p0", ...
std::vector<FinPreorder> posets_up_to_iso(std::size_t n);
/// Naturally labelled posets: i < j in the order implies i < j as indices.
std::vector<FinPreorder> naturally_labelled_posets(std::size_t n);
/// Every monotone map between two preorders.
std::vector<MonotoneMap> all_monotone(const FinPreorder& source, const FinPreorder& target);

/// Galois connections f ⊣ g found by brute force between small posets.
std::vector<std::pair<MonotoneMap, MonotoneMap>> galois_corpus();

/// Validated adjunctions between small categories: identities, Galois
/// connections, and terminal and initial object adjunctions.
std::vector<std::pair<std::string, Adjunction>> adjunction_corpus();

/// Set-valued functor on `shape`; identity morphisms act trivially and
/// every other morphism is looked up by name in `arrows`.
SetFunctor set_functor(const FinCategory& shape, const std::vector<FinSet>& sets,
                       const std::map<Name, FinFunction>& arrows);

/// Exact-rational random stochastic matrix.
StochasticMatrix random_kernel(std::mt19937_64& rng, const Carrier& rows, const Carrier& cols);

}  // namespace fincat::testing
