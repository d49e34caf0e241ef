#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace fincat::testing {

std::string fixture_path(const std::string& name) { return std::string(FINCAT_FIXTURE_DIR) + "/" + name; }

MonoidTable cyclic_group(std::size_t n) {
  MonoidTable m;
  for (std::size_t i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
  m.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m.product[a][b] = (a + b) % n;
  }
  return m;
}

MonoidTable symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  MonoidTable m;
  for (const auto& q : perms) m.elements.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  m.product.assign(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      m.product[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return m;
}

MonoidTable broken_monoid() {
  // e is a two-sided unit; a·a = b, a·b = a, b·a = b, b·b = a.
  // (a·a)·b = b·b = a but a·(a·b) = a·a = b.
  MonoidTable m;
  m.elements = {"e", "a", "b"};
  m.product = {{0, 1, 2}, {1, 2, 1}, {2, 2, 1}};
  return m;
}

FinCategory commutative_square() {
  RawCategory raw;
  raw.objects = {"A", "B", "C", "D"};
  for (const auto& o : raw.objects) {
    raw.morphisms.push_back({"1" + o, o, o});
    raw.identities[o] = "1" + o;
  }
  raw.morphisms.push_back({"f", "A", "B"});
  raw.morphisms.push_back({"g", "A", "C"});
  raw.morphisms.push_back({"h", "B", "D"});
  raw.morphisms.push_back({"k", "C", "D"});
  raw.morphisms.push_back({"d", "A", "D"});
  raw.compose.push_back({"f", "h", "d"});
  raw.compose.push_back({"g", "k", "d"});
  return validate_category(with_unit_composites(raw));
}

FinPreorder poset(const std::vector<Name>& elements, const std::vector<std::pair<Name, Name>>& covers) {
  return FinPreorder::generated(elements, covers);
}

FinCategory poset_category(const std::vector<Name>& elements, const std::vector<std::pair<Name, Name>>& covers) {
  return as_thin_category(poset(elements, covers));
}

FinCategory chain_category(std::size_t n) {
  std::vector<Name> els;
  std::vector<std::pair<Name, Name>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    els.push_back("a" + std::to_string(i));
    if (i > 0) covers.emplace_back(els[i - 1], els[i]);
  }
  return poset_category(els, covers);
}

std::vector<NamedRaw> category_corpus() {
  std::vector<NamedRaw> out;
  auto valid = [&](std::string name, const FinCategory& c) {
    out.push_back({std::move(name), c.to_raw(), true, ErrorKind::invalid_argument});
  };
  valid("walking-arrow", shapes::walking_arrow());
  valid("commutative-square", commutative_square());
  valid("delooping-z2", delooping(cyclic_group(2)));
  valid("delooping-z3", delooping(cyclic_group(3)));
  valid("delooping-s3", delooping(symmetric_group3()));
  valid("poset-chain3", chain_category(3));
  valid("poset-diamond", poset_category({"bot", "l", "r", "top"}, {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}}));
  valid("poset-vee", poset_category({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}));

  // One object, a non-associative multiplication with a unit.
  {
    const MonoidTable m = broken_monoid();
    RawCategory raw;
    raw.objects = {"*"};
    for (const auto& e : m.elements) raw.morphisms.push_back({e, "*", "*"});
    raw.identities["*"] = "e";
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        raw.compose.push_back({m.elements[b], m.elements[a], m.elements[m.product[a][b]]});
      }
    }
    out.push_back({"broken-associativity", raw, false, ErrorKind::associativity_violation});
  }
  // The declared identity does not act as a unit: 1 ∘ a = 1.
  {
    RawCategory raw;
    raw.objects = {"*"};
    raw.morphisms = {{"1", "*", "*"}, {"a", "*", "*"}};
    raw.identities["*"] = "1";
    raw.compose = {{"1", "1", "1"}, {"1", "a", "a"}, {"a", "1", "1"}, {"a", "a", "a"}};
    out.push_back({"broken-unitality", raw, false, ErrorKind::unitality_violation});
  }
  return out;
}

FinCategory random_category(std::uint64_t seed, std::size_t objects) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < objects; ++i) sizes.push_back(std::uniform_int_distribution<std::size_t>(1, 2)(rng));
  using Arrow = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
  std::set<Arrow> arrows;
  for (std::size_t i = 0; i < objects; ++i) {
    std::vector<std::size_t> id(sizes[i]);
    std::iota(id.begin(), id.end(), 0);
    arrows.insert({i, i, id});
  }
  const std::size_t generators = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, objects - 1);
  for (std::size_t k = 0; k < generators; ++k) {
    const std::size_t s = pick(rng), t = pick(rng);
    std::vector<std::size_t> images(sizes[s]);
    for (auto& v : images) v = std::uniform_int_distribution<std::size_t>(0, sizes[t] - 1)(rng);
    arrows.insert({s, t, images});
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Arrow> current(arrows.begin(), arrows.end());
    for (const auto& [s1, t1, f] : current) {
      for (const auto& [s2, t2, g] : current) {
        if (t1 != s2) continue;
        std::vector<std::size_t> gf(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) gf[i] = g[f[i]];
        grew = arrows.insert({s1, t2, gf}).second || grew;
      }
    }
  }
  auto obj = [](std::size_t i) { return "X" + std::to_string(i); };
  auto name = [&](const Arrow& a) {
    std::string n = obj(std::get<0>(a)) + "->" + obj(std::get<1>(a)) + ":[";
    for (std::size_t i = 0; i < std::get<2>(a).size(); ++i) n += (i ? "," : "") + std::to_string(std::get<2>(a)[i]);
    return n + "]";
  };
  RawCategory raw;
  for (std::size_t i = 0; i < objects; ++i) raw.objects.push_back(obj(i));
  for (const auto& a : arrows) {
    raw.morphisms.push_back({name(a), obj(std::get<0>(a)), obj(std::get<1>(a))});
    const auto& img = std::get<2>(a);
    bool identity = std::get<0>(a) == std::get<1>(a);
    for (std::size_t i = 0; identity && i < img.size(); ++i) identity = img[i] == i;
    if (identity) raw.identities[obj(std::get<0>(a))] = name(a);
  }
  for (const auto& a : arrows) {
    for (const auto& b : arrows) {
      if (std::get<1>(a) != std::get<0>(b)) continue;
      std::vector<std::size_t> ba(std::get<2>(a).size());
      for (std::size_t i = 0; i < ba.size(); ++i) ba[i] = std::get<2>(b)[std::get<2>(a)[i]];
      raw.compose.push_back({name(a), name(b), name({std::get<0>(a), std::get<1>(b), ba})});
    }
  }
  return validate_category(raw);
}

std::vector<Presheaf> presheaf_corpus(const FinCategory& c) {
  std::vector<Presheaf> out;
  for (ObjectId x = 0; x < c.object_count(); ++x) out.push_back(representable(c, x));
  out.push_back(constant_presheaf(c, FinSet({"a", "b"})));
  out.push_back(coproduct_presheaf(out.front(), out.back()));
  out.push_back(product_presheaf(out.front(), representable(c, c.object_count() - 1)));
  return out;
}

MultiGraph random_graph(std::mt19937_64& rng, std::size_t max_edges) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::vector<Name> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < m; ++i) edges.push_back({"e" + std::to_string(i), vertices[pick(rng)], vertices[pick(rng)]});
  return MultiGraph(vertices, edges);
}

namespace {

using Relation = std::vector<std::vector<bool>>;

FinPreorder from_relation(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<Name> els;
  for (std::size_t i = 0; i < n; ++i) els.push_back("p" + std::to_string(i));
  std::vector<std::pair<Name, Name>> leq;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (r[i][j]) leq.emplace_back(els[i], els[j]);
    }
  }
  return FinPreorder(els, leq);
}

std::vector<Relation> natural_relations(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Relation r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) r[pairs[k].first][pairs[k].second] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for (std::size_t b = 0; b < n && transitive; ++b) {
        for (std::size_t c = 0; c < n && transitive; ++c) {
          if (r[a][b] && r[b][c] && !r[a][c]) transitive = false;
        }
      }
    }
    if (transitive) out.push_back(std::move(r));
  }
  return out;
}

std::vector<bool> canonical_form(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) code.push_back(r[perm[i]][perm[j]]);
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FinPreorder> naturally_labelled_posets(std::size_t n) {
  std::vector<FinPreorder> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (const auto& r : natural_relations(k)) out.push_back(from_relation(r));
  }
  return out;
}

std::vector<FinPreorder> posets_up_to_iso(std::size_t n) {
  std::vector<FinPreorder> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::set<std::vector<bool>> seen;
    for (const auto& r : natural_relations(k)) {
      if (seen.insert(canonical_form(r)).second) out.push_back(from_relation(r));
    }
  }
  return out;
}

std::vector<MonotoneMap> all_monotone(const FinPreorder& source, const FinPreorder& target) {
  std::vector<MonotoneMap> out;
  const std::size_t n = source.size(), m = target.size();
  if (m == 0 && n > 0) return out;
  std::vector<std::size_t> images(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (source.leq(a, b) && !target.leq(images[a], images[b])) ok = false;
      }
    }
    if (ok) out.push_back(MonotoneMap{source, target, images});
    std::size_t i = 0;
    while (i < n && ++images[i] == m) images[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::vector<std::pair<MonotoneMap, MonotoneMap>> galois_corpus() {
  std::vector<std::pair<MonotoneMap, MonotoneMap>> out;
  std::vector<FinPreorder> small;
  for (const auto& p : posets_up_to_iso(3)) {
    if (p.size() > 0) small.push_back(p);
  }
  for (const auto& x : small) {
    for (const auto& y : small) {
      const auto gs = all_monotone(y, x);
      for (const auto& f : all_monotone(x, y)) {
        for (const auto& g : gs) {
          if (validate_galois(f, g).holds()) out.emplace_back(f, g);
        }
      }
    }
  }
  return out;
}

namespace {

FinFunctor to_terminal(const FinCategory& c) {
  const FinCategory one = shapes::terminal();
  return make_functor(c, one, std::vector<ObjectId>(c.object_count(), 0),
                      std::vector<MorphismId>(c.morphism_count(), one.identity(0)));
}

FinFunctor pick_object(const FinCategory& c, ObjectId x) {
  return make_functor(shapes::terminal(), c, {x}, {c.identity(x)});
}

std::optional<ObjectId> terminal_object(const FinCategory& c, bool initial) {
  for (ObjectId t = 0; t < c.object_count(); ++t) {
    bool ok = true;
    for (ObjectId x = 0; x < c.object_count() && ok; ++x) {
      ok = (initial ? c.hom(t, x) : c.hom(x, t)).size() == 1;
    }
    if (ok) return t;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<std::string, Adjunction>> adjunction_corpus() {
  std::vector<std::pair<std::string, Adjunction>> out;
  const std::vector<std::pair<std::string, FinCategory>> cats = {
      {"walking-arrow", shapes::walking_arrow()},
      {"square", commutative_square()},
      {"z2", delooping(cyclic_group(2))},
      {"s3", delooping(symmetric_group3())},
      {"chain3", chain_category(3)},
      {"diamond", poset_category({"bot", "l", "r", "top"}, {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}})},
  };
  for (const auto& [name, c] : cats) {
    out.emplace_back("identity:" + name, identity_adjunction(c));
    const FinCategory one = shapes::terminal();
    if (auto t = terminal_object(c, false)) {
      // ! ⊣ t : C → 1 → C
      FinFunctor f = to_terminal(c);
      FinFunctor g = pick_object(c, *t);
      std::vector<MorphismId> unit;
      for (ObjectId x = 0; x < c.object_count(); ++x) unit.push_back(c.hom(x, *t)[0]);
      out.emplace_back("terminal:" + name,
                       validate_adjunction({f, g, make_nat(identity_functor(c), compose(g, f), unit),
                                            make_nat(compose(f, g), identity_functor(one), {one.identity(0)})}));
    }
    if (auto i = terminal_object(c, true)) {
      // i ⊣ ! : 1 → C → 1
      FinFunctor f = pick_object(c, *i);
      FinFunctor g = to_terminal(c);
      std::vector<MorphismId> counit;
      for (ObjectId x = 0; x < c.object_count(); ++x) counit.push_back(c.hom(*i, x)[0]);
      out.emplace_back("initial:" + name,
                       validate_adjunction({f, g, make_nat(identity_functor(one), compose(g, f), {one.identity(0)}),
                                            make_nat(compose(f, g), identity_functor(c), counit)}));
    }
  }
  const auto galois = galois_corpus();
  for (std::size_t i = 0; i < galois.size(); i += 7) {
    out.emplace_back("galois:" + std::to_string(i), galois_adjunction(galois[i].first, galois[i].second));
  }
  return out;
}

StochasticMatrix random_kernel(std::mt19937_64& rng, const Carrier& rows, const Carrier& cols) {
  StochasticMatrix m{rows, cols, {}};
  std::uniform_int_distribution<int> weight(0, 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> w(cols.size());
    int total = 0;
    while (total == 0) {
      total = 0;
      for (auto& x : w) total += (x = weight(rng));
    }
    std::vector<Rational> row;
    for (int x : w) row.emplace_back(x, total);
    m.entries.push_back(std::move(row));
  }
  return m;
}

SetFunctor set_functor(const FinCategory& shape, const std::vector<FinSet>& sets,
                       const std::map<Name, FinFunction>& arrows) {
  std::vector<FinFunction> fs;
  for (MorphismId m = 0; m < shape.morphism_count(); ++m) {
    if (shape.is_identity(m)) {
      fs.push_back(FinFunction::identity(sets[shape.src(m)]));
    } else {
      fs.push_back(arrows.at(shape.morphism_name(m)));
    }
  }
  return SetFunctor(shape, sets, std::move(fs));
}

}  // namespace fincat::testing
