#include "fincat/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

#include "fincat/io.hpp"

namespace fincat {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::uint64_t budget = default_budget;
  std::uint64_t seed = 0;
  std::string file;
  std::string kind;
  std::string object;
  std::string morphism;
  std::string category;
  std::string lower;
  std::string upper;
  std::string monoid;
  std::string mode = "exhaustive";
  std::vector<std::string> arrows;
  std::size_t size = 2;
  std::size_t samples = 10'000;
  std::size_t max_len = 4;
  std::size_t max_den = 2;
  std::size_t list_len = 2;
  bool max_len_given = false;
};

int exit_code(Status s) {
  switch (s) {
    case Status::holds: return 0;
    case Status::fails: return 1;
    case Status::error: return 2;
  }
  return 2;
}

int emit(std::ostream& out, const Verdict& v, json result = nullptr) {
  json doc = v.to_json();
  if (!result.is_null()) doc["result"] = std::move(result);
  out << canonical_text(doc);
  return exit_code(v.status);
}

DocKind kind_of(const Options& o, const json& doc) {
  return o.kind.empty() ? detect_kind(doc) : parse_doc_kind(o.kind);
}

json function_json(const FinFunction& f) { return f.to_map(); }

json set_cone_json(const SetFunctor& d, const SetCone& c) {
  json legs = json::object();
  for (ObjectId x = 0; x < d.shape().object_count(); ++x) legs[d.shape().object_name(x)] = function_json(c.legs[x]);
  return {{"tip", c.tip.elements()}, {"legs", legs}};
}

json set_nat_json(const FinCategory& base, const SetNat& n) {
  json comps = json::object();
  for (ObjectId x = 0; x < base.object_count(); ++x) comps[base.object_name(x)] = function_json(n.components[x]);
  return comps;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const DocKind kind = kind_of(o, read_document(o.file).json);
  Document d = parse_file(o.file, kind);
  Verdict v("validate");
  json result = {{"kind", std::string(to_string(kind))}};
  try {
    switch (kind) {
      case DocKind::category: {
        FinCategory c = load_category(d.json, d.dir);
        v.count("objects", c.object_count());
        v.count("morphisms", c.morphism_count());
        break;
      }
      case DocKind::graph: {
        MultiGraph g = load_graph(d.json, d.dir);
        v.count("vertices", g.vertex_count());
        v.count("edges", g.edge_count());
        break;
      }
      case DocKind::functor: load_functor(d.json, d.dir); break;
      case DocKind::nat: load_nat(d.json, d.dir); break;
      case DocKind::poset: v.count("elements", load_poset(d.json, d.dir).size()); break;
      case DocKind::monotone: load_monotone(d.json, d.dir); break;
      case DocKind::function: load_function(d.json, d.dir); break;
      case DocKind::set_diagram: load_set_diagram(d.json, d.dir); break;
      case DocKind::presheaf: load_presheaf(d.json, d.dir); break;
      case DocKind::adjunction: load_adjunction(d.json, d.dir); break;
      case DocKind::monoid: {
        MonoidTable m = load_monoid(d.json, d.dir);
        if (auto w = monoid_violation(m); !w.is_null()) throw Error(ErrorKind::not_a_monoid, "not a monoid", w);
        break;
      }
      case DocKind::kleisli_arrow: parse_kleisli_arrow(d.json); break;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::io || e.kind() == ErrorKind::syntax || e.kind() == ErrorKind::unknown_kind) throw;
    json w = e.witness().is_object() ? e.witness() : json::object();
    w["error"] = std::string(to_string(e.kind()));
    w["message"] = e.message();
    v.fail(w);
  }
  return emit(out, v, result);
}

int cmd_classify(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  Verdict v("classify");
  if (kind_of(o, d.json) == DocKind::functor) {
    FunctorClass k = classify_functor(load_functor(d.json, d.dir));
    return emit(out, v,
                {{"faithful", k.faithful},
                 {"full", k.full},
                 {"fully_faithful", k.fully_faithful},
                 {"essentially_surjective", k.essentially_surjective},
                 {"equivalence", k.equivalence.has_value()}});
  }
  FinCategory c = load_category(d.json, d.dir);
  json result = json::object();
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    if (!o.morphism.empty() && c.morphism_name(f) != o.morphism) continue;
    result[c.morphism_name(f)] = to_json(c, classify_morphism(c, f));
    v.count("morphisms");
  }
  if (!o.morphism.empty() && result.empty()) c.morphism(o.morphism);
  return emit(out, v, result);
}

int cmd_commutes(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  return emit(out, check_commutes(Diagram{load_functor(d.json, d.dir)}));
}

int cmd_limit(const Options& o, std::ostream& out, bool co) {
  Document d = read_document(o.file);
  Verdict v(co ? "colimit" : "limit");
  if (kind_of(o, d.json) == DocKind::set_diagram) {
    SetFunctor s = load_set_diagram(d.json, d.dir);
    SetCone cone = co ? finset_colimit(s) : finset_limit(s);
    v.count("tip_size", cone.tip.size());
    return emit(out, v, set_cone_json(s, cone));
  }
  Diagram dg{load_functor(d.json, d.dir)};
  auto cone = co ? colimit_of(dg, o.budget) : limit_of(dg, o.budget);
  if (!cone) {
    v.fail({{"error", co ? "NoColimit" : "NoLimit"}, {"reason", "no universal cone in the ambient category"}});
    return emit(out, v);
  }
  return emit(out, v, to_json(dg, *cone));
}

int cmd_free_cat(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  MultiGraph g = load_graph(d.json, d.dir);
  json result = json::object();
  const auto cycle = find_cycle(g);
  if (cycle) {
    json names = json::array();
    for (EdgeId e : *cycle) names.push_back(g.edge_name(e));
    result["cycle"] = names;
  } else if (!o.max_len_given) {
    FreeCategory pg = free_category(g, o.budget);
    result["category"] = serialize(pg.category);
  }
  const auto chains = chains_up_to(g, o.max_len, o.budget);
  result["chain_counts"] = chains.counts;
  json names = json::array();
  for (const auto& c : chains.chains) names.push_back(chain_name(g, c));
  result["chains"] = names;
  std::optional<FinCategory> c;
  if (!o.category.empty()) c = load_category(json(o.category), fs::path());
  Verdict v = verify_pu_adjunction(g, c, std::max<std::size_t>(o.max_len, 1), composite_counit, o.budget);
  v.merge(verify_up_monad_laws(g, std::max<std::size_t>(o.max_len, 1), o.budget));
  v.check = "free_category";
  return emit(out, v, result);
}

int cmd_yoneda(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  Verdict v("yoneda");
  json result = json::object();
  auto correspond = [&](const Presheaf& f, ObjectId x, const std::string& label) {
    auto yc = yoneda_correspondence(f, x, o.budget);
    v.merge(yc.verdict);
    json elements = json::array();
    for (std::size_t i = 0; i < yc.nats.size(); ++i) elements.push_back(f.at(x).element(yc.forward[i]));
    result[label] = {{"transformations", yc.nats.size()}, {"elements", f.at(x).size()}, {"forward", elements}};
  };
  if (kind_of(o, d.json) == DocKind::presheaf) {
    Presheaf f = load_presheaf(d.json, d.dir);
    const ObjectId x = f.base.object(o.object);
    correspond(f, x, "presheaf");
  } else {
    FinCategory c = load_category(d.json, d.dir);
    const ObjectId x = c.object(o.object);
    for (ObjectId y = 0; y < c.object_count(); ++y) correspond(representable(c, y), x, "hom(-," + c.object_name(y) + ")");
    v.merge(yoneda_embedding_check(c, o.budget));
  }
  v.check = "yoneda";
  return emit(out, v, result);
}

int cmd_representable(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  Presheaf f = load_presheaf(d.json, d.dir);
  Verdict v("representable");
  auto found = is_representable(f, o.budget);
  if (!found) {
    json sizes = json::object();
    for (ObjectId x = 0; x < f.base.object_count(); ++x) sizes[f.base.object_name(x)] = f.at(x).size();
    v.fail({{"representable", false}, {"sizes", sizes}});
    return emit(out, v);
  }
  return emit(out, v, {{"object", f.base.object_name(found->first)}, {"iso", set_nat_json(f.base, found->second)}});
}

MonadPtr cli_monad(const Options& o, const std::string& kind) {
  MonadSpec spec{kind, o.max_den, o.list_len, std::nullopt};
  if (kind == "writer") {
    if (o.monoid.empty()) throw Error(ErrorKind::invalid_argument, "writer needs --monoid");
    // Unchecked so that broken tables surface as law failures.
    return writer_monad_unchecked(load_monoid(json(o.monoid), fs::path()));
  }
  return builtin_monad(spec);
}

int cmd_monad_laws(const Options& o, std::ostream& out) {
  MonadPtr t = cli_monad(o, o.kind);
  LawOptions opts;
  if (o.mode == "exhaustive") {
    opts.mode = LawMode::exhaustive;
  } else if (o.mode == "bounded") {
    opts.mode = LawMode::bounded;
  } else {
    throw Error(ErrorKind::invalid_argument, "--mode is exhaustive or bounded");
  }
  opts.seed = o.seed;
  opts.samples = o.samples;
  opts.budget = o.budget;
  Verdict v = check_monad_laws(*t, standard_carrier(o.size), opts);
  return emit(out, v, {{"monad", t->name()}, {"size", o.size}});
}

int cmd_kleisli_compose(const Options& o, std::ostream& out) {
  if (o.arrows.size() != 2) throw Error(ErrorKind::invalid_argument, "kleisli-compose takes two arrow files");
  MonadPtr t = cli_monad(o, o.kind);
  KleisliArrow k = parse_kleisli_arrow(read_document(o.arrows[0]).json);
  KleisliArrow h = parse_kleisli_arrow(read_document(o.arrows[1]).json);
  KleisliArrow composite = kleisli_compose(*t, k, h);
  json result = serialize(composite);
  if (o.kind == "distribution") {
    StochasticMatrix m = to_matrix(composite);
    json rows = json::array();
    for (const auto& row : m.entries) {
      json r = json::array();
      for (const auto& q : row) r.push_back(to_string(q));
      rows.push_back(r);
    }
    result["matrix"] = rows;
  }
  return emit(out, Verdict("kleisli_compose"), result);
}

int cmd_em_enumerate(const Options& o, std::ostream& out) {
  MonadPtr t = cli_monad(o, o.kind);
  std::vector<NamedSet> universe;
  for (std::size_t n = 0; n <= o.size; ++n) universe.push_back({std::to_string(n), FinSet::range(n)});
  EmCategory em = materialize_em_category(*t, universe, o.budget);
  Verdict v("em_enumerate");
  json algebras = json::array();
  for (std::size_t i = 0; i < em.algebras.size(); ++i) {
    v.merge(check_algebra(*t, em.algebras[i], o.budget));
    algebras.push_back(em.category.object_name(i));
  }
  v.check = "em_enumerate";
  v.count("algebras", em.algebras.size());
  v.count("morphisms", em.category.morphism_count());
  return emit(out, v, {{"monad", t->name()}, {"algebras", algebras}});
}

int cmd_adjunction_check(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  return emit(out, check_adjunction(load_adjunction_data(d.json, d.dir)));
}

json nat_json(const NatTrans& n) { return n.to_raw(); }

int cmd_induced_monad(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  Adjunction adj = load_adjunction(d.json, d.dir);
  CatMonad t = induced_monad(adj);
  CatComonad s = induced_comonad(adj);
  Verdict v = check_cat_monad_laws(t);
  v.merge(check_cat_comonad_laws(s));
  v.check = "induced_monad";
  return emit(out, v,
              {{"monad", {{"functor", t.functor.to_raw().objects}, {"unit", nat_json(t.unit)}, {"mult", nat_json(t.mult)}}},
               {"comonad",
                {{"functor", s.functor.to_raw().objects}, {"counit", nat_json(s.counit)}, {"comult", nat_json(s.comult)}}}});
}

int cmd_monadicity(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  Adjunction adj = load_adjunction(d.json, d.dir);
  Comparison cmp = comparison_functors(adj);
  Verdict v = monadicity_check(adj);
  return emit(out, v,
              {{"algebras", cmp.em.category.object_names()}, {"comparison", cmp.k.to_raw().objects}});
}

int cmd_galois(const Options& o, std::ostream& out) {
  MonotoneMap f = load_monotone(json(o.lower), fs::path());
  MonotoneMap g = load_monotone(json(o.upper), fs::path());
  Verdict v = validate_galois(f, g);
  if (!v.holds()) return emit(out, v);
  MonotoneMap t = closure_from_galois(f, g);
  v.merge(check_closure_operator(f.source, t.images));
  v.check = "galois";
  json closure = json::object();
  for (std::size_t i = 0; i < t.images.size(); ++i) closure[f.source.element(i)] = f.source.element(t.images[i]);
  auto [fixed, indices] = closed_elements(f.source, t.images);
  return emit(out, v, {{"closure", closure}, {"closed", fixed.elements()}});
}

int cmd_aft(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  MonotoneMap g = load_monotone(d.json, d.dir);
  AftResult r = aft_lower_adjoint(g, o.budget);
  Verdict v("aft");
  if (!r.lower) {
    json w = r.witness;
    w["method"] = r.method;
    v.fail(w);
    return emit(out, v);
  }
  json lower = json::object();
  for (std::size_t i = 0; i < r.lower->images.size(); ++i) {
    lower[r.lower->source.element(i)] = r.lower->target.element(r.lower->images[i]);
  }
  return emit(out, v, {{"method", r.method}, {"lower", lower}});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks of category-theoretic structure on finite instances", "fincat"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget", o.budget, "Cap on enumerations")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for bounded-mode sampling")->capture_default_str();

  std::map<CLI::App*, std::function<int()>> handlers;
  auto with_file = [&](const char* name, const char* help, std::function<int()> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Input document")->required();
    handlers[sub] = std::move(run);
    return sub;
  };

  with_file("validate", "Validate a document", [&] { return cmd_validate(o, out); })
      ->add_option("--kind", o.kind, "Document kind (detected when omitted)");
  with_file("classify", "Classify morphisms of a category or a functor", [&] { return cmd_classify(o, out); })
      ->add_option("--morphism", o.morphism, "Only this morphism");
  with_file("commutes", "Does a diagram commute", [&] { return cmd_commutes(o, out); });
  with_file("limit", "Limit of a diagram", [&] { return cmd_limit(o, out, false); });
  with_file("colimit", "Colimit of a diagram", [&] { return cmd_limit(o, out, true); });
  {
    CLI::App* sub = with_file("free-cat", "Free category on a graph and the P-U adjunction", [&] {
      return cmd_free_cat(o, out);
    });
    sub->add_option("--max-len", o.max_len, "Chain length bound")->capture_default_str();
    sub->add_option("--category", o.category, "Category for the counit checks");
  }
  with_file("yoneda", "Yoneda correspondence at an object", [&] { return cmd_yoneda(o, out); })
      ->add_option("--object", o.object, "Representing object")
      ->required();
  with_file("representable-search", "Search for a representing object", [&] { return cmd_representable(o, out); });

  auto monad_options = [&](CLI::App* sub) {
    sub->add_option("kind", o.kind, "powerset, distribution, writer, maybe or list")->required();
    sub->add_option("--max-den", o.max_den, "Largest denominator enumerated for distributions")->capture_default_str();
    sub->add_option("--list-len", o.list_len, "Longest list enumerated")->capture_default_str();
    sub->add_option("--monoid", o.monoid, "Monoid document for writer");
  };
  {
    CLI::App* sub = app.add_subcommand("monad-laws", "Monad laws on a standard carrier");
    monad_options(sub);
    sub->add_option("--size", o.size, "Carrier size")->capture_default_str();
    sub->add_option("--mode", o.mode, "exhaustive or bounded")->capture_default_str();
    sub->add_option("--samples", o.samples, "Samples in bounded mode")->capture_default_str();
    handlers[sub] = [&] { return cmd_monad_laws(o, out); };
  }
  {
    CLI::App* sub = app.add_subcommand("kleisli-compose", "Compose two Kleisli arrows");
    monad_options(sub);
    sub->add_option("arrows", o.arrows, "First and second arrow documents")->required()->expected(2);
    handlers[sub] = [&] { return cmd_kleisli_compose(o, out); };
  }
  {
    CLI::App* sub = app.add_subcommand("em-enumerate", "Eilenberg-Moore algebras on sets of size up to N");
    monad_options(sub);
    sub->add_option("--size", o.size, "Largest carrier")->capture_default_str();
    handlers[sub] = [&] { return cmd_em_enumerate(o, out); };
  }
  with_file("adjunction-check", "Triangle identities and hom-set bijection", [&] {
    return cmd_adjunction_check(o, out);
  });
  with_file("induced-monad", "Monad and comonad of an adjunction", [&] { return cmd_induced_monad(o, out); });
  with_file("monadicity", "Is the comparison functor an equivalence", [&] { return cmd_monadicity(o, out); });
  {
    CLI::App* sub = app.add_subcommand("galois", "Galois connection check and its closure operator");
    sub->add_option("--lower", o.lower, "Lower adjoint")->required();
    sub->add_option("--upper", o.upper, "Upper adjoint")->required();
    handlers[sub] = [&] { return cmd_galois(o, out); };
  }
  with_file("aft", "Lower adjoint of a monotone map", [&] { return cmd_aft(o, out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? 0 : 2;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->get_name() == "free-cat") o.max_len_given = sub->count("--max-len") > 0;
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) return handlers.at(sub)();
  } catch (const Error& e) {
    out << canonical_text(e.to_json());
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    out << canonical_text({{"status", "error"}, {"error", "Internal"}, {"message", e.what()}});
    err << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace fincat
