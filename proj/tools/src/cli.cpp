#include "covspec_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "covspec/delta_cover.hpp"
#include "covspec/errors.hpp"
#include "covspec/families.hpp"
#include "covspec/graph_backend.hpp"
#include "covspec/heisenberg.hpp"
#include "covspec/io.hpp"
#include "covspec/sunada.hpp"
#include "covspec/torus_backend.hpp"

namespace covspec::cli {

namespace {

using nlohmann::json;

struct OutputFlags {
  bool json = false;
  bool csv = false;
  std::string out_dir;
};

void add_output_flags(CLI::App* app, OutputFlags& f) {
  auto* j = app->add_flag("--json", f.json, "Write JSON (default)");
  app->add_flag("--csv", f.csv, "Write CSV")->excludes(j);
  app->add_option("--out", f.out_dir, "Directory for result files");
}

// Inline JSON when the text looks like JSON, otherwise a file path.
json json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return json::parse(text);
  std::ifstream in(text);
  if (!in) throw ArgumentError("cannot read '" + text + "'");
  return json::parse(in);
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (item.find_first_not_of(' ') != std::string::npos) out.push_back(parse_rational(item));
  if (out.empty()) throw ArgumentError("empty list '" + text + "'");
  return out;
}

std::size_t resolve_max_cosets(long flag) {
  if (flag > 0) return static_cast<std::size_t>(flag);
  if (const char* env = std::getenv("COVSPEC_MAX_COSETS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) throw ArgumentError("COVSPEC_MAX_COSETS must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultMaxCosets;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path.string());
  f << content;
}

template <class B>
int emit_spectrum(const B& backend, const LengthValue& cutoff, const OutputFlags& flags, std::ostream& out) {
  auto result = compute_cov_spectrum(backend, cutoff);
  json j = result_to_json(backend, result);
  if (!flags.out_dir.empty()) write_file(std::filesystem::path(flags.out_dir) / "spectra.json", j.dump(2) + "\n");
  if (flags.csv)
    out << spectrum_csv(result.spectrum);
  else
    out << j.dump(2) << '\n';
  return kExitOk;
}

// --- graph -----------------------------------------------------------------

struct GraphArgs {
  std::string input;
  std::string bouquet;
  std::string unit = "1";
  std::string cutoff;
  long max_cosets = 0;
  std::string delta;
  bool deck = false;
  std::string lift;
  bool witness = false;
  bool presentation = false;
  OutputFlags output;
};

int run_graph(const GraphArgs& a, std::ostream& out) {
  if (a.input.empty() == a.bouquet.empty()) throw ArgumentError("give exactly one of --input and --bouquet");
  MetricGraph graph = a.input.empty() ? MetricGraph::bouquet(rational_list(a.bouquet), parse_unit(a.unit))
                                      : graph_from_json(json_argument(a.input));
  CoverBounds bounds;
  bounds.max_cosets = resolve_max_cosets(a.max_cosets);

  const bool delta_query = a.deck || !a.lift.empty() || a.witness || a.presentation;
  if (delta_query && a.delta.empty()) throw ArgumentError("--deck, --lift, --witness and --presentation need --delta");
  if (!a.delta.empty()) {
    if (!delta_query) throw ArgumentError("--delta needs one of --deck, --lift, --witness, --presentation");
    const LengthValue delta = graph.length(parse_rational(a.delta));
    if (a.presentation) {
      out << format_presentation(delta_presentation(graph, delta, bounds.max_classes));
      return kExitOk;
    }
    json j{{"delta", to_json(delta)}};
    int code = kExitOk;
    if (a.deck) {
      DeckGroupReport r = deck_group(graph, delta, bounds);
      j["deck_group"] = to_json(r);
      if (r.kind == DeckGroupReport::Kind::indeterminate) code = kExitIndeterminate;
    }
    if (!a.lift.empty()) {
      FreeWord w = FreeWord::parse(a.lift);
      LiftResult r = lifts_closed(graph, w, delta, bounds);
      j["lift"] = {{"word", w.to_string()}, {"result", to_string(r)}};
      if (r == LiftResult::unknown) code = kExitIndeterminate;
    }
    if (a.witness) j["witness"] = delta_pair_witness(graph, delta, bounds).to_string();
    out << j.dump(2) << '\n';
    return code;
  }

  if (graph.is_bouquet()) {
    BouquetBackend b(std::move(graph), bounds.max_cosets);
    const LengthValue cutoff = a.cutoff.empty() ? b.default_cutoff() : b.graph().length(parse_rational(a.cutoff));
    return emit_spectrum(b, cutoff, a.output, out);
  }
  GraphBackend b(std::move(graph), bounds.max_cosets);
  const LengthValue cutoff = a.cutoff.empty() ? b.default_cutoff() : b.graph().length(parse_rational(a.cutoff));
  return emit_spectrum(b, cutoff, a.output, out);
}

// --- torus -----------------------------------------------------------------

struct TorusArgs {
  std::string basis;
  std::string gram;
  double rhombic = 0;
  std::string cutoff;
  std::string delta;
  int max_dimension = kDefaultMaxDimension;
  OutputFlags output;
};

int run_torus(const TorusArgs& a, std::ostream& out) {
  const int given = !a.basis.empty() + !a.gram.empty() + (a.rhombic != 0);
  if (given != 1) throw ArgumentError("give exactly one of --basis, --gram and --rhombic");
  Lattice lattice = !a.basis.empty()  ? Lattice::from_basis(matrix_from_json(json_argument(a.basis)), Unit::one,
                                                            a.max_dimension)
                    : !a.gram.empty() ? Lattice::from_gram(matrix_from_json(json_argument(a.gram)), Unit::one,
                                                           a.max_dimension)
                                      : Lattice::rhombic(a.rhombic);
  if (!a.delta.empty()) {
    const LengthValue delta = LengthValue::rational(parse_rational(a.delta));
    Sublattice sub = delta_sublattice(lattice, delta);
    json rows = json::array();
    for (const auto& row : sub.hnf()) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.get_si());
      rows.push_back(r);
    }
    out << json{{"delta", to_json(delta)}, {"rank", sub.rank()}, {"hnf", rows}, {"whole", sub.is_whole()}}.dump(2)
        << '\n';
    return kExitOk;
  }
  TorusBackend b(std::move(lattice));
  const LengthValue cutoff = a.cutoff.empty() ? b.default_cutoff() : LengthValue::rational(parse_rational(a.cutoff));
  return emit_spectrum(b, cutoff, a.output, out);
}

// --- heisenberg ------------------------------------------------------------

struct HeisenbergArgs {
  std::string params;
  std::string compare;
  OutputFlags output;
};

int run_heisenberg(const HeisenbergArgs& a, std::ostream& out) {
  HeisenbergManifold m = heisenberg_from_json(json_argument(a.params));
  Spectrum s = cov_spectrum_heisenberg(m);
  const bool included = heisenberg_regime(m) == HeisenbergRegime::central_included;
  json j{{"spectrum", to_json(s)},
         {"m_central", central_m_full(m, 1)},
         {"regime", included ? "central_included" : "central_absorbed"}};
  if (!a.compare.empty()) {
    HeisenbergManifold other = heisenberg_from_json(json_argument(a.compare));
    Spectrum t = cov_spectrum_heisenberg(other);
    j["compare"] = {{"spectrum", to_json(t)},
                    {"laplace_isospectral", laplace_isospectral(m, other)},
                    {"hausdorff_distance", to_json(hausdorff_distance_zero(s, t))}};
  }
  if (!a.output.out_dir.empty())
    write_file(std::filesystem::path(a.output.out_dir) / "spectra.json", j.dump(2) + "\n");
  if (a.output.csv)
    out << spectrum_csv(s);
  else
    out << j.dump(2) << '\n';
  return kExitOk;
}

// --- sunada ----------------------------------------------------------------

struct SunadaArgs {
  std::string preset;
  std::string triple;
};

json report_json(const SunadaReport& r) {
  json table = json::array();
  for (const auto& c : r.table) table.push_back({{"class", c.label}, {"h1", c.h1}, {"h2", c.h2}});
  return {{"holds", r.holds}, {"classes", table}};
}

int run_sunada(const SunadaArgs& a, std::ostream& out) {
  if (a.preset.empty() == a.triple.empty()) throw ArgumentError("give exactly one of --preset and --triple");
  if (!a.preset.empty()) {
    if (a.preset != "komatsu-p3") throw ArgumentError("unknown preset '" + a.preset + "'");
    const FiniteGroup h1 = FiniteGroup::elementary_abelian(3, 3);
    const FiniteGroup h2 = FiniteGroup::heisenberg_mod_p(3);
    KomatsuReport k = komatsu_check(h1, h2, 3);
    json j = report_json(k.sunada);
    j["komatsu"] = k.holds;
    j["uniform_cycle_type"] = k.uniform_cycle_type;
    j["nontrivial_count"] = {k.nontrivial_count_h1, k.nontrivial_count_h2};
    j["groups"] = {{{"name", h1.name()}, {"order", h1.order()}, {"min_generators", h1.minimal_generating_set_size()}},
                   {{"name", h2.name()}, {"order", h2.order()}, {"min_generators", h2.minimal_generating_set_size()}}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  json t = json_argument(a.triple);
  PermGroupTriple triple;
  try {
    triple.degree = t.at("N").get<int>();
    auto perms = [&](const char* key) {
      std::vector<Permutation> v;
      if (t.contains(key))
        for (const auto& s : t.at(key)) v.push_back(parse_cycles(s.get<std::string>(), triple.degree));
      return v;
    };
    triple.g_generators = perms("G_gens");
    triple.h1 = perms("H1");
    triple.h2 = perms("H2");
  } catch (const json::exception& ex) {
    throw ArgumentError(std::string("malformed triple: ") + ex.what());
  }
  out << report_json(sunada_condition(triple)).dump(2) << '\n';
  return kExitOk;
}

// --- family ----------------------------------------------------------------

struct FamilyArgs {
  std::string name;
  int j = 0;
  int from = 0;
  int to = 0;
  std::string anchors;
  double theta_start = 0;
  double theta_end = 0;
  long max_cosets = 0;
  OutputFlags output;
};

std::string csv_length(const LengthValue& v) { return format_float(v.to_double()); }

int run_family(const FamilyArgs& a, std::ostream& out) {
  FamilySpec spec = FamilySpec::standard(parse_family_name(a.name));
  if (a.j != 0) spec.first = spec.last = a.j;
  if (a.from != 0) spec.first = a.from;
  if (a.to != 0) spec.last = a.to;
  if (a.theta_start != 0) spec.theta_start = a.theta_start;
  if (a.theta_end != 0) spec.theta_end = a.theta_end;
  CoverBounds bounds;
  bounds.max_cosets = resolve_max_cosets(a.max_cosets);

  const auto members = family_spectra(spec, bounds);
  const auto limit = analytic_limit(spec);
  const Unit unit = spec.unit();

  std::vector<LengthValue> anchor_points;
  if (!a.anchors.empty()) {
    for (const auto& q : rational_list(a.anchors)) anchor_points.push_back(LengthValue::rational(q, unit));
  } else {
    anchor_points = {LengthValue::zero(unit), LengthValue::rational(unit == Unit::pi ? 1 : Rational(1, 2), unit)};
  }
  const AnchorSet anchors(anchor_points);
  const auto gaps = gap_report(members, anchors);

  json spectra = json::array();
  for (const auto& m : members)
    spectra.push_back({{"index", m.index}, {"label", m.label}, {"spectrum", to_json(m.spectrum)}});
  json j{{"family", to_string(spec.name)}, {"members", spectra}};

  std::ostringstream convergence_csv;
  convergence_csv << "index,d_H\n";
  if (limit) {
    const auto conv = convergence_report(members, *limit);
    json rows = json::array();
    for (const auto& r : conv.rows) {
      rows.push_back({{"index", r.index}, {"d_H", to_json(r.distance)}});
      convergence_csv << r.index << ',' << csv_length(r.distance) << '\n';
    }
    j["limit"] = to_json(*limit);
    j["convergence"] = rows;
    j["monotone"] = conv.monotone;
    if (!limit->empty()) {
      json verdicts = json::array();
      for (const auto& v : near_zero_gap_check(members, *limit))
        verdicts.push_back({{"index", v.index}, {"epsilon", to_json(v.epsilon)}, {"holds", v.holds}});
      j["near_zero"] = verdicts;
    }
  } else {
    j["limit"] = nullptr;
  }

  std::ostringstream gaps_csv;
  gaps_csv << "index";
  for (std::size_t n = 1; n < anchors.points().size(); ++n) gaps_csv << ",gap_" << n;
  gaps_csv << '\n';
  json gap_rows = json::array();
  for (const auto& g : gaps) {
    json row = json::array();
    gaps_csv << g.index;
    for (const auto& x : g.gaps) {
      row.push_back(to_json(x));
      gaps_csv << ',' << csv_length(x);
    }
    gaps_csv << '\n';
    gap_rows.push_back({{"index", g.index}, {"gaps", row}});
  }
  j["gaps"] = gap_rows;

  if (!a.output.out_dir.empty()) {
    const std::filesystem::path dir(a.output.out_dir);
    write_file(dir / "spectra.json", j.dump(2) + "\n");
    write_file(dir / "convergence.csv", convergence_csv.str());
    write_file(dir / "gaps.csv", gaps_csv.str());
  }
  if (a.output.csv) {
    if (members.size() == 1) {
      out << spectrum_csv(members.front().spectrum);
    } else {
      out << "index,value,mult,unit,exact\n";
      for (const auto& m : members)
        for (const auto& e : m.spectrum.entries())
          out << m.index << ',' << csv_length(e.value) << ',' << e.multiplicity << ',' << unit_name(unit) << ','
              << (e.value.is_exact() ? e.value.to_string() : "") << '\n';
    }
  } else {
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering spectra of metric graphs, flat tori and Heisenberg manifolds", "covspec"};
  app.require_subcommand(1);

  GraphArgs graph;
  auto* g = app.add_subcommand("graph", "Metric graphs: covering spectrum, delta-cover deck groups and lifts");
  g->add_option("--input", graph.input, "Graph JSON (inline or file)");
  g->add_option("--bouquet", graph.bouquet, "Comma-separated loop lengths of a bouquet");
  g->add_option("--unit", graph.unit, "Unit of --bouquet lengths: 1 or pi");
  g->add_option("--cutoff", graph.cutoff, "Bound on delta (default: the diameter)");
  g->add_option("--max-cosets", graph.max_cosets, "Coset enumeration bound");
  g->add_option("--delta", graph.delta, "Delta for --deck, --lift, --witness, --presentation");
  g->add_flag("--deck", graph.deck, "Report the deck group of the delta-cover");
  g->add_option("--lift", graph.lift, "Decide whether a word lifts closed to the delta-cover");
  g->add_flag("--witness", graph.witness, "Find a delta-pair witness");
  g->add_flag("--presentation", graph.presentation, "Print the delta-cover relators as a presentation file");
  add_output_flags(g, graph.output);

  TorusArgs torus;
  auto* t = app.add_subcommand("torus", "Flat tori R^n / Lambda");
  t->add_option("--basis", torus.basis, "Basis matrix as JSON, rows are basis vectors");
  t->add_option("--gram", torus.gram, "Gram matrix as JSON");
  t->add_option("--rhombic", torus.rhombic, "Rhombic torus with unit sides at this angle");
  t->add_option("--cutoff", torus.cutoff, "Bound on delta");
  t->add_option("--delta", torus.delta, "Report the sublattice of vectors shorter than 2 delta");
  t->add_option("--max-dimension", torus.max_dimension, "Dimension guard");
  add_output_flags(t, torus.output);

  HeisenbergArgs heis;
  auto* h = app.add_subcommand("heisenberg", "Heisenberg manifolds");
  h->add_option("--params", heis.params, "Parameters {n, r, s, c, a} as JSON (inline or file)")->required();
  h->add_option("--compare", heis.compare, "Second manifold for the isospectrality check");
  add_output_flags(h, heis.output);

  SunadaArgs sun;
  auto* s = app.add_subcommand("sunada", "Sunada condition and Komatsu pairs");
  s->add_option("--preset", sun.preset, "Built-in example: komatsu-p3");
  s->add_option("--triple", sun.triple, "Triple {N, G_gens, H1, H2} in cycle notation (inline or file)");

  FamilyArgs fam;
  auto* f = app.add_subcommand("family", "Families of spaces: spectra, convergence and gaps");
  f->add_option("name", fam.name,
                "torus_collapse | hawaii_trunc | todense | nounif | rhombic_path | multiplicity_growth")
      ->required();
  f->add_option("--j", fam.j, "Single index");
  f->add_option("--from", fam.from, "First index");
  f->add_option("--to", fam.to, "Last index");
  f->add_option("--anchors", fam.anchors, "Comma-separated anchor points for gap statistics");
  f->add_option("--theta-start", fam.theta_start, "rhombic_path start angle");
  f->add_option("--theta-end", fam.theta_end, "rhombic_path end angle");
  f->add_option("--max-cosets", fam.max_cosets, "Coset enumeration bound");
  add_output_flags(f, fam.output);

  std::vector<std::string> argv_storage{"covspec"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "covspec: unknown subcommand '" << args[0] << "'\n\n" << app.help();
    return kExitUsage;
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (!args.empty()) err << "covspec: " << e.what() << "\n\n";
    err << app.help();
    return kExitUsage;
  }

  try {
    if (g->parsed()) return run_graph(graph, out);
    if (t->parsed()) return run_torus(torus, out);
    if (h->parsed()) return run_heisenberg(heis, out);
    if (s->parsed()) return run_sunada(sun, out);
    if (f->parsed()) return run_family(fam, out);
  } catch (const IndeterminateSpectrumError& e) {
    err << "covspec: indeterminate: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const ArgumentError& e) {
    err << "covspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnitMismatch& e) {
    err << "covspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "covspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnhandledRegime& e) {
    err << "covspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "covspec: malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "covspec: " << e.what() << '\n';
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace covspec::cli
