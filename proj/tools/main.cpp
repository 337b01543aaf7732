#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "emit.hpp"
#include "levels.hpp"
#include "permstat/ensembles.hpp"
#include "permstat/errors.hpp"
#include "permstat/folsym/model.hpp"
#include "permstat/folsym/parser.hpp"
#include "permstat/folsym/symmetrize.hpp"
#include "permstat/occupancy.hpp"
#include "permstat/thermo.hpp"

using namespace permstat;
using namespace permstat::cli;

namespace {

const char* count_formula(StatisticsKind kind) {
  switch (kind) {
    case StatisticsKind::Distinguishable: return "W = C^N";
    case StatisticsKind::ReducedClassical:
    case StatisticsKind::BoseEinstein: return "W = (N+C-1)!/(N!(C-1)!)";
    case StatisticsKind::FermiDirac: return "W = C!/(N!(C-N)!)";
  }
  return "";
}

const char* weight_formula(StatisticsKind kind) {
  switch (kind) {
    case StatisticsKind::Distinguishable: return "weight = N!/prod(n_k!)";
    case StatisticsKind::ReducedClassical: return "weight = 1/prod(n_k!)";
    case StatisticsKind::BoseEinstein: return "weight = 1";
    case StatisticsKind::FermiDirac: return "weight = 1 if all n_k<=1 else 0";
  }
  return "";
}

std::string populations_str(const std::vector<unsigned long>& pops) {
  std::string out = "(";
  for (std::size_t i = 0; i < pops.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(pops[i]);
  }
  out += ")";
  return out;
}

std::string cardinality_set_str(const std::set<unsigned>& sizes) {
  std::string out = "{";
  bool first = true;
  for (unsigned s : sizes) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(s);
  }
  out += "}";
  return out;
}

std::string read_formula_text(const std::string& option) {
  if (option != "-") return option;
  std::string text, line;
  while (std::getline(std::cin, line)) {
    text += line;
    text += '\n';
  }
  return text;
}

// Resolve the signature: an explicit --sig wins, otherwise an optional
// "sig ..." header line inside the formula text.
std::pair<folsym::Signature, folsym::FormulaPtr> read_sentence(const std::string& formula_opt,
                                                               const std::string& sig_decl) {
  std::string text = read_formula_text(formula_opt);
  if (!sig_decl.empty()) {
    folsym::Signature sig = folsym::parse_signature(sig_decl);
    return {sig, folsym::parse(text, sig).formula};
  }
  folsym::ParsedDocument doc = folsym::parse_document(text);
  return {doc.signature, doc.result.formula};
}

struct Options {
  std::string format_name;  // empty: table

  unsigned long cells = 1;
  unsigned long particles = 0;
  std::string statistics = "bose-einstein";
  std::string tau = "1";

  std::string levels_file;
  unsigned long n_total = 0;
  std::string e_total = "0";

  std::vector<unsigned long> cells_list;
  std::vector<unsigned long> reservoirs;
  std::vector<unsigned long> counts;
  unsigned long atom_total = 0;

  unsigned long base_cells = 2;
  unsigned long label_count = 2;

  unsigned long particles_a = 0, cells_a = 1;
  unsigned long particles_b = 0, cells_b = 1;
  bool distinct_species = false;
  bool corrected = false;
  unsigned long scale = 2;

  unsigned long ground_degeneracy = 1;

  std::string formula;
  std::string formula2;
  std::string sig;
  unsigned cardinality = 1;
  unsigned max_size = 4;
  unsigned check_max_size = 0;
};

void emit_record(const Options& opt, const Record& record) {
  Format format = opt.format_name.empty() ? Format::Table : parse_format(opt.format_name);
  emit(std::cout, record, format);
}

void run_count(const Options& opt) {
  StatisticsKind kind = parse_statistics_kind(opt.statistics);
  Record record;
  record.command = "count";
  record.param("cells", opt.cells);
  record.param("particles", opt.particles);
  record.param("statistics", to_string(kind));
  record.formula = count_formula(kind);
  record.result("count", integer_value(count_arrangements(opt.cells, opt.particles, kind)));
  emit_record(opt, record);
}

void run_enumerate(const Options& opt) {
  StatisticsKind kind = parse_statistics_kind(opt.statistics);
  Record record;
  record.command = "enumerate";
  record.param("cells", opt.cells);
  record.param("particles", opt.particles);
  record.param("statistics", to_string(kind));
  record.formula = weight_formula(kind);
  record.columns = {"occupation", "weight"};
  for (const OccupationVector& occ : enumerate_occupations(opt.cells, opt.particles, kind)) {
    record.rows.push_back({text_value(occ.str()),
                           rational_value(arrangement_weight(occ, kind))});
  }
  record.result("vectors", integer_value((unsigned long)record.rows.size()));
  emit_record(opt, record);
}

void run_dist(const Options& opt) {
  StatisticsKind kind = parse_statistics_kind(opt.statistics);
  Record record;
  record.command = "dist";
  record.param("cells", opt.cells);
  record.param("particles", opt.particles);
  record.param("statistics", to_string(kind));
  record.formula = std::string("P = weight/sum(weights); ") + weight_formula(kind);
  record.columns = {"occupation", "probability"};
  for (const auto& [occ, p] : distribution(opt.cells, opt.particles, kind).entries) {
    record.rows.push_back({text_value(occ.str()), rational_value(p)});
  }
  emit_record(opt, record);
}

void run_coins(const Options& opt) {
  StatisticsKind kind = parse_statistics_kind(opt.statistics);
  Record record;
  record.command = "coins";
  record.param("statistics", to_string(kind));
  record.formula = std::string("two coins, two phases; P = weight/sum(weights); ") +
                   weight_formula(kind);
  record.columns = {"outcome", "probability"};
  for (const auto& [occ, p] : distribution(2, 2, kind).entries) {
    std::string outcome(occ.counts[0], 'H');
    outcome += std::string(occ.counts[1], 'T');
    record.rows.push_back({text_value(outcome), rational_value(p)});
  }
  emit_record(opt, record);
}

void run_dims(const Options& opt) {
  Record record;
  record.command = "dims";
  record.param("cells", opt.cells);
  record.param("particles", opt.particles);
  record.formula =
      "full = C^N; symmetric = (N+C-1)!/(N!(C-1)!); antisymmetric = C!/(N!(C-N)!)";
  HilbertDimensions dims = hilbert_dimensions(opt.cells, opt.particles);
  record.result("full", integer_value(dims.full));
  record.result("symmetric", integer_value(dims.symmetric));
  record.result("antisymmetric", integer_value(dims.antisymmetric));
  emit_record(opt, record);
}

void run_labels(const Options& opt) {
  Record record;
  record.command = "labels";
  record.param("base-cells", opt.base_cells);
  record.param("labels", opt.label_count);
  record.formula =
      "composite = base*L; reduced = (N+composite-1)!/(N!(composite-1)!); "
      "accessible = base^N (N = L)";
  StableLabelReduction result =
      stable_label_reduction(LabeledSystem{opt.base_cells, opt.label_count});
  record.result("composite_cells", integer_value(result.composite_cells));
  record.result("reduced_count", integer_value(result.reduced_count));
  record.result("accessible_count", integer_value(result.accessible_count));
  emit_record(opt, record);
}

void run_macro(const Options& opt) {
  LevelSpec spec = load_level_file(opt.levels_file);
  MacrostateConstraint constraint{opt.n_total, ExactRational(opt.e_total)};
  Record record;
  record.command = "macro";
  record.param("levels", opt.levels_file);
  record.param("n-total", opt.n_total);
  record.param("e-total", constraint.e_total.str());
  record.formula =
      "W_D = sum N_tot!/prod(N_k!) prod C_k^N_k; "
      "W_I = sum prod (N_k+C_k-1)!/(N_k!(C_k-1)!)";
  record.columns = {"populations"};
  for (const auto& pops : enumerate_macrostates(spec, constraint)) {
    record.rows.push_back({text_value(populations_str(pops))});
  }
  record.result("macrostates", integer_value((unsigned long)record.rows.size()));
  record.result("w_distinguishable", integer_value(count_arrangements(
                                         spec, constraint, StatisticsKind::Distinguishable)));
  record.result("w_indistinguishable", integer_value(count_arrangements(
                                           spec, constraint, StatisticsKind::BoseEinstein)));
  emit_record(opt, record);
}

void run_volume(const Options& opt) {
  CellUnit tau{ExactRational(opt.tau)};
  Record record;
  record.command = "volume";
  if (opt.levels_file.empty()) {
    record.param("cells", opt.cells);
    record.param("particles", opt.particles);
    record.param("tau", tau.tau().str());
    record.formula = "V = (C tau)^N / N!";
    record.result("volume", rational_value(reduced_volume(opt.cells, opt.particles, tau)));
  } else {
    LevelSpec spec = load_level_file(opt.levels_file);
    MacrostateConstraint constraint{opt.n_total, ExactRational(opt.e_total)};
    record.param("levels", opt.levels_file);
    record.param("n-total", opt.n_total);
    record.param("e-total", constraint.e_total.str());
    record.param("tau", tau.tau().str());
    record.formula = "V = sum prod (C_k tau)^N_k / N_k!";
    record.result("volume",
                  rational_value(reduced_volume_constrained(spec, constraint, tau)));
  }
  emit_record(opt, record);
}

void run_limit(const Options& opt) {
  Record record;
  record.command = "limit";
  record.param("particles", opt.particles);
  record.formula = "ratio = (N+C-1)!/(N!(C-1)!) * N!/C^N = prod_{i<N} (1+i/C)";
  record.columns = {"cells", "ratio"};
  for (unsigned long c : opt.cells_list) {
    record.rows.push_back({integer_value(c), rational_value(limit_ratio(c, opt.particles))});
  }
  emit_record(opt, record);
}

void run_entropy(const Options& opt) {
  Record record;
  record.command = "entropy";
  record.param("cells", opt.cells);
  record.param("particles", opt.particles);
  record.formula = "S_uncorrected = ln C^N; S_corrected = ln(C^N/N!)  [k=1, tau=1]";
  EntropyReport report = entropy_report(GasSample{opt.particles, opt.cells});
  record.result("uncorrected", real_value(report.uncorrected));
  record.result("corrected", real_value(report.corrected));
  emit_record(opt, record);
}

void run_mix(const Options& opt) {
  GasSample a{opt.particles_a, opt.cells_a, "a"};
  GasSample b{opt.particles_b, opt.cells_b, opt.distinct_species ? "b" : "a"};
  Record record;
  record.command = "mix";
  record.param("particles-a", opt.particles_a);
  record.param("cells-a", opt.cells_a);
  record.param("particles-b", opt.particles_b);
  record.param("cells-b", opt.cells_b);
  record.param("species", opt.distinct_species ? "distinct" : "same");
  record.param("corrected", opt.corrected ? "true" : "false");
  record.formula = "mixing = S(combined over C_a+C_b cells) - S(a) - S(b)";
  double mix = mixing_entropy(a, b, opt.corrected);
  record.result("mixing_entropy", real_value(mix));
  unsigned long n = opt.particles_a + opt.particles_b;
  if (n > 0) record.result("per_particle", real_value(mix / static_cast<double>(n)));
  emit_record(opt, record);
}

void run_extensivity(const Options& opt) {
  Record record;
  record.command = "extensivity";
  record.param("cells", opt.cells);
  record.param("particles", opt.particles);
  record.param("scale", opt.scale);
  record.param("corrected", opt.corrected ? "true" : "false");
  record.formula = "defect = S(m N, m C) - m S(N, C)";
  double defect = extensivity_defect(GasSample{opt.particles, opt.cells}, opt.scale,
                                     opt.corrected);
  record.result("defect", real_value(defect));
  unsigned long scaled_particles = opt.scale * opt.particles;
  if (scaled_particles > 0) {
    record.result("per_particle",
                  real_value(defect / static_cast<double>(scaled_particles)));
  }
  emit_record(opt, record);
}

void run_grand(const Options& opt) {
  Record record;
  record.command = "grand";
  record.param("particles", opt.particles);
  record.formula = "ratio = binomial(N*, N) N! / N*^N";
  record.columns = {"reservoir", "ratio"};
  auto ratios = grand_canonical_limit(opt.particles, opt.reservoirs);
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    record.rows.push_back({integer_value(opt.reservoirs[i]), rational_value(ratios[i])});
  }
  emit_record(opt, record);
}

void run_et_correction(const Options& opt) {
  Record record;
  record.command = "et-correction";
  std::string counts_text;
  for (std::size_t i = 0; i < opt.counts.size(); ++i) {
    if (i > 0) counts_text += ",";
    counts_text += std::to_string(opt.counts[i]);
  }
  record.param("counts", counts_text);
  record.param("atom-total", opt.atom_total);
  record.formula = "ln( atom_total! / prod(counts_i!) )";
  record.result("correction",
                real_value(ehrenfest_trkal_correction(opt.counts, opt.atom_total)));
  emit_record(opt, record);
}

void run_symmetrize(const Options& opt) {
  auto [sig, t] = read_sentence(opt.formula, opt.sig);
  folsym::SymmetrizeResult result = folsym::symmetrize(t, opt.cardinality);

  Record record;
  record.command = "symmetrize";
  record.param("n", (unsigned long)opt.cardinality);
  record.param("sentence", folsym::to_string(t));
  record.formula = "T_S = exists x1..xn G; quantifiers expanded over n names";
  record.result("t_s", text_value(folsym::to_string(result.t_s)));
  record.result("g", text_value(folsym::to_string(result.g)));

  if (opt.check_max_size > 0) {
    std::set<unsigned> sizes =
        folsym::satisfiable_cardinalities(sig, t, opt.check_max_size);
    record.result("satisfiable_cardinalities", text_value(cardinality_set_str(sizes)));
    if (sizes != std::set<unsigned>{opt.cardinality}) {
      record.notes.push_back(
          "hypothesis violated within bound: sentence is satisfiable at sizes " +
          cardinality_set_str(sizes) + ", construction assumes exactly {" +
          std::to_string(opt.cardinality) + "}");
    }
    auto symmetry =
        folsym::check_total_symmetry(sig, result.g, opt.cardinality, opt.check_max_size);
    record.result("total_symmetry",
                  text_value(symmetry.symmetric
                                 ? "symmetric-up-to-" + std::to_string(opt.check_max_size)
                                 : "counterexample: " + symmetry.model->str()));
    auto equivalence =
        folsym::check_equivalence(sig, t, result.t_s, opt.check_max_size);
    record.result("equivalence",
                  text_value(equivalence.equivalent
                                 ? "equivalent-up-to-" + std::to_string(opt.check_max_size)
                                 : "counterexample: " + equivalence.counterexample->str()));
    record.notes.push_back("model checks bounded by size " +
                           std::to_string(opt.check_max_size) +
                           "; larger models unverified");
  }
  emit_record(opt, record);
}

void run_check_equiv(const Options& opt) {
  auto [sig, t1] = read_sentence(opt.formula, opt.sig);
  folsym::FormulaPtr t2 = folsym::parse(read_formula_text(opt.formula2), sig).formula;

  Record record;
  record.command = "check-equiv";
  record.param("sentence1", folsym::to_string(t1));
  record.param("sentence2", folsym::to_string(t2));
  record.param("max-size", (unsigned long)opt.max_size);
  record.formula = "t1 <-> t2 over every interpretation of sizes 1..max";
  auto verdict = folsym::check_equivalence(sig, t1, t2, opt.max_size);
  record.result("status", text_value(verdict.equivalent
                                         ? "equivalent-up-to-" + std::to_string(opt.max_size)
                                         : "counterexample"));
  if (!verdict.equivalent) {
    record.result("counterexample", text_value(verdict.counterexample->str()));
  }
  record.notes.push_back("model checks bounded by size " + std::to_string(opt.max_size) +
                         "; larger models unverified");
  emit_record(opt, record);
}

void run_cardinalities(const Options& opt) {
  auto [sig, t] = read_sentence(opt.formula, opt.sig);
  Record record;
  record.command = "cardinalities";
  record.param("sentence", folsym::to_string(t));
  record.param("max-size", (unsigned long)opt.max_size);
  record.formula = "universe sizes with at least one satisfying interpretation";
  record.result("satisfiable_cardinalities",
                text_value(cardinality_set_str(
                    folsym::satisfiable_cardinalities(sig, t, opt.max_size))));
  record.notes.push_back("sizes above " + std::to_string(opt.max_size) + " unchecked");
  emit_record(opt, record);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "permstat: exact occupation-statistics counts, entropy accounting, and "
      "first-order symmetrization with a bounded model checker"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format_name, "output format: table|json|csv")
      ->envname("PERMSTAT_FORMAT");

  auto add_region = [&](CLI::App* sub) {
    sub->add_option("--cells", opt.cells, "number of 1-particle cells C")->required();
    sub->add_option("--particles", opt.particles, "number of particles N")->required();
  };
  auto add_statistics = [&](CLI::App* sub) {
    sub->add_option("--statistics", opt.statistics,
                    "distinguishable|reduced-classical|bose-einstein|fermi-dirac "
                    "(mb|rc|be|fd)")
        ->required();
  };

  CLI::App* count = app.add_subcommand("count", "count arrangements in one region");
  add_region(count);
  add_statistics(count);
  count->callback([&] { run_count(opt); });

  CLI::App* enumerate = app.add_subcommand("enumerate", "list occupation vectors");
  add_region(enumerate);
  add_statistics(enumerate);
  enumerate->callback([&] { run_enumerate(opt); });

  CLI::App* dist = app.add_subcommand("dist", "normalized occupation distribution");
  add_region(dist);
  add_statistics(dist);
  dist->callback([&] { run_dist(opt); });

  CLI::App* coins = app.add_subcommand("coins", "two-coin outcome probabilities");
  add_statistics(coins);
  coins->callback([&] { run_coins(opt); });

  CLI::App* dims = app.add_subcommand("dims", "Hilbert-space dimension counts");
  add_region(dims);
  dims->callback([&] { run_dims(opt); });

  CLI::App* labels = app.add_subcommand("labels", "stable-label reduction counts");
  labels->add_option("--base-cells", opt.base_cells, "phases per particle")->required();
  labels->add_option("--labels", opt.label_count, "distinct stable labels (= particles)")
      ->required();
  labels->callback([&] { run_labels(opt); });

  CLI::App* macro = app.add_subcommand("macro", "energy-constrained macrostate counts");
  macro->add_option("--levels", opt.levels_file, "level spec file")->required();
  macro->add_option("--n-total", opt.n_total, "total particle number")->required();
  macro->add_option("--e-total", opt.e_total, "total energy (p/q)")->required();
  macro->callback([&] { run_macro(opt); });

  CLI::App* volume = app.add_subcommand("volume", "reduced phase-space volume");
  volume->add_option("--cells", opt.cells, "number of 1-particle cells C");
  volume->add_option("--particles", opt.particles, "number of particles N");
  volume->add_option("--levels", opt.levels_file, "level spec file (constrained mode)");
  volume->add_option("--n-total", opt.n_total, "total particle number (constrained mode)");
  volume->add_option("--e-total", opt.e_total, "total energy p/q (constrained mode)");
  volume->add_option("--tau", opt.tau, "elementary cell volume (p/q, default 1)");
  volume->callback([&] { run_volume(opt); });

  CLI::App* limit = app.add_subcommand("limit", "quantum/classical count ratio series");
  limit->add_option("--particles", opt.particles, "number of particles N")->required();
  limit->add_option("--cells", opt.cells_list, "cell counts, comma separated")
      ->required()
      ->delimiter(',');
  limit->callback([&] { run_limit(opt); });

  CLI::App* entropy_cmd = app.add_subcommand("entropy", "entropy with/without correction");
  add_region(entropy_cmd);
  entropy_cmd->callback([&] { run_entropy(opt); });

  CLI::App* mix = app.add_subcommand("mix", "entropy of mixing two samples");
  mix->add_option("--particles-a", opt.particles_a)->required();
  mix->add_option("--cells-a", opt.cells_a)->required();
  mix->add_option("--particles-b", opt.particles_b)->required();
  mix->add_option("--cells-b", opt.cells_b)->required();
  mix->add_flag("--distinct-species", opt.distinct_species,
                "treat the samples as different gases");
  mix->add_flag("--corrected", opt.corrected, "apply the 1/N! correction");
  mix->callback([&] { run_mix(opt); });

  CLI::App* extensivity = app.add_subcommand("extensivity", "extensivity defect");
  add_region(extensivity);
  extensivity->add_option("--scale", opt.scale, "replication factor m")->required();
  extensivity->add_flag("--corrected", opt.corrected, "apply the 1/N! correction");
  extensivity->callback([&] { run_extensivity(opt); });

  CLI::App* grand = app.add_subcommand("grand", "finite-reservoir ratio series");
  grand->add_option("--particles", opt.particles, "subsystem particle number N")->required();
  grand->add_option("--reservoirs", opt.reservoirs, "reservoir sizes N*, comma separated")
      ->required()
      ->delimiter(',');
  grand->callback([&] { run_grand(opt); });

  CLI::App* et = app.add_subcommand("et-correction", "molecule-partition entropy term");
  et->add_option("--counts", opt.counts, "molecule counts per species, comma separated")
      ->required()
      ->delimiter(',');
  et->add_option("--atom-total", opt.atom_total, "conserved atom total")->required();
  et->callback([&] { run_et_correction(opt); });

  CLI::App* symmetrize_cmd =
      app.add_subcommand("symmetrize", "build the totally symmetric equivalent");
  symmetrize_cmd->add_option("--n", opt.cardinality, "model cardinality n")->required();
  symmetrize_cmd->add_option("--formula", opt.formula, "sentence text, or - for stdin")
      ->required();
  symmetrize_cmd->add_option("--sig", opt.sig, "signature, e.g. \"F/2, P/1\"");
  symmetrize_cmd->add_option("--check-max-size", opt.check_max_size,
                             "verify symmetry and equivalence up to this size");
  symmetrize_cmd->callback([&] { run_symmetrize(opt); });

  CLI::App* check_equiv = app.add_subcommand("check-equiv", "bounded equivalence check");
  check_equiv->add_option("--formula1", opt.formula, "first sentence, or - for stdin")
      ->required();
  check_equiv->add_option("--formula2", opt.formula2, "second sentence")->required();
  check_equiv->add_option("--sig", opt.sig, "signature, e.g. \"F/2, P/1\"");
  check_equiv->add_option("--max-size", opt.max_size, "largest universe size (default 4)");
  check_equiv->callback([&] { run_check_equiv(opt); });

  CLI::App* cardinalities =
      app.add_subcommand("cardinalities", "satisfiable universe sizes up to a bound");
  cardinalities->add_option("--formula", opt.formula, "sentence text, or - for stdin")
      ->required();
  cardinalities->add_option("--sig", opt.sig, "signature, e.g. \"F/2, P/1\"");
  cardinalities->add_option("--max-size", opt.max_size, "largest universe size (default 4)");
  cardinalities->callback([&] { run_cardinalities(opt); });

  // let `permstat count ... --format json` reach the parent option
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const folsym::ParseError& e) {
    std::cerr << "formula error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
