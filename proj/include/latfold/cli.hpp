#ifndef LATFOLD_CLI_HPP_
#define LATFOLD_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latfold/chain.hpp"
#include "latfold/energy.hpp"
#include "latfold/errors.hpp"
#include "latfold/geometry.hpp"
#include "latfold/oracle.hpp"
#include "latfold/report_json.hpp"
#include "latfold/search.hpp"
#include "latfold/sequence.hpp"

// The `latfold` command line: encode, score, enumerate, search, hydropathy
// and estimate. Exit codes: 0 success, 2 bad arguments or input, 1 anything
// else.

namespace latfold::cli {

struct Invocation {
  std::string lattice = "square";
  std::string model, matrix;
  std::string seq, seq_file, classes;
  bool three_letter = false;
  std::string scheme;
  std::string moves;
  std::string format;
  std::size_t window = 1;
  std::uint64_t seed = 1;
  std::uint64_t iterations = 1000;
  double t0 = 1000.0;
  double alpha = 0.995;
  std::uint32_t restarts = 0;
  unsigned workers = 1;
  std::size_t reps = 10;
  bool fix_first = false;
  std::uint64_t n = 0, k = 0;
  std::string mode = "full-eq1";
};

namespace impl {

inline ResidueSequence load_sequence(const Invocation& inv) {
  if (!inv.seq_file.empty())
    return read_fasta_file(inv.seq_file);
  return parse_sequence(inv.seq, inv.three_letter ? SequenceFormat::three_letter
                                                  : SequenceFormat::one_letter);
}

inline void require_one_source(const Invocation& inv, bool allow_classes) {
  int sources = !inv.seq.empty() + !inv.seq_file.empty() + (allow_classes && !inv.classes.empty());
  if (sources != 1)
    throw ArgumentError(allow_classes ? "give exactly one of --seq, --seq-file or --classes"
                                      : "give exactly one of --seq or --seq-file");
}

inline std::set<char> as_set(const std::string& s) { return {s.begin(), s.end()}; }

// The class string to score, from raw --classes or an encoded sequence.
inline std::string load_classes(const Invocation& inv) {
  require_one_source(inv, true);
  if (!inv.classes.empty()) {
    if (!inv.scheme.empty()) {
      const ClassScheme& sc = scheme_registry(inv.scheme);
      for (std::size_t i = 0; i < inv.classes.size(); ++i)
        if (sc.alphabet.find(inv.classes[i]) == std::string::npos)
          throw ArgumentError(std::string("class '") + inv.classes[i] + "' at position " +
                              std::to_string(i) + " is not in scheme " + sc.name);
    }
    return inv.classes;
  }
  if (inv.scheme.empty())
    throw ArgumentError("--scheme is required to encode an amino-acid sequence");
  return encode(load_sequence(inv), scheme_registry(inv.scheme));
}

inline EnergyModel load_model(const Invocation& inv) {
  if (inv.model.empty() == inv.matrix.empty())
    throw ArgumentError("give exactly one of --model or --matrix");
  EnergyModel m = inv.matrix.empty() ? model_registry(inv.model) : load_matrix(inv.matrix);
  if (!inv.scheme.empty()) {
    const ClassScheme& sc = scheme_registry(inv.scheme);
    if (as_set(sc.alphabet) != as_set(m.alphabet))
      throw ValidationError("scheme " + sc.name + " (" + sc.alphabet + ") does not match model " +
                            m.name + " (" + m.alphabet + ")");
  }
  return m;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

inline void cmd_encode(const Invocation& inv, std::ostream& out) {
  require_one_source(inv, false);
  ResidueSequence seq = load_sequence(inv);
  const ClassScheme& sc = scheme_registry(inv.scheme);
  std::string enc = encode(seq, sc);
  if (inv.format == "json")
    emit(out, Json{{"id", seq.id}, {"scheme", sc.name}, {"classes", enc}});
  else if (inv.format == "tsv")
    out << seq.id << '\t' << enc << '\n';
  else
    out << enc << '\n';
}

inline void cmd_score(const Invocation& inv, std::ostream& out) {
  const LatticeName lat = parse_lattice_name(inv.lattice);
  const std::string enc = load_classes(inv);
  const EnergyModel model = load_model(inv);
  const MoveString ms = parse_moves(lat, inv.moves);
  const Conformation conf = fold(ms);
  const EnergyValue e = evaluate(conf, enc, model);
  const auto cs = contacts(conf);
  if (inv.format == "tsv") {
    out << "energy\t" << format_milli(e) << '\n';
    for (const auto& [i, j] : cs)
      out << "contact\t" << i << '\t' << j << '\n';
    return;
  }
  Json jc = Json::array();
  for (const auto& [i, j] : cs)
    jc.push_back(Json::array({i, j}));
  emit(out, Json{{"lattice", inv.lattice},
                 {"moves", format_moves(ms)},
                 {"model", model.name},
                 {"classes", enc},
                 {"energy_milli", e},
                 {"contacts", jc}});
}

inline void cmd_enumerate(const Invocation& inv, std::ostream& out) {
  const LatticeName lat = parse_lattice_name(inv.lattice);
  const std::string enc = load_classes(inv);
  const EnergyModel model = load_model(inv);
  if (inv.workers == 0)
    throw ArgumentError("--workers must be at least 1");
  EnumerationReport r = enumerate_ground_states(lat, enc, model, {inv.fix_first, inv.workers, inv.reps});
  if (inv.format == "tsv") {
    out << "lattice\t" << to_string(r.lattice) << "\nn\t" << r.n << "\nmodel\t" << r.model
        << "\nmin_energy\t" << format_milli(r.min_energy) << "\ndegeneracy\t" << r.degeneracy
        << "\ntotal_walks\t" << r.total_walks << "\nfixed_first_move\t"
        << (r.fixed_first_move ? "true" : "false") << '\n';
    for (const MoveString& m : r.representatives)
      out << "representative\t" << format_moves(m) << '\n';
    return;
  }
  emit(out, to_json(r));
}

inline void cmd_search(const Invocation& inv, std::ostream& out) {
  const LatticeName lat = parse_lattice_name(inv.lattice);
  const std::string enc = load_classes(inv);
  const EnergyModel model = load_model(inv);
  SearchConfig cfg;
  cfg.seed = inv.seed;
  cfg.iterations = inv.iterations;
  cfg.t0 = inv.t0;
  cfg.alpha = inv.alpha;
  cfg.restarts = inv.restarts;
  SearchResult r = anneal(lat, enc, model, cfg);
  if (inv.format == "tsv") {
    out << "iteration\tbest_energy\n";
    for (const TracePoint& t : r.trace)
      out << t.iteration << '\t' << format_milli(t.best) << '\n';
    return;
  }
  Json j = to_json(r);
  j["model"] = model.name;
  j["seed"] = inv.seed;
  emit(out, j);
}

inline void cmd_hydropathy(const Invocation& inv, std::ostream& out) {
  require_one_source(inv, false);
  ResidueSequence seq = load_sequence(inv);
  auto prof = hydropathy_profile(seq, inv.window);
  const std::size_t half = inv.window / 2;
  if (inv.format == "tsv") {
    out << "center\tresidue\tmean\n";
    for (std::size_t i = 0; i < prof.size(); ++i)
      out << i + half << '\t' << residue(seq.residues[i + half]).three << '\t'
          << prof[i].to_string() << '\n';
    return;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < prof.size(); ++i)
    rows.push_back(Json{{"center", i + half}, {"sum_tenths", prof[i].sum_tenths},
                        {"mean", prof[i].to_string()}});
  emit(out, Json{{"id", seq.id}, {"window", inv.window}, {"profile", rows}});
}

inline void cmd_estimate(const Invocation& inv, std::ostream& out) {
  CountEstimate e = estimate_conformations(inv.n, inv.k, parse_estimate_mode(inv.mode));
  if (inv.format == "json") {
    Json j = to_json(e);
    j["n"] = inv.n;
    j["k"] = inv.k;
    emit(out, j);
  } else {
    out << e.count << '\n';
  }
}

inline std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ')
    s.pop_back();
  return s;
}

} // namespace impl

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Exact lattice protein folding toolkit", "latfold"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json", "tsv"});

  auto add_sequence = [&](CLI::App* sub, bool classes) {
    sub->add_option("--seq", inv.seq, "Inline amino-acid sequence");
    sub->add_option("--seq-file", inv.seq_file, "FASTA-like sequence file");
    sub->add_flag("--three-letter", inv.three_letter, "Parse --seq as three-letter codes");
    if (classes)
      sub->add_option("--classes", inv.classes, "Class string, used as-is (e.g. HPPH)");
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--lattice", inv.lattice, "square | hex | cubic | fcc | hcp");
    sub->add_option("--scheme", inv.scheme, "hp | hpnx | hhpnx | crippen4 | yhhx | aa20");
    sub->add_option("--model", inv.model, "Built-in energy model");
    sub->add_option("--matrix", inv.matrix, "Energy matrix file");
  };

  CLI::App* encode_cmd = app.add_subcommand("encode", "Map a sequence onto a class alphabet");
  add_sequence(encode_cmd, false);
  encode_cmd->add_option("--scheme", inv.scheme, "Class scheme")->required();
  encode_cmd->add_option("--format", inv.format)->check(formats);

  CLI::App* score_cmd = app.add_subcommand("score", "Contact energy of one conformation");
  add_sequence(score_cmd, true);
  add_model(score_cmd);
  score_cmd->add_option("--moves", inv.moves, "Move labels, e.g. ACB")->required();
  score_cmd->add_option("--format", inv.format)->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "Exact ground states by exhaustive enumeration");
  add_sequence(enum_cmd, true);
  add_model(enum_cmd);
  enum_cmd->add_flag("--fix-first", inv.fix_first, "Pin the first move to basis vector A");
  enum_cmd->add_option("--workers", inv.workers, "Worker threads");
  enum_cmd->add_option("--reps", inv.reps, "Maximum representatives reported");
  enum_cmd->add_option("--format", inv.format)->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* search_cmd = app.add_subcommand("search", "Simulated-annealing conformational search");
  add_sequence(search_cmd, true);
  add_model(search_cmd);
  search_cmd->add_option("--seed", inv.seed);
  search_cmd->add_option("--iterations", inv.iterations, "Iterations per restart");
  search_cmd->add_option("--t0", inv.t0, "Initial temperature in milli-units");
  search_cmd->add_option("--alpha", inv.alpha, "Geometric cooling factor per iteration");
  search_cmd->add_option("--restarts", inv.restarts);
  search_cmd->add_option("--format", inv.format)->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* hyd_cmd = app.add_subcommand("hydropathy", "Sliding-window Kyte-Doolittle profile");
  add_sequence(hyd_cmd, false);
  hyd_cmd->add_option("--window", inv.window, "Odd window length");
  hyd_cmd->add_option("--format", inv.format)->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* est_cmd = app.add_subcommand("estimate", "Dihedral-angle conformation count");
  est_cmd->add_option("--n", inv.n, "Residues")->required();
  est_cmd->add_option("--k", inv.k, "States per angle")->required();
  est_cmd->add_option("--mode", inv.mode, "full-eq1 | simplified");
  est_cmd->add_option("--format", inv.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv{"latfold"};
  for (const std::string& a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (inv.format.empty())
      inv.format = (encode_cmd->parsed() || est_cmd->parsed()) ? "text" : "json";
    if (encode_cmd->parsed())
      impl::cmd_encode(inv, out);
    else if (score_cmd->parsed())
      impl::cmd_score(inv, out);
    else if (enum_cmd->parsed())
      impl::cmd_enumerate(inv, out);
    else if (search_cmd->parsed())
      impl::cmd_search(inv, out);
    else if (hyd_cmd->parsed())
      impl::cmd_hydropathy(inv, out);
    else
      impl::cmd_estimate(inv, out);
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << impl::one_line(e.what()) << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << impl::one_line(e.what()) << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << impl::one_line(e.what()) << '\n';
    return 1;
  }
}

} // namespace latfold::cli

#endif // LATFOLD_CLI_HPP_
