// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latfold/latfold.hpp"
#include "support/oracles.hpp"

using namespace latfold;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok)
      failures.push_back(what);
  }
};

// Reference matrices as decimal text, converted here without the library
// parser.
struct ReferenceMatrix {
  const char* model;
  const char* labels;
  std::vector<const char*> rows;
};

std::int64_t to_milli(const std::string& s) { return std::llround(std::stod(s) * 1000.0); }

void matrix_fidelity(Check& c) {
  const std::vector<ReferenceMatrix> tables = {
      {"hp", "HP", {"-1 0", "0 0"}},
      {"hp-li", "HP", {"-3 -1", "-1 0"}},
      {"hp-backofen", "HP", {"-2.5 -1", "-1 0"}},
      {"crippen1234", "1234",
       {"-0.012 -0.074 -0.054 0.123", "-0.074 0.123 -0.317 0.156", "-0.054 -0.317 -0.263 -0.010",
        "0.123 0.156 -0.010 -0.004"}},
      {"hpnx-a", "HPNX", {"-4 0 0 0", "0 0 -1 0", "0 -1 0 0", "0 0 0 0"}},
      {"hpnx-b", "HPNX", {"-4 0 0 0", "0 1 -1 0", "0 -1 1 0", "0 0 0 0"}},
      {"yhhx", "YhHX", {"0 -1 -1 2", "-1 -2 -4 2", "-1 -4 -3 0", "2 2 0 0"}},
      {"yhhx-corrected", "YhHX", {"0 -1 -1 2", "-1 2 -4 2", "-1 -4 -3 0", "2 2 0 0"}},
      {"hhpnx", "hHPNX",
       {"2 -4 0 0 0", "-4 -3 0 0 0", "0 0 1 -1 0", "0 0 -1 1 0", "0 0 0 0 0"}},
  };
  for (const ReferenceMatrix& t : tables) {
    const EnergyModel& m = model_registry(t.model);
    const std::string labels = t.labels;
    c.expect(m.alphabet == labels, std::string(t.model) + " alphabet");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::istringstream row(t.rows[i]);
      std::string tok;
      for (std::size_t j = 0; j < labels.size(); ++j) {
        row >> tok;
        c.expect(m(labels[i], labels[j]) == to_milli(tok),
                 std::string(t.model) + " (" + labels[i] + "," + labels[j] + ")");
      }
    }
  }
  c.expect(model_registry("yhhx")('h', 'h') == -2000, "yhhx (h,h) = -2000");
  c.expect(model_registry("yhhx-corrected")('h', 'h') == 2000, "yhhx-corrected (h,h) = +2000");
  c.expect(model_registry("hhpnx")('h', 'h') == 2000, "hhpnx (h,h) = +2000");
  const std::vector<int> fq = {10, 16, 36, 28};
  c.expect(model_registry("yhhx").frequencies == fq, "yhhx f_q");
  c.expect(model_registry("yhhx-corrected").frequencies == fq, "yhhx-corrected f_q");
}

void geometry_exactness(Check& c) {
  for (LatticeName n : all_lattices) {
    const LatticeSpec& lat = lattice_registry(n);
    const NormSq want = n == LatticeName::fcc ? NormSq{32, 0} : NormSq{16, 0};
    c.expect(lat.contact_norm_sq == want, std::string(to_string(n)) + " contact norm");
    for (std::size_t i = 0; i < lat.size(); ++i)
      c.expect(norm_sq(lat.basis[i]) == lat.contact_norm_sq,
               std::string(to_string(n)) + " basis " + std::to_string(i));
  }
  const std::map<std::string, std::size_t> sizes = {{"square", 8}, {"hex", 12}, {"cubic", 48}};
  for (const auto& [name, size] : sizes) {
    const LatticeSpec& lat = lattice_registry(name);
    std::set<std::vector<int>> got;
    for (const Permutation& p : point_group(lat))
      got.insert(std::vector<int>(p.begin(), p.end()));
    c.expect(point_group(lat).size() == size, name + " point group size");
    c.expect(got == oracle::float_point_group(oracle::float_basis(name)),
             name + " point group matches brute-force Gram filter");
  }
}

void saw_counting(Check& c) {
  const std::vector<int> reference = {4, 12, 36, 100, 284};
  for (std::size_t n = 1; n <= 5; ++n) {
    c.expect(count_saws(LatticeName::square, n, false) == reference[n - 1],
             "square c(" + std::to_string(n) + ")");
    c.expect(oracle::naive_saws(oracle::square_basis(), n).size() ==
                 static_cast<std::size_t>(reference[n - 1]),
             "naive square c(" + std::to_string(n) + ")");
  }
  for (std::size_t n = 1; n <= 8; ++n)
    c.expect(count_saws(LatticeName::square, n, false) == 4 * count_saws(LatticeName::square, n, true),
             "square fixed-first n=" + std::to_string(n));
  for (std::size_t n = 1; n <= 6; ++n)
    c.expect(count_saws(LatticeName::cubic, n, false) == 6 * count_saws(LatticeName::cubic, n, true),
             "cubic fixed-first n=" + std::to_string(n));
  for (std::size_t n = 6; n <= 8; ++n)
    c.expect(count_saws(LatticeName::square, n, false) == oracle::naive_saws(oracle::square_basis(), n).size(),
             "square DFS vs naive n=" + std::to_string(n));
  for (std::size_t n = 1; n <= 5; ++n)
    c.expect(count_saws(LatticeName::cubic, n, false) == oracle::naive_saws(oracle::cubic_basis(), n).size(),
             "cubic DFS vs naive n=" + std::to_string(n));
}

void oracle_energy(Check& c) {
  EnumerationReport hp = enumerate_ground_states(LatticeName::square, "HPPH", model_registry("hp"));
  EnumerationReport li = enumerate_ground_states(LatticeName::square, "HPPH", model_registry("hp-li"));
  c.expect(hp.min_energy == -1000, "HPPH hp min");
  c.expect(li.min_energy == -3000, "HPPH hp-li min");
  c.expect(!hp.representatives.empty() && !li.representatives.empty() &&
               contacts(fold(hp.representatives[0])) == contacts(fold(li.representatives[0])),
           "same contact set");
}

void symmetry_invariance(Check& c) {
  Rng rng(20240601);
  const EnergyModel& m = model_registry("hhpnx");
  for (LatticeName n : all_lattices) {
    const LatticeSpec& lat = lattice_registry(n);
    int bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t len = 2 + rng.below(14);
      MoveString ms = chain_grow(n, len, rng);
      std::string enc;
      for (std::size_t i = 0; i < len; ++i)
        enc.push_back(m.alphabet[rng.below(m.size())]);
      const EnergyValue e = evaluate(fold(ms), enc, m);
      for (const Permutation& p : lat.point_group)
        bad += evaluate(fold(transform(ms, p)), enc, m) != e;
      bad += evaluate(fold(reverse(ms)), std::string(enc.rbegin(), enc.rend()), m) != e;
    }
    c.expect(bad == 0, std::string(to_string(n)) + " invariance");
  }
}

void search_soundness(Check& c) {
  const EnergyModel& hp = model_registry("hp");
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.iterations = 1000;
    SearchResult a = anneal(LatticeName::square, "HPPH", hp, cfg);
    SearchResult b = anneal(LatticeName::square, "HPPH", hp, cfg);
    hits += a.best_energy == -1000;
    c.expect(to_json(a).dump() == to_json(b).dump(), "reproducible seed " + std::to_string(seed));
    for (std::size_t i = 1; i < a.trace.size(); ++i)
      c.expect(a.trace[i].best <= a.trace[i - 1].best, "trace non-increasing");
  }
  c.expect(hits >= 9, "HPPH solved on " + std::to_string(hits) + "/10 seeds");

  // lower bound on a panel of n <= 10 instances, exact minima from brute force
  std::map<std::pair<char, char>, std::int64_t> table;
  for (char a : hp.alphabet)
    for (char b : hp.alphabet)
      table[{a, b}] = hp(a, b);
  Rng pick(77);
  for (int inst = 0; inst < 10; ++inst) {
    std::string enc;
    for (int i = 0; i < 5 + inst % 6; ++i)
      enc.push_back(pick.below(2) ? 'H' : 'P');
    const std::int64_t exact = oracle::brute_ground_states(oracle::square_basis(), enc, table).min_energy;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      SearchConfig cfg;
      cfg.seed = seed;
      cfg.iterations = 1000;
      SearchResult r = anneal(LatticeName::square, enc, hp, cfg);
      c.expect(r.best_energy >= exact, enc + " below exact minimum");
      for (std::size_t i = 1; i < r.trace.size(); ++i)
        c.expect(r.trace[i].best <= r.trace[i - 1].best, "trace non-increasing");
    }
  }
}

void encoding_fidelity(Check& c) {
  c.expect(encode(parse_sequence("YGGFM", SequenceFormat::one_letter), scheme_registry("hp")) == "HHHHH",
           "YGGFM -> HHHHH");
  auto sizes = [](const ClassScheme& s) {
    std::map<char, std::set<char>> pre;
    for (std::size_t i = 0; i < 20; ++i)
      pre[s.mapping[i]].insert(residue_table[i].one);
    return pre;
  };
  auto hpnx = sizes(scheme_registry("hpnx"));
  c.expect(hpnx['H'].size() == 10 && hpnx['P'].size() == 3 && hpnx['N'].size() == 2 && hpnx['X'].size() == 5,
           "HPNX preimages 10/3/2/5");
  c.expect(sizes(scheme_registry("hhpnx"))['h'] == std::set<char>{'A', 'V'}, "hHPNX h = {A,V}");
  auto cr = sizes(scheme_registry("crippen4"));
  c.expect(cr['1'] == std::set<char>{'G', 'Y', 'H', 'S', 'R', 'N', 'E'}, "Crippen group 1");
  c.expect(cr['2'] == std::set<char>{'A', 'V'}, "Crippen group 2");
  c.expect(cr['3'] == std::set<char>{'L', 'I', 'C', 'M', 'F'}, "Crippen group 3");
  c.expect(cr['4'] == std::set<char>{'P', 'W', 'T', 'K', 'D', 'Q'}, "Crippen group 4");
}

void estimator(Check& c) {
  c.expect(estimate_conformations(50, 3, EstimateMode::simplified).count.str() == oracle::decimal_pow(3, 150),
           "3^150");
  c.expect(estimate_conformations(2, 2, EstimateMode::full_eq1).count == 64, "full n=2 k=2");
}

void hydropathy(Check& c) {
  const std::vector<std::pair<char, const char*>> reference = {
      {'G', "-0.4"}, {'A', "1.8"},  {'P', "1.6"},  {'V', "4.2"},  {'L', "3.8"},
      {'I', "4.5"},  {'M', "1.9"},  {'F', "2.8"},  {'Y', "-1.3"}, {'W', "-0.9"},
      {'S', "-0.8"}, {'T', "-0.7"}, {'C', "2.5"},  {'N', "-3.5"}, {'Q', "-3.5"},
      {'K', "-3.9"}, {'H', "-3.2"}, {'R', "-4.5"}, {'D', "-3.5"}, {'E', "-3.5"}};
  for (const auto& [one, value] : reference) {
    auto prof = hydropathy_profile(parse_sequence(std::string(1, one), SequenceFormat::one_letter), 1);
    const long tenths = std::lround(std::stod(value) * 10.0);
    c.expect(prof.size() == 1 && prof[0].sum_tenths == tenths, std::string("hydropathy ") + one);
  }
  c.expect(hydropathy_profile(parse_sequence("I", SequenceFormat::one_letter), 1)[0].to_string() == "4.50",
           "Ile 4.5");
  c.expect(hydropathy_profile(parse_sequence("R", SequenceFormat::one_letter), 1)[0].to_string() == "-4.50",
           "Arg -4.5");
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"1 matrix fidelity", matrix_fidelity},
      {"2 geometry exactness", geometry_exactness},
      {"3 SAW counting", saw_counting},
      {"4 oracle/energy agreement", oracle_energy},
      {"5 symmetry invariance", symmetry_invariance},
      {"6 search soundness", search_soundness},
      {"7 encoding fidelity", encoding_fidelity},
      {"8 estimator", estimator},
      {"9 hydropathy", hydropathy},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.2f s)", c.failures.empty() ? "PASS" : "FAIL", name, secs);
    if (!c.failures.empty())
      std::printf(": %s%s", c.failures.front().c_str(),
                  c.failures.size() > 1 ? (" (+" + std::to_string(c.failures.size() - 1) + " more)").c_str() : "");
    std::printf("\n");
    failed += !c.failures.empty();
  }
  return failed == 0 ? 0 : 1;
}
