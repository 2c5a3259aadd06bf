#ifndef LATFOLD_SEQUENCE_HPP_
#define LATFOLD_SEQUENCE_HPP_

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "latfold/errors.hpp"

namespace latfold {

enum class Charge : std::int8_t { negative = -1, neutral = 0, positive = 1 };

struct Residue {
  char one;
  std::string_view three;
  std::string_view name;
  bool hydrophobic;
  Charge charge;  // meaningful for polar residues only
  int hydropathy_tenths;  // Kyte-Doolittle index times ten, with Pro at +1.6
};

// Standard property-table order: the ten hydrophobic residues, then the polar
// ones (neutral, positive, negative).
inline constexpr std::array<Residue, 20> residue_table = {{
    {'G', "Gly", "Glycine", true, Charge::neutral, -4},
    {'A', "Ala", "Alanine", true, Charge::neutral, 18},
    {'P', "Pro", "Proline", true, Charge::neutral, 16},
    {'V', "Val", "Valine", true, Charge::neutral, 42},
    {'L', "Leu", "Leucine", true, Charge::neutral, 38},
    {'I', "Ile", "Isoleucine", true, Charge::neutral, 45},
    {'M', "Met", "Methionine", true, Charge::neutral, 19},
    {'F', "Phe", "Phenylalanine", true, Charge::neutral, 28},
    {'Y', "Tyr", "Tyrosine", true, Charge::neutral, -13},
    {'W', "Trp", "Tryptophan", true, Charge::neutral, -9},
    {'S', "Ser", "Serine", false, Charge::neutral, -8},
    {'T', "Thr", "Threonine", false, Charge::neutral, -7},
    {'C', "Cys", "Cysteine", false, Charge::neutral, 25},
    {'N', "Asn", "Asparagine", false, Charge::neutral, -35},
    {'Q', "Gln", "Glutamine", false, Charge::neutral, -35},
    {'K', "Lys", "Lysine", false, Charge::positive, -39},
    {'H', "His", "Histidine", false, Charge::positive, -32},
    {'R', "Arg", "Arginine", false, Charge::positive, -45},
    {'D', "Asp", "Aspartate", false, Charge::negative, -35},
    {'E', "Glu", "Glutamate", false, Charge::negative, -35},
}};

// Index into residue_table.
using AminoAcid = std::uint8_t;

inline const Residue& residue(AminoAcid aa) { return residue_table.at(aa); }

struct ResidueSequence {
  std::vector<AminoAcid> residues;
  std::string id;

  std::size_t size() const { return residues.size(); }
  std::string one_letter() const {
    std::string s;
    for (AminoAcid aa : residues)
      s.push_back(residue(aa).one);
    return s;
  }
};

enum class SequenceFormat { one_letter, three_letter };

namespace impl {

inline int find_one(char c) {
  c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (std::size_t i = 0; i < residue_table.size(); ++i)
    if (residue_table[i].one == c)
      return static_cast<int>(i);
  return -1;
}

inline int find_three(std::string_view tok) {
  if (tok.size() != 3)
    return -1;
  for (std::size_t i = 0; i < residue_table.size(); ++i) {
    std::string_view t = residue_table[i].three;
    bool eq = true;
    for (std::size_t k = 0; k < 3 && eq; ++k)
      eq = std::tolower(static_cast<unsigned char>(t[k])) ==
           std::tolower(static_cast<unsigned char>(tok[k]));
    if (eq)
      return static_cast<int>(i);
  }
  return -1;
}

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

} // namespace impl

// One-letter text: whitespace is skipped and `position` is the character
// offset. Three-letter text: tokens split on '-' or whitespace and `position`
// is the token index.
inline ResidueSequence parse_sequence(std::string_view text, SequenceFormat format) {
  ResidueSequence seq;
  if (format == SequenceFormat::one_letter) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (impl::is_space(text[i]))
        continue;
      int idx = impl::find_one(text[i]);
      if (idx < 0)
        throw ParseError(std::string(1, text[i]), i, "unknown amino-acid code");
      seq.residues.push_back(static_cast<AminoAcid>(idx));
    }
  } else {
    std::size_t token_no = 0;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == '-' || impl::is_space(text[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != '-' && !impl::is_space(text[j]))
        ++j;
      std::string_view tok = text.substr(i, j - i);
      int idx = impl::find_three(tok);
      if (idx < 0)
        throw ParseError(std::string(tok), token_no, "unknown amino-acid code");
      seq.residues.push_back(static_cast<AminoAcid>(idx));
      ++token_no;
      i = j;
    }
  }
  if (seq.residues.empty())
    throw ArgumentError("empty sequence");
  return seq;
}

// FASTA-like: one optional '>' identifier line, every other non-blank line is
// one-letter sequence text.
inline ResidueSequence parse_fasta(std::istream& in) {
  std::string id, body, line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (!line.empty() && line[0] == '>') {
      if (have_header)
        throw ArgumentError("sequence file holds more than one record");
      have_header = true;
      id = line.substr(1);
      while (!id.empty() && impl::is_space(id.front()))
        id.erase(id.begin());
      continue;
    }
    body += line;
  }
  ResidueSequence seq = parse_sequence(body, SequenceFormat::one_letter);
  seq.id = id;
  return seq;
}

inline ResidueSequence read_fasta_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ArgumentError("cannot open sequence file " + path.string());
  return parse_fasta(in);
}

struct ClassScheme {
  std::string name;
  std::string alphabet;
  std::array<char, 20> mapping;  // indexed by AminoAcid

  char classify(AminoAcid aa) const { return mapping.at(aa); }
};

namespace impl {

inline std::array<char, 20> map_by(std::string_view groups_in_table_order) {
  std::array<char, 20> m{};
  for (std::size_t i = 0; i < 20; ++i)
    m[i] = groups_in_table_order[i];
  return m;
}

inline std::array<char, 20> hp_mapping() {
  std::array<char, 20> m{};
  for (std::size_t i = 0; i < 20; ++i)
    m[i] = residue_table[i].hydrophobic ? 'H' : 'P';
  return m;
}

inline std::array<char, 20> hpnx_mapping() {
  std::array<char, 20> m{};
  for (std::size_t i = 0; i < 20; ++i) {
    const Residue& r = residue_table[i];
    if (r.hydrophobic)
      m[i] = 'H';
    else if (r.charge == Charge::positive)
      m[i] = 'P';
    else if (r.charge == Charge::negative)
      m[i] = 'N';
    else
      m[i] = 'X';
  }
  return m;
}

inline std::array<char, 20> hhpnx_mapping() {
  std::array<char, 20> m = hpnx_mapping();
  m[1] = 'h';  // Ala
  m[3] = 'h';  // Val
  return m;
}

// Crippen groups 1={GYHSRNE} 2={AV} 3={LICMF} 4={PWTKDQ}, in table order
// G A P V L I M F Y W S T C N Q K H R D E.
inline constexpr std::string_view crippen_groups = "12423333141431441141";

inline std::array<char, 20> relabel(std::string_view groups, std::string_view from,
                                    std::string_view to) {
  std::array<char, 20> m{};
  for (std::size_t i = 0; i < 20; ++i)
    m[i] = to[from.find(groups[i])];
  return m;
}

inline std::array<char, 20> identity_mapping() {
  std::array<char, 20> m{};
  for (std::size_t i = 0; i < 20; ++i)
    m[i] = residue_table[i].one;
  return m;
}

} // namespace impl

// hp, hpnx, hhpnx, crippen4 (labels 1-4), yhhx (crippen4 labelled Y h H X)
// and aa20 (each residue is its own class, for 20x20 matrices).
inline const std::vector<ClassScheme>& scheme_list() {
  static const std::vector<ClassScheme> schemes = {
      {"hp", "HP", impl::hp_mapping()},
      {"hpnx", "HPNX", impl::hpnx_mapping()},
      {"hhpnx", "hHPNX", impl::hhpnx_mapping()},
      {"crippen4", "1234", impl::map_by(impl::crippen_groups)},
      {"yhhx", "YhHX", impl::relabel(impl::crippen_groups, "1234", "YhHX")},
      {"aa20", "GAPVLIMFYWSTCNQKHRDE", impl::identity_mapping()},
  };
  return schemes;
}

inline const ClassScheme& scheme_registry(std::string_view name) {
  for (const ClassScheme& s : scheme_list())
    if (s.name == name)
      return s;
  throw UnknownNameError("unknown class scheme '" + std::string(name) + "'");
}

inline std::string encode(const ResidueSequence& seq, const ClassScheme& scheme) {
  std::string out;
  out.reserve(seq.size());
  for (AminoAcid aa : seq.residues)
    out.push_back(scheme.classify(aa));
  return out;
}

// Window mean held exactly as a sum of tenths over `window` residues.
struct HydropathyMean {
  std::int64_t sum_tenths;
  std::int64_t window;

  double value() const { return static_cast<double>(sum_tenths) / (10.0 * static_cast<double>(window)); }

  // Two decimals, half away from zero.
  std::string to_string() const {
    std::int64_t num = sum_tenths * 10;  // hundredths * window
    std::int64_t mag = (2 * std::llabs(num) + window) / (2 * window);
    std::string s = (num < 0 && mag != 0) ? "-" : "";
    std::string frac = std::to_string(mag % 100);
    if (frac.size() < 2)
      frac.insert(0, "0");
    return s + std::to_string(mag / 100) + "." + frac;
  }
  friend bool operator==(const HydropathyMean& x, const HydropathyMean& y) {
    return x.sum_tenths * y.window == y.sum_tenths * x.window;
  }
};

inline std::vector<HydropathyMean> hydropathy_profile(const ResidueSequence& seq, std::size_t window) {
  if (window == 0 || window % 2 == 0)
    throw ArgumentError("hydropathy window must be a positive odd number, got " +
                        std::to_string(window));
  if (window > seq.size())
    throw ArgumentError("hydropathy window " + std::to_string(window) +
                        " exceeds sequence length " + std::to_string(seq.size()));
  std::vector<HydropathyMean> out;
  out.reserve(seq.size() - window + 1);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    sum += residue(seq.residues[i]).hydropathy_tenths;
    if (i >= window)
      sum -= residue(seq.residues[i - window]).hydropathy_tenths;
    if (i + 1 >= window)
      out.push_back({sum, static_cast<std::int64_t>(window)});
  }
  return out;
}

} // namespace latfold

#endif // LATFOLD_SEQUENCE_HPP_
