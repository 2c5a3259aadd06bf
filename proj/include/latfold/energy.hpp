#ifndef LATFOLD_ENERGY_HPP_
#define LATFOLD_ENERGY_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "latfold/chain.hpp"
#include "latfold/errors.hpp"

namespace latfold {

// Integer thousandths of the printed energy unit; -317 is -0.317.
using EnergyValue = std::int64_t;

struct EnergyModel {
  std::string name;
  std::string alphabet;             // one character per class
  std::vector<EnergyValue> matrix;  // row-major, alphabet.size()^2, symmetric
  std::vector<int> frequencies;     // optional per-class occurrence percentages; never scored

  std::size_t size() const { return alphabet.size(); }

  std::optional<std::size_t> index_of(char label) const {
    std::size_t i = alphabet.find(label);
    if (i == std::string::npos)
      return std::nullopt;
    return i;
  }
  EnergyValue at(std::size_t a, std::size_t b) const { return matrix[a * size() + b]; }
  EnergyValue operator()(char a, char b) const {
    auto ia = index_of(a), ib = index_of(b);
    if (!ia || !ib)
      throw ArgumentError(std::string("label pair ") + a + b + " not in model " + name);
    return at(*ia, *ib);
  }
};

inline EnergyModel make_model(std::string name, std::string alphabet,
                              std::vector<EnergyValue> matrix, std::vector<int> frequencies = {}) {
  const std::size_t k = alphabet.size();
  if (k == 0 || k > 26)
    throw ValidationError("model " + name + ": alphabet must hold 1 to 26 labels");
  for (std::size_t i = 0; i < k; ++i)
    if (alphabet.find(alphabet[i]) != i)
      throw ValidationError("model " + name + ": duplicate label " + alphabet[i]);
  if (matrix.size() != k * k)
    throw ValidationError("model " + name + ": matrix has " + std::to_string(matrix.size()) +
                          " entries, expected " + std::to_string(k * k));
  if (!frequencies.empty() && frequencies.size() != k)
    throw ValidationError("model " + name + ": frequency row has wrong length");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (matrix[i * k + j] != matrix[j * k + i])
        throw ValidationError("model " + name + ": asymmetric entry (" + alphabet[i] + "," +
                              alphabet[j] + ")");
  return {std::move(name), std::move(alphabet), std::move(matrix), std::move(frequencies)};
}

inline const std::vector<EnergyModel>& model_list() {
  // clang-format off
  static const std::vector<EnergyModel> models = {
      make_model("hp", "HP", {-1000, 0,
                                  0, 0}),
      make_model("hp-li", "HP", {-3000, -1000,
                                 -1000,     0}),
      make_model("hp-backofen", "HP", {-2500, -1000,
                                       -1000,     0}),
      make_model("hpnx-a", "HPNX", {-4000,     0,     0, 0,
                                        0,     0, -1000, 0,
                                        0, -1000,     0, 0,
                                        0,     0,     0, 0}),
      make_model("hpnx-b", "HPNX", {-4000,     0,     0, 0,
                                        0,  1000, -1000, 0,
                                        0, -1000,  1000, 0,
                                        0,     0,     0, 0}),
      make_model("crippen1234", "1234", { -12,  -74,  -54, 123,
                                          -74,  123, -317, 156,
                                          -54, -317, -263, -10,
                                          123,  156,  -10,  -4}),
      make_model("yhhx", "YhHX", {    0, -1000, -1000, 2000,
                                  -1000, -2000, -4000, 2000,
                                  -1000, -4000, -3000,    0,
                                   2000,  2000,     0,    0},
                 {10, 16, 36, 28}),
      make_model("yhhx-corrected", "YhHX", {    0, -1000, -1000, 2000,
                                            -1000,  2000, -4000, 2000,
                                            -1000, -4000, -3000,    0,
                                             2000,  2000,     0,    0},
                 {10, 16, 36, 28}),
      make_model("hhpnx", "hHPNX", { 2000, -4000,     0,     0, 0,
                                    -4000, -3000,     0,     0, 0,
                                        0,     0,  1000, -1000, 0,
                                        0,     0, -1000,  1000, 0,
                                        0,     0,     0,     0, 0}),
  };
  // clang-format on
  return models;
}

inline const EnergyModel& model_registry(std::string_view name) {
  for (const EnergyModel& m : model_list())
    if (m.name == name)
      return m;
  throw UnknownNameError("unknown energy model '" + std::string(name) + "'");
}

// Decimal with at most three fractional digits, to exact milli-units.
// Accepts an ASCII or U+2212 minus sign.
inline EnergyValue parse_milli(std::string_view tok) {
  const std::string orig(tok);
  bool neg = false;
  if (tok.starts_with("\xE2\x88\x92")) {
    neg = true;
    tok.remove_prefix(3);
  } else if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
    neg = tok[0] == '-';
    tok.remove_prefix(1);
  }
  EnergyValue whole = 0, frac = 0;
  int frac_digits = 0, digits = 0;
  bool in_frac = false;
  for (char c : tok) {
    if (c == '.' && !in_frac) {
      in_frac = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      ++digits;
      if (in_frac) {
        if (++frac_digits > 3)
          throw ValidationError("value '" + orig + "' has more than 3 fractional digits");
        frac = frac * 10 + (c - '0');
      } else {
        whole = whole * 10 + (c - '0');
        if (whole > 1'000'000'000'000LL)
          throw ValidationError("value '" + orig + "' is out of range");
      }
    } else {
      throw ValidationError("malformed value '" + orig + "'");
    }
  }
  if (digits == 0)
    throw ValidationError("malformed value '" + orig + "'");
  for (int i = frac_digits; i < 3; ++i)
    frac *= 10;
  EnergyValue v = whole * 1000 + frac;
  return neg ? -v : v;
}

inline std::string format_milli(EnergyValue v) {
  std::string frac = std::to_string(std::llabs(v) % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  return (v < 0 ? "-" : "") + std::to_string(std::llabs(v) / 1000) + "." + frac;
}

// Text format: '#' starts a comment; the first remaining line lists k
// single-character labels; then k rows of "label v1 ... vk".
inline EnergyModel parse_matrix(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string alphabet;
  bool have_header = false;
  std::vector<EnergyValue> matrix;
  std::vector<bool> row_seen;
  std::size_t rows = 0, line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;)
      toks.push_back(t);
    if (toks.empty())
      continue;
    const std::string where = "matrix line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      for (const std::string& t : toks) {
        if (t.size() != 1)
          throw ValidationError(where + "label '" + t + "' is not a single character");
        alphabet += t;
      }
      if (alphabet.size() > 26)
        throw ValidationError(where + "more than 26 labels");
      have_header = true;
      matrix.assign(alphabet.size() * alphabet.size(), 0);
      row_seen.assign(alphabet.size(), false);
      continue;
    }
    const std::size_t k = alphabet.size();
    if (rows == k)
      throw ValidationError(where + "more rows than labels");
    if (toks[0].size() != 1 || alphabet.find(toks[0][0]) == std::string::npos)
      throw ValidationError(where + "row label '" + toks[0] + "' is not in the header");
    std::size_t r = alphabet.find(toks[0][0]);
    if (row_seen[r])
      throw ValidationError(where + "duplicate row '" + toks[0] + "'");
    if (toks.size() != k + 1)
      throw ValidationError(where + "expected " + std::to_string(k) + " values, got " +
                            std::to_string(toks.size() - 1));
    row_seen[r] = true;
    for (std::size_t c = 0; c < k; ++c)
      matrix[r * k + c] = parse_milli(toks[c + 1]);
    ++rows;
  }
  if (!have_header)
    throw ValidationError("matrix file has no label line");
  if (rows != alphabet.size())
    throw ValidationError("matrix has " + std::to_string(rows) + " rows for " +
                          std::to_string(alphabet.size()) + " labels");
  return make_model(std::move(name), std::move(alphabet), std::move(matrix));
}

inline EnergyModel load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ArgumentError("cannot open matrix file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str(), path.stem().string());
}

// Class string to model row indices.
inline std::vector<std::size_t> class_indices(const EnergyModel& model, std::string_view enc) {
  std::vector<std::size_t> idx;
  idx.reserve(enc.size());
  for (std::size_t i = 0; i < enc.size(); ++i) {
    auto k = model.index_of(enc[i]);
    if (!k)
      throw ArgumentError(std::string("class label '") + enc[i] + "' at position " +
                          std::to_string(i) + " is not in model " + model.name);
    idx.push_back(*k);
  }
  return idx;
}

// Sum of e(enc[i], enc[j]) over all non-consecutive contacts.
inline EnergyValue evaluate(const Conformation& c, std::string_view enc, const EnergyModel& model) {
  if (enc.size() != c.size())
    throw ArgumentError("encoding has " + std::to_string(enc.size()) + " classes for " +
                        std::to_string(c.size()) + " residues");
  const std::vector<std::size_t> idx = class_indices(model, enc);
  EnergyValue e = 0;
  for (const auto& [i, j] : contacts(c))
    e += model.at(idx[i], idx[j]);
  return e;
}

} // namespace latfold

#endif // LATFOLD_ENERGY_HPP_
