#ifndef LATFOLD_CHAIN_HPP_
#define LATFOLD_CHAIN_HPP_

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latfold/errors.hpp"
#include "latfold/geometry.hpp"

namespace latfold {

// A walk as absolute basis indices, one per bond.
struct MoveString {
  LatticeName lattice = LatticeName::square;
  std::vector<Move> moves;

  std::size_t residues() const { return moves.size() + 1; }
  friend bool operator==(const MoveString&, const MoveString&) = default;
};

struct Conformation {
  LatticeName lattice = LatticeName::square;
  std::vector<LatticePoint> positions;  // positions[0] is the origin

  std::size_t size() const { return positions.size(); }
};

// (i, j) with i + 1 < j
using Contact = std::pair<std::size_t, std::size_t>;

inline void check_moves(const LatticeSpec& lat, const std::vector<Move>& moves) {
  for (std::size_t k = 0; k < moves.size(); ++k)
    if (moves[k] >= lat.size())
      throw ArgumentError("move index " + std::to_string(moves[k]) + " at step " +
                          std::to_string(k) + " is outside the " +
                          std::string(to_string(lat.name)) + " basis");
}

inline Conformation fold(const MoveString& ms) {
  const LatticeSpec& lat = lattice_registry(ms.lattice);
  check_moves(lat, ms.moves);
  Conformation c{ms.lattice, {}};
  c.positions.reserve(ms.moves.size() + 1);
  c.positions.push_back(LatticePoint{});
  std::unordered_map<LatticePoint, std::size_t> seen;
  seen.emplace(LatticePoint{}, 0);
  for (std::size_t k = 0; k < ms.moves.size(); ++k) {
    LatticePoint next = c.positions.back() + lat.basis[ms.moves[k]];
    if (!seen.emplace(next, k + 1).second)
      throw CollisionError(k + 1);
    c.positions.push_back(next);
  }
#ifndef NDEBUG
  for (std::size_t k = 0; k + 1 < c.positions.size(); ++k)
    assert(norm_sq(c.positions[k + 1] - c.positions[k]) == lat.contact_norm_sq);
#endif
  return c;
}

// Pairwise scan, O(n^2).
inline std::vector<Contact> contacts(const Conformation& c) {
  const LatticeSpec& lat = lattice_registry(c.lattice);
  std::vector<Contact> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 2; j < c.size(); ++j)
      if (is_contact(lat, c.positions[i], c.positions[j]))
        out.emplace_back(i, j);
  return out;
}

// Same result as contacts(), via a position hash and basis-offset lookups.
// Falls back to the pairwise scan on lattices whose contact shell is not
// exactly the basis.
inline std::vector<Contact> contacts_indexed(const Conformation& c) {
  const LatticeSpec& lat = lattice_registry(c.lattice);
  if (!lat.shell_is_basis)
    return contacts(c);
  std::unordered_map<LatticePoint, std::size_t> where;
  where.reserve(c.size() * 2);
  for (std::size_t i = 0; i < c.size(); ++i)
    where.emplace(c.positions[i], i);
  std::vector<Contact> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (const LatticePoint& b : lat.basis) {
      auto it = where.find(c.positions[i] + b);
      if (it != where.end() && it->second > i + 1)
        out.emplace_back(i, it->second);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline MoveString transform(const MoveString& ms, const Permutation& perm) {
  MoveString out{ms.lattice, {}};
  out.moves.reserve(ms.moves.size());
  for (Move m : ms.moves)
    out.moves.push_back(perm.at(m));
  return out;
}

// The same chain walked from the last residue to the first.
inline MoveString reverse(const MoveString& ms) {
  const LatticeSpec& lat = lattice_registry(ms.lattice);
  MoveString out{ms.lattice, {}};
  out.moves.reserve(ms.moves.size());
  for (auto it = ms.moves.rbegin(); it != ms.moves.rend(); ++it)
    out.moves.push_back(lat.opposite.at(*it));
  return out;
}

// Labels are the basis letters A, B, ... in basis order; case-insensitive.
inline MoveString parse_moves(LatticeName lattice, std::string_view text) {
  const LatticeSpec& lat = lattice_registry(lattice);
  MoveString ms{lattice, {}};
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    std::size_t idx = lat.labels.find(ch);
    if (idx == std::string::npos)
      throw ParseError(std::string(1, text[i]), i,
                       "invalid " + std::string(to_string(lattice)) + " move label");
    ms.moves.push_back(static_cast<Move>(idx));
  }
  return ms;
}

inline std::string format_moves(const MoveString& ms) {
  const LatticeSpec& lat = lattice_registry(ms.lattice);
  std::string s;
  s.reserve(ms.moves.size());
  for (Move m : ms.moves)
    s.push_back(lat.labels.at(m));
  return s;
}

} // namespace latfold

#endif // LATFOLD_CHAIN_HPP_
