#ifndef LATFOLD_GEOMETRY_HPP_
#define LATFOLD_GEOMETRY_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>  // for hash
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latfold/errors.hpp"

// Exact lattice geometry. Every coordinate lives in Z[sqrt 3] and is stored
// scaled by 4, so the quarter and sqrt(3)/4 components of the hexagonal and
// HCP vectors become integers. Nothing in here touches floating point.

namespace latfold {

// a + b*sqrt(3)
struct RingScalar {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend constexpr RingScalar operator+(RingScalar x, RingScalar y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend constexpr RingScalar operator-(RingScalar x, RingScalar y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend constexpr RingScalar operator-(RingScalar x) { return {-x.a, -x.b}; }
  // sqrt3 * sqrt3 folds back into the integer part
  friend constexpr RingScalar operator*(RingScalar x, RingScalar y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  constexpr RingScalar& operator+=(RingScalar o) { return *this = *this + o; }
  constexpr RingScalar& operator-=(RingScalar o) { return *this = *this - o; }
  friend constexpr auto operator<=>(const RingScalar&, const RingScalar&) = default;
};

// Squared length r + s*sqrt(3) in scaled-squared units (16 per unit^2).
struct NormSq {
  std::int64_t r = 0;
  std::int64_t s = 0;
  friend constexpr auto operator<=>(const NormSq&, const NormSq&) = default;
};

struct LatticePoint {
  RingScalar x, y, z;

  friend constexpr LatticePoint operator+(const LatticePoint& p, const LatticePoint& q) {
    return {p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend constexpr LatticePoint operator-(const LatticePoint& p, const LatticePoint& q) {
    return {p.x - q.x, p.y - q.y, p.z - q.z};
  }
  friend constexpr LatticePoint operator-(const LatticePoint& p) { return {-p.x, -p.y, -p.z}; }
  constexpr LatticePoint& operator+=(const LatticePoint& o) { return *this = *this + o; }
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr NormSq inner(const LatticePoint& p, const LatticePoint& q) {
  RingScalar t = p.x * q.x + p.y * q.y + p.z * q.z;
  return {t.a, t.b};
}

constexpr NormSq norm_sq(const LatticePoint& p) { return inner(p, p); }

enum class LatticeName : std::uint8_t { square, hexagonal, cubic, fcc, hcp };

inline constexpr std::array<LatticeName, 5> all_lattices = {
    LatticeName::square, LatticeName::hexagonal, LatticeName::cubic,
    LatticeName::fcc, LatticeName::hcp};

inline std::string_view to_string(LatticeName n) {
  switch (n) {
    case LatticeName::square: return "square";
    case LatticeName::hexagonal: return "hex";
    case LatticeName::cubic: return "cubic";
    case LatticeName::fcc: return "fcc";
    case LatticeName::hcp: return "hcp";
  }
  throw std::logic_error("bad LatticeName");
}

inline LatticeName parse_lattice_name(std::string_view s) {
  for (LatticeName n : all_lattices)
    if (to_string(n) == s)
      return n;
  throw UnknownNameError("unknown lattice '" + std::string(s) +
                         "' (expected square, hex, cubic, fcc or hcp)");
}

// Index into LatticeSpec::basis.
using Move = std::uint8_t;
// perm[i] is the image of basis index i.
using Permutation = std::vector<Move>;

struct LatticeSpec {
  LatticeName name;
  int dimension;
  std::vector<LatticePoint> basis;
  std::string labels;  // one letter per basis vector, A, B, C, ...
  NormSq contact_norm_sq;
  std::vector<Move> opposite;
  std::vector<Permutation> point_group;  // lexicographic order, identity first
  // True when the basis is the complete set of lattice vectors at contact
  // distance, so neighbour lookup by basis offsets finds every contact.
  bool shell_is_basis;

  std::size_t size() const { return basis.size(); }
};

constexpr bool is_contact(const LatticeSpec& lat, const LatticePoint& p, const LatticePoint& q) {
  return norm_sq(p - q) == lat.contact_norm_sq;
}

// Gram matrix entries, row-major.
inline std::vector<NormSq> gram_matrix(const std::vector<LatticePoint>& basis) {
  const std::size_t n = basis.size();
  std::vector<NormSq> g(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g[i * n + j] = inner(basis[i], basis[j]);
  return g;
}

// All basis permutations that preserve the Gram matrix. Exhaustive search over
// permutations; a partial assignment is abandoned as soon as one inner product
// disagrees, which keeps the 12-vector lattices cheap.
inline std::vector<Permutation> gram_preserving_permutations(const std::vector<LatticePoint>& basis) {
  const std::size_t n = basis.size();
  const std::vector<NormSq> g = gram_matrix(basis);
  std::vector<Permutation> out;
  Permutation perm(n);
  std::vector<bool> used(n, false);

  auto extend = [&](auto& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(perm);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || g[c * n + c] != g[k * n + k])
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = g[c * n + perm[j]] == g[k * n + j];
      if (!ok)
        continue;
      used[c] = true;
      perm[k] = static_cast<Move>(c);
      self(self, k + 1);
      used[c] = false;
    }
  };
  extend(extend, 0);
  return out;
}

inline Permutation compose(const Permutation& outer, const Permutation& inner_perm) {
  Permutation r(inner_perm.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = outer[inner_perm[i]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[p[i]] = static_cast<Move>(i);
  return r;
}

namespace impl {

constexpr RingScalar q(std::int64_t a, std::int64_t b = 0) { return {a, b}; }
constexpr LatticePoint v(RingScalar x, RingScalar y, RingScalar z = {}) { return {x, y, z}; }

inline LatticeSpec make_spec(LatticeName name, int dim, std::vector<LatticePoint> basis,
                             NormSq contact, bool shell_is_basis) {
  LatticeSpec s{name, dim, std::move(basis), {}, contact, {}, {}, shell_is_basis};
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    s.labels.push_back(static_cast<char>('A' + i));
    std::size_t j = 0;
    while (j < s.basis.size() && s.basis[j] != -s.basis[i])
      ++j;
    if (j == s.basis.size())
      throw std::logic_error("basis is not closed under negation");
    s.opposite.push_back(static_cast<Move>(j));
  }
  s.point_group = gram_preserving_permutations(s.basis);
  return s;
}

// Vectors are listed in the conventional A, B, C, ... order and scaled by 4.
inline LatticeSpec build(LatticeName name) {
  switch (name) {
    case LatticeName::square:
      return make_spec(name, 2,
                       {v(q(4), q(0)), v(q(-4), q(0)), v(q(0), q(4)), v(q(0), q(-4))},
                       {16, 0}, true);
    case LatticeName::hexagonal:
      return make_spec(name, 2,
                       {v(q(4), q(0)), v(q(2), q(0, 2)), v(q(-2), q(0, 2)),
                        v(q(-2), q(0, -2)), v(q(2), q(0, -2)), v(q(-4), q(0))},
                       {16, 0}, true);
    case LatticeName::cubic:
      return make_spec(name, 3,
                       {v(q(4), q(0), q(0)), v(q(-4), q(0), q(0)), v(q(0), q(4), q(0)),
                        v(q(0), q(-4), q(0)), v(q(0), q(0), q(4)), v(q(0), q(0), q(-4))},
                       {16, 0}, true);
    case LatticeName::fcc:
      return make_spec(name, 3,
                       {v(q(4), q(4), q(0)), v(q(-4), q(-4), q(0)), v(q(-4), q(4), q(0)),
                        v(q(4), q(-4), q(0)), v(q(0), q(4), q(4)), v(q(0), q(-4), q(-4)),
                        v(q(0), q(4), q(-4)), v(q(0), q(-4), q(4)), v(q(-4), q(0), q(-4)),
                        v(q(4), q(0), q(4)), v(q(-4), q(0), q(4)), v(q(4), q(0), q(-4))},
                       {32, 0}, true);
    case LatticeName::hcp:
      // This 12-vector shell does not generate a discrete lattice, so there
      // is no guarantee that every contact is a basis offset.
      return make_spec(name, 3,
                       {v(q(4), q(0), q(0)), v(q(2), q(0, 2), q(0)), v(q(-2), q(0, 2), q(0)),
                        v(q(-2), q(0, -2), q(0)), v(q(2), q(0, -2), q(0)), v(q(-4), q(0), q(0)),
                        v(q(0), q(2), q(0, 2)), v(q(0, -1), q(-1), q(0, 2)),
                        v(q(0, 1), q(-1), q(0, 2)), v(q(0), q(-2), q(0, -2)),
                        v(q(0, 1), q(1), q(0, -2)), v(q(0, -1), q(1), q(0, -2))},
                       {16, 0}, false);
  }
  throw std::logic_error("bad LatticeName");
}

} // namespace impl

// Specs are built once, on first use, and shared read-only afterwards.
inline const LatticeSpec& lattice_registry(LatticeName name) {
  static const std::array<LatticeSpec, 5> specs = {
      impl::build(LatticeName::square), impl::build(LatticeName::hexagonal),
      impl::build(LatticeName::cubic), impl::build(LatticeName::fcc),
      impl::build(LatticeName::hcp)};
  return specs[static_cast<std::size_t>(name)];
}

inline const LatticeSpec& lattice_registry(std::string_view name) {
  return lattice_registry(parse_lattice_name(name));
}

inline const std::vector<Permutation>& point_group(const LatticeSpec& lat) {
  return lat.point_group;
}

// Whether the point group maps basis vector 0 onto every other basis vector.
// Only then does pinning the first move divide the walk count exactly by the
// coordination number.
inline bool is_basis_transitive(const LatticeSpec& lat) {
  std::vector<bool> hit(lat.size(), false);
  for (const Permutation& p : lat.point_group)
    hit[p[0]] = true;
  for (bool h : hit)
    if (!h)
      return false;
  return true;
}

} // namespace latfold

template <>
struct std::hash<latfold::LatticePoint> {
  std::size_t operator()(const latfold::LatticePoint& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t c : {p.x.a, p.x.b, p.y.a, p.y.b, p.z.a, p.z.b}) {
      h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

#endif // LATFOLD_GEOMETRY_HPP_
