#ifndef LATFOLD_ORACLE_HPP_
#define LATFOLD_ORACLE_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latfold/chain.hpp"
#include "latfold/energy.hpp"
#include "latfold/errors.hpp"
#include "latfold/geometry.hpp"

namespace latfold {

using BigInt = boost::multiprecision::cpp_int;

namespace impl {

inline bool occupied(const std::vector<LatticePoint>& pos, const LatticePoint& p) {
  return std::find(pos.begin(), pos.end(), p) != pos.end();
}

// Visits every self-avoiding walk of `steps` bonds that starts with `prefix`,
// in lexicographic move order. `gain(pos)` is the energy added by the residue
// just appended to `pos`; `leaf(moves, energy)` sees each complete walk.
template <class Gain, class Leaf>
void walk_subtree(const LatticeSpec& lat, std::size_t steps, const std::vector<Move>& prefix,
                  Gain&& gain, Leaf&& leaf) {
  std::vector<LatticePoint> pos{LatticePoint{}};
  std::vector<Move> moves;
  std::vector<EnergyValue> acc{0};
  pos.reserve(steps + 1);
  moves.reserve(steps);
  acc.reserve(steps + 1);
  for (Move m : prefix) {
    LatticePoint p = pos.back() + lat.basis[m];
    if (occupied(pos, p))
      return;
    pos.push_back(p);
    moves.push_back(m);
    acc.push_back(acc.back() + gain(pos));
  }
  auto descend = [&](auto& self) -> void {
    if (moves.size() == steps) {
      leaf(moves, acc.back());
      return;
    }
    for (std::size_t m = 0; m < lat.size(); ++m) {
      LatticePoint p = pos.back() + lat.basis[m];
      if (occupied(pos, p))
        continue;
      pos.push_back(p);
      moves.push_back(static_cast<Move>(m));
      acc.push_back(acc.back() + gain(pos));
      self(self);
      pos.pop_back();
      moves.pop_back();
      acc.pop_back();
    }
  };
  descend(descend);
}

// DFS roots: every non-backtracking move prefix of length min(2, steps).
inline std::vector<std::vector<Move>> root_prefixes(const LatticeSpec& lat, std::size_t steps,
                                                    bool fix_first) {
  std::vector<std::vector<Move>> out;
  const std::size_t depth = std::min<std::size_t>(2, steps);
  if (depth == 0)
    return {{}};
  const std::size_t first_end = fix_first ? 1 : lat.size();
  for (std::size_t a = 0; a < first_end; ++a) {
    if (depth == 1) {
      out.push_back({static_cast<Move>(a)});
      continue;
    }
    for (std::size_t b = 0; b < lat.size(); ++b)
      if (b != lat.opposite[a])
        out.push_back({static_cast<Move>(a), static_cast<Move>(b)});
  }
  return out;
}

// Runs job(i) for i in [0, count) on up to `workers` threads.
template <class Job>
void run_parallel(std::size_t count, unsigned workers, Job&& job) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  for (unsigned w = 0; w < n; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < count;)
          job(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (std::thread& t : pool)
    t.join();
  for (const std::exception_ptr& e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace impl

// Self-avoiding walks of `steps` bonds from the origin; with fix_first the
// first bond is pinned to basis vector 0.
inline BigInt count_saws(LatticeName lattice, std::size_t steps, bool fix_first) {
  const LatticeSpec& lat = lattice_registry(lattice);
  BigInt total = 0;
  for (const auto& prefix : impl::root_prefixes(lat, steps, fix_first)) {
    std::uint64_t n = 0;
    impl::walk_subtree(lat, steps, prefix,
                       [](const std::vector<LatticePoint>&) { return EnergyValue{0}; },
                       [&](const std::vector<Move>&, EnergyValue) { ++n; });
    total += n;
  }
  return total;
}

struct EnumerationOptions {
  bool fix_first_move = false;
  unsigned workers = 1;
  std::size_t max_representatives = 10;
};

struct EnumerationReport {
  LatticeName lattice;
  std::size_t n;  // residues
  std::string model;
  EnergyValue min_energy;
  BigInt degeneracy;
  BigInt total_walks;
  bool fixed_first_move;
  std::vector<MoveString> representatives;  // lexicographically smallest ground states
};

// Exact minimum energy and its degeneracy over every self-avoiding walk of
// |enc| residues. Each root prefix is an independent subtree; partial results
// are merged in prefix order, so the report does not depend on `workers`.
inline EnumerationReport enumerate_ground_states(LatticeName lattice, std::string_view enc,
                                                 const EnergyModel& model,
                                                 const EnumerationOptions& opt = {}) {
  if (enc.empty())
    throw ArgumentError("cannot enumerate an empty chain");
  const LatticeSpec& lat = lattice_registry(lattice);
  const std::vector<std::size_t> cls = class_indices(model, enc);
  const std::size_t steps = enc.size() - 1;

  struct Partial {
    std::optional<EnergyValue> min;
    std::uint64_t degeneracy = 0;
    std::uint64_t total = 0;
    std::vector<std::vector<Move>> reps;
  };

  const auto prefixes = impl::root_prefixes(lat, steps, opt.fix_first_move);
  std::vector<Partial> parts(prefixes.size());

  impl::run_parallel(prefixes.size(), opt.workers, [&](std::size_t t) {
    Partial& part = parts[t];
    auto gain = [&](const std::vector<LatticePoint>& pos) {
      const std::size_t k = pos.size() - 1;
      EnergyValue e = 0;
      for (std::size_t j = 0; j + 1 < k; ++j)
        if (is_contact(lat, pos[j], pos[k]))
          e += model.at(cls[j], cls[k]);
      return e;
    };
    auto leaf = [&](const std::vector<Move>& moves, EnergyValue e) {
      ++part.total;
      if (!part.min || e < *part.min) {
        part.min = e;
        part.degeneracy = 0;
        part.reps.clear();
      }
      if (e == *part.min) {
        ++part.degeneracy;
        if (part.reps.size() < opt.max_representatives)
          part.reps.push_back(moves);
      }
    };
    impl::walk_subtree(lat, steps, prefixes[t], gain, leaf);
  });

  EnumerationReport rep{lattice, enc.size(), model.name, 0, 0, 0, opt.fix_first_move, {}};
  std::optional<EnergyValue> best;
  for (const Partial& p : parts)
    if (p.min && (!best || *p.min < *best))
      best = p.min;
  for (const Partial& p : parts) {
    rep.total_walks += p.total;
    if (!p.min || *p.min != *best)
      continue;
    rep.degeneracy += p.degeneracy;
    for (const auto& m : p.reps)
      if (rep.representatives.size() < opt.max_representatives)
        rep.representatives.push_back(MoveString{lattice, m});
  }
  rep.min_energy = best.value_or(0);
  return rep;
}

enum class EstimateMode { full_eq1, simplified };

inline std::string_view to_string(EstimateMode m) {
  return m == EstimateMode::full_eq1 ? "full-eq1" : "simplified";
}

inline EstimateMode parse_estimate_mode(std::string_view s) {
  if (s == "full-eq1")
    return EstimateMode::full_eq1;
  if (s == "simplified")
    return EstimateMode::simplified;
  throw UnknownNameError("unknown estimate mode '" + std::string(s) +
                         "' (expected full-eq1 or simplified)");
}

struct CountEstimate {
  BigInt count;
  EstimateMode mode;
};

// Dihedral-angle conformation count with k states per angle:
// full-eq1 has (n-1) phi, (n-1) psi and 2n chi angles, so k^(4n-2);
// simplified gives every residue three angles, k^(3n).
inline CountEstimate estimate_conformations(std::uint64_t n, std::uint64_t k, EstimateMode mode) {
  if (n < 1 || k < 1)
    throw ArgumentError("estimate needs n >= 1 and k >= 1");
  const std::uint64_t exponent = mode == EstimateMode::full_eq1 ? 4 * n - 2 : 3 * n;
  if (exponent > 1'000'000)
    throw ArgumentError("estimate exponent too large");
  return {boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(exponent)), mode};
}

} // namespace latfold

#endif // LATFOLD_ORACLE_HPP_
