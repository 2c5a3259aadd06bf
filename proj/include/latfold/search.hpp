#ifndef LATFOLD_SEARCH_HPP_
#define LATFOLD_SEARCH_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "latfold/chain.hpp"
#include "latfold/energy.hpp"
#include "latfold/errors.hpp"
#include "latfold/geometry.hpp"

namespace latfold {

// 64-bit Mersenne Twister (std::mt19937_64, whose output sequence the C++
// standard fixes) with portable reductions:
//   below(n): reject raw draws under 2^64 mod n, then take x mod n
//   unit():   (x >> 11) * 2^-53
// so a seed reproduces the same stream on every conforming platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t x;
    do
      x = engine_();
    while (x < threshold);
    return x % n;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

namespace impl {

// Extends `pos` and `moves` by randomized depth-first growth until `moves`
// holds `steps` entries. Candidate order at each node is a Fisher-Yates
// shuffle of the basis; dead ends backtrack, never below the starting depth.
// Returns false if the subtree is exhausted or `budget` node visits run out;
// the inputs are then restored to their starting length.
inline bool grow(const LatticeSpec& lat, std::vector<LatticePoint>& pos, std::vector<Move>& moves,
                 std::size_t steps, Rng& rng, std::uint64_t budget) {
  const std::size_t base = moves.size();
  std::vector<std::vector<Move>> frontier;  // untried candidates per level
  auto shuffled = [&] {
    std::vector<Move> c(lat.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = static_cast<Move>(i);
    for (std::size_t i = c.size(); i > 1; --i)
      std::swap(c[i - 1], c[rng.below(i)]);
    return c;
  };
  if (moves.size() < steps)
    frontier.push_back(shuffled());
  std::uint64_t visits = 0;
  while (moves.size() < steps) {
    if (frontier.empty() || ++visits > budget) {
      pos.resize(base + 1);
      moves.resize(base);
      return false;
    }
    std::vector<Move>& cand = frontier.back();
    if (cand.empty()) {
      frontier.pop_back();
      if (frontier.empty())
        continue;
      pos.pop_back();
      moves.pop_back();
      continue;
    }
    // Take from the front so the first shuffled candidate is tried first.
    Move m = cand.front();
    cand.erase(cand.begin());
    LatticePoint p = pos.back() + lat.basis[m];
    if (std::find(pos.begin(), pos.end(), p) != pos.end())
      continue;
    pos.push_back(p);
    moves.push_back(m);
    if (moves.size() < steps)
      frontier.push_back(shuffled());
  }
  return true;
}

inline std::vector<LatticePoint> trace_positions(const LatticeSpec& lat, const std::vector<Move>& moves,
                                                 std::size_t count) {
  std::vector<LatticePoint> pos{LatticePoint{}};
  for (std::size_t k = 0; k < count; ++k)
    pos.push_back(pos.back() + lat.basis[moves[k]]);
  return pos;
}

} // namespace impl

// A self-avoiding walk of n residues grown one random step at a time,
// backtracking out of dead ends.
inline MoveString chain_grow(LatticeName lattice, std::size_t n, Rng& rng) {
  if (n < 1)
    throw ArgumentError("chain_grow needs at least one residue");
  const LatticeSpec& lat = lattice_registry(lattice);
  std::vector<LatticePoint> pos{LatticePoint{}};
  MoveString ms{lattice, {}};
  if (!impl::grow(lat, pos, ms.moves, n - 1, rng, UINT64_MAX))
    throw std::logic_error("chain growth exhausted an infinite lattice");
  return ms;
}

enum class Mutation { suffix_resample };

struct SearchConfig {
  std::uint64_t seed = 1;
  std::uint64_t iterations = 1000;  // per restart
  double t0 = 1000.0;               // milli-units
  double alpha = 0.995;             // T_i = t0 * alpha^i
  std::uint32_t restarts = 0;       // extra independent runs after the first
  Mutation mutation = Mutation::suffix_resample;
  bool record_trace = true;
  // Node visits allowed when regrowing a suffix before the mutation is
  // treated as rejected.
  std::uint64_t growth_budget = 100'000;
};

inline void validate(const SearchConfig& cfg) {
  if (!(cfg.t0 > 0.0) || !std::isfinite(cfg.t0))
    throw ArgumentError("t0 must be positive");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw ArgumentError("alpha must lie strictly between 0 and 1");
  if (cfg.growth_budget == 0)
    throw ArgumentError("growth budget must be positive");
}

struct TracePoint {
  std::uint64_t iteration;  // global, counted across restarts; 0 is the first start
  EnergyValue best;
  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SearchResult {
  MoveString best_moves;
  EnergyValue best_energy = 0;
  std::uint64_t evaluations = 0;
  std::vector<TracePoint> trace;  // one entry per improvement of the global best
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

// Metropolis simulated annealing over move strings. Each iteration picks a
// bond index uniformly and regrows every move from it onwards; a move that
// raises the energy by dE is accepted with probability exp(-dE / T).
inline SearchResult anneal(LatticeName lattice, std::string_view enc, const EnergyModel& model,
                           const SearchConfig& cfg) {
  validate(cfg);
  if (enc.size() < 2)
    throw ArgumentError("search needs at least two residues");
  class_indices(model, enc);  // rejects unknown labels up front
  const LatticeSpec& lat = lattice_registry(lattice);
  const std::size_t steps = enc.size() - 1;
  Rng rng(cfg.seed);

  SearchResult res;
  bool have_best = false;
  std::uint64_t clock = 0;
  auto consider = [&](const MoveString& ms, EnergyValue e) {
    if (have_best && e >= res.best_energy)
      return;
    have_best = true;
    res.best_moves = ms;
    res.best_energy = e;
    if (cfg.record_trace)
      res.trace.push_back({clock, e});
  };

  for (std::uint32_t run = 0; run <= cfg.restarts; ++run) {
    MoveString cur = chain_grow(lattice, enc.size(), rng);
    EnergyValue cur_e = evaluate(fold(cur), enc, model);
    ++res.evaluations;
    consider(cur, cur_e);
    double temperature = cfg.t0;
    for (std::uint64_t it = 0; it < cfg.iterations; ++it, temperature *= cfg.alpha) {
      ++clock;
      const std::size_t cut = static_cast<std::size_t>(rng.below(steps));
      std::vector<Move> moves(cur.moves.begin(), cur.moves.begin() + static_cast<std::ptrdiff_t>(cut));
      std::vector<LatticePoint> pos = impl::trace_positions(lat, cur.moves, cut);
      if (!impl::grow(lat, pos, moves, steps, rng, cfg.growth_budget))
        continue;
      MoveString cand{lattice, std::move(moves)};
      EnergyValue cand_e = evaluate(fold(cand), enc, model);
      ++res.evaluations;
      const EnergyValue delta = cand_e - cur_e;
      if (delta > 0 && !(rng.unit() < std::exp(-static_cast<double>(delta) / temperature)))
        continue;
      cur = std::move(cand);
      cur_e = cand_e;
      consider(cur, cur_e);
    }
  }
  return res;
}

// Lowest energy wins; ties go to the lexicographically smaller move string.
inline SearchResult best_of(std::span<const SearchResult> results) {
  if (results.empty())
    throw ArgumentError("no search results to merge");
  const SearchResult* best = &results[0];
  for (const SearchResult& r : results.subspan(1))
    if (r.best_energy < best->best_energy ||
        (r.best_energy == best->best_energy && r.best_moves.moves < best->best_moves.moves))
      best = &r;
  return *best;
}

} // namespace latfold

#endif // LATFOLD_SEARCH_HPP_
