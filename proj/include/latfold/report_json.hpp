#ifndef LATFOLD_REPORT_JSON_HPP_
#define LATFOLD_REPORT_JSON_HPP_

#include <string>

#include <json.hpp>

#include "latfold/chain.hpp"
#include "latfold/oracle.hpp"
#include "latfold/search.hpp"

// JSON views of the oracle and search results. Big counts are decimal strings,
// energies are integer milli-units, walks are move-label strings.

namespace latfold {

using Json = nlohmann::ordered_json;

inline Json to_json(const EnumerationReport& r) {
  Json reps = Json::array();
  for (const MoveString& m : r.representatives)
    reps.push_back(format_moves(m));
  return Json{{"lattice", std::string(to_string(r.lattice))},
              {"n", r.n},
              {"model", r.model},
              {"min_energy_milli", r.min_energy},
              {"degeneracy", r.degeneracy.str()},
              {"total_walks", r.total_walks.str()},
              {"fixed_first_move", r.fixed_first_move},
              {"representatives", reps}};
}

inline Json to_json(const SearchResult& r) {
  Json trace = Json::array();
  for (const TracePoint& t : r.trace)
    trace.push_back(Json::array({t.iteration, t.best}));
  return Json{{"lattice", std::string(to_string(r.best_moves.lattice))},
              {"best_moves", format_moves(r.best_moves)},
              {"best_energy_milli", r.best_energy},
              {"evaluations", r.evaluations},
              {"trace", trace}};
}

inline Json to_json(const CountEstimate& e) {
  return Json{{"mode", std::string(to_string(e.mode))}, {"count", e.count.str()}};
}

} // namespace latfold

#endif // LATFOLD_REPORT_JSON_HPP_
