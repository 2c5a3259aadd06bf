#ifndef LATFOLD_LATFOLD_HPP_
#define LATFOLD_LATFOLD_HPP_

#include "latfold/errors.hpp"
#include "latfold/geometry.hpp"
#include "latfold/chain.hpp"
#include "latfold/sequence.hpp"
#include "latfold/energy.hpp"
#include "latfold/oracle.hpp"
#include "latfold/search.hpp"
#include "latfold/report_json.hpp"

#endif // LATFOLD_LATFOLD_HPP_
