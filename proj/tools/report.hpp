#ifndef relcut_report_hpp
#define relcut_report_hpp

#include <string>
#include <vector>

#include <json.hpp>

#include "relcut/betti.hpp"
#include "relcut/cells.hpp"
#include "relcut/graph.hpp"
#include "relcut/ideal.hpp"
#include "relcut/polynomial.hpp"
#include "relcut/syzygy.hpp"

namespace relcut::report {

using json = nlohmann::json;

json slots_json(const Graph& g, Mask slots);
json ideal_json(const MonomialIdeal& ideal);
json table_json(const BettiTable& t);
json polynomial_json(const Polynomial& p);
json rational_json(const mpq_class& q);
json complex_json(const Graph& g, const CellComplex& c);
json syzygy_json(const Graph& g, const SyzygyComplex& c);
json verify_json(const VerifyReport& r);

}

#endif
