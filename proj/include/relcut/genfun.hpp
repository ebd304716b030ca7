#ifndef relcut_genfun_hpp
#define relcut_genfun_hpp

#include <vector>

#include "relcut/graph.hpp"
#include "relcut/polynomial.hpp"

namespace relcut {

// Star-mesh elimination. targets is either a single vertex or all of V - q.
// order optionally fixes the elimination order of V - ({q} + {last target}).
Polynomial path_genfun_starmesh(const Graph& g, Mask targets, const std::vector<int>& order = {});

// sum of y^P over the minimal oriented paths, from direct enumeration
Polynomial path_genfun_enumerated(const Graph& g, Mask targets);

// spanning tree generating function via effective conductances of contracted graphs
Polynomial spanning_genfun_conductance(const Graph& g);

// effective conductance across edge index e as a numerator/denominator pair
RationalExpression effective_conductance(const Graph& g, int e);

}

#endif
