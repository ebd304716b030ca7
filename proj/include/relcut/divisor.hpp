#ifndef relcut_divisor_hpp
#define relcut_divisor_hpp

#include <vector>

#include "relcut/graph.hpp"

namespace relcut {

// integer weight per vertex, indexed by vertex id
using Divisor = std::vector<long long>;

long long degree(const Divisor& d);

Divisor laplacian_apply(const Graph& g, const std::vector<long long>& f);

// D(v) = indeg(v) - 1 for a set of oriented slots
Divisor divisor_of_orientation(const Graph& g, Mask slots);

// vertices burnt by Dhar's fire started at q (arcs respected)
Mask dhar_burn(const Graph& g, const Divisor& d);

bool is_q_reduced(const Graph& g, const Divisor& d);
Divisor reduce_divisor(const Graph& g, const Divisor& d);
bool divisors_equivalent(const Graph& g, const Divisor& a, const Divisor& b);

// member of S_k(G,q) whose divisor equals d exactly
Mask orientation_for_reduced_divisor(const Graph& g, const Divisor& d);

}

#endif
