#ifndef relcut_reliability_hpp
#define relcut_reliability_hpp

#include <vector>

#include <gmpxx.h>

#include "relcut/betti.hpp"
#include "relcut/graph.hpp"
#include "relcut/ideal.hpp"
#include "relcut/polynomial.hpp"

namespace relcut {

// K_I(x) = sum_i (-1)^i sum_j beta_{i,j} x^j over the ideal's table
Polynomial k_polynomial(const BettiTable& t);
// numerator of the Hilbert series of the quotient: 1 - K_I
Polynomial quotient_numerator(const BettiTable& t);

mpq_class reliability_exact(const BettiTable& t, const std::vector<mpq_class>& probs);
mpq_class reliability_bruteforce(const MonomialIdeal& ideal, const std::vector<mpq_class>& probs);

// first terms of the Z-graded Hilbert series of the quotient, from the table
std::vector<mpz_class> hilbert_series_prefix(const BettiTable& t, int max_degree);

// T(x, y) over variables {x, y}
Polynomial tutte_polynomial(const Graph& g);

// (1 - K_C(t)) / (1 - t)^(n-1) for the unoriented cut ideal
Polynomial h_polynomial(const Graph& g);
bool h_vector_check(const Graph& g);
bool multiplicity_check(const Graph& g);
bool alexander_inversion_check(const Graph& g, int t);

}

#endif
