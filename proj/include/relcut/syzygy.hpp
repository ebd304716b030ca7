#ifndef relcut_syzygy_hpp
#define relcut_syzygy_hpp

#include <string>
#include <vector>

#include "relcut/betti.hpp"
#include "relcut/graph.hpp"
#include "relcut/ideal.hpp"
#include "relcut/oracle.hpp"

namespace relcut {

enum class SignRule {
    // (-1)^j, j the 1-based rank of e among the edges of T entering e+
    head_rank,
    // product-of-simplices order: vertices by id, in-edges by slot
    product_order,
    // signs solved level by level so that consecutive maps compose to zero
    repair,
};

struct DifferentialTerm {
    int sign = 1;
    // removed slots; the coefficient is y^coefficient
    Mask coefficient = 0;
    int target = 0;
};

struct SyzygyComplex {
    Family family = Family::smt_oriented;
    VariableSet vars;
    std::vector<std::vector<Mask>> basis;
    // differential[k][i]: image of basis[k][i] in level k-1 (empty for k = 0)
    std::vector<std::vector<std::vector<DifferentialTerm>>> differential;
};

// faces of a level-k element: (removed slots, remaining slots)
std::vector<std::pair<Mask, Mask>> syzygy_faces(const Graph& g, Family family, Mask element, Mask targets);

SyzygyComplex build_syzygy_complex(const Graph& g, Family family);
SyzygyComplex build_syzygy_complex(const Graph& g, Family family, SignRule rule);

struct VerifyReport {
    bool generators_match = false;
    bool composes_to_zero = false;
    bool minimal = false;
    bool ranks_match = false;
    bool multigraded_match = false;
    std::vector<long long> ranks;
    std::vector<long long> oracle_ranks;
    std::string detail;

    bool ok() const { return generators_match && composes_to_zero && minimal && ranks_match; }
};

VerifyReport verify_complex(const SyzygyComplex& c, const MonomialIdeal& ideal,
                            const OracleOptions& opts = {});

// combinatorial multigraded table for any family
BettiTable betti_table(const Graph& g, Family family);

}

#endif
