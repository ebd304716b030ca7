#ifndef relcut_oracle_hpp
#define relcut_oracle_hpp

#include <vector>

#include "relcut/betti.hpp"
#include "relcut/graph.hpp"
#include "relcut/ideal.hpp"

namespace relcut {

enum class Field { rationals, mod_p };

struct FieldChoice {
    Field field = Field::rationals;
    long long prime = 2;
};

// A downward closed family of faces over at most 64 vertices; faces[d+1]
// holds the faces of dimension d, so faces[0] is {empty} when present.
struct SimplicialComplex {
    std::vector<std::vector<Mask>> faces;

    static SimplicialComplex from_facets(const std::vector<Mask>& facets);
    long long face_count(int dim) const;
    int dimension() const { return static_cast<int>(faces.size()) - 2; }
};

// reduced homology ranks; reduced[d+1] is the rank in dimension d
struct RankProfile {
    std::vector<long long> reduced;

    long long at(int dim) const;
};

RankProfile homology_ranks(const SimplicialComplex& c, FieldChoice field = {});

// rank of a sparse matrix whose rows list (column, value) pairs
long long matrix_rank(std::vector<std::vector<std::pair<int, long long>>> rows, FieldChoice field = {});

enum class OracleComplex { automatic, koszul, nerve };

struct OracleOptions {
    FieldChoice field;
    OracleComplex complex = OracleComplex::automatic;
    std::size_t lattice_limit = 400000;
};

BettiTable betti_table_homology(const MonomialIdeal& ideal, const OracleOptions& opts = {});

// squarefree ideal over new variables x_{v,1}..x_{v,a_v}; origin[j] = v
MonomialIdeal polarize(const MonomialIdeal& ideal, std::vector<int>& origin);

}

#endif
