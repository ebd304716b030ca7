#ifndef relcut_ideal_hpp
#define relcut_ideal_hpp

#include <string>
#include <vector>

#include "relcut/graph.hpp"

namespace relcut {

enum class VariableKind { edge, oriented_edge, vertex, other };

struct VariableSet {
    VariableKind kind = VariableKind::other;
    std::vector<std::string> names;
    // edge index, slot or vertex id behind each variable
    std::vector<int> ref;

    int size() const { return static_cast<int>(names.size()); }
    int index_of_ref(int r) const;
    friend bool operator==(const VariableSet& a, const VariableSet& b) {
        return a.kind == b.kind && a.names == b.names;
    }
};

VariableSet edge_variables(const Graph& g);
VariableSet oriented_variables(const Graph& g);
VariableSet vertex_variables(const Graph& g);

struct Monomial {
    std::vector<int> exponents;

    bool divides(const Monomial& o) const;
    bool squarefree() const;
    int degree() const;
    Monomial lcm(const Monomial& o) const;
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; }
};

struct MonomialIdeal {
    VariableSet vars;
    std::vector<Monomial> gens;

    bool contains(const Monomial& m) const;
    bool squarefree() const;
};

// squarefree monomial <-> bit mask over variable positions
Mask monomial_mask(const Monomial& m);
Monomial mask_monomial(int var_count, Mask m);

Monomial slots_monomial(const VariableSet& oriented, Mask slots);
Mask monomial_slots(const VariableSet& oriented, const Monomial& m);

// drop non-minimal and repeated generators; canonical order (degree, then
// exponent vector descending so that x1 sorts before x2)
std::vector<Monomial> minimalize(std::vector<Monomial> gens);
void sort_generators(std::vector<Monomial>& gens);

enum class Family { smt, smt_oriented, cut, cut_oriented, cut_st, cut_st_oriented, path, path_oriented, mgq };

Family parse_family(const std::string& name);
std::string family_name(Family f);
bool is_oriented(Family f);
// the unoriented family obtained by y_e, y_ebar -> x_e
Family folded(Family f);
bool needs_targets(Family f);
const std::vector<Family>& all_families();

MonomialIdeal build_ideal(Family kind, const Graph& g);
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);
// y_e, y_ebar -> x_e applied to each generator, then minimalized
MonomialIdeal fold_ideal(const Graph& g, const MonomialIdeal& oriented);
std::string monomial_string(const VariableSet& vars, const Monomial& m);

std::vector<std::vector<int>> minimal_primes(Family kind, const Graph& g);

// arborescence from q avoiding supp(m), grown greedily
Mask find_tree_facet(const Graph& g, const Monomial& m);

bool all_reachable_from_q(const Graph& g);

}

#endif
