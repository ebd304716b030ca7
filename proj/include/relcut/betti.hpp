#ifndef relcut_betti_hpp
#define relcut_betti_hpp

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relcut/graph.hpp"
#include "relcut/ideal.hpp"

namespace relcut {

// Multigraded Betti numbers of an ideal: entry (i, j) is beta_{i,j}(I), with
// i = 0 for the generators.
struct BettiTable {
    VariableSet vars;
    std::map<std::pair<int, std::vector<int>>, long long> entries;

    void add(int i, const std::vector<int>& degree, long long rank);
    // total rank per homological index
    std::vector<long long> ranks() const;
    // (i, total degree) -> rank
    std::map<std::pair<int, int>, long long> z_graded() const;
    long long at(int i, const std::vector<int>& degree) const;
    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
    friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }
};

// quotient ranks: 1 followed by the ideal ranks
std::vector<long long> quotient_ranks(const BettiTable& t);

// y_e, y_ebar -> x_e on every multidegree
BettiTable fold_table(const Graph& g, const BettiTable& oriented);
// y_e -> x_{e+}
BettiTable head_relabel_table(const Graph& g, const BettiTable& oriented);

struct HomologicalStats {
    int pd_ideal = 0;
    int pd_quotient = 0;
    int reg_ideal = 0;
    int reg_quotient = 0;
};

HomologicalStats derived_homological_stats(const BettiTable& t);

std::string describe_difference(const BettiTable& a, const BettiTable& b);

}

#endif
