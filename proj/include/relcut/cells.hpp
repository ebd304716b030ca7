#ifndef relcut_cells_hpp
#define relcut_cells_hpp

#include <vector>

#include "relcut/betti.hpp"
#include "relcut/graph.hpp"

namespace relcut {

struct Cell {
    // oriented cross-block edges; doubles as the label y^slots
    Mask slots = 0;
    // vertex masks of the connected blocks, sorted
    std::vector<Mask> blocks;
    int dimension() const { return static_cast<int>(blocks.size()) - 2; }
    // the side A of a 0-cell (the block without q)
    Mask sink_side(int q) const;
};

struct CellComplex {
    // cells[d] = d-dimensional cells in deterministic order
    std::vector<std::vector<Cell>> cells;

    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;
};

CellComplex build_bounded_complex(const Graph& g);
// keep cells all of whose vertices are cuts with A meeting the targets
CellComplex sink_subcomplex(const Graph& g, const CellComplex& b, Mask targets);
CellComplex sink_subcomplex(const Graph& g, const CellComplex& b, int t);

// beta_{d, label} = number of d-cells carrying that label, over oriented variables
BettiTable labeled_betti(const Graph& g, const CellComplex& c);

}

#endif
