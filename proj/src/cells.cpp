#include "relcut/cells.hpp"

#include <algorithm>

#include "relcut/errors.hpp"
#include "relcut/ideal.hpp"
#include "relcut/orientation.hpp"
#include "relcut/parallel.hpp"

namespace relcut {

Mask Cell::sink_side(int q) const {
    for (Mask b : blocks) {
        if (!has_bit(b, q)) {
            return b;
        }
    }
    return 0;
}

std::vector<long long> CellComplex::f_vector() const {
    std::vector<long long> f;
    for (const auto& level : cells) {
        f.push_back(static_cast<long long>(level.size()));
    }
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
    return f;
}

long long CellComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t d = 0; d < cells.size(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(cells[d].size());
    }
    return chi;
}

namespace {

void connected_partitions(const Graph& g, int v, std::vector<Mask>& blocks, std::vector<std::vector<Mask>>& out) {
    if (v == g.vertex_count()) {
        for (Mask b : blocks) {
            if (!g.induced_connected(b)) {
                return;
            }
        }
        std::vector<Mask> sorted = blocks;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(sorted);
        return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        blocks[i] |= bit(v);
        connected_partitions(g, v + 1, blocks, out);
        blocks[i] &= ~bit(v);
    }
    blocks.push_back(bit(v));
    connected_partitions(g, v + 1, blocks, out);
    blocks.pop_back();
}

bool cell_less(const Cell& a, const Cell& b) {
    return slot_list_less(a.slots, b.slots);
}

}

CellComplex build_bounded_complex(const Graph& g) {
    std::vector<std::vector<Mask>> partitions;
    std::vector<Mask> scratch;
    connected_partitions(g, 0, scratch, partitions);

    auto found = parallel_map<std::vector<Cell>>(partitions.size(), [&](std::size_t pi) {
        const std::vector<Mask>& blocks = partitions[pi];
        std::vector<Cell> cells;
        int b = static_cast<int>(blocks.size());
        if (b < 2) {
            return cells;
        }
        std::vector<int> block_of(g.vertex_count(), -1);
        for (int i = 0; i < b; ++i) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (has_bit(blocks[i], v)) {
                    block_of[v] = i;
                }
            }
        }
        // distinct adjacent block pairs (x < y) and the edges between them
        std::vector<std::pair<int, int>> pairs;
        std::vector<std::vector<int>> pair_edges;
        for (int e = 0; e < g.edge_count(); ++e) {
            int x = block_of[g.edge(e).u];
            int y = block_of[g.edge(e).v];
            if (x == y) {
                continue;
            }
            std::pair<int, int> key = {std::min(x, y), std::max(x, y)};
            auto it = std::find(pairs.begin(), pairs.end(), key);
            if (it == pairs.end()) {
                pairs.push_back(key);
                pair_edges.push_back({e});
            } else {
                pair_edges[it - pairs.begin()].push_back(e);
            }
        }
        if (pairs.size() > 30) {
            throw ResourceError("quotient graph too large for cell enumeration");
        }
        int qb = block_of[g.q()];
        for (Mask orient = 0; orient < bit(static_cast<int>(pairs.size())); ++orient) {
            Mask slots = 0;
            bool legal = true;
            std::vector<int> indeg(b, 0);
            std::vector<std::vector<int>> succ(b);
            for (std::size_t p = 0; p < pairs.size() && legal; ++p) {
                int from = pairs[p].first;
                int to = pairs[p].second;
                if (has_bit(orient, static_cast<int>(p))) {
                    std::swap(from, to);
                }
                ++indeg[to];
                succ[from].push_back(to);
                for (int e : pair_edges[p]) {
                    int s = slot_of(e, block_of[g.edge(e).u] != from);
                    if (!g.legal(s)) {
                        legal = false;
                        break;
                    }
                    slots |= bit(s);
                }
            }
            if (!legal || indeg[qb] != 0) {
                continue;
            }
            bool unique_source = true;
            for (int i = 0; i < b; ++i) {
                if (i != qb && indeg[i] == 0) {
                    unique_source = false;
                }
            }
            if (!unique_source) {
                continue;
            }
            std::vector<int> stack = {qb};
            int seen = 0;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++seen;
                for (int y : succ[x]) {
                    if (--indeg[y] == 0) {
                        stack.push_back(y);
                    }
                }
            }
            if (seen != b) {
                continue;
            }
            cells.push_back({slots, blocks});
        }
        return cells;
    });

    CellComplex c;
    for (auto& part : found) {
        for (Cell& cell : part) {
            std::size_t d = cell.dimension();
            if (c.cells.size() <= d) {
                c.cells.resize(d + 1);
            }
            c.cells[d].push_back(std::move(cell));
        }
    }
    for (auto& level : c.cells) {
        std::sort(level.begin(), level.end(), cell_less);
    }
    return c;
}

CellComplex sink_subcomplex(const Graph& g, const CellComplex& b, Mask targets) {
    if (targets == 0) {
        throw InputError("sink subcomplex needs a target");
    }
    if (has_bit(targets, g.q())) {
        throw InputError("sink equals q");
    }
    CellComplex out;
    if (b.cells.empty()) {
        return out;
    }
    std::vector<Mask> kept_vertices;
    std::vector<Mask> dropped_vertices;
    for (const Cell& v : b.cells[0]) {
        if (v.sink_side(g.q()) & targets) {
            kept_vertices.push_back(v.slots);
        } else {
            dropped_vertices.push_back(v.slots);
        }
    }
    out.cells.resize(b.cells.size());
    for (std::size_t d = 0; d < b.cells.size(); ++d) {
        for (const Cell& cell : b.cells[d]) {
            bool keep = std::none_of(dropped_vertices.begin(), dropped_vertices.end(),
                                     [&](Mask v) { return (v & cell.slots) == v; });
            if (keep) {
                out.cells[d].push_back(cell);
            }
        }
    }
    while (!out.cells.empty() && out.cells.back().empty()) {
        out.cells.pop_back();
    }
    return out;
}

CellComplex sink_subcomplex(const Graph& g, const CellComplex& b, int t) {
    if (t < 0 || t >= g.vertex_count()) {
        throw InputError("sink out of range");
    }
    return sink_subcomplex(g, b, bit(t));
}

BettiTable labeled_betti(const Graph& g, const CellComplex& c) {
    BettiTable t;
    t.vars = oriented_variables(g);
    for (std::size_t d = 0; d < c.cells.size(); ++d) {
        for (const Cell& cell : c.cells[d]) {
            t.add(static_cast<int>(d), slots_monomial(t.vars, cell.slots).exponents, 1);
        }
    }
    return t;
}

}
