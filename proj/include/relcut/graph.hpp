#ifndef relcut_graph_hpp
#define relcut_graph_hpp

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace relcut {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask(1) << i; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }

struct Edge {
    int id = 0;
    int u = 0;
    int v = 0;
    bool directed = false;
};

// Oriented edges live in "slots": slot 2*i is edge i traversed u->v (forward),
// slot 2*i+1 is v->u (reverse). Edge index i is the position in Graph::edges().
inline int slot_of(int edge_index, bool reverse) { return 2 * edge_index + (reverse ? 1 : 0); }
inline int edge_of(int slot) { return slot >> 1; }
inline bool is_reverse(int slot) { return slot & 1; }

class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges, int q, std::vector<int> targets = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[index]; }
    int q() const { return q_; }
    const std::vector<int>& targets() const { return targets_; }
    bool has_arcs() const;
    int genus() const { return edge_count() - n_ + 1; }

    int tail(int slot) const;
    int head(int slot) const;
    bool legal(int slot) const;
    Mask legal_slots() const { return legal_; }
    int slot_count() const { return 2 * edge_count(); }
    std::string slot_name(int slot) const;
    std::string edge_name(int index) const;

    // slots with the given head (legal only)
    Mask in_slots(int v) const { return in_[v]; }
    Mask out_slots(int v) const { return out_[v]; }

    Graph with_q(int q) const;
    Graph with_targets(std::vector<int> targets) const;

    // undirected connectivity of the subgraph induced on a vertex set
    bool induced_connected(Mask vertices) const;
    Mask all_vertices() const { return n_ >= 64 ? ~Mask(0) : bit(n_) - 1; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    int q_ = 0;
    std::vector<int> targets_;
    Mask legal_ = 0;
    std::vector<Mask> in_;
    std::vector<Mask> out_;
};

Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

struct Cut {
    Mask side = 0;
    Mask oriented = 0;
};

std::vector<Cut> connected_cuts(const Graph& g, std::optional<int> sink = std::nullopt);

// legal slots directed from the complement into A
Mask cut_slots(const Graph& g, Mask side);

// blocks: vertex lists covering V. Result vertices are numbered by block order
// after sorting blocks by their smallest vertex.
Graph contract(const Graph& g, const std::vector<std::vector<int>>& blocks);

mpz_class spanning_tree_count(const Graph& g);

bool is_acyclic_slots(const Graph& g, Mask slots);

}

#endif
