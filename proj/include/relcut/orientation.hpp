#ifndef relcut_orientation_hpp
#define relcut_orientation_hpp

#include <map>
#include <vector>

#include "relcut/graph.hpp"

namespace relcut {

// unoriented edge set (bit i = edge index i) underlying a set of slots
Mask support_of(Mask slots);

// deterministic order: by size, then by the sorted slot list
bool slot_list_less(Mask a, Mask b);
std::vector<int> slot_list(Mask slots);

bool is_k_spanning_tree(const Graph& g, Mask slots);
bool is_k_path(const Graph& g, Mask slots, Mask targets);
// vertices touched by a slot set together with q
Mask path_vertices(const Graph& g, Mask slots);
// cyclomatic level |E(P)| - |V(P)| + 1
int path_level(const Graph& g, Mask slots);

Mask target_mask(const Graph& g);

// S_k(G,q) for every k in [0, genus]
std::vector<std::vector<Mask>> enumerate_spanning_levels(const Graph& g);
std::vector<Mask> enumerate_k_spanning_trees(const Graph& g, int k);
std::map<Mask, long long> count_by_support(const Graph& g, int k);
std::vector<Mask> enumerate_acyclic_unique_source(const Graph& g);

// S_k(G,q,T) for every k in [0, genus]
std::vector<std::vector<Mask>> enumerate_path_levels(const Graph& g, Mask targets);
std::vector<Mask> enumerate_k_paths(const Graph& g, Mask targets, int k);

}

#endif
