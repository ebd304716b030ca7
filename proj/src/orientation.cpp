#include "relcut/orientation.hpp"

#include <algorithm>

#include "relcut/errors.hpp"
#include "relcut/parallel.hpp"

namespace relcut {

Mask support_of(Mask slots) {
    Mask out = 0;
    while (slots) {
        int s = __builtin_ctzll(slots);
        slots &= slots - 1;
        out |= bit(edge_of(s));
    }
    return out;
}

std::vector<int> slot_list(Mask slots) {
    std::vector<int> v;
    while (slots) {
        v.push_back(__builtin_ctzll(slots));
        slots &= slots - 1;
    }
    return v;
}

bool slot_list_less(Mask a, Mask b) {
    int pa = popcount(a);
    int pb = popcount(b);
    if (pa != pb) {
        return pa < pb;
    }
    return slot_list(a) < slot_list(b);
}

namespace {

bool uses_both_directions(Mask slots) {
    return (slots & (slots >> 1) & 0x5555555555555555ULL) != 0;
}

Mask out_heads(const Graph& g, Mask slots, int v) {
    return g.out_slots(v) & slots;
}

void sort_unique(std::vector<Mask>& v) {
    std::sort(v.begin(), v.end(), slot_list_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Choose, for every vertex other than q, a subset of its legal in-slots.
// allow_empty distinguishes paths (vertices may be absent) from spanning trees.
template<class Accept>
std::vector<Mask> enumerate_in_choices(const Graph& g, bool allow_empty, Accept accept) {
    std::vector<int> order;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != g.q()) {
            order.push_back(v);
        }
    }
    std::vector<std::vector<Mask>> choices;
    for (int v : order) {
        Mask in = g.in_slots(v);
        std::vector<Mask> subsets;
        // iterate subsets of the in-slot mask
        for (Mask s = in;; s = (s - 1) & in) {
            if (s != 0 || allow_empty) {
                if (!uses_both_directions(s)) {
                    subsets.push_back(s);
                }
            }
            if (s == 0) {
                break;
            }
        }
        std::sort(subsets.begin(), subsets.end());
        if (subsets.empty()) {
            return {};
        }
        choices.push_back(std::move(subsets));
    }
    if (choices.empty()) {
        std::vector<Mask> out;
        if (accept(Mask(0))) {
            out.push_back(0);
        }
        return out;
    }
    std::size_t shards = choices[0].size();
    auto parts = parallel_map<std::vector<Mask>>(shards, [&](std::size_t first) {
        std::vector<Mask> found;
        std::vector<std::size_t> idx(choices.size(), 0);
        std::vector<Mask> acc(choices.size() + 1, 0);
        acc[1] = choices[0][first];
        // iterative odometer over the remaining vertices
        std::size_t depth = 1;
        if (choices.size() == 1) {
            if (accept(acc[1])) {
                found.push_back(acc[1]);
            }
            return found;
        }
        idx[1] = 0;
        while (true) {
            if (idx[depth] >= choices[depth].size()) {
                if (depth == 1) {
                    break;
                }
                --depth;
                ++idx[depth];
                continue;
            }
            Mask pick = choices[depth][idx[depth]];
            Mask merged = acc[depth] | pick;
            if (uses_both_directions(merged)) {
                ++idx[depth];
                continue;
            }
            if (depth + 1 == choices.size()) {
                if (accept(merged)) {
                    found.push_back(merged);
                }
                ++idx[depth];
                continue;
            }
            acc[depth + 1] = merged;
            ++depth;
            idx[depth] = 0;
        }
        return found;
    });
    std::vector<Mask> all;
    for (auto& p : parts) {
        all.insert(all.end(), p.begin(), p.end());
    }
    sort_unique(all);
    return all;
}

void check_level(const Graph& g, int k) {
    if (k < 0 || k > g.genus()) {
        throw InputError("k out of range [0, genus]");
    }
}

}

bool is_k_spanning_tree(const Graph& g, Mask slots) {
    if ((slots & ~g.legal_slots()) != 0 || uses_both_directions(slots)) {
        return false;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        int indeg = popcount(g.in_slots(v) & slots);
        if (v == g.q() ? indeg != 0 : indeg == 0) {
            return false;
        }
    }
    return is_acyclic_slots(g, slots);
}

Mask path_vertices(const Graph& g, Mask slots) {
    Mask vs = bit(g.q());
    while (slots) {
        int s = __builtin_ctzll(slots);
        slots &= slots - 1;
        vs |= bit(g.head(s)) | bit(g.tail(s));
    }
    return vs;
}

int path_level(const Graph& g, Mask slots) {
    return popcount(slots) - popcount(path_vertices(g, slots)) + 1;
}

bool is_k_path(const Graph& g, Mask slots, Mask targets) {
    if ((slots & ~g.legal_slots()) != 0 || uses_both_directions(slots)) {
        return false;
    }
    Mask vs = path_vertices(g, slots);
    if ((targets & ~vs) != 0) {
        return false;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!has_bit(vs, v)) {
            continue;
        }
        int indeg = popcount(g.in_slots(v) & slots);
        if (v == g.q() ? indeg != 0 : indeg == 0) {
            return false;
        }
        if (out_heads(g, slots, v) == 0 && !has_bit(targets, v)) {
            return false;
        }
    }
    return is_acyclic_slots(g, slots);
}

Mask target_mask(const Graph& g) {
    Mask t = 0;
    for (int v : g.targets()) {
        t |= bit(v);
    }
    return t;
}

std::vector<std::vector<Mask>> enumerate_spanning_levels(const Graph& g) {
    int genus = g.genus();
    int base = g.vertex_count() - 1;
    auto all = enumerate_in_choices(g, false, [&](Mask m) { return is_acyclic_slots(g, m); });
    std::vector<std::vector<Mask>> levels(genus + 1);
    for (Mask m : all) {
        int k = popcount(m) - base;
        if (k < 0 || k > genus) {
            throw InternalError("spanning level out of range");
        }
        levels[k].push_back(m);
    }
    return levels;
}

std::vector<Mask> enumerate_k_spanning_trees(const Graph& g, int k) {
    check_level(g, k);
    return enumerate_spanning_levels(g)[k];
}

std::map<Mask, long long> count_by_support(const Graph& g, int k) {
    std::map<Mask, long long> out;
    for (Mask t : enumerate_k_spanning_trees(g, k)) {
        ++out[support_of(t)];
    }
    return out;
}

std::vector<Mask> enumerate_acyclic_unique_source(const Graph& g) {
    return enumerate_spanning_levels(g)[g.genus()];
}

std::vector<std::vector<Mask>> enumerate_path_levels(const Graph& g, Mask targets) {
    if (targets == 0) {
        throw InputError("path families need at least one target");
    }
    if (has_bit(targets, g.q())) {
        throw InputError("q cannot be a target");
    }
    int genus = g.genus();
    auto all = enumerate_in_choices(g, true, [&](Mask m) { return is_k_path(g, m, targets); });
    std::vector<std::vector<Mask>> levels(genus + 1);
    for (Mask m : all) {
        int k = path_level(g, m);
        if (k < 0 || k > genus) {
            throw InternalError("path level out of range");
        }
        levels[k].push_back(m);
    }
    if (levels[0].empty()) {
        throw InputError("a target is unreachable from q");
    }
    return levels;
}

std::vector<Mask> enumerate_k_paths(const Graph& g, Mask targets, int k) {
    check_level(g, k);
    return enumerate_path_levels(g, targets)[k];
}

}
