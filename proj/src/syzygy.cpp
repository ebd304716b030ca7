#include "relcut/syzygy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "relcut/cells.hpp"
#include "relcut/errors.hpp"
#include "relcut/orientation.hpp"
#include "relcut/parallel.hpp"

namespace relcut {

namespace {

Mask family_targets(const Graph& g, Family family) {
    if (family == Family::path_oriented) {
        Mask t = target_mask(g);
        if (t == 0) {
            throw InputError("path family needs a target");
        }
        return t;
    }
    return 0;
}

std::vector<std::vector<Mask>> levels_for(const Graph& g, Family family, Mask targets) {
    if (family == Family::smt_oriented) {
        if (!all_reachable_from_q(g)) {
            throw InputError("some vertex is unreachable from q");
        }
        auto levels = enumerate_spanning_levels(g);
        while (levels.size() > 1 && levels.back().empty()) {
            levels.pop_back();
        }
        return levels;
    }
    if (family == Family::path_oriented) {
        auto levels = enumerate_path_levels(g, targets);
        while (levels.size() > 1 && levels.back().empty()) {
            levels.pop_back();
        }
        return levels;
    }
    throw InputError("explicit complexes exist for smt_oriented and path_oriented only");
}

int head_rank_sign(const Graph& g, Mask element, int s) {
    Mask same = g.in_slots(g.head(s)) & element & (bit(s) - 1);
    return popcount(same) % 2 == 0 ? -1 : 1;
}

int product_order_sign(const Graph& g, Mask element, int s) {
    int v = g.head(s);
    long long shift = 0;
    for (int w = 0; w < v; ++w) {
        if (w != g.q()) {
            shift += popcount(g.in_slots(w) & element) - 1;
        }
    }
    int r = popcount(g.in_slots(v) & element & (bit(s) - 1));
    return (shift + r) % 2 == 0 ? 1 : -1;
}

// sign vector for one element given the already signed level below
bool solve_signs(const std::vector<std::pair<Mask, int>>& faces,
                 const std::vector<std::vector<DifferentialTerm>>& lower,
                 std::vector<int>& signs) {
    int f = static_cast<int>(faces.size());
    signs.assign(f, 1);
    if (f == 0) {
        return true;
    }
    // constraint per grand-face R: sum_i x_i * c_i = 0
    std::map<int, std::vector<std::pair<int, int>>> constraints;
    for (int i = 0; i < f; ++i) {
        for (const DifferentialTerm& t : lower[faces[i].second]) {
            constraints[t.target].emplace_back(i, t.sign);
        }
    }
    bool all_pairs = std::all_of(constraints.begin(), constraints.end(),
                                 [](const auto& kv) { return kv.second.size() == 2; });
    if (all_pairs) {
        std::vector<std::vector<std::pair<int, int>>> adj(f);
        for (const auto& [r, list] : constraints) {
            auto [a, ca] = list[0];
            auto [b, cb] = list[1];
            int rel = -ca * cb;
            adj[a].emplace_back(b, rel);
            adj[b].emplace_back(a, rel);
        }
        std::vector<int> val(f, 0);
        for (int start = 0; start < f; ++start) {
            if (val[start]) {
                continue;
            }
            val[start] = 1;
            std::vector<int> stack = {start};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [y, rel] : adj[x]) {
                    int want = val[x] * rel;
                    if (val[y] == 0) {
                        val[y] = want;
                        stack.push_back(y);
                    } else if (val[y] != want) {
                        return false;
                    }
                }
            }
        }
        signs = val;
        return true;
    }
    if (f > 24) {
        throw ResourceError("too many faces for sign search");
    }
    for (Mask trial = 0; trial < bit(f - 1); ++trial) {
        for (int i = 0; i < f; ++i) {
            signs[i] = (i > 0 && has_bit(trial, i - 1)) ? -1 : 1;
        }
        bool good = true;
        for (const auto& [r, list] : constraints) {
            int sum = 0;
            for (auto [i, c] : list) {
                sum += signs[i] * c;
            }
            if (sum != 0) {
                good = false;
                break;
            }
        }
        if (good) {
            return true;
        }
    }
    return false;
}

}

std::vector<std::pair<Mask, Mask>> syzygy_faces(const Graph& g, Family family, Mask element, Mask targets) {
    std::vector<std::pair<Mask, Mask>> out;
    if (family == Family::smt_oriented) {
        Mask rest = element;
        while (rest) {
            int s = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (popcount(g.in_slots(g.head(s)) & element) >= 2) {
                Mask smaller = element & ~bit(s);
                if (is_k_spanning_tree(g, smaller)) {
                    out.emplace_back(bit(s), smaller);
                }
            }
        }
        return out;
    }
    if (family != Family::path_oriented) {
        throw InputError("explicit complexes exist for smt_oriented and path_oriented only");
    }
    int level = path_level(g, element);
    for (int u = 0; u < g.vertex_count(); ++u) {
        Mask in = g.in_slots(u) & element;
        if (popcount(in) < 2) {
            continue;
        }
        while (in) {
            int s = __builtin_ctzll(in);
            in &= in - 1;
            Mask chain = bit(s);
            int w = g.tail(s);
            // absorb pass-through vertices that would be orphaned
            while (w != g.q() && !has_bit(targets, w) && popcount(g.in_slots(w) & element) == 1
                   && popcount(g.out_slots(w) & element) == 1) {
                Mask prev = g.in_slots(w) & element;
                chain |= prev;
                w = g.tail(__builtin_ctzll(prev));
            }
            Mask smaller = element & ~chain;
            if (is_k_path(g, smaller, targets) && path_level(g, smaller) == level - 1) {
                out.emplace_back(chain, smaller);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

SyzygyComplex build_syzygy_complex(const Graph& g, Family family) {
    return build_syzygy_complex(g, family, family == Family::smt_oriented ? SignRule::product_order : SignRule::repair);
}

SyzygyComplex build_syzygy_complex(const Graph& g, Family family, SignRule rule) {
    if (rule != SignRule::repair && family != Family::smt_oriented) {
        throw InputError("vertex-based sign rules apply to the spanning tree family only");
    }
    Mask targets = family_targets(g, family);
    SyzygyComplex c;
    c.family = family;
    c.vars = oriented_variables(g);
    c.basis = levels_for(g, family, targets);
    c.differential.resize(c.basis.size());
    c.differential[0].resize(c.basis[0].size());

    // the augmentation [T] -> y^T acts as a level below 0 with one element
    std::vector<std::vector<DifferentialTerm>> augmentation(c.basis[0].size(), {DifferentialTerm{1, 0, 0}});

    for (std::size_t k = 1; k < c.basis.size(); ++k) {
        std::map<Mask, int> lower_index;
        for (std::size_t i = 0; i < c.basis[k - 1].size(); ++i) {
            lower_index[c.basis[k - 1][i]] = static_cast<int>(i);
        }
        const auto& lower = k == 1 ? augmentation : c.differential[k - 1];
        const auto& level = c.basis[k];
        std::vector<std::string> failures(level.size());
        c.differential[k] = parallel_map<std::vector<DifferentialTerm>>(level.size(), [&](std::size_t i) {
            Mask element = level[i];
            auto faces = syzygy_faces(g, family, element, targets);
            std::vector<std::pair<Mask, int>> indexed;
            for (const auto& [removed, rest] : faces) {
                auto it = lower_index.find(rest);
                if (it == lower_index.end()) {
                    throw InternalError("face missing from the level below");
                }
                indexed.emplace_back(removed, it->second);
            }
            std::vector<int> signs(indexed.size(), 1);
            if (rule == SignRule::repair) {
                if (!solve_signs(indexed, lower, signs)) {
                    failures[i] = "no consistent signs";
                }
            } else {
                for (std::size_t j = 0; j < indexed.size(); ++j) {
                    int s = __builtin_ctzll(indexed[j].first);
                    signs[j] = rule == SignRule::head_rank ? head_rank_sign(g, element, s)
                                                           : product_order_sign(g, element, s);
                }
            }
            std::vector<DifferentialTerm> terms;
            for (std::size_t j = 0; j < indexed.size(); ++j) {
                terms.push_back({signs[j], indexed[j].first, indexed[j].second});
            }
            return terms;
        });
        for (const auto& f : failures) {
            if (!f.empty()) {
                throw InternalError("sign repair failed at level " + std::to_string(k) + ": " + f);
            }
        }
    }
    return c;
}

VerifyReport verify_complex(const SyzygyComplex& c, const MonomialIdeal& ideal,
                            const OracleOptions& opts) {
    VerifyReport rep;
    std::ostringstream detail;

    std::vector<Monomial> level0;
    for (Mask m : c.basis[0]) {
        level0.push_back(slots_monomial(c.vars, m));
    }
    std::vector<Monomial> gens = ideal.gens;
    std::sort(level0.begin(), level0.end());
    std::sort(gens.begin(), gens.end());
    rep.generators_match = level0 == gens && c.vars == ideal.vars;
    if (!rep.generators_match) {
        detail << "level 0 differs from the ideal generators\n";
    }

    rep.composes_to_zero = true;
    rep.minimal = true;
    for (std::size_t k = 1; k < c.basis.size(); ++k) {
        for (std::size_t i = 0; i < c.basis[k].size(); ++i) {
            Mask element = c.basis[k][i];
            std::map<int, int> sums;
            int augmented = 0;
            for (const DifferentialTerm& t : c.differential[k][i]) {
                if (t.coefficient == 0) {
                    rep.minimal = false;
                }
                Mask face = c.basis[k - 1][t.target];
                if ((face | t.coefficient) != element || (face & t.coefficient) != 0) {
                    rep.composes_to_zero = false;
                    detail << "coefficient mismatch at level " << k << "\n";
                }
                if (k == 1) {
                    augmented += t.sign;
                    continue;
                }
                for (const DifferentialTerm& u : c.differential[k - 1][t.target]) {
                    sums[u.target] += t.sign * u.sign;
                }
            }
            bool zero = augmented == 0 && std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
            if (!zero) {
                if (rep.composes_to_zero) {
                    detail << "d o d != 0 at level " << k << " element " << i << "\n";
                }
                rep.composes_to_zero = false;
            }
        }
    }

    for (const auto& level : c.basis) {
        if (!level.empty()) {
            rep.ranks.push_back(static_cast<long long>(level.size()));
        }
    }
    BettiTable oracle = betti_table_homology(ideal, opts);
    rep.oracle_ranks = oracle.ranks();
    rep.ranks_match = rep.ranks == rep.oracle_ranks;
    BettiTable mine;
    mine.vars = c.vars;
    for (std::size_t k = 0; k < c.basis.size(); ++k) {
        for (Mask m : c.basis[k]) {
            mine.add(static_cast<int>(k), slots_monomial(c.vars, m).exponents, 1);
        }
    }
    rep.multigraded_match = mine == oracle;
    if (!rep.ranks_match || !rep.multigraded_match) {
        detail << describe_difference(mine, oracle);
    }
    rep.detail = detail.str();
    return rep;
}

namespace {

void require_undirected_cells(const Graph& g) {
    if (g.has_arcs()) {
        throw InputError("cut-family tables from the cell model need an undirected graph; use the homology oracle");
    }
}

}

BettiTable betti_table(const Graph& g, Family family) {
    switch (family) {
    case Family::smt_oriented:
    case Family::path_oriented: {
        Mask targets = family_targets(g, family);
        auto levels = levels_for(g, family, targets);
        BettiTable t;
        t.vars = oriented_variables(g);
        for (std::size_t k = 0; k < levels.size(); ++k) {
            for (Mask m : levels[k]) {
                t.add(static_cast<int>(k), slots_monomial(t.vars, m).exponents, 1);
            }
        }
        return t;
    }
    case Family::smt:
        return fold_table(g, betti_table(g, Family::smt_oriented));
    case Family::path:
        return fold_table(g, betti_table(g, Family::path_oriented));
    case Family::cut_oriented:
        require_undirected_cells(g);
        if (!all_reachable_from_q(g)) {
            throw InputError("some vertex is unreachable from q");
        }
        return labeled_betti(g, build_bounded_complex(g));
    case Family::cut:
        return fold_table(g, betti_table(g, Family::cut_oriented));
    case Family::cut_st_oriented: {
        require_undirected_cells(g);
        Mask targets = target_mask(g);
        if (targets == 0) {
            throw InputError("cut_st needs a target");
        }
        build_ideal(Family::cut_st_oriented, g);
        return labeled_betti(g, sink_subcomplex(g, build_bounded_complex(g), targets));
    }
    case Family::cut_st:
        return fold_table(g, betti_table(g, Family::cut_st_oriented));
    case Family::mgq:
        return head_relabel_table(g, betti_table(g, Family::cut_oriented));
    }
    throw InternalError("unhandled family");
}

}
