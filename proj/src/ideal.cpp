#include "relcut/ideal.hpp"

#include <algorithm>
#include <map>

#include "relcut/errors.hpp"
#include "relcut/orientation.hpp"

namespace relcut {

int VariableSet::index_of_ref(int r) const {
    auto it = std::find(ref.begin(), ref.end(), r);
    return it == ref.end() ? -1 : static_cast<int>(it - ref.begin());
}

VariableSet edge_variables(const Graph& g) {
    VariableSet vs;
    vs.kind = VariableKind::edge;
    for (int i = 0; i < g.edge_count(); ++i) {
        vs.names.push_back(g.edge_name(i));
        vs.ref.push_back(i);
    }
    return vs;
}

VariableSet oriented_variables(const Graph& g) {
    VariableSet vs;
    vs.kind = VariableKind::oriented_edge;
    for (int s = 0; s < g.slot_count(); ++s) {
        if (g.legal(s)) {
            vs.names.push_back(g.slot_name(s));
            vs.ref.push_back(s);
        }
    }
    return vs;
}

VariableSet vertex_variables(const Graph& g) {
    VariableSet vs;
    vs.kind = VariableKind::vertex;
    for (int v = 0; v < g.vertex_count(); ++v) {
        vs.names.push_back("x" + std::to_string(v));
        vs.ref.push_back(v);
    }
    return vs;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > o.exponents[i]) {
            return false;
        }
    }
    return true;
}

bool Monomial::squarefree() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e <= 1; });
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exponents) {
        d += e;
    }
    return d;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) {
        r.exponents[i] = std::max(r.exponents[i], o.exponents[i]);
    }
    return r;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::squarefree() const {
    return std::all_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.squarefree(); });
}

Mask monomial_mask(const Monomial& m) {
    if (m.exponents.size() > 64) {
        throw ResourceError("more than 64 variables");
    }
    Mask r = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] > 1) {
            throw InputError("monomial is not squarefree");
        }
        if (m.exponents[i] == 1) {
            r |= bit(static_cast<int>(i));
        }
    }
    return r;
}

Monomial mask_monomial(int var_count, Mask m) {
    Monomial r;
    r.exponents.assign(var_count, 0);
    for (int i = 0; i < var_count; ++i) {
        r.exponents[i] = has_bit(m, i) ? 1 : 0;
    }
    return r;
}

Monomial slots_monomial(const VariableSet& oriented, Mask slots) {
    Monomial r;
    r.exponents.assign(oriented.size(), 0);
    for (int i = 0; i < oriented.size(); ++i) {
        if (has_bit(slots, oriented.ref[i])) {
            r.exponents[i] = 1;
        }
    }
    return r;
}

Mask monomial_slots(const VariableSet& oriented, const Monomial& m) {
    Mask r = 0;
    for (int i = 0; i < oriented.size(); ++i) {
        if (m.exponents[i] > 0) {
            r |= bit(oriented.ref[i]);
        }
    }
    return r;
}

void sort_generators(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.degree();
        int db = b.degree();
        if (da != db) {
            return da < db;
        }
        return b.exponents < a.exponents;
    });
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    sort_generators(gens);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
        if (!redundant) {
            out.push_back(m);
        }
    }
    return out;
}

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> table = {
        {"smt", Family::smt}, {"smt_oriented", Family::smt_oriented},
        {"cut", Family::cut}, {"cut_oriented", Family::cut_oriented},
        {"cut_st", Family::cut_st}, {"cut_st_oriented", Family::cut_st_oriented},
        {"path", Family::path}, {"path_oriented", Family::path_oriented},
        {"mgq", Family::mgq},
    };
    std::string key = name;
    std::replace(key.begin(), key.end(), '-', '_');
    auto it = table.find(key);
    if (it == table.end()) {
        throw InputError("unknown family '" + name + "'");
    }
    return it->second;
}

std::string family_name(Family f) {
    switch (f) {
    case Family::smt: return "smt";
    case Family::smt_oriented: return "smt_oriented";
    case Family::cut: return "cut";
    case Family::cut_oriented: return "cut_oriented";
    case Family::cut_st: return "cut_st";
    case Family::cut_st_oriented: return "cut_st_oriented";
    case Family::path: return "path";
    case Family::path_oriented: return "path_oriented";
    case Family::mgq: return "mgq";
    }
    return "?";
}

bool is_oriented(Family f) {
    return f == Family::smt_oriented || f == Family::cut_oriented || f == Family::cut_st_oriented
        || f == Family::path_oriented;
}

Family folded(Family f) {
    switch (f) {
    case Family::smt_oriented: return Family::smt;
    case Family::cut_oriented: return Family::cut;
    case Family::cut_st_oriented: return Family::cut_st;
    case Family::path_oriented: return Family::path;
    default: return f;
    }
}

bool needs_targets(Family f) {
    return f == Family::cut_st || f == Family::cut_st_oriented || f == Family::path || f == Family::path_oriented;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> v = {
        Family::smt, Family::smt_oriented, Family::cut, Family::cut_oriented, Family::cut_st,
        Family::cut_st_oriented, Family::path, Family::path_oriented, Family::mgq,
    };
    return v;
}

bool all_reachable_from_q(const Graph& g) {
    Mask seen = bit(g.q());
    bool grew = true;
    while (grew) {
        grew = false;
        for (int s = 0; s < g.slot_count(); ++s) {
            if (g.legal(s) && has_bit(seen, g.tail(s)) && !has_bit(seen, g.head(s))) {
                seen |= bit(g.head(s));
                grew = true;
            }
        }
    }
    return seen == g.all_vertices();
}

namespace {

MonomialIdeal make(VariableSet vars, std::vector<Monomial> gens) {
    MonomialIdeal r;
    r.vars = std::move(vars);
    r.gens = minimalize(std::move(gens));
    return r;
}

Monomial edge_monomial(int m, Mask edges) {
    return mask_monomial(m, edges);
}

// oriented cut generators over all A with q not in A and (optionally) A
// meeting the targets
std::vector<Mask> cut_slot_sets(const Graph& g, Mask targets) {
    std::vector<Mask> out;
    Mask everything = g.all_vertices();
    for (Mask a = 1; a <= everything; ++a) {
        if (has_bit(a, g.q()) || (targets != 0 && (a & targets) == 0)) {
            continue;
        }
        out.push_back(cut_slots(g, a));
    }
    return out;
}

void require_reachable(const Graph& g) {
    if (!all_reachable_from_q(g)) {
        throw InputError("some vertex is unreachable from q");
    }
}

Mask required_targets(const Graph& g) {
    Mask t = target_mask(g);
    if (t == 0) {
        throw InputError("this family needs at least one target (t line or --targets)");
    }
    return t;
}

MonomialIdeal oriented_cut_ideal(const Graph& g, Mask targets) {
    VariableSet vars = oriented_variables(g);
    std::vector<Monomial> gens;
    for (Mask s : cut_slot_sets(g, targets)) {
        if (s == 0) {
            throw InputError("a cut carries no legal arc; some target is unreachable from q");
        }
        gens.push_back(slots_monomial(vars, s));
    }
    return make(vars, gens);
}

}

MonomialIdeal fold_ideal(const Graph& g, const MonomialIdeal& oriented) {
    VariableSet vars = edge_variables(g);
    std::vector<Monomial> gens;
    for (const Monomial& m : oriented.gens) {
        gens.push_back(edge_monomial(g.edge_count(), support_of(monomial_slots(oriented.vars, m))));
    }
    return make(vars, gens);
}

MonomialIdeal build_ideal(Family kind, const Graph& g) {
    switch (kind) {
    case Family::smt_oriented: {
        require_reachable(g);
        VariableSet vars = oriented_variables(g);
        std::vector<Monomial> gens;
        for (Mask t : enumerate_k_spanning_trees(g, 0)) {
            gens.push_back(slots_monomial(vars, t));
        }
        return make(vars, gens);
    }
    case Family::smt:
        return fold_ideal(g, build_ideal(Family::smt_oriented, g));
    case Family::cut_oriented:
        require_reachable(g);
        return oriented_cut_ideal(g, 0);
    case Family::cut:
        return fold_ideal(g, build_ideal(Family::cut_oriented, g));
    case Family::cut_st_oriented:
        return oriented_cut_ideal(g, required_targets(g));
    case Family::cut_st:
        return fold_ideal(g, build_ideal(Family::cut_st_oriented, g));
    case Family::path_oriented: {
        VariableSet vars = oriented_variables(g);
        std::vector<Monomial> gens;
        auto levels = enumerate_path_levels(g, required_targets(g));
        for (Mask p : levels[0]) {
            gens.push_back(slots_monomial(vars, p));
        }
        return make(vars, gens);
    }
    case Family::path:
        return fold_ideal(g, build_ideal(Family::path_oriented, g));
    case Family::mgq: {
        MonomialIdeal cuts = build_ideal(Family::cut_oriented, g);
        VariableSet vars = vertex_variables(g);
        std::vector<Monomial> gens;
        for (const Monomial& m : cuts.gens) {
            Monomial r;
            r.exponents.assign(vars.size(), 0);
            for (int i = 0; i < cuts.vars.size(); ++i) {
                r.exponents[g.head(cuts.vars.ref[i])] += m.exponents[i];
            }
            gens.push_back(r);
        }
        return make(vars, gens);
    }
    }
    throw InternalError("unhandled family");
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    if (!ideal.squarefree()) {
        throw InputError("Alexander duality needs a squarefree ideal");
    }
    if (ideal.vars.size() > 64) {
        throw ResourceError("more than 64 variables");
    }
    std::vector<Mask> covers = {0};
    for (const Monomial& gen : ideal.gens) {
        Mask gm = monomial_mask(gen);
        std::vector<Mask> next;
        for (Mask c : covers) {
            if (c & gm) {
                next.push_back(c);
                continue;
            }
            Mask rest = gm;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                next.push_back(c | bit(v));
            }
        }
        std::sort(next.begin(), next.end(), [](Mask a, Mask b) {
            return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        covers.clear();
        for (Mask c : next) {
            bool redundant = std::any_of(covers.begin(), covers.end(), [&](Mask o) { return (o & c) == o; });
            if (!redundant) {
                covers.push_back(c);
            }
        }
    }
    std::vector<Monomial> gens;
    for (Mask c : covers) {
        gens.push_back(mask_monomial(ideal.vars.size(), c));
    }
    return make(ideal.vars, gens);
}

std::string monomial_string(const VariableSet& vars, const Monomial& m) {
    std::string out;
    for (int i = 0; i < vars.size(); ++i) {
        if (m.exponents[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += vars.names[i];
        if (m.exponents[i] > 1) {
            out += "^" + std::to_string(m.exponents[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::vector<std::vector<int>> minimal_primes(Family kind, const Graph& g) {
    std::vector<std::vector<int>> primes;
    if (kind == Family::cut_oriented) {
        require_reachable(g);
        VariableSet vars = oriented_variables(g);
        for (Mask t : enumerate_k_spanning_trees(g, 0)) {
            std::vector<int> p;
            for (int i = 0; i < vars.size(); ++i) {
                if (has_bit(t, vars.ref[i])) {
                    p.push_back(i);
                }
            }
            primes.push_back(p);
        }
        return primes;
    }
    if (kind == Family::smt) {
        for (const Monomial& m : build_ideal(Family::cut, g).gens) {
            std::vector<int> p;
            for (int i = 0; i < g.edge_count(); ++i) {
                if (m.exponents[i]) {
                    p.push_back(i);
                }
            }
            primes.push_back(p);
        }
        return primes;
    }
    throw InputError("minimal primes are available for cut_oriented and smt only");
}

Mask find_tree_facet(const Graph& g, const Monomial& m) {
    MonomialIdeal cuts = build_ideal(Family::cut_oriented, g);
    if (static_cast<int>(m.exponents.size()) != cuts.vars.size()) {
        throw InputError("monomial is not over the oriented edge variables");
    }
    if (cuts.contains(m)) {
        throw InputError("monomial lies in the oriented cut ideal");
    }
    Mask forbidden = monomial_slots(cuts.vars, m);
    std::vector<int> order = {g.q()};
    Mask inside = bit(g.q());
    Mask tree = 0;
    while (inside != g.all_vertices()) {
        int pick = -1;
        for (std::size_t i = 0; i < order.size() && pick < 0; ++i) {
            Mask out = g.out_slots(order[i]) & ~forbidden;
            while (out) {
                int s = __builtin_ctzll(out);
                out &= out - 1;
                if (!has_bit(inside, g.head(s))) {
                    pick = s;
                    break;
                }
            }
        }
        if (pick < 0) {
            throw InternalError("greedy growth stalled outside the cut ideal");
        }
        tree |= bit(pick);
        inside |= bit(g.head(pick));
        order.push_back(g.head(pick));
    }
    return tree;
}

}
