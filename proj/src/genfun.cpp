#include "relcut/genfun.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "relcut/errors.hpp"
#include "relcut/ideal.hpp"
#include "relcut/orientation.hpp"

namespace relcut {

namespace {

// sums of oriented paths keyed by slot set; products vanish whenever two
// slots share a head or a slot enters q
using PathSum = std::map<Mask, long long>;

struct PathAlgebra {
    const Graph& g;

    Mask heads(Mask slots) const {
        Mask h = 0;
        while (slots) {
            int s = __builtin_ctzll(slots);
            slots &= slots - 1;
            h |= bit(g.head(s));
        }
        return h;
    }

    void add_product(PathSum& into, const PathSum& a, const PathSum& b) const {
        for (const auto& [ma, ca] : a) {
            Mask ha = heads(ma);
            for (const auto& [mb, cb] : b) {
                Mask hb = heads(mb);
                if ((ha & hb) != 0 || has_bit(ha | hb, g.q())) {
                    continue;
                }
                long long& slot = into[ma | mb];
                slot += ca * cb;
                if (slot == 0) {
                    into.erase(ma | mb);
                }
            }
        }
    }
};

std::vector<int> elimination_order(const Graph& g, int last, const std::vector<int>& order) {
    std::vector<int> expected;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != g.q() && v != last) {
            expected.push_back(v);
        }
    }
    if (order.empty()) {
        return expected;
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected) {
        throw InputError("elimination order must list every vertex except q and the last target");
    }
    return order;
}

Polynomial single_target(const Graph& g, int t, const std::vector<int>& order) {
    int n = g.vertex_count();
    PathAlgebra alg{g};
    std::vector<std::vector<PathSum>> w(n, std::vector<PathSum>(n));
    for (int s = 0; s < g.slot_count(); ++s) {
        if (g.legal(s) && g.head(s) != g.q()) {
            w[g.tail(s)][g.head(s)][bit(s)] += 1;
        }
    }
    std::vector<char> alive(n, 1);
    for (int v : elimination_order(g, t, order)) {
        alive[v] = 0;
        for (int a = 0; a < n; ++a) {
            if (!alive[a] || w[a][v].empty()) {
                continue;
            }
            for (int b = 0; b < n; ++b) {
                if (!alive[b] || b == a || w[v][b].empty()) {
                    continue;
                }
                alg.add_product(w[a][b], w[a][v], w[v][b]);
            }
        }
    }
    VariableSet vars = oriented_variables(g);
    Polynomial out(vars.names);
    for (const auto& [m, c] : w[g.q()][t]) {
        out.add_term(slots_monomial(vars, m).exponents, static_cast<long>(c));
    }
    return out;
}

// num / prod factors[i]^den[i]; negative exponents are factors of the numerator.
// Keeping the denominator factored lets sums use a least common multiple of
// factor powers instead of multiplying whole denominators together.
struct FactoredFraction {
    Polynomial num;
    std::vector<int> den;
};

Polynomial power_product(const std::vector<Polynomial>& factors, const std::vector<int>& e, const Polynomial& one) {
    Polynomial out = one;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) {
            out = out * factors[i];
        }
    }
    return out;
}

struct FractionField {
    std::vector<Polynomial> factors;
    Polynomial one;

    FactoredFraction lift(const Polynomial& p) const { return {p, std::vector<int>(factors.size(), 0)}; }

    void widen(FactoredFraction& f) const { f.den.resize(factors.size(), 0); }

    FactoredFraction add(FactoredFraction a, FactoredFraction b) const {
        widen(a);
        widen(b);
        if (a.num.is_zero()) {
            return b;
        }
        if (b.num.is_zero()) {
            return a;
        }
        std::vector<int> common(factors.size());
        std::vector<int> ra(factors.size());
        std::vector<int> rb(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            common[i] = std::max(a.den[i], b.den[i]);
            ra[i] = common[i] - a.den[i];
            rb[i] = common[i] - b.den[i];
        }
        return {a.num * power_product(factors, ra, one) + b.num * power_product(factors, rb, one), common};
    }

    FactoredFraction mul(FactoredFraction a, FactoredFraction b) const {
        widen(a);
        widen(b);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            a.den[i] += b.den[i];
        }
        a.num = a.num * b.num;
        return a;
    }

    // a / (numerator of the factor k): the factor's own denominator moves up
    FactoredFraction div_factor(FactoredFraction a, int k, const std::vector<int>& factor_den) const {
        widen(a);
        for (std::size_t i = 0; i < factor_den.size(); ++i) {
            a.den[i] -= factor_den[i];
        }
        a.den[k] += 1;
        return a;
    }

    Polynomial expand(const FactoredFraction& f) const {
        std::vector<int> up(factors.size(), 0);
        std::vector<int> down(factors.size(), 0);
        for (std::size_t i = 0; i < f.den.size(); ++i) {
            (f.den[i] < 0 ? up[i] : down[i]) = std::abs(f.den[i]);
        }
        Polynomial num = f.num * power_product(factors, up, one);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (int k = 0; k < down[i]; ++k) {
                auto q = num.divide_exact(factors[i]);
                if (!q) {
                    throw InternalError("star-mesh result does not clear to a polynomial");
                }
                num = *q;
            }
        }
        return num;
    }
};

Polynomial all_targets(const Graph& g, int last, const std::vector<int>& order) {
    int n = g.vertex_count();
    VariableSet vars = oriented_variables(g);
    Polynomial zero(vars.names);
    FractionField field{{}, Polynomial::constant(vars.names, 1)};
    std::vector<std::vector<FactoredFraction>> w(n, std::vector<FactoredFraction>(n, field.lift(zero)));
    for (int i = 0; i < vars.size(); ++i) {
        int s = vars.ref[i];
        w[g.tail(s)][g.head(s)].num += Polynomial::variable(vars.names, i);
    }
    std::vector<char> alive(n, 1);
    FactoredFraction product = field.lift(field.one);
    for (int v : elimination_order(g, last, order)) {
        FactoredFraction mu = field.lift(zero);
        for (int a = 0; a < n; ++a) {
            if (alive[a] && a != v) {
                mu = field.add(mu, w[a][v]);
            }
        }
        if (mu.num.is_zero()) {
            throw InputError("vertex " + std::to_string(v) + " has no incoming weight; graph is disconnected from q");
        }
        int k = static_cast<int>(field.factors.size());
        field.factors.push_back(mu.num);
        field.widen(mu);
        alive[v] = 0;
        for (int a = 0; a < n; ++a) {
            if (!alive[a] || w[a][v].num.is_zero()) {
                continue;
            }
            for (int b = 0; b < n; ++b) {
                if (!alive[b] || b == a || w[v][b].num.is_zero()) {
                    continue;
                }
                FactoredFraction mesh = field.div_factor(field.mul(w[a][v], w[v][b]), k, mu.den);
                w[a][b] = field.add(w[a][b], mesh);
            }
        }
        product = field.mul(product, mu);
    }
    return field.expand(field.mul(w[g.q()][last], product));
}

}

Polynomial path_genfun_starmesh(const Graph& g, Mask targets, const std::vector<int>& order) {
    if (targets == 0 || has_bit(targets, g.q()) || (targets & ~g.all_vertices()) != 0) {
        throw InputError("targets must be a nonempty set of vertices other than q");
    }
    int last = 63 - __builtin_clzll(targets);
    if (popcount(targets) == 1) {
        Polynomial p = single_target(g, last, order);
        if (p.is_zero()) {
            throw InputError("target unreachable from q");
        }
        return p;
    }
    if (targets == (g.all_vertices() & ~bit(g.q()))) {
        return all_targets(g, last, order);
    }
    throw InputError("star-mesh supports a single target or all vertices other than q");
}

Polynomial path_genfun_enumerated(const Graph& g, Mask targets) {
    VariableSet vars = oriented_variables(g);
    Polynomial out(vars.names);
    auto levels = enumerate_path_levels(g, targets);
    for (Mask p : levels[0]) {
        out.add_term(slots_monomial(vars, p).exponents, 1);
    }
    return out;
}

namespace {

struct Multigraph {
    int n = 0;
    // (u, v, edge index into the original graph)
    std::vector<std::tuple<int, int, int>> edges;
};

RationalExpression conductance(const Multigraph& h, int which, const std::vector<std::string>& names) {
    auto [u, v, id] = h.edges[which];
    (void)id;
    std::vector<int> order;
    for (int x = 0; x < h.n; ++x) {
        if (x != u && x != v) {
            order.push_back(x);
        }
    }
    order.push_back(u);
    order.push_back(v);
    int r = h.n;
    std::vector<int> pos(r);
    for (int i = 0; i < r; ++i) {
        pos[order[i]] = i;
    }
    Polynomial zero(names);
    std::vector<std::vector<Polynomial>> m(r, std::vector<Polynomial>(r, zero));
    for (auto [a, b, e] : h.edges) {
        if (a == b) {
            continue;
        }
        Polynomial x = Polynomial::variable(names, e);
        int pa = pos[a];
        int pb = pos[b];
        m[pa][pa] += x;
        m[pb][pb] += x;
        m[pa][pb] -= x;
        m[pb][pa] -= x;
    }
    Polynomial prev = Polynomial::constant(names, 1);
    int eliminate = r - 2;
    for (int k = 0; k < eliminate; ++k) {
        if (m[k][k].is_zero()) {
            throw InternalError("zero pivot in conductance elimination");
        }
        for (int i = k + 1; i < r; ++i) {
            for (int j = k + 1; j < r; ++j) {
                Polynomial t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = t.divide_exact(prev);
                if (!q) {
                    throw InternalError("inexact fraction-free step");
                }
                m[i][j] = *q;
            }
        }
        prev = m[k][k];
    }
    Polynomial num = m[r - 2][r - 1];
    num *= mpq_class(-1);
    return {num, prev};
}

Multigraph contract_edge(const Multigraph& h, int which) {
    auto [u, v, id] = h.edges[which];
    (void)id;
    Multigraph out;
    out.n = h.n - 1;
    auto relabel = [&](int x) {
        if (x == v) {
            x = u;
        }
        return x > v ? x - 1 : x;
    };
    for (auto [a, b, e] : h.edges) {
        int na = relabel(a);
        int nb = relabel(b);
        if (na != nb) {
            out.edges.emplace_back(na, nb, e);
        }
    }
    return out;
}

}

RationalExpression effective_conductance(const Graph& g, int e) {
    if (g.has_arcs()) {
        throw InputError("effective conductance needs an undirected graph");
    }
    Multigraph h;
    h.n = g.vertex_count();
    for (int i = 0; i < g.edge_count(); ++i) {
        h.edges.emplace_back(g.edge(i).u, g.edge(i).v, i);
    }
    return conductance(h, e, edge_variables(g).names);
}

Polynomial spanning_genfun_conductance(const Graph& g) {
    if (g.has_arcs()) {
        throw InputError("spanning tree generating function needs an undirected graph");
    }
    std::vector<std::string> names = edge_variables(g).names;
    Multigraph h;
    h.n = g.vertex_count();
    for (int i = 0; i < g.edge_count(); ++i) {
        if (g.edge(i).u != g.edge(i).v) {
            h.edges.emplace_back(g.edge(i).u, g.edge(i).v, i);
        }
    }
    RationalExpression phi = RationalExpression::of(Polynomial::constant(names, 1));
    while (h.n > 1) {
        phi = phi * conductance(h, 0, names);
        h = contract_edge(h, 0);
    }
    auto poly = phi.as_polynomial();
    if (!poly) {
        throw InternalError("conductance product does not clear to a polynomial");
    }
    return *poly;
}

}
