#include "relcut/reliability.hpp"

#include <algorithm>
#include <functional>

#include "relcut/errors.hpp"
#include "relcut/parallel.hpp"
#include "relcut/syzygy.hpp"

namespace relcut {

Polynomial k_polynomial(const BettiTable& t) {
    Polynomial k(t.vars.names);
    for (const auto& [key, rank] : t.entries) {
        k.add_term(key.second, key.first % 2 == 0 ? mpq_class(static_cast<long>(rank)) : mpq_class(static_cast<long>(-rank)));
    }
    return k;
}

Polynomial quotient_numerator(const BettiTable& t) {
    return Polynomial::constant(t.vars.names, 1) - k_polynomial(t);
}

namespace {

void check_probs(int vars, const std::vector<mpq_class>& probs) {
    if (static_cast<int>(probs.size()) != vars) {
        throw InputError("expected " + std::to_string(vars) + " probabilities, got " + std::to_string(probs.size()));
    }
    for (const auto& p : probs) {
        if (p < 0 || p > 1) {
            throw InputError("probability outside [0, 1]: " + p.get_str());
        }
    }
}

}

mpq_class reliability_exact(const BettiTable& t, const std::vector<mpq_class>& probs) {
    check_probs(t.vars.size(), probs);
    return k_polynomial(t).evaluate(probs);
}

mpq_class reliability_bruteforce(const MonomialIdeal& ideal, const std::vector<mpq_class>& probs) {
    int nv = ideal.vars.size();
    check_probs(nv, probs);
    if (nv > 26) {
        throw ResourceError("too many variables for state enumeration");
    }
    std::vector<Mask> gens;
    for (const Monomial& m : ideal.gens) {
        gens.push_back(monomial_mask(m));
    }
    int high = std::min(nv, 6);
    int low = nv - high;
    auto parts = parallel_map<mpq_class>(std::size_t(1) << high, [&](std::size_t top) {
        mpq_class sum = 0;
        for (Mask lo = 0; lo < bit(low); ++lo) {
            Mask state = (Mask(top) << low) | lo;
            bool works = std::any_of(gens.begin(), gens.end(), [&](Mask g) { return (g & state) == g; });
            if (!works) {
                continue;
            }
            mpq_class w = 1;
            for (int i = 0; i < nv; ++i) {
                w *= has_bit(state, i) ? probs[i] : 1 - probs[i];
            }
            sum += w;
        }
        return sum;
    });
    mpq_class total = 0;
    for (const auto& p : parts) {
        total += p;
    }
    return total;
}

std::vector<mpz_class> hilbert_series_prefix(const BettiTable& t, int max_degree) {
    Polynomial num = quotient_numerator(t).z_graded();
    int nv = t.vars.size();
    // coefficient of t^d in 1/(1-t)^nv is C(d + nv - 1, nv - 1)
    std::vector<mpz_class> out(max_degree + 1, 0);
    for (const auto& [e, c] : num.terms()) {
        for (int d = e[0]; d <= max_degree; ++d) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), d - e[0] + nv - 1, nv - 1);
            out[d] += c.get_num() * binom;
        }
    }
    return out;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

bool connects_without(const EdgeList& edges, std::size_t skip, int from, int to, int n) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {from};
    seen[from] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == to) {
            return true;
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i == skip) {
                continue;
            }
            auto [a, b] = edges[i];
            int y = a == x ? b : (b == x ? a : -1);
            if (y >= 0 && !seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return false;
}

Polynomial tutte_rec(const EdgeList& edges, int n, const Polynomial& x, const Polynomial& y, const Polynomial& one) {
    if (edges.empty()) {
        return one;
    }
    std::size_t last = edges.size() - 1;
    auto [u, v] = edges[last];
    EdgeList deleted(edges.begin(), edges.end() - 1);
    if (u == v) {
        return y * tutte_rec(deleted, n, x, y, one);
    }
    EdgeList contracted = deleted;
    for (auto& [a, b] : contracted) {
        if (a == v) {
            a = u;
        }
        if (b == v) {
            b = u;
        }
    }
    if (!connects_without(edges, last, u, v, n)) {
        return x * tutte_rec(contracted, n, x, y, one);
    }
    return tutte_rec(deleted, n, x, y, one) + tutte_rec(contracted, n, x, y, one);
}

void require_undirected(const Graph& g) {
    if (g.has_arcs()) {
        throw InputError("this operation needs an undirected graph");
    }
}

}

Polynomial tutte_polynomial(const Graph& g) {
    require_undirected(g);
    std::vector<std::string> names = {"x", "y"};
    EdgeList edges;
    for (const Edge& e : g.edges()) {
        edges.emplace_back(e.u, e.v);
    }
    return tutte_rec(edges, g.vertex_count(), Polynomial::variable(names, 0), Polynomial::variable(names, 1),
                     Polynomial::constant(names, 1));
}

Polynomial h_polynomial(const Graph& g) {
    require_undirected(g);
    Polynomial num = quotient_numerator(betti_table(g, Family::cut)).z_graded();
    std::vector<std::string> t = {"t"};
    Polynomial base = Polynomial::constant(t, 1) - Polynomial::variable(t, 0);
    Polynomial den = Polynomial::constant(t, 1);
    for (int i = 0; i < g.vertex_count() - 1; ++i) {
        den = den * base;
    }
    auto h = num.divide_exact(den);
    if (!h) {
        throw InternalError("Hilbert numerator is not divisible by (1-t)^(n-1)");
    }
    return *h;
}

bool h_vector_check(const Graph& g) {
    Polynomial h = h_polynomial(g);
    Polynomial tutte = tutte_polynomial(g);
    int genus = g.genus();
    // h_i = [y^(genus - i)] T(1, y)
    Polynomial expect(std::vector<std::string>{"t"});
    for (const auto& [e, c] : tutte.terms()) {
        expect.add_term({genus - e[1]}, c);
    }
    return h == expect;
}

bool multiplicity_check(const Graph& g) {
    mpq_class at_one = h_polynomial(g).evaluate({mpq_class(1)});
    return at_one == mpq_class(spanning_tree_count(g));
}

bool alexander_inversion_check(const Graph& g, int t) {
    Graph gt = g.with_targets({t});
    Polynomial kp = k_polynomial(betti_table(gt, Family::path));
    Polynomial cut_num = quotient_numerator(betti_table(gt, Family::cut_st));
    std::vector<Polynomial> images;
    for (int i = 0; i < kp.variable_count(); ++i) {
        images.push_back(Polynomial::constant(kp.names(), 1) - Polynomial::variable(kp.names(), i));
    }
    return kp.compose(images) == cut_num;
}

}
