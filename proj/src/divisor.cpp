#include "relcut/divisor.hpp"

#include <gmpxx.h>

#include "relcut/errors.hpp"

namespace relcut {

namespace {

void check_length(const Graph& g, const Divisor& d) {
    if (static_cast<int>(d.size()) != g.vertex_count()) {
        throw InputError("divisor length differs from the vertex count");
    }
}

void require_undirected(const Graph& g) {
    if (g.has_arcs()) {
        throw InputError("divisor reduction needs an undirected graph");
    }
}

// number of legal slots from the burnt set into v
int burning_edges(const Graph& g, Mask burnt, int v) {
    int count = 0;
    Mask in = g.in_slots(v);
    while (in) {
        int s = __builtin_ctzll(in);
        in &= in - 1;
        if (has_bit(burnt, g.tail(s))) {
            ++count;
        }
    }
    return count;
}

void fire(const Graph& g, Divisor& d, Mask set) {
    for (const Edge& e : g.edges()) {
        bool in_u = has_bit(set, e.u);
        bool in_v = has_bit(set, e.v);
        if (in_u && !in_v) {
            --d[e.u];
            ++d[e.v];
        } else if (in_v && !in_u) {
            --d[e.v];
            ++d[e.u];
        }
    }
}

// exact inverse of the Laplacian with row and column q removed
std::vector<std::vector<mpq_class>> reduced_laplacian_inverse(const Graph& g, std::vector<int>& index) {
    int n = g.vertex_count();
    index.assign(n, -1);
    int r = 0;
    for (int v = 0; v < n; ++v) {
        if (v != g.q()) {
            index[v] = r++;
        }
    }
    std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(2 * r, 0));
    for (const Edge& e : g.edges()) {
        int iu = index[e.u];
        int iv = index[e.v];
        if (iu >= 0) {
            a[iu][iu] += 1;
        }
        if (iv >= 0) {
            a[iv][iv] += 1;
        }
        if (iu >= 0 && iv >= 0) {
            a[iu][iv] -= 1;
            a[iv][iu] -= 1;
        }
    }
    for (int i = 0; i < r; ++i) {
        a[i][r + i] = 1;
    }
    for (int c = 0; c < r; ++c) {
        int p = c;
        while (p < r && a[p][c] == 0) {
            ++p;
        }
        if (p == r) {
            throw InternalError("reduced Laplacian is singular");
        }
        std::swap(a[p], a[c]);
        mpq_class inv = 1 / a[c][c];
        for (auto& x : a[c]) {
            x *= inv;
        }
        for (int i = 0; i < r; ++i) {
            if (i == c || a[i][c] == 0) {
                continue;
            }
            mpq_class f = a[i][c];
            for (int j = 0; j < 2 * r; ++j) {
                a[i][j] -= f * a[c][j];
            }
        }
    }
    std::vector<std::vector<mpq_class>> inv(r, std::vector<mpq_class>(r));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            inv[i][j] = a[i][r + j];
        }
    }
    return inv;
}

}

long long degree(const Divisor& d) {
    long long s = 0;
    for (long long x : d) {
        s += x;
    }
    return s;
}

Divisor laplacian_apply(const Graph& g, const std::vector<long long>& f) {
    check_length(g, f);
    Divisor out(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        out[e.u] += f[e.u] - f[e.v];
        out[e.v] += f[e.v] - f[e.u];
    }
    return out;
}

Divisor divisor_of_orientation(const Graph& g, Mask slots) {
    Divisor d(g.vertex_count(), -1);
    while (slots) {
        int s = __builtin_ctzll(slots);
        slots &= slots - 1;
        ++d[g.head(s)];
    }
    return d;
}

Mask dhar_burn(const Graph& g, const Divisor& d) {
    check_length(g, d);
    int n = g.vertex_count();
    Mask burnt = bit(g.q());
    bool grew = true;
    while (grew) {
        grew = false;
        Mask fresh = 0;
        for (int v = 0; v < n; ++v) {
            if (!has_bit(burnt, v) && d[v] < burning_edges(g, burnt, v)) {
                fresh |= bit(v);
            }
        }
        if (fresh) {
            burnt |= fresh;
            grew = true;
        }
    }
    return burnt;
}

bool is_q_reduced(const Graph& g, const Divisor& d) {
    check_length(g, d);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != g.q() && d[v] < 0) {
            return false;
        }
    }
    return dhar_burn(g, d) == g.all_vertices();
}

Divisor reduce_divisor(const Graph& g, const Divisor& d) {
    require_undirected(g);
    check_length(g, d);
    int n = g.vertex_count();
    Divisor cur = d;

    bool negative = false;
    for (int v = 0; v < n; ++v) {
        negative = negative || (v != g.q() && cur[v] < 0);
    }
    if (negative) {
        // solve L_q g = need + deg and fire -ceil(g); every off-q entry ends >= 0
        std::vector<int> index;
        auto inv = reduced_laplacian_inverse(g, index);
        int r = n - 1;
        std::vector<mpq_class> need(r, 0);
        std::vector<long long> degs(n, 0);
        for (const Edge& e : g.edges()) {
            ++degs[e.u];
            ++degs[e.v];
        }
        for (int v = 0; v < n; ++v) {
            if (index[v] >= 0) {
                need[index[v]] = static_cast<long>((cur[v] < 0 ? -cur[v] : 0) + degs[v]);
            }
        }
        std::vector<long long> f(n, 0);
        for (int v = 0; v < n; ++v) {
            if (index[v] < 0) {
                continue;
            }
            mpq_class x = 0;
            for (int j = 0; j < r; ++j) {
                x += inv[index[v]][j] * need[j];
            }
            mpz_class c;
            mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
            if (!c.fits_slong_p()) {
                throw ResourceError("divisor coefficients too large");
            }
            f[v] = -c.get_si();
        }
        Divisor lap = laplacian_apply(g, f);
        for (int v = 0; v < n; ++v) {
            cur[v] -= lap[v];
            if (v != g.q() && cur[v] < 0) {
                throw InternalError("borrowing step left a negative vertex");
            }
        }
    }

    const long long bound = 50000000;
    for (long long iter = 0;; ++iter) {
        if (iter > bound) {
            throw InternalError("divisor reduction did not terminate");
        }
        Mask burnt = dhar_burn(g, cur);
        if (burnt == g.all_vertices()) {
            return cur;
        }
        fire(g, cur, g.all_vertices() & ~burnt);
    }
}

bool divisors_equivalent(const Graph& g, const Divisor& a, const Divisor& b) {
    require_undirected(g);
    if (degree(a) != degree(b)) {
        return false;
    }
    return reduce_divisor(g, a) == reduce_divisor(g, b);
}

Mask orientation_for_reduced_divisor(const Graph& g, const Divisor& d) {
    check_length(g, d);
    if (d[g.q()] != -1) {
        throw InputError("divisor must take the value -1 at q");
    }
    if (!is_q_reduced(g, d)) {
        throw InputError("divisor is not q-reduced");
    }
    long long k = degree(d) + 1;
    if (k < 0 || k > g.genus()) {
        throw InputError("divisor degree out of range");
    }
    int n = g.vertex_count();
    Mask burnt = bit(g.q());
    Mask chosen = 0;
    while (burnt != g.all_vertices()) {
        int next = -1;
        for (int v = 0; v < n && next < 0; ++v) {
            if (!has_bit(burnt, v) && d[v] < burning_edges(g, burnt, v)) {
                next = v;
            }
        }
        if (next < 0) {
            throw InternalError("fire stalled on a reduced divisor");
        }
        long long take = d[next] + 1;
        Mask in = g.in_slots(next);
        while (in && take > 0) {
            int s = __builtin_ctzll(in);
            in &= in - 1;
            if (has_bit(burnt, g.tail(s))) {
                chosen |= bit(s);
                --take;
            }
        }
        burnt |= bit(next);
    }
    return chosen;
}

}
