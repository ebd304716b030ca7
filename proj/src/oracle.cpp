#include "relcut/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <set>
#include <unordered_set>

#include <gmpxx.h>

#include "relcut/errors.hpp"
#include "relcut/parallel.hpp"

namespace relcut {

namespace {

struct Overflow {};

using Row64 = std::vector<std::pair<int, long long>>;
using RowZ = std::vector<std::pair<int, mpz_class>>;

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Overflow{};
    }
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw Overflow{};
    }
    return r;
}

// r <- a*r - b*p, leading entries cancel
Row64 combine(const Row64& r, long long a, const Row64& p, long long b) {
    Row64 out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, checked_mul(a, r[i].second));
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, checked_sub(0, checked_mul(b, p[j].second)));
            ++j;
        } else {
            long long v = checked_sub(checked_mul(a, r[i].second), checked_mul(b, p[j].second));
            if (v != 0) {
                out.emplace_back(r[i].first, v);
            }
            ++i;
            ++j;
        }
    }
    long long g = 0;
    for (auto& [c, v] : out) {
        g = std::gcd(g, v < 0 ? -v : v);
    }
    if (g > 1) {
        for (auto& [c, v] : out) {
            v /= g;
        }
    }
    return out;
}

RowZ combine(const RowZ& r, const mpz_class& a, const RowZ& p, const mpz_class& b) {
    RowZ out;
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            mpz_class v = a * r[i].second - b * p[j].second;
            if (v != 0) {
                out.emplace_back(r[i].first, v);
            }
            ++i;
            ++j;
        }
    }
    mpz_class g = 0;
    for (auto& [c, v] : out) {
        g = gcd(g, v);
    }
    if (g > 1) {
        for (auto& [c, v] : out) {
            v /= g;
        }
    }
    return out;
}

template<class Row, class Num>
long long rank_integer(std::vector<Row> rows) {
    std::map<int, Row> pivots;
    for (Row& r : rows) {
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                int col = r.front().first;
                pivots.emplace(col, std::move(r));
                break;
            }
            Num a = it->second.front().second;
            Num b = r.front().second;
            r = combine(r, a, it->second, b);
        }
    }
    return static_cast<long long>(pivots.size());
}

long long mod_inverse(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return t < 0 ? t + p : t;
}

long long rank_mod_p(std::vector<Row64> rows, long long p) {
    for (auto& r : rows) {
        Row64 clean;
        for (auto [c, v] : r) {
            long long x = ((v % p) + p) % p;
            if (x) {
                clean.emplace_back(c, x);
            }
        }
        r = std::move(clean);
    }
    std::map<int, Row64> pivots;
    for (Row64& r : rows) {
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                long long inv = mod_inverse(r.front().second, p);
                for (auto& [c, v] : r) {
                    v = v * inv % p;
                }
                int col = r.front().first;
                pivots.emplace(col, std::move(r));
                break;
            }
            long long b = r.front().second;
            const Row64& piv = it->second;
            Row64 out;
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < piv.size()) {
                if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                    out.push_back(r[i++]);
                } else if (i == r.size() || piv[j].first < r[i].first) {
                    out.emplace_back(piv[j].first, (p - b * piv[j].second % p) % p);
                    ++j;
                } else {
                    long long v = ((r[i].second - b * piv[j].second) % p + p) % p;
                    if (v) {
                        out.emplace_back(r[i].first, v);
                    }
                    ++i;
                    ++j;
                }
            }
            r = std::move(out);
        }
    }
    return static_cast<long long>(pivots.size());
}

}

long long matrix_rank(std::vector<std::vector<std::pair<int, long long>>> rows, FieldChoice field) {
    for (auto& r : rows) {
        std::sort(r.begin(), r.end());
        r.erase(std::remove_if(r.begin(), r.end(), [](const auto& e) { return e.second == 0; }), r.end());
    }
    if (field.field == Field::mod_p) {
        return rank_mod_p(std::move(rows), field.prime);
    }
    try {
        return rank_integer<Row64, long long>(rows);
    } catch (const Overflow&) {
        std::vector<RowZ> big;
        for (const auto& r : rows) {
            RowZ z;
            for (auto [c, v] : r) {
                z.emplace_back(c, mpz_class(static_cast<long>(v)));
            }
            big.push_back(std::move(z));
        }
        return rank_integer<RowZ, mpz_class>(std::move(big));
    }
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Mask>& facets) {
    std::unordered_set<Mask> seen;
    std::vector<Mask> stack;
    for (Mask f : facets) {
        if (popcount(f) > 24) {
            throw ResourceError("facet too large for face enumeration");
        }
        if (seen.insert(f).second) {
            stack.push_back(f);
        }
    }
    while (!stack.empty()) {
        Mask f = stack.back();
        stack.pop_back();
        Mask rest = f;
        while (rest) {
            Mask low = rest & (~rest + 1);
            rest &= rest - 1;
            Mask sub = f & ~low;
            if (seen.insert(sub).second) {
                stack.push_back(sub);
            }
        }
    }
    SimplicialComplex c;
    for (Mask f : seen) {
        std::size_t slot = popcount(f);
        if (c.faces.size() <= slot) {
            c.faces.resize(slot + 1);
        }
        c.faces[slot].push_back(f);
    }
    for (auto& level : c.faces) {
        std::sort(level.begin(), level.end());
    }
    return c;
}

long long SimplicialComplex::face_count(int dim) const {
    std::size_t slot = dim + 1;
    return slot < faces.size() ? static_cast<long long>(faces[slot].size()) : 0;
}

long long RankProfile::at(int dim) const {
    std::size_t slot = dim + 1;
    return slot < reduced.size() ? reduced[slot] : 0;
}

RankProfile homology_ranks(const SimplicialComplex& c, FieldChoice field) {
    RankProfile out;
    std::size_t levels = c.faces.size();
    if (levels == 0 || c.faces[0].empty()) {
        // void complex: no faces at all, every reduced group vanishes
        return out;
    }
    // boundary rank from level s to level s-1 (faces with s vertices)
    std::vector<long long> boundary_rank(levels + 1, 0);
    for (std::size_t s = 1; s < levels; ++s) {
        const auto& lower = c.faces[s - 1];
        std::vector<std::vector<std::pair<int, long long>>> rows;
        rows.reserve(c.faces[s].size());
        for (Mask f : c.faces[s]) {
            std::vector<std::pair<int, long long>> row;
            int pos = 0;
            Mask rest = f;
            while (rest) {
                Mask low = rest & (~rest + 1);
                rest &= rest - 1;
                Mask sub = f & ~low;
                auto it = std::lower_bound(lower.begin(), lower.end(), sub);
                if (it == lower.end() || *it != sub) {
                    throw InternalError("complex is not closed under faces");
                }
                row.emplace_back(static_cast<int>(it - lower.begin()), pos % 2 == 0 ? 1 : -1);
                ++pos;
            }
            rows.push_back(std::move(row));
        }
        boundary_rank[s] = matrix_rank(std::move(rows), field);
    }
    out.reduced.assign(levels, 0);
    for (std::size_t s = 0; s < levels; ++s) {
        long long n = static_cast<long long>(c.faces[s].size());
        out.reduced[s] = n - boundary_rank[s] - (s + 1 < levels ? boundary_rank[s + 1] : 0);
    }
    while (!out.reduced.empty() && out.reduced.back() == 0) {
        out.reduced.pop_back();
    }
    return out;
}

MonomialIdeal polarize(const MonomialIdeal& ideal, std::vector<int>& origin) {
    int n = ideal.vars.size();
    std::vector<int> top(n, 0);
    for (const Monomial& m : ideal.gens) {
        for (int i = 0; i < n; ++i) {
            top[i] = std::max(top[i], m.exponents[i]);
        }
    }
    std::vector<int> offset(n, 0);
    MonomialIdeal out;
    out.vars.kind = VariableKind::other;
    origin.clear();
    for (int i = 0; i < n; ++i) {
        offset[i] = static_cast<int>(origin.size());
        int copies = std::max(top[i], 1);
        for (int k = 1; k <= copies; ++k) {
            origin.push_back(i);
            out.vars.names.push_back(ideal.vars.names[i] + "_" + std::to_string(k));
            out.vars.ref.push_back(i);
        }
    }
    for (const Monomial& m : ideal.gens) {
        Monomial p;
        p.exponents.assign(origin.size(), 0);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < m.exponents[i]; ++k) {
                p.exponents[offset[i] + k] = 1;
            }
        }
        out.gens.push_back(p);
    }
    out.gens = minimalize(out.gens);
    return out;
}

namespace {

// faces of a downward closed family given by a membership predicate over
// subsets of ground, grown one vertex at a time
template<class Pred>
SimplicialComplex grow_complex(Mask ground, Pred member) {
    SimplicialComplex c;
    if (!member(Mask(0))) {
        return c;
    }
    c.faces.push_back({0});
    while (true) {
        std::vector<Mask> next;
        for (Mask f : c.faces.back()) {
            // extend only by vertices above the current top vertex
            int top = f == 0 ? -1 : 63 - __builtin_clzll(f);
            Mask cand = ground & ~f;
            if (top >= 0) {
                cand &= ~((bit(top) << 1) - 1);
            }
            while (cand) {
                int v = __builtin_ctzll(cand);
                cand &= cand - 1;
                Mask g = f | bit(v);
                if (member(g)) {
                    next.push_back(g);
                }
            }
        }
        if (next.empty()) {
            break;
        }
        std::sort(next.begin(), next.end());
        c.faces.push_back(std::move(next));
    }
    return c;
}

}

BettiTable betti_table_homology(const MonomialIdeal& ideal, const OracleOptions& opts) {
    if (!ideal.squarefree()) {
        std::vector<int> origin;
        MonomialIdeal pol = polarize(ideal, origin);
        BettiTable flat = betti_table_homology(pol, opts);
        BettiTable out;
        out.vars = ideal.vars;
        for (const auto& [key, rank] : flat.entries) {
            std::vector<int> d(ideal.vars.size(), 0);
            for (std::size_t j = 0; j < key.second.size(); ++j) {
                d[origin[j]] += key.second[j];
            }
            out.add(key.first, d, rank);
        }
        return out;
    }
    int nv = ideal.vars.size();
    if (nv > 64) {
        throw ResourceError("more than 64 variables");
    }
    std::vector<Mask> gens;
    for (const Monomial& m : ideal.gens) {
        gens.push_back(monomial_mask(m));
    }
    BettiTable out;
    out.vars = ideal.vars;
    if (gens.empty()) {
        return out;
    }

    // lcm lattice (joins of nonempty generator subsets)
    std::set<Mask> lattice(gens.begin(), gens.end());
    std::vector<Mask> frontier(gens.begin(), gens.end());
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask x : frontier) {
            for (Mask g : gens) {
                Mask j = x | g;
                if (lattice.insert(j).second) {
                    next.push_back(j);
                    if (lattice.size() > opts.lattice_limit) {
                        throw ResourceError("lcm lattice exceeds the configured limit");
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Mask> degrees(lattice.begin(), lattice.end());

    auto profiles = parallel_map<RankProfile>(degrees.size(), [&](std::size_t idx) {
        Mask a = degrees[idx];
        std::vector<Mask> below;
        for (Mask g : gens) {
            if ((g & a) == g) {
                below.push_back(g);
            }
        }
        bool use_nerve;
        switch (opts.complex) {
        case OracleComplex::koszul: use_nerve = false; break;
        case OracleComplex::nerve: use_nerve = true; break;
        default: use_nerve = below.size() < static_cast<std::size_t>(popcount(a)); break;
        }
        if (use_nerve) {
            if (below.size() > 62) {
                throw ResourceError("too many generators below a lattice element");
            }
            Mask ground = below.size() == 64 ? ~Mask(0) : bit(static_cast<int>(below.size())) - 1;
            SimplicialComplex c = grow_complex(ground, [&](Mask s) {
                Mask l = 0;
                Mask rest = s;
                while (rest) {
                    l |= below[__builtin_ctzll(rest)];
                    rest &= rest - 1;
                }
                return l != a;
            });
            return homology_ranks(c, opts.field);
        }
        SimplicialComplex c = grow_complex(a, [&](Mask f) {
            Mask rest = a & ~f;
            for (Mask g : below) {
                if ((g & rest) == g) {
                    return true;
                }
            }
            return false;
        });
        return homology_ranks(c, opts.field);
    });

    for (std::size_t idx = 0; idx < degrees.size(); ++idx) {
        const RankProfile& p = profiles[idx];
        Monomial m = mask_monomial(nv, degrees[idx]);
        for (std::size_t s = 0; s < p.reduced.size(); ++s) {
            // reduced dimension s-1 gives homological index s
            out.add(static_cast<int>(s), m.exponents, p.reduced[s]);
        }
    }
    return out;
}

}
