#include "relcut/betti.hpp"

#include <algorithm>
#include <sstream>

#include "relcut/errors.hpp"

namespace relcut {

void BettiTable::add(int i, const std::vector<int>& degree, long long rank) {
    if (rank == 0) {
        return;
    }
    entries[{i, degree}] += rank;
}

std::vector<long long> BettiTable::ranks() const {
    std::vector<long long> r;
    for (const auto& [key, rank] : entries) {
        if (static_cast<int>(r.size()) <= key.first) {
            r.resize(key.first + 1, 0);
        }
        r[key.first] += rank;
    }
    return r;
}

std::map<std::pair<int, int>, long long> BettiTable::z_graded() const {
    std::map<std::pair<int, int>, long long> z;
    for (const auto& [key, rank] : entries) {
        int d = 0;
        for (int x : key.second) {
            d += x;
        }
        z[{key.first, d}] += rank;
    }
    return z;
}

long long BettiTable::at(int i, const std::vector<int>& degree) const {
    auto it = entries.find({i, degree});
    return it == entries.end() ? 0 : it->second;
}

std::vector<long long> quotient_ranks(const BettiTable& t) {
    std::vector<long long> r = {1};
    for (long long x : t.ranks()) {
        r.push_back(x);
    }
    return r;
}

BettiTable fold_table(const Graph& g, const BettiTable& oriented) {
    if (oriented.vars.kind != VariableKind::oriented_edge) {
        throw InputError("folding needs a table over oriented edge variables");
    }
    BettiTable out;
    out.vars = edge_variables(g);
    for (const auto& [key, rank] : oriented.entries) {
        std::vector<int> d(g.edge_count(), 0);
        for (int i = 0; i < oriented.vars.size(); ++i) {
            d[edge_of(oriented.vars.ref[i])] += key.second[i];
        }
        out.add(key.first, d, rank);
    }
    return out;
}

BettiTable head_relabel_table(const Graph& g, const BettiTable& oriented) {
    if (oriented.vars.kind != VariableKind::oriented_edge) {
        throw InputError("relabeling needs a table over oriented edge variables");
    }
    BettiTable out;
    out.vars = vertex_variables(g);
    for (const auto& [key, rank] : oriented.entries) {
        std::vector<int> d(g.vertex_count(), 0);
        for (int i = 0; i < oriented.vars.size(); ++i) {
            d[g.head(oriented.vars.ref[i])] += key.second[i];
        }
        out.add(key.first, d, rank);
    }
    return out;
}

HomologicalStats derived_homological_stats(const BettiTable& t) {
    HomologicalStats s;
    s.pd_ideal = -1;
    s.reg_ideal = -1;
    for (const auto& [key, rank] : t.entries) {
        int d = 0;
        for (int x : key.second) {
            d += x;
        }
        s.pd_ideal = std::max(s.pd_ideal, key.first);
        s.reg_ideal = std::max(s.reg_ideal, d - key.first);
    }
    s.pd_quotient = s.pd_ideal + 1;
    s.reg_quotient = s.reg_ideal - 1;
    return s;
}

std::string describe_difference(const BettiTable& a, const BettiTable& b) {
    std::ostringstream out;
    auto degree_string = [](const std::vector<int>& d) {
        std::string s = "(";
        for (std::size_t i = 0; i < d.size(); ++i) {
            s += (i ? "," : "") + std::to_string(d[i]);
        }
        return s + ")";
    };
    for (const auto& [key, rank] : a.entries) {
        long long other = b.at(key.first, key.second);
        if (other != rank) {
            out << "i=" << key.first << " " << degree_string(key.second) << ": " << rank << " vs " << other << "\n";
        }
    }
    for (const auto& [key, rank] : b.entries) {
        if (a.at(key.first, key.second) == 0) {
            out << "i=" << key.first << " " << degree_string(key.second) << ": 0 vs " << rank << "\n";
        }
    }
    return out.str();
}

}
