#include "report.hpp"

#include <map>

namespace relcut::report {

json slots_json(const Graph& g, Mask slots) {
    json out = json::array();
    while (slots) {
        int s = __builtin_ctzll(slots);
        slots &= slots - 1;
        out.push_back(g.slot_name(s));
    }
    return out;
}

json ideal_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const Monomial& m : ideal.gens) {
        gens.push_back(monomial_string(ideal.vars, m));
    }
    return {{"variables", ideal.vars.names}, {"generators", gens}, {"count", ideal.gens.size()}};
}

json table_json(const BettiTable& t) {
    json ranks = t.ranks();
    json graded = json::array();
    for (const auto& [key, rank] : t.z_graded()) {
        graded.push_back({{"i", key.first}, {"degree", key.second}, {"rank", rank}});
    }
    json multi = json::array();
    for (const auto& [key, rank] : t.entries) {
        multi.push_back({{"i", key.first}, {"degree", monomial_string(t.vars, Monomial{key.second})}, {"rank", rank}});
    }
    HomologicalStats st = derived_homological_stats(t);
    return {
        {"ranks", ranks},
        {"quotient_ranks", quotient_ranks(t)},
        {"z_graded", graded},
        {"multigraded", multi},
        {"pd_ideal", st.pd_ideal},
        {"reg_ideal", st.reg_ideal},
        {"pd_quotient", st.pd_quotient},
        {"reg_quotient", st.reg_quotient},
    };
}

json polynomial_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
    }
    return {{"text", p.to_string()}, {"variables", p.names()}, {"terms", terms}};
}

json rational_json(const mpq_class& q) {
    return {{"exact", q.get_str()}, {"decimal", q.get_d()}};
}

json complex_json(const Graph& g, const CellComplex& c) {
    json cells = json::array();
    for (std::size_t d = 0; d < c.cells.size(); ++d) {
        for (const Cell& cell : c.cells[d]) {
            json blocks = json::array();
            for (Mask b : cell.blocks) {
                json vs = json::array();
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (has_bit(b, v)) {
                        vs.push_back(v);
                    }
                }
                blocks.push_back(vs);
            }
            cells.push_back({{"dimension", d}, {"label", slots_json(g, cell.slots)}, {"blocks", blocks}});
        }
    }
    return {{"f_vector", c.f_vector()}, {"euler_characteristic", c.euler_characteristic()}, {"cells", cells}};
}

json syzygy_json(const Graph& g, const SyzygyComplex& c) {
    json levels = json::array();
    for (std::size_t k = 0; k < c.basis.size(); ++k) {
        json elems = json::array();
        for (std::size_t i = 0; i < c.basis[k].size(); ++i) {
            json terms = json::array();
            if (k > 0) {
                for (const DifferentialTerm& t : c.differential[k][i]) {
                    terms.push_back({{"sign", t.sign}, {"coefficient", slots_json(g, t.coefficient)}, {"target", t.target}});
                }
            }
            elems.push_back({{"slots", slots_json(g, c.basis[k][i])}, {"boundary", terms}});
        }
        levels.push_back({{"level", k}, {"rank", c.basis[k].size()}, {"elements", elems}});
    }
    return {{"family", family_name(c.family)}, {"levels", levels}};
}

json verify_json(const VerifyReport& r) {
    return {
        {"generators_match", r.generators_match},
        {"composes_to_zero", r.composes_to_zero},
        {"minimal", r.minimal},
        {"ranks_match", r.ranks_match},
        {"multigraded_match", r.multigraded_match},
        {"ranks", r.ranks},
        {"oracle_ranks", r.oracle_ranks},
        {"detail", r.detail},
        {"ok", r.ok()},
    };
}

}
