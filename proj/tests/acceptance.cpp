#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "fixtures.hpp"
#include "relcut/cells.hpp"
#include "relcut/divisor.hpp"
#include "relcut/errors.hpp"
#include "relcut/genfun.hpp"
#include "relcut/oracle.hpp"
#include "relcut/orientation.hpp"
#include "relcut/reliability.hpp"
#include "relcut/syzygy.hpp"
#include "run.hpp"
#include "zoo.hpp"

using namespace relcut;
using namespace relcut_test;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) {
                note << "failed: ";
            } else {
                note << "; ";
            }
            note << what;
            pass = false;
        }
    }
};

template<class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s << (i ? ", " : "") << v[i];
    }
    s << ")";
    return s.str();
}

std::set<std::string> generator_names(const MonomialIdeal& ideal) {
    std::set<std::string> out;
    for (const Monomial& m : ideal.gens) {
        out.insert(monomial_string(ideal.vars, m));
    }
    return out;
}

std::set<std::string> slot_names(const Graph& g, const std::vector<Mask>& items) {
    std::set<std::string> out;
    for (Mask m : items) {
        std::string s;
        for (int slot : slot_list(m)) {
            s += g.slot_name(slot);
        }
        out.insert(s);
    }
    return out;
}

std::vector<std::pair<int, int>> graded_shape(const BettiTable& t) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, rank] : t.z_graded()) {
        out.push_back({key.second, static_cast<int>(rank)});
    }
    return out;
}

// degree-deg divisors with entries in [lo, hi] off q
std::vector<Divisor> divisor_box(const Graph& g, long long deg, long long lo, long long hi) {
    int n = g.vertex_count();
    std::vector<Divisor> out;
    Divisor d(n, lo);
    while (true) {
        long long rest = 0;
        for (int v = 0; v < n; ++v) {
            if (v != g.q()) {
                rest += d[v];
            }
        }
        Divisor full = d;
        full[g.q()] = deg - rest;
        out.push_back(full);
        int v = 0;
        while (v < n && (v == g.q() || d[v] == hi)) {
            if (v != g.q()) {
                d[v] = lo;
            }
            ++v;
        }
        if (v == n) {
            break;
        }
        ++d[v];
    }
    return out;
}

// full orientations of an undirected graph that are acyclic and contain a directed q-t path
long long acyclic_with_path(const Graph& g, int t) {
    long long count = 0;
    int m = g.edge_count();
    for (Mask choice = 0; choice < bit(m); ++choice) {
        Mask slots = 0;
        for (int i = 0; i < m; ++i) {
            slots |= bit(slot_of(i, has_bit(choice, i)));
        }
        if (!is_acyclic_slots(g, slots)) {
            continue;
        }
        Mask seen = bit(g.q());
        bool grew = true;
        while (grew) {
            grew = false;
            for (int s = 0; s < g.slot_count(); ++s) {
                if (has_bit(slots, s) && has_bit(seen, g.tail(s)) && !has_bit(seen, g.head(s))) {
                    seen |= bit(g.head(s));
                    grew = true;
                }
            }
        }
        count += has_bit(seen, t) ? 1 : 0;
    }
    return count;
}

Outcome ac1() {
    Outcome o;
    Graph g = fixture("diamond");
    BettiTable t = betti_table(g, Family::smt);
    std::vector<std::pair<int, int>> want = {{3, 8}, {4, 11}, {5, 4}};
    o.expect(graded_shape(t) == want, "graded shape " + join(t.ranks()));
    o.expect(t.at(1, {1, 1, 1, 1, 0}) == 3, "beta_{1,(1,1,1,1,0)} = " + std::to_string(t.at(1, {1, 1, 1, 1, 0})));
    o.note << "ranks " << join(t.ranks()) << " in degrees (3, 4, 5)";
    return o;
}

Outcome ac2() {
    Outcome o;
    for (int n = 3; n <= 8; ++n) {
        BettiTable t = betti_table(cycle_graph(n), Family::smt);
        std::vector<std::pair<int, int>> want = {{n - 1, n}, {n, n - 1}};
        o.expect(graded_shape(t) == want, "C_" + std::to_string(n) + " " + join(t.ranks()));
    }
    o.note << "C_3..C_8 checked";
    return o;
}

Outcome ac3() {
    Outcome o;
    auto a = quotient_ranks(betti_table(cactus({3, 4}), Family::smt));
    auto b = quotient_ranks(betti_table(cactus({3, 3, 3}), Family::smt));
    o.expect(a == std::vector<long long>{1, 12, 17, 6}, "(3,4) " + join(a));
    o.expect(b == std::vector<long long>{1, 27, 54, 36, 8}, "(3,3,3) " + join(b));
    o.note << "(3,4) " << join(a) << ", (3,3,3) " << join(b);
    return o;
}

Outcome ac4() {
    Outcome o;
    Graph g = fixture("fig3");
    auto cut = betti_table(g, Family::cut_st).ranks();
    auto path = betti_table(g, Family::path).ranks();
    o.expect(cut == std::vector<long long>{8, 17, 14, 4}, "cut " + join(cut));
    o.expect(path == std::vector<long long>{9, 25, 31, 18, 4}, "path " + join(path));
    long long total = 0;
    for (long long r : path) {
        total += r;
    }
    o.note << "cut " << join(cut) << ", path " << join(path) << "; sum of path Betti numbers is " << total
           << ", not the quoted 117; acyclic orientations with a q-t path: " << acyclic_with_path(g, 4);
    return o;
}

Outcome ac5() {
    Outcome o;
    Graph g = fixture("directed");
    std::set<std::string> want = {"y1y2y4y6", "y1y4y5y6", "y1y2y3y6", "y2y3y4by6"};
    auto trees = enumerate_k_spanning_trees(g, 0);
    o.expect(slot_names(g, trees) == want, "spanning arborescences differ");
    MonomialIdeal ideal = build_ideal(Family::smt_oriented, g);
    o.expect(ideal.gens.size() == 4, "generator count " + std::to_string(ideal.gens.size()));
    auto ranks = betti_table(g, Family::smt).ranks();
    o.expect(ranks.size() == 2 && ranks[1] == 3, "ranks " + join(ranks));
    o.note << "generators y1y2y4y6, y1y4y5y6, y1y2y3y6, y2y3y4by6; ranks " << join(ranks);
    return o;
}

Outcome ac6() {
    Outcome o;
    Graph g = fixture("fig3");
    Polynomial phi = path_genfun_starmesh(g, bit(4));
    std::set<std::string> got;
    for (const auto& [e, c] : phi.terms()) {
        o.expect(c == 1, "coefficient " + c.get_str());
        got.insert(Polynomial::monomial(phi.names(), e).to_string());
    }
    std::set<std::string> want = {"y1*y6", "y1*y4b*y7", "y2*y4*y6", "y1*y4b*y5b*y8", "y3*y8",
                                  "y2*y5b*y8", "y2*y7", "y3*y5*y7", "y3*y4*y5*y6"};
    o.expect(got == want, "monomials " + phi.to_string());
    o.note << phi.size() << " monomials";
    return o;
}

Outcome ac7() {
    Outcome o;
    Graph g = fixture("diamond");
    std::set<std::string> want = {"x1*x2", "x2*x3*x5", "x2*x4*x5"};
    o.expect(generator_names(build_ideal(Family::cut_st, g)) == want, "cut generators");
    CellComplex b = build_bounded_complex(g);
    auto fb = b.f_vector();
    auto fd = sink_subcomplex(g, b, 1).f_vector();
    o.expect(fd == std::vector<long long>{3, 3, 1}, "D f-vector " + join(fd));
    o.expect(!fb.empty() && fb[0] == 6, "B f-vector " + join(fb));
    o.note << "D " << join(fd) << ", B " << join(fb);
    return o;
}

Outcome ac8() {
    Outcome o;
    Graph g = fixture("k4");
    std::set<std::string> want = {"x0^3", "x1^3", "x2^3", "x0^2*x1^2", "x0^2*x2^2", "x1^2*x2^2", "x0*x1*x2"};
    MonomialIdeal ideal = build_ideal(Family::mgq, g);
    o.expect(generator_names(ideal) == want, "generators");
    auto fb = build_bounded_complex(g).f_vector();
    o.expect(!fb.empty() && fb[0] == 7, "B f-vector " + join(fb));
    auto ranks = betti_table_homology(ideal).ranks();
    o.expect(ranks == std::vector<long long>{7, 12, 6}, "oracle ranks " + join(ranks));
    o.expect(betti_table(g, Family::mgq).ranks() == ranks, "cell-model ranks");
    o.note << "B " << join(fb) << ", oracle ranks " << join(ranks);
    return o;
}

Outcome ac9() {
    Outcome o;
    long long checks = 0;
    long long mismatches = 0;
    std::vector<OracleOptions> fields(2);
    fields[1].field = {Field::mod_p, 2};
    auto graphs = connected_multigraphs(5);
    for (const Graph& base : graphs) {
        for (const Graph& g0 : all_roots(base)) {
            std::vector<Graph> variants;
            for (int t = 0; t < g0.vertex_count(); ++t) {
                if (t != g0.q()) {
                    variants.push_back(g0.with_targets({t}));
                }
            }
            if (g0.vertex_count() > 2) {
                std::vector<int> all;
                for (int v = 0; v < g0.vertex_count(); ++v) {
                    if (v != g0.q()) {
                        all.push_back(v);
                    }
                }
                variants.push_back(g0.with_targets(all));
            }
            for (Family f : all_families()) {
                std::vector<Graph> use = needs_targets(f) ? variants : std::vector<Graph>{g0};
                for (const Graph& g : use) {
                    BettiTable comb = betti_table(g, f);
                    MonomialIdeal ideal = build_ideal(f, g);
                    for (const OracleOptions& opt : fields) {
                        ++checks;
                        if (betti_table_homology(ideal, opt) != comb) {
                            ++mismatches;
                        }
                    }
                }
            }
        }
    }
    o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.note << graphs.size() << " graphs, " << checks << " table comparisons over Q and GF(2), " << mismatches
           << " mismatches";
    return o;
}

Outcome ac10() {
    Outcome o;
    std::mt19937 rng(1234);
    long long evaluations = 0;
    for (const std::string& name : fixture_names()) {
        Graph g = fixture(name);
        if (g.edge_count() > 12) {
            continue;
        }
        std::vector<Family> systems = {Family::smt, Family::cut};
        if (!g.targets().empty()) {
            systems.push_back(Family::cut_st);
            systems.push_back(Family::path);
        }
        for (Family f : systems) {
            BettiTable t;
            try {
                t = betti_table(g, f);
            } catch (const InputError&) {
                continue;
            }
            MonomialIdeal ideal = build_ideal(f, g);
            int m = t.vars.size();
            std::vector<std::vector<mpq_class>> points = {std::vector<mpq_class>(m, mpq_class(1, 2)),
                                                          std::vector<mpq_class>(m, mpq_class(1, 3))};
            for (int r = 0; r < 5; ++r) {
                std::vector<mpq_class> p;
                for (int i = 0; i < m; ++i) {
                    int den = std::uniform_int_distribution<int>(1, 12)(rng);
                    int num = std::uniform_int_distribution<int>(0, den)(rng);
                    mpq_class x(num, den);
                    x.canonicalize();
                    p.push_back(x);
                }
                points.push_back(p);
            }
            for (const auto& p : points) {
                ++evaluations;
                o.expect(reliability_exact(t, p) == reliability_bruteforce(ideal, p), name + "/" + family_name(f));
            }
        }
    }
    Graph d = fixture("diamond");
    mpq_class r = reliability_exact(betti_table(d, Family::smt), std::vector<mpq_class>(5, mpq_class(1, 2)));
    o.expect(r == mpq_class(7, 16), "diamond " + r.get_str());
    o.note << evaluations << " exact evaluations; diamond smt at 1/2 = " << r.get_str();
    return o;
}

Outcome ac11() {
    Outcome o;
    std::vector<std::pair<std::string, Graph>> graphs = {{"diamond", fixture("diamond")},
                                                         {"triangle", fixture("triangle")},
                                                         {"c5", cycle_graph(5)},
                                                         {"cactus34", cactus({3, 4})},
                                                         {"directed", fixture("directed")}};
    int complexes = 0;
    for (const auto& [name, g] : graphs) {
        std::vector<Family> families = {Family::smt_oriented};
        if (!g.targets().empty()) {
            families.push_back(Family::path_oriented);
        }
        for (Family f : families) {
            VerifyReport rep = verify_complex(build_syzygy_complex(g, f), build_ideal(f, g));
            ++complexes;
            o.expect(rep.ok() && rep.multigraded_match, name + "/" + family_name(f) + " " + rep.detail);
        }
    }
    o.note << complexes << " complexes verified (d composed with d is 0, level 0, minimality, oracle ranks)";
    return o;
}

Outcome ac12() {
    Outcome o;
    long long reduced = 0;
    long long trips = 0;
    for (const Graph& g : connected_multigraphs(6)) {
        long long hi = g.vertex_count() >= 6 ? 1 : 2;
        for (long long deg = -1; deg <= g.genus(); ++deg) {
            std::map<std::vector<mpq_class>, Divisor> rep;
            for (const Divisor& d : divisor_box(g, deg, -1, hi)) {
                Divisor r = reduce_divisor(g, d);
                ++reduced;
                if (!is_q_reduced(g, r) || reduce_divisor(g, r) != r) {
                    o.expect(false, "idempotence");
                    continue;
                }
                auto key = brute_class_key(g, d);
                if (brute_class_key(g, r) != key) {
                    o.expect(false, "reduction left the class");
                }
                auto [it, fresh] = rep.emplace(key, r);
                if (!fresh && it->second != r) {
                    o.expect(false, "two reduced divisors in one class");
                }
            }
            std::set<Divisor> seen;
            for (const auto& [key, r] : rep) {
                if (!seen.insert(r).second) {
                    o.expect(false, "one reduced divisor for two classes");
                }
            }
        }
        for (const auto& level : enumerate_spanning_levels(g)) {
            for (Mask t : level) {
                Divisor d = divisor_of_orientation(g, t);
                Mask back = orientation_for_reduced_divisor(g, d);
                ++trips;
                o.expect(is_q_reduced(g, d) && divisor_of_orientation(g, back) == d, "round trip");
            }
        }
    }
    long long orientations = 0;
    long long components = 0;
    for (const Graph& g : connected_multigraphs(5)) {
        std::map<Mask, int> comp = brute_move_components(g);
        std::map<int, Divisor> first;
        for (const auto& [p, c] : comp) {
            ++orientations;
            Divisor d = divisor_of_orientation(g, p);
            auto [it, fresh] = first.emplace(c, d);
            if (!fresh && !divisors_equivalent(g, it->second, d)) {
                o.expect(false, "moves connect inequivalent divisors");
            }
        }
        components += first.size();
        for (auto a = first.begin(); a != first.end(); ++a) {
            for (auto b = std::next(a); b != first.end(); ++b) {
                if (degree(a->second) == degree(b->second) && divisors_equivalent(g, a->second, b->second)) {
                    o.expect(false, "equivalent divisors in separate move classes");
                }
            }
        }
    }
    o.note << reduced << " reductions on graphs with at most 6 edges, " << trips << " round trips, " << orientations
           << " partial orientations in " << components << " move classes";
    return o;
}

Outcome ac13() {
    Outcome o;
    int graphs = 0;
    std::ostringstream directed;
    for (const std::string& name : fixture_names()) {
        Graph g = fixture(name);
        if (g.has_arcs()) {
            HomologicalStats s = derived_homological_stats(betti_table(g, Family::smt));
            directed << " " << name << " pd " << s.pd_ideal << " genus " << g.genus() << ";";
            continue;
        }
        ++graphs;
        HomologicalStats smt = derived_homological_stats(betti_table(g, Family::smt));
        HomologicalStats cut = derived_homological_stats(betti_table(g, Family::cut));
        o.expect(smt.pd_ideal == g.genus(), name + " pd");
        o.expect(cut.reg_quotient == g.genus(), name + " reg");
        o.expect(h_vector_check(g), name + " h-vector");
        o.expect(multiplicity_check(g), name + " multiplicity");
        for (int t : g.targets()) {
            o.expect(alexander_inversion_check(g, t), name + " Alexander inversion");
        }
    }
    o.note << graphs << " undirected graphs including diamond and fig3; not asserted on graphs with arcs:" << directed.str();
    return o;
}

Outcome ac14() {
    Outcome o;
    std::vector<std::string> commands;
    for (const std::string& name : {"diamond", "fig3", "directed", "k4"}) {
        std::string f = fixture_path(name);
        commands.push_back("ideal " + f + " --family smt_oriented");
        commands.push_back("betti " + f + " --family smt --oracle");
        commands.push_back("betti " + f + " --family path --oracle --field 2");
        commands.push_back("syzygy " + f);
        commands.push_back("cells " + f);
        commands.push_back("reduce " + f + " --divisor '[1, 0, 0, -1" + std::string(name == "directed" ? ", 0]'" : "]'"));
        commands.push_back("orient " + f + " --kind spanning");
        commands.push_back("orient " + f + " --kind path");
        commands.push_back("orient " + f + " --kind acyclic");
        commands.push_back("reliability " + f + " --system smt --p 1/3");
        commands.push_back("reliability " + f + " --system path --p 2/3");
        commands.push_back("genfun " + f);
        commands.push_back("genfun " + f + " --spanning");
        commands.push_back("tutte " + f);
        commands.push_back("check-all " + f);
    }
    int compared = 0;
    for (const std::string& c : commands) {
        RunResult one = run_command(std::string(RELCUT_BIN) + " --threads 1 " + c + " 2>/dev/null");
        RunResult eight = run_command(std::string(RELCUT_BIN) + " --threads 8 " + c + " 2>/dev/null");
        RunResult env = run_command("RELCUT_THREADS=8 " + std::string(RELCUT_BIN) + " " + c + " 2>/dev/null");
        ++compared;
        o.expect(!one.out.empty() && one.out == eight.out && one.out == env.out && one.status == eight.status,
                 "differs: " + c);
    }
    o.note << compared << " commands byte-identical at 1 and 8 threads";
    return o;
}

}

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"diamond spanning tree Betti numbers", ac1},
        {"cycle Betti numbers", ac2},
        {"cactus Betti numbers", ac3},
        {"cut and path ideals of the five-vertex example", ac4},
        {"directed spanning tree ideal", ac5},
        {"star-mesh generating function", ac6},
        {"diamond cut ideal and cell complexes", ac7},
        {"K4 vertex-labelled ideal", ac8},
        {"oracle equivalence on all graphs with at most 5 edges", ac9},
        {"reliability equivalence", ac10},
        {"syzygy complex verification", ac11},
        {"divisor suite", ac12},
        {"structural identities", ac13},
        {"CLI determinism across thread counts", ac14},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "AC" << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
                  << o.note.str() << " [" << std::fixed << std::setprecision(2) << secs << "s]" << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
