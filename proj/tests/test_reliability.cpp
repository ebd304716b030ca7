#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "relcut/errors.hpp"
#include "relcut/reliability.hpp"
#include "relcut/syzygy.hpp"
#include "zoo.hpp"

using namespace relcut;
using namespace relcut_test;

namespace {

MonomialIdeal textbook(const std::vector<std::vector<int>>& gens, int vars) {
    MonomialIdeal i;
    for (int v = 0; v < vars; ++v) {
        i.vars.names.push_back("x" + std::to_string(v + 1));
        i.vars.ref.push_back(v);
    }
    for (const auto& e : gens) {
        i.gens.push_back(Monomial{e});
    }
    return i;
}

std::vector<mpq_class> random_probs(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> den(2, 9);
    std::vector<mpq_class> out;
    for (int i = 0; i < n; ++i) {
        int d = den(rng);
        std::uniform_int_distribution<int> num(0, d);
        mpq_class p(num(rng), d);
        p.canonicalize();
        out.push_back(p);
    }
    return out;
}

}

TEST_CASE("trivial systems") {
    CHECK(reliability_bruteforce(textbook({{1}}, 1), {mpq_class(1, 3)}) == mpq_class(1, 3));
    CHECK(reliability_bruteforce(textbook({{1, 1}}, 2), {mpq_class(1, 2), mpq_class(1, 2)}) == mpq_class(1, 4));
    CHECK_THROWS_AS(reliability_bruteforce(textbook({{1}}, 1), {mpq_class(3, 2)}), InputError);
    CHECK_THROWS_AS(reliability_bruteforce(textbook({{1}}, 1), {}), InputError);
}

TEST_CASE("diamond spanning tree reliability") {
    Graph g = fixture("diamond");
    std::vector<mpq_class> half(5, mpq_class(1, 2));
    CHECK(reliability_exact(betti_table(g, Family::smt), half) == mpq_class(7, 16));
    CHECK(reliability_bruteforce(build_ideal(Family::smt, g), half) == mpq_class(7, 16));
}

TEST_CASE("table evaluation equals state enumeration") {
    std::mt19937 rng(20261015);
    for (const std::string& name : fixture_names()) {
        Graph g = fixture(name);
        if (g.has_arcs()) {
            continue;
        }
        std::vector<Family> systems = {Family::smt};
        if (!g.targets().empty()) {
            systems.push_back(Family::cut_st);
            systems.push_back(Family::path);
        }
        for (Family f : systems) {
            BettiTable t = betti_table(g, f);
            MonomialIdeal ideal = build_ideal(f, g);
            int m = g.edge_count();
            std::vector<std::vector<mpq_class>> points = {std::vector<mpq_class>(m, mpq_class(1, 2)),
                                                          std::vector<mpq_class>(m, mpq_class(1, 3))};
            for (int r = 0; r < 2; ++r) {
                points.push_back(random_probs(rng, m));
            }
            for (const auto& p : points) {
                INFO(name << " " << family_name(f));
                CHECK(reliability_exact(t, p) == reliability_bruteforce(ideal, p));
            }
        }
    }
}

TEST_CASE("unreliability comes from the dual system") {
    Graph g = fixture("fig3");
    std::mt19937 rng(7);
    for (int r = 0; r < 4; ++r) {
        auto p = random_probs(rng, g.edge_count());
        std::vector<mpq_class> q;
        for (const auto& x : p) {
            q.push_back(1 - x);
        }
        mpq_class works = reliability_exact(betti_table(g, Family::path), p);
        mpq_class fails = reliability_exact(betti_table(g, Family::cut_st), q);
        CHECK(works + fails == 1);
    }
}

TEST_CASE("reliability is monotone in each edge") {
    Graph g = fixture("diamond");
    BettiTable t = betti_table(g, Family::smt);
    std::vector<mpq_class> grid = {0, mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4), 1};
    for (int e = 0; e < g.edge_count(); ++e) {
        for (const auto& base : grid) {
            std::vector<mpq_class> p(g.edge_count(), base);
            mpq_class prev = -1;
            for (const auto& x : grid) {
                p[e] = x;
                mpq_class r = reliability_exact(t, p);
                CHECK(r >= prev);
                prev = r;
            }
        }
    }
}

TEST_CASE("multigraded K polynomial specializes to the graded one") {
    Graph g = fixture("k4");
    BettiTable t = betti_table(g, Family::cut);
    Polynomial k = k_polynomial(t);
    Polynomial z = k.z_graded();
    Polynomial direct({"t"});
    for (const auto& [key, rank] : t.z_graded()) {
        Exponents e = {key.second};
        direct.add_term(e, key.first % 2 == 0 ? mpq_class(static_cast<long>(rank)) : mpq_class(static_cast<long>(-rank)));
    }
    CHECK(z == direct);
}

TEST_CASE("Hilbert series prefix matches standard monomial counts") {
    for (const std::string& name : {"diamond", "triangle", "theta", "k4"}) {
        Graph g = fixture(name);
        for (Family f : {Family::smt, Family::cut}) {
            BettiTable t = betti_table(g, f);
            MonomialIdeal ideal = build_ideal(f, g);
            std::vector<Mask> gens;
            for (const Monomial& m : ideal.gens) {
                gens.push_back(monomial_mask(m));
            }
            CHECK(hilbert_series_prefix(t, 6) == brute_hilbert_counts(ideal.vars.size(), gens, 6));
        }
    }
}

TEST_CASE("Tutte polynomial") {
    Graph e = fixture("single_edge");
    CHECK(tutte_polynomial(e).to_string() == "x");
    CHECK(tutte_polynomial(fixture("triangle")).to_string() == "x^2 + x + y");
    CHECK(tutte_polynomial(fixture("diamond")).evaluate({1, 1}) == 8);
    for (const Graph& g : connected_multigraphs(5)) {
        CHECK(tutte_polynomial(g) == brute_tutte(g));
    }
    CHECK(tutte_polynomial(fixture("prism")) == brute_tutte(fixture("prism")));
    CHECK_THROWS_AS(tutte_polynomial(fixture("directed")), InputError);
}

TEST_CASE("structural identities") {
    for (const std::string& name : {"diamond", "triangle", "fig3", "k4", "c5", "cactus34", "theta", "path3", "wheel4", "prism"}) {
        Graph g = fixture(name);
        INFO(name);
        CHECK(h_vector_check(g));
        CHECK(multiplicity_check(g));
        for (int t : g.targets()) {
            CHECK(alexander_inversion_check(g, t));
        }
        CHECK(derived_homological_stats(betti_table(g, Family::smt)).pd_ideal == g.genus());
        CHECK(derived_homological_stats(betti_table(g, Family::cut)).reg_quotient == g.genus());
    }
    CHECK(h_polynomial(fixture("diamond")).to_string() == "4*t^2 + 3*t + 1");
    CHECK(h_polynomial(fixture("path3")).to_string() == "1");
}
