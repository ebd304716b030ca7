#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "relcut/errors.hpp"
#include "relcut/oracle.hpp"
#include "relcut/orientation.hpp"
#include "relcut/syzygy.hpp"
#include "zoo.hpp"

using namespace relcut;
using namespace relcut_test;

namespace {

VerifyReport verify(const Graph& g, Family f) {
    return verify_complex(build_syzygy_complex(g, f), build_ideal(f, g));
}

}

TEST_CASE("spanning tree complexes verify") {
    for (const std::string& name : {"diamond", "triangle", "c5", "cactus34", "directed", "k4", "theta", "mixed"}) {
        Graph g = fixture(name);
        VerifyReport r = verify(g, Family::smt_oriented);
        INFO(name << "\n" << r.detail);
        CHECK(r.ok());
        CHECK(r.multigraded_match);
    }
    CHECK(verify(fixture("diamond"), Family::smt_oriented).ranks == std::vector<long long>{8, 11, 4});
    CHECK(verify(fixture("directed"), Family::smt_oriented).ranks == std::vector<long long>{4, 3});
}

TEST_CASE("path complexes verify") {
    for (const std::string& name : {"diamond", "fig3", "k4", "cactus34", "mixed", "theta"}) {
        Graph g = fixture(name);
        VerifyReport r = verify(g, Family::path_oriented);
        INFO(name << "\n" << r.detail);
        CHECK(r.ok());
    }
    CHECK(verify(fixture("fig3"), Family::path_oriented).ranks == std::vector<long long>{9, 25, 31, 18, 4});
}

TEST_CASE("every sign rule yields a complex on the zoo") {
    for (const Graph& base : connected_multigraphs(4)) {
        for (const Graph& g : all_roots(base)) {
            CHECK(verify(g, Family::smt_oriented).ok());
            for (int t = 0; t < g.vertex_count(); ++t) {
                if (t != g.q()) {
                    CHECK(verify(g.with_targets({t}), Family::path_oriented).ok());
                }
            }
        }
    }
}

TEST_CASE("the head rank sign rule breaks d o d on the diamond") {
    Graph g = fixture("diamond");
    SyzygyComplex c = build_syzygy_complex(g, Family::smt_oriented, SignRule::head_rank);
    VerifyReport r = verify_complex(c, build_ideal(Family::smt_oriented, g));
    CHECK(r.generators_match);
    CHECK(r.ranks_match);
    CHECK_FALSE(r.composes_to_zero);
    SyzygyComplex fixed = build_syzygy_complex(g, Family::smt_oriented, SignRule::repair);
    CHECK(verify_complex(fixed, build_ideal(Family::smt_oriented, g)).ok());
}

TEST_CASE("a flipped sign is detected") {
    Graph g = fixture("diamond");
    SyzygyComplex c = build_syzygy_complex(g, Family::smt_oriented);
    REQUIRE(c.differential.size() > 2);
    c.differential[2][0][0].sign *= -1;
    CHECK_FALSE(verify_complex(c, build_ideal(Family::smt_oriented, g)).composes_to_zero);
}

TEST_CASE("faces of a top element") {
    Graph g = fixture("diamond");
    for (Mask top : enumerate_k_spanning_trees(g, 2)) {
        auto faces = syzygy_faces(g, Family::smt_oriented, top, 0);
        for (auto [removed, rest] : faces) {
            CHECK(popcount(removed) == 1);
            CHECK((removed | rest) == top);
            CHECK(is_k_spanning_tree(g, rest));
        }
        std::size_t expected = 0;
        for (int s : slot_list(top)) {
            if (popcount(top & g.in_slots(g.head(s))) >= 2) {
                ++expected;
            }
        }
        CHECK(faces.size() == expected);
    }
}

TEST_CASE("combinatorial tables for every family") {
    Graph g = fixture("diamond");
    CHECK(betti_table(g, Family::smt).ranks() == std::vector<long long>{8, 11, 4});
    BettiTable t = betti_table(g, Family::smt);
    CHECK(t.at(1, {1, 1, 1, 1, 0}) == 3);
    auto z = t.z_graded();
    CHECK(z.at({0, 3}) == 8);
    CHECK(z.at({1, 4}) == 11);
    CHECK(z.at({2, 5}) == 4);
    CHECK(betti_table(g, Family::cut).ranks() == std::vector<long long>{6, 9, 4});
    CHECK(betti_table(g, Family::mgq).ranks() == std::vector<long long>{6, 9, 4});
    CHECK(quotient_ranks(betti_table(cactus({3, 4}), Family::smt)) == std::vector<long long>{1, 12, 17, 6});
    HomologicalStats st = derived_homological_stats(betti_table(g, Family::cut));
    CHECK(st.pd_quotient == 3);
    CHECK(st.reg_quotient == 2);
}
