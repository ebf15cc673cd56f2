#include "doctest.h"

#include <map>
#include <random>

#include "dualgraph/families.hpp"
#include "test_util.hpp"

using namespace dualgraph;
using test_util::chain;
using test_util::cusp_cycle;
using test_util::permuted;
using test_util::random_perm;
using test_util::single;
using test_util::star;

TEST_SUITE("families")
{
    TEST_CASE("headline matches")
    {
        FamilyMatch se = match_family(single(1, 1, 5));
        CHECK(se.family == Family::SimpleElliptic);
        CHECK(se.figure == 3);

        FamilyMatch ch = match_family(chain({2, 2, 2}));
        CHECK(ch.family == Family::Chain);
        CHECK(ch.figure == 1);
        CHECK(ch.params.at("n") == 3);

        FamilyMatch cu = match_family(cusp_cycle(1, {3, 3, 4}));
        CHECK(cu.family == Family::Cusp);
        CHECK(cu.figure == 3);
        CHECK(cu.params.at("r") == 1);
        CHECK(cu.params.at("n") == 3);
    }

    TEST_CASE("two-vertex cusp and twisted families")
    {
        DualGraph c2 = DualGraph::from_parts({{"A", 2, 0, 6}, {"B", 2, 0, 4}}, {{0, 1, 4}});
        FamilyMatch m = match_family(c2);
        CHECK(m.family == Family::Cusp);
        CHECK(m.variant == 1);
        CHECK(m.params.at("r") == 2);
        CHECK(m.params.at("n") == 2);

        // twisted cusp, parameter 1: ends r=1, interior r=2, all double edges
        DualGraph tc = DualGraph::from_parts({{"A", 1, 0, 2}, {"B", 2, 0, 5 * 2}, {"C", 1, 0, 2}},
                                             {{0, 1, 2}, {1, 2, 2}});
        m = match_family(tc);
        CHECK(m.family == Family::TwistedCusp);
        CHECK(m.params.at("r") == 1);

        DualGraph twchain = DualGraph::from_parts({{"A", 1, 0, 3}, {"B", 2, 0, 4}, {"C", 2, 0, 6}},
                                                  {{0, 1, 2}, {1, 2, 2}});
        m = match_family(twchain);
        CHECK(m.family == Family::TwistedChain);
        CHECK(m.figure == 1);

        // twisted star (2,2,d), triple-edge diagram
        DualGraph ts = DualGraph::from_parts({{"A", 3, 0, 6}, {"B", 1, 0, 2}}, {{0, 1, 3}});
        m = match_family(ts);
        CHECK(m.family == Family::TwistedStar22d);
        CHECK(m.variant == 1);

        // same shape, weight 9: the twisted (3,3,3) diagram instead
        DualGraph ts9 = DualGraph::from_parts({{"A", 3, 0, 9}, {"B", 1, 0, 2}}, {{0, 1, 3}});
        m = match_family(ts9);
        CHECK(m.family == Family::TwistedStar333);
        CHECK(m.variant == 5);
        CHECK(m.figure == 2);
    }

    TEST_CASE("plain stars land in the right type")
    {
        CHECK(match_family(star(2, {{2}, {2, 2}, {2, 2}})).family == Family::Star233);
        CHECK(match_family(star(2, {{2}, {3}, {2, 2}})).family == Family::Star233);
        CHECK(match_family(star(2, {{2}, {2, 2}, {2, 2, 2}})).family == Family::Star234);
        CHECK(match_family(star(2, {{2}, {2, 2}, {2, 2, 2, 2}})).family == Family::Star235);
        CHECK(match_family(star(2, {{2}, {3, 2}, {2, 2}})).family == Family::Star235);
        CHECK(match_family(star(2, {{2}, {2, 3}, {3}})).family == Family::Star235);
        CHECK(match_family(star(2, {{2}, {2, 2}, {2, 2, 2, 2, 2}})).family == Family::Star236);
        CHECK(match_family(star(2, {{2}, {6}, {3}})).family == Family::Star236);
        CHECK(match_family(star(2, {{3}, {3}, {3}})).family == Family::Star333);
        CHECK(match_family(star(2, {{2}, {4}, {4}})).family == Family::Star244);
        CHECK(match_family(star(5, {{2}, {2}, {3, 4, 2}})).family == Family::Star22d);
        CHECK(match_family(star(2, {{2}, {2}, {2}})).family == Family::Star22d);

        FamilyMatch m = match_family(star(3, {{2}, {2}, {2, 2}}));
        CHECK(m.family == Family::Star22d);
        CHECK(m.params.at("tail_len") == 2);
        CHECK(m.params.at("d") == 3);

        // arm orientation matters for the two (2,3,5) chain variants
        FamilyMatch a = match_family(star(2, {{2}, {2, 2}, {2, 3}}));
        FamilyMatch b = match_family(star(2, {{2}, {2, 2}, {3, 2}}));
        CHECK(a.family == Family::Star235);
        CHECK(b.family == Family::Star235);
        CHECK(a.variant != b.variant);

        // no table contains (3,3,4)
        CHECK_FALSE(match_family(star(2, {{3}, {3}, {4}})).matched());
    }

    TEST_CASE("d tilde shapes")
    {
        DualGraph d4 = DualGraph::from_parts({{"C", 1, 0, 3},
                                              {"L1", 1, 0, 2},
                                              {"L2", 1, 0, 2},
                                              {"L3", 1, 0, 2},
                                              {"L4", 1, 0, 2}},
                                             {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
        FamilyMatch m = match_family(d4);
        CHECK(m.family == Family::DTilde);
        CHECK(m.figure == 2);
        CHECK(m.params.at("core_len") == 1);

        DualGraph d6 = DualGraph::from_parts({{"C1", 1, 0, 2},
                                              {"C2", 1, 0, 3},
                                              {"C3", 1, 0, 2},
                                              {"L1", 1, 0, 2},
                                              {"L2", 1, 0, 2},
                                              {"L3", 1, 0, 2},
                                              {"L4", 1, 0, 2}},
                                             {{0, 1, 1},
                                              {1, 2, 1},
                                              {0, 3, 1},
                                              {0, 4, 1},
                                              {2, 5, 1},
                                              {2, 6, 1}});
        m = match_family(d6);
        CHECK(m.family == Family::DTilde);
        CHECK(m.params.at("core_len") == 3);
        CHECK(m.params.at("n") == 6);
    }

    TEST_CASE("expected class by table")
    {
        FamilyMatch se = match_family(single(1, 1, 2));
        ExpectedClass e = expected_numeric_class(se);
        CHECK(e.klass == NumericClass::lc_not_klt);
        CHECK(e.delta_equals_E);

        e = expected_numeric_class(match_family(chain({2})));
        CHECK(e.klass == NumericClass::klt);

        DualGraph d4 = DualGraph::from_parts({{"C", 1, 0, 3},
                                              {"L1", 1, 0, 2},
                                              {"L2", 1, 0, 2},
                                              {"L3", 1, 0, 2},
                                              {"L4", 1, 0, 2}},
                                             {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
        e = expected_numeric_class(match_family(d4));
        CHECK(e.klass == NumericClass::lc_not_klt);
        CHECK_FALSE(e.delta_equals_E);

        CHECK_THROWS_AS(expected_numeric_class(FamilyMatch{}), std::invalid_argument);
    }

    TEST_CASE("cross check")
    {
        ConsistencyVerdict v = cross_check(cusp_cycle(1, {3, 3, 4}));
        CHECK(v.kind == Consistency::consistent);
        for (const Rational& d : v.numeric.delta) CHECK(d == Rational(1));

        // example fixture (i): twisted chain shape with zero degrees
        DualGraph ex1 = DualGraph::from_parts(
            {{"A", 2, 0, 4}, {"B", 2, 0, 4}, {"C", 1, 0, 2}, {"D", 1, 0, 2}},
            {{0, 1, 2}, {1, 2, 2}, {2, 3, 1}});
        v = cross_check(ex1);
        CHECK(v.numeric.klass == NumericClass::klt);
        CHECK(v.kind == Consistency::consistent);

        // lone r=2 vertex: numerically klt but not a drawn diagram
        v = cross_check(single(2, 0, 4));
        CHECK(v.kind == Consistency::unmatched);
        CHECK(v.numeric.klass == NumericClass::klt);

        CHECK_THROWS_AS(cross_check(cusp_cycle(1, {2, 2, 2})), not_a_dual_graph);
    }

    TEST_CASE("matching is invariant under relabelling")
    {
        std::mt19937 rng(99);
        std::vector<DualGraph> samples{
            chain({2, 3, 2}),
            cusp_cycle(2, {6, 4, 4, 4}),
            star(2, {{2}, {2, 2}, {3, 2}}),
            DualGraph::from_parts({{"A", 2, 0, 4}, {"B", 2, 0, 4}, {"C", 1, 0, 2}, {"D", 1, 0, 3}},
                                  {{0, 1, 2}, {1, 2, 2}, {2, 3, 1}}),
            DualGraph::from_parts({{"A", 1, 0, 2}, {"B", 2, 0, 4}, {"C", 1, 0, 2}},
                                  {{0, 1, 2}, {1, 2, 2}}),
        };
        for (const DualGraph& g : samples) {
            FamilyMatch base = match_family(g);
            for (int trial = 0; trial < 10; ++trial) {
                FamilyMatch m = match_family(permuted(g, random_perm(g.size(), rng)));
                CHECK(m.family == base.family);
                CHECK(m.variant == base.variant);
                CHECK(m.params == base.params);
            }
        }
    }

    TEST_CASE("long shapes stay consistent")
    {
        // spot checks at lengths the exhaustive sweeps do not reach
        std::vector<DualGraph> samples{
            chain({2, 2, 2, 2, 2, 2, 2, 2}),
            chain({2, 3, 2, 4, 2, 5, 2, 6}),
            cusp_cycle(1, {2, 2, 2, 2, 2, 2, 2, 3}),
            cusp_cycle(2, {6, 4, 4, 4, 4, 4, 4, 4}),
            star(2, {{2}, {2}, {2, 2, 2, 2, 2, 2, 2}}),
        };
        // twisted cusp of length 8
        {
            std::vector<Vertex> vs{{"E1", 1, 0, 2}};
            std::vector<Edge> es;
            for (int i = 1; i <= 6; ++i) {
                vs.push_back({"E" + std::to_string(i + 1), 2, 0, i == 3 ? 6LL : 4LL});
                es.push_back({i - 1, i, 2});
            }
            vs.push_back({"E8", 1, 0, 2});
            es.push_back({6, 7, 2});
            samples.push_back(DualGraph::from_parts(std::move(vs), es));
        }
        // D~ with a central path of length 7
        {
            std::vector<Vertex> vs;
            std::vector<Edge> es;
            for (int i = 0; i < 7; ++i) {
                vs.push_back({"C" + std::to_string(i + 1), 1, 0, i == 2 ? 4LL : 2LL});
                if (i > 0) es.push_back({i - 1, i, 1});
            }
            for (int l = 0; l < 4; ++l) {
                vs.push_back({"L" + std::to_string(l + 1), 1, 0, 2});
                es.push_back({l < 2 ? 0 : 6, static_cast<int>(vs.size() - 1), 1});
            }
            samples.push_back(DualGraph::from_parts(std::move(vs), es));
        }
        for (const DualGraph& g : samples) {
            REQUIRE(validate(g).ok);
            REQUIRE(is_negative_definite(intersection_matrix(g)));
            ConsistencyVerdict v = cross_check(g);
            CAPTURE(to_text(g));
            CHECK(v.kind == Consistency::consistent);
        }
    }

    TEST_CASE("template sweep is sound at small bounds")
    {
        SweepBounds bounds;
        bounds.max_len = 4;
        bounds.weight_cap = 6;
        bounds.max_r = 2;
        long long total = 0, checked = 0, skipped = 0;
        std::map<Family, long long> per_family;
        for_each_template_instance(bounds, [&](const DualGraph& g, Family fam, int variant) {
            ++total;
            REQUIRE(validate(g).ok);
            if (!is_negative_definite(intersection_matrix(g))) {
                ++skipped;
                return;
            }
            ++checked;
            ++per_family[fam];
            ConsistencyVerdict v = cross_check(g);
            if (v.kind != Consistency::consistent || v.match.figure != family_figure(fam)) {
                CAPTURE(family_name(fam));
                CAPTURE(variant);
                CAPTURE(to_text(g));
                CAPTURE(v.details);
                REQUIRE(v.kind == Consistency::consistent);
                REQUIRE(v.match.figure == family_figure(fam));
            }
        });
        CHECK(total > 10000);
        CHECK(checked > 5000);
        CHECK(skipped > 0); // the all-minimal boundary instances are semidefinite
        // every family produced at least one negative-definite instance
        for (Family f : {Family::Chain, Family::Star22d, Family::Star233, Family::Star234,
                         Family::Star235, Family::TwistedChain, Family::TwistedStar22d,
                         Family::TwistedStar233, Family::Star236, Family::Star333, Family::Star244,
                         Family::DTilde, Family::TwistedStar333, Family::TwistedStar244,
                         Family::TwistedDTilde, Family::SimpleElliptic, Family::Cusp,
                         Family::TwistedCusp}) {
            CAPTURE(family_name(f));
            CHECK(per_family[f] > 0);
        }
    }
}
