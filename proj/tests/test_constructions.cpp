#include <doctest.h>

#include "oracles.hpp"
#include "sflab/constructions.hpp"
#include "sflab/dimensions.hpp"
#include "sflab/errors.hpp"
#include "sflab/extremal.hpp"
#include "sflab/sunflower.hpp"

using namespace sflab;

namespace {

std::size_t ipow(std::size_t b, std::size_t e)
{
    std::size_t out = 1;
    while (e--)
        out *= b;
    return out;
}

} // namespace

TEST_SUITE("generators")
{
    TEST_CASE("tree family")
    {
        const SetFamily t33 = tree_family(3, 3);
        CHECK(t33.size() == 4);
        CHECK(t33.is_uniform());
        CHECK(t33.max_member_size() == 3);
        CHECK(tree_family(3, 1).members() == std::vector<Set>{{0}});
        for (std::size_t r = 3; r <= 4; ++r)
            for (std::size_t k = 1; k <= 6; ++k) {
                const SetFamily t = tree_family(r, k);
                CHECK(t.size() == ipow(r - 1, k - 1));
                CHECK(vc_dimension(t).value <= 1);
                CHECK_FALSE(find_sunflower(t, r).has_value());
            }
        CHECK_THROWS_AS(tree_family(2, 3), InvalidArgument);
        CHECK_THROWS_AS(tree_family(3, 0), InvalidArgument);
    }

    TEST_CASE("ls1 family")
    {
        CHECK(ls1_family(3, 1).members() == std::vector<Set>{{0}, {1}});
        CHECK(ls1_family(3, 4).size() == 5);
        for (std::size_t r = 2; r <= 5; ++r)
            for (std::size_t k = 1; k <= 6; ++k) {
                const SetFamily f = ls1_family(r, k);
                CHECK(f.size() == k + r - 2);
                CHECK(f.is_uniform());
                CHECK(f.max_member_size() == k);
                if (f.size() >= 2) {
                    CHECK(ls_dimension(f).value == 1);
                    if (f.ground_size() <= 12)
                        CHECK(oracle::ls_dimension(f) == 1);
                }
                if (r >= 3) {
                    CHECK_FALSE(find_sunflower(f, r).has_value());
                    if (f.size() <= 10)
                        CHECK_FALSE(oracle::has_sunflower(f, r));
                }
            }
    }

    TEST_CASE("product family")
    {
        const SetFamily a = tree_family(3, 3);
        const SetFamily p = product_family(a, a);
        CHECK(p.size() == 16);
        CHECK(p.is_uniform());
        CHECK(p.max_member_size() == 6);
        CHECK_FALSE(find_sunflower(p, 3).has_value());
        CHECK(vc_dimension(p).value <= 1);

        const SetFamily single(2, {{0, 1}});
        const SetFamily padded = product_family(a, single);
        CHECK(padded.size() == a.size());
        CHECK(find_sunflower(padded, 3).has_value() == find_sunflower(a, 3).has_value());

        for (std::size_t r = 3; r <= 4; ++r)
            for (std::size_t k1 = 1; k1 <= 3; ++k1)
                for (std::size_t k2 = 1; k2 <= 2; ++k2) {
                    const SetFamily f1 = tree_family(r, k1), f2 = ls1_family(r, k2);
                    const SetFamily q = product_family(f1, f2);
                    CHECK(q.size() == f1.size() * f2.size());
                    CHECK_FALSE(find_sunflower(q, r).has_value());
                }
        CHECK_THROWS_AS(product_family(SetFamily(3, {{0}, {1, 2}}), single), InvalidArgument);
    }

    TEST_CASE("pad_to_uniform")
    {
        const SetFamily p = pad_to_uniform(SetFamily(2, {{0}, {0, 1}}), 2);
        CHECK(p.members() == std::vector<Set>{{0, 2}, {0, 1}});
        const SetFamily t = tree_family(3, 3);
        CHECK(canonicalize(pad_to_uniform(t, 3)) == canonicalize(t));
        CHECK_THROWS_AS(pad_to_uniform(t, 2), InvalidArgument);
        Rng rng(41);
        for (int i = 0; i < 100; ++i) {
            const SetFamily f = oracle::random_family(rng, 8, 8, 4);
            const SetFamily q = pad_to_uniform(f, 4);
            CHECK(q.is_uniform());
            for (std::size_t r : {3, 4})
                CHECK(oracle::has_sunflower(q, r) == oracle::has_sunflower(f, r));
        }
    }

    TEST_CASE("random lower-bound family")
    {
        LowerBoundParameters p;
        p.d = 2;
        p.r = 3;
        p.k = 5;
        p.n_override = 30;
        p.m_override = 20;
        p.seed = 5;
        const LowerBoundFamily a = random_lowerbound_family(p);
        const LowerBoundFamily b = random_lowerbound_family(p);
        CHECK(a.family == b.family);
        CHECK(a.report.n == 30);
        CHECK(a.report.m == 20);
        CHECK(a.report.used_overrides);
        CHECK(a.family.size() == a.report.distinct);
        CHECK(a.family.is_uniform());
        CHECK(a.family.max_member_size() == 5);
        p.seed = 6;
        CHECK_FALSE(random_lowerbound_family(p).family == a.family);

        LowerBoundParameters paper;
        paper.d = 6;
        paper.r = 3;
        paper.k = 24;
        CHECK_THROWS_AS(random_lowerbound_family(paper), InvalidArgument);
        paper.k = 10;
        CHECK_THROWS_AS(random_lowerbound_family(paper), InvalidArgument);
    }
}

TEST_SUITE("extremal search")
{
    TEST_CASE("f_3(1) = 3")
    {
        ExtremalOptions o;
        o.kind = ExtremalKind::family;
        o.r = 3;
        o.k = 1;
        const ExtremalResult res = extremal_search(o);
        CHECK(res.exact);
        CHECK(res.value == 3);
        CHECK(res.witness.size() == 2);
    }

    TEST_CASE("h^1_r(k) = k + r - 1 for k + r <= 7")
    {
        for (std::size_t r = 3; r <= 6; ++r)
            for (std::size_t k = 1; k + r <= 7; ++k) {
                ExtremalOptions o;
                o.kind = ExtremalKind::ls_bounded;
                o.r = r;
                o.k = k;
                o.d = 1;
                const ExtremalResult res = extremal_search(o);
                CAPTURE(r);
                CAPTURE(k);
                REQUIRE(res.exact);
                CHECK(res.value == k + r - 1);
                CHECK(res.witness.size() == res.value - 1);
                CHECK(ls_dimension(res.witness).value <= 1);
                CHECK_FALSE(find_sunflower(res.witness, r).has_value());
            }
    }

    TEST_CASE("known small values")
    {
        ExtremalOptions o;
        o.r = 3;
        o.k = 2;
        CHECK(extremal_search(o).value == 7);
        o.r = 4;
        o.k = 1;
        CHECK(extremal_search(o).value == 4);
        o.kind = ExtremalKind::multifamily;
        o.r = 3;
        o.k = 1;
        const ExtremalResult g = extremal_search(o);
        CHECK(g.value == 5);
        CHECK(g.witness.multifamily());
    }

    TEST_CASE("witnesses satisfy their constraints")
    {
        for (ExtremalKind kind : {ExtremalKind::family, ExtremalKind::multifamily, ExtremalKind::ls_bounded,
                                  ExtremalKind::vc_bounded}) {
            ExtremalOptions o;
            o.kind = kind;
            o.r = 3;
            o.k = 2;
            o.d = 1;
            const ExtremalResult res = extremal_search(o);
            REQUIRE(res.exact);
            CHECK(res.witness.size() == res.value - 1);
            CHECK(res.witness.is_uniform());
            CHECK_FALSE(oracle::has_sunflower(res.witness, 3));
            if (kind == ExtremalKind::vc_bounded)
                CHECK(vc_dimension(res.witness).value <= 1);
        }
    }

    TEST_CASE("budget exhaustion is reported")
    {
        ExtremalOptions o;
        o.r = 3;
        o.k = 3;
        o.node_limit = 1000;
        const ExtremalResult res = extremal_search(o);
        CHECK_FALSE(res.exact);
        CHECK(res.value == res.witness.size() + 1);
    }

    TEST_CASE("multifamily identity is measured")
    {
        for (std::size_t r = 3; r <= 4; ++r) {
            const MultifamilyIdentity id = multifamily_identity(r, 1);
            REQUIRE(id.exact);
            CHECK(id.g == id.r_minus_1_times_f_minus_1_plus_1);
            CHECK(id.g != id.r_minus_1_times_f_plus_1);
        }
        const MultifamilyIdentity id = multifamily_identity(3, 2);
        REQUIRE(id.exact);
        CHECK(id.f == 7);
        CHECK(id.g == 13);
        CHECK(id.g == id.r_minus_1_times_f_minus_1_plus_1);
    }
}
