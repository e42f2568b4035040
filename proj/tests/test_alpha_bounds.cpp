#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sflab/alpha.hpp"
#include "sflab/analysis.hpp"
#include "sflab/bounds.hpp"
#include "sflab/constructions.hpp"
#include "sflab/errors.hpp"
#include "sflab/extremal.hpp"

using namespace sflab;

namespace {

BoundParams params(std::optional<std::uint64_t> r, std::optional<std::uint64_t> k, std::optional<std::uint64_t> d = {})
{
    BoundParams p;
    p.r = r;
    p.k = k;
    p.d = d;
    return p;
}

} // namespace

TEST_SUITE("alpha")
{
    TEST_CASE("exact examples")
    {
        CHECK(alpha_exact(SetFamily(3, {{0}, {1}, {2}}), 3) == Rational(1, 3));
        CHECK(alpha_exact(SetFamily(2, {{0, 1}}), 3) == 1);
        CHECK(alpha_exact(SetFamily(2, {{0}, {1}}), 2) == 1);
        const SetFamily t = tree_family(3, 4);
        CHECK(alpha_exact(t, 3) == Rational(1, 64));
        CHECK_THROWS_AS(alpha_exact(SetFamily(), 3), InvalidArgument);
        CHECK_THROWS_AS(alpha_exact(t, 1), InvalidArgument);
    }

    TEST_CASE("exact value is the tuple ratio with floor m^(1-r)")
    {
        Rng rng(43);
        for (int i = 0; i < 200; ++i) {
            const SetFamily f = oracle::random_family(rng, 8, 8, 4, i % 2 == 1);
            const std::size_t m = f.size();
            for (std::size_t r : {3, 4}) {
                const Rational a = alpha_exact(f, r);
                Rational expect(static_cast<unsigned long>(oracle::sunflower_tuples(f, r)),
                                static_cast<unsigned long>(std::pow(m, r)));
                expect.canonicalize();
                CHECK(a == expect);
                CHECK(a >= pow(Rational(static_cast<unsigned long>(m)), 1 - static_cast<std::int64_t>(r)));
                CHECK(a <= 1);
                if (!f.has_duplicates() && f.is_antichain() && !oracle::has_sunflower(f, r))
                    CHECK(a == pow(Rational(static_cast<unsigned long>(m)), 1 - static_cast<std::int64_t>(r)));
            }
        }
    }

    TEST_CASE("monte carlo is deterministic and independent of workers")
    {
        const SetFamily f(6, {{0, 1}, {0, 2}, {3}, {1, 2}, {4, 5}});
        const AlphaEstimate a = alpha_monte_carlo(f, 3, 50000, 9, 1);
        const AlphaEstimate b = alpha_monte_carlo(f, 3, 50000, 9, 4);
        const AlphaEstimate c = alpha_monte_carlo(f, 3, 50000, 9, 1);
        CHECK(a.hits == b.hits);
        CHECK(a.hits == c.hits);
        CHECK(alpha_monte_carlo(f, 3, 50000, 10, 1).hits != a.hits);
        const double exact = alpha_exact(f, 3).get_d();
        CHECK(std::abs(a.estimate() - exact) <= 5 * a.sigma(exact));
    }

    TEST_CASE("identical sets always agree")
    {
        const SetFamily same(2, {{0, 1}, {0, 1}, {0, 1}}, true);
        CHECK(alpha_monte_carlo(same, 3, 10000, 0).estimate() == 1.0);
        CHECK_THROWS_AS(alpha_monte_carlo(SetFamily(), 3, 10, 0), InvalidArgument);
        CHECK_THROWS_AS(alpha_monte_carlo(same, 3, 0, 0), InvalidArgument);
    }

    TEST_CASE("partial chunks")
    {
        const SetFamily f(3, {{0}, {1}, {2}});
        const AlphaEstimate a = alpha_monte_carlo(f, 3, chunk_trials + 17, 3, 3);
        CHECK(a.trials == chunk_trials + 17);
        CHECK(a.hits == alpha_monte_carlo(f, 3, chunk_trials + 17, 3, 1).hits);
    }
}

TEST_SUITE("bounds")
{
    TEST_CASE("log star")
    {
        CHECK(log_star(std::uint64_t{1}) == 0);
        CHECK(log_star(std::uint64_t{2}) == 0);
        CHECK(log_star(std::uint64_t{3}) == 1);
        CHECK(log_star(std::uint64_t{4}) == 1);
        CHECK(log_star(std::uint64_t{5}) == 2);
        CHECK(log_star(std::uint64_t{16}) == 2);
        CHECK(log_star(std::uint64_t{17}) == 3);
        CHECK(log_star(std::uint64_t{65536}) == 3);
        CHECK(log_star(std::uint64_t{65537}) == 4);
        CHECK(log_star(pow(BigInt(2), 65536)) == 4);
        CHECK(log_star(pow(BigInt(2), 65536) + 1) == 5);
        CHECK_THROWS_AS(log_star(BigInt(0)), InvalidArgument);
        std::uint32_t prev = 0;
        for (std::uint64_t k = 1; k < 70000; ++k) {
            const std::uint32_t v = log_star(k);
            CHECK(v >= prev);
            prev = v;
        }
        for (std::uint64_t x = 2; x <= 64; ++x)
            CHECK(log_star(pow(BigInt(2), x)) == 1 + log_star(x));
    }

    TEST_CASE("paper examples")
    {
        CHECK(evaluate_bound(BoundId::ER, params(3, 2)).value == 8);
        CHECK(evaluate_bound(BoundId::T3U, params(3, 2, 1)).value == 6);
        BoundParams dsw;
        dsw.lambda = 1;
        dsw.nu = 1;
        CHECK(evaluate_bound(BoundId::DSW, dsw).value == 220);
        BoundParams ss;
        ss.n = 5;
        ss.d = 1;
        CHECK(evaluate_bound(BoundId::SS, ss).value == 6);
        CHECK(evaluate_bound(BoundId::T1, params(3, 1)).value == 59049);
        CHECK(evaluate_bound(BoundId::T4, params(3, 1)).value == pow(BigInt(503), 900));
        BoundParams t7 = params(3, 1);
        t7.lambda = 2;
        CHECK(evaluate_bound(BoundId::T7, t7).value == pow(BigInt(5), 12));
    }

    TEST_CASE("h^1_3(2) sits below T3U")
    {
        ExtremalOptions o;
        o.kind = ExtremalKind::ls_bounded;
        o.r = 3;
        o.k = 2;
        o.d = 1;
        const ExtremalResult res = extremal_search(o);
        CHECK(Rational(static_cast<unsigned long>(res.value)) <= evaluate_bound(BoundId::T3U, params(3, 2, 1)).value);
    }

    TEST_CASE("bounds divided by e carry an enclosure")
    {
        BoundParams p = params(3, 2, 2);
        p.g = 7;
        const BoundValue l3 = evaluate_bound(BoundId::L3, p);
        CHECK(l3.divided_by_e);
        CHECK(l3.value == Rational(1, 49));
        CHECK(l3.enclosure.lo < l3.enclosure.hi);
        CHECK(l3.enclosure.hi < l3.value);
        CHECK(l3.enclosure.lo * 3 > l3.value);
        const BoundValue c1 = evaluate_bound(BoundId::C1, params(3, 2, 2));
        CHECK(c1.value == Rational(1, 17 * 17));
        const RationalInterval e = inverse_e_enclosure();
        CHECK(e.lo < Rational(36788, 100000));
        CHECK(e.hi > Rational(36787, 100000));
    }

    TEST_CASE("asymptotic lower bound is flagged")
    {
        const BoundValue t3l = evaluate_bound(BoundId::T3L, params(3, 12, 3));
        CHECK(t3l.asymptotic);
        CHECK(t3l.value == pow(BigInt(12), 3));
    }

    TEST_CASE("parameter ranges are enforced")
    {
        CHECK_THROWS_AS(evaluate_bound(BoundId::T1, params(2, 3)), InvalidArgument);
        CHECK_THROWS_AS(evaluate_bound(BoundId::T2, params(3, 1, 2)), InvalidArgument);
        CHECK_THROWS_AS(evaluate_bound(BoundId::T3L, params(3, 5, 3)), InvalidArgument);
        CHECK_THROWS_AS(evaluate_bound(BoundId::ER, params(3, {})), InvalidArgument);
        CHECK_THROWS_AS(evaluate_bound(BoundId::T2, params(9, 9, 9)), BudgetExceeded);
        CHECK(parse_bound_id("t3u") == BoundId::T3U);
        CHECK_THROWS_AS(parse_bound_id("T9"), InvalidArgument);
    }

    TEST_CASE("monotone in k")
    {
        for (BoundId id : {BoundId::ER, BoundId::T1, BoundId::T3U, BoundId::T4}) {
            for (std::uint64_t k = 1; k < 6; ++k) {
                const BoundValue a = evaluate_bound(id, params(3, k, 2));
                const BoundValue b = evaluate_bound(id, params(3, k + 1, 2));
                CHECK(a.value < b.value);
            }
        }
        const BoundValue t2a = evaluate_bound(BoundId::T2, params(2, 2, 2));
        const BoundValue t2b = evaluate_bound(BoundId::T2, params(2, 3, 2));
        CHECK(t2a.value < t2b.value);
    }
}

TEST_SUITE("inequality checks")
{
    TEST_CASE("tree family passes every applicable check")
    {
        const FamilyAnalysis a = analyze_family(tree_family(3, 3));
        CHECK_FALSE(a.checks.any_failed());
        for (const char* name : {"vc<=ls", "ls<=log2m", "sauer-shelah", "nu<=tau", "dsw", "lambda>=vc(dual)",
                                 "popular-element", "alpha-floor", "alpha-sunflower-free"}) {
            const CheckResult* c = a.checks.find(name);
            REQUIRE(c != nullptr);
            CHECK(c->status == CheckStatus::pass);
        }
    }

    TEST_CASE("inequality (1) at an extremal witness")
    {
        ExtremalOptions o;
        o.r = 3;
        o.k = 1;
        const ExtremalResult res = extremal_search(o);
        AnalysisOptions opt;
        opt.f_value = res.value;
        const FamilyAnalysis a = analyze_family(res.witness, opt);
        const CheckResult* c = a.checks.find("alpha-upper");
        REQUIRE(c != nullptr);
        CHECK(c->status == CheckStatus::pass);

        opt.f_value = res.value - 1;
        const CheckResult* bad = analyze_family(res.witness, opt).checks.find("alpha-upper");
        REQUIRE(bad != nullptr);
        CHECK(bad->status == CheckStatus::fail);
    }

    TEST_CASE("lemma 3 with a measured g")
    {
        ExtremalOptions o;
        o.kind = ExtremalKind::multifamily;
        o.r = 3;
        o.k = 1;
        const std::size_t g = extremal_search(o).value;
        AnalysisOptions opt;
        opt.g_value = g;
        Rng rng(47);
        for (int i = 0; i < 50; ++i) {
            const SetFamily f = oracle::random_family(rng, 8, 6, 1, true, 1);
            const CheckResult* c = analyze_family(f, opt).checks.find("alpha-lower");
            REQUIRE(c != nullptr);
            CHECK(c->status != CheckStatus::fail);
        }
    }

    TEST_CASE("capped lambda skips dsw")
    {
        std::vector<Set> pairs;
        for (Element a = 0; a < 5; ++a)
            for (Element b = a + 1; b < 5; ++b)
                pairs.push_back({a, b});
        AnalysisOptions opt;
        opt.lambda_cap = 2;
        const FamilyAnalysis a = analyze_family(SetFamily(5, pairs), opt);
        CHECK(a.checks.find("dsw")->status == CheckStatus::skipped);
        CHECK(a.checks.find("lambda>=vc(dual)")->status == CheckStatus::skipped);
    }

    TEST_CASE("random battery has no violations")
    {
        Rng rng(53);
        for (int i = 0; i < 200; ++i) {
            const SetFamily f = oracle::random_family(rng, 10, 10, 4, i % 4 == 0);
            const FamilyAnalysis a = analyze_family(f);
            for (const CheckResult& c : a.checks.checks) {
                CAPTURE(c.name);
                CAPTURE(c.detail);
                CHECK(c.status != CheckStatus::fail);
            }
        }
    }
}
