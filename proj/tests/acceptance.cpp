// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sflab/alpha.hpp"
#include "sflab/analysis.hpp"
#include "sflab/bounds.hpp"
#include "sflab/constructions.hpp"
#include "sflab/dimensions.hpp"
#include "sflab/extremal.hpp"
#include "sflab/geometry.hpp"
#include "sflab/io.hpp"
#include "sflab/packing.hpp"
#include "sflab/sunflower.hpp"

#ifndef SFLAB_CLI_PATH
#error "SFLAB_CLI_PATH must name the sflab executable"
#endif

using namespace sflab;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass)
                detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<SetFamily> corpus()
{
    Rng rng(20240601);
    std::vector<SetFamily> out;
    for (int i = 0; i < 500; ++i)
        out.push_back(oracle::random_family(rng, 10, 10, 4, i % 5 == 4));
    return out;
}

std::string describe(const SetFamily& f)
{
    std::string s = write_setfam(f);
    for (char& c : s)
        if (c == '\n')
            c = '|';
    return s;
}

// h^1_r(k) = k + r - 1
void ac1(Outcome& o)
{
    for (auto [r, k] : {std::pair<std::size_t, std::size_t>{3, 2}, {3, 3}, {4, 2}}) {
        const auto start = Clock::now();
        ExtremalOptions opt;
        opt.kind = ExtremalKind::ls_bounded;
        opt.r = r;
        opt.k = k;
        opt.d = 1;
        opt.time_limit = std::chrono::minutes(5);
        const ExtremalResult res = extremal_search(opt);
        const double t = seconds_since(start);
        o.detail << "h1_" << r << "(" << k << ")=" << res.value << (res.exact ? "" : "?") << " in " << t << "s; ";
        o.require(res.exact && res.value == k + r - 1 && t <= 300.0, "h^1 value");
        o.require(res.witness.size() == res.value - 1 && !oracle::has_sunflower(res.witness, r)
                      && oracle::ls_dimension(res.witness) <= 1,
                  "h^1 witness");
    }
}

// f_3(1) = 3
void ac2(Outcome& o)
{
    const auto start = Clock::now();
    ExtremalOptions opt;
    opt.r = 3;
    opt.k = 1;
    const ExtremalResult res = extremal_search(opt);
    const double t = seconds_since(start);
    // oracle: every 3 distinct singletons (over any ground set, WLOG [3]) hold a 3-sunflower, two do not
    const bool three_force = oracle::has_sunflower(SetFamily(3, {{0}, {1}, {2}}), 3);
    const bool two_free = !oracle::has_sunflower(SetFamily(2, {{0}, {1}}), 3);
    o.detail << "f_3(1)=" << res.value << " in " << t << "s, oracle says " << (three_force && two_free ? 3 : 0);
    o.require(res.exact && res.value == 3 && three_force && two_free && t < 1.0, "f_3(1)");
}

// construction suite for r <= 4, k <= 6
void ac3(Outcome& o)
{
    const auto start = Clock::now();
    std::size_t checked = 0;
    for (std::size_t r = 3; r <= 4; ++r) {
        std::vector<SetFamily> factors;
        for (std::size_t k = 1; k <= 6; ++k) {
            const SetFamily t = tree_family(r, k);
            o.require(t.size() == static_cast<std::size_t>(std::pow(r - 1, k - 1)), "tree size");
            o.require(vc_dimension(t).value <= 1, "tree vc");
            o.require(!find_sunflower(t, r).has_value(), "tree sunflower-free");
            const SetFamily l = ls1_family(r, k);
            o.require(l.size() == k + r - 2, "ls1 size");
            o.require(ls_dimension(l).value == 1, "ls1 ls");
            o.require(!find_sunflower(l, r).has_value(), "ls1 sunflower-free");
            checked += 2;
            if (k <= 3) {
                factors.push_back(t);
                factors.push_back(l);
            }
        }
        for (const SetFamily& a : factors)
            for (const SetFamily& b : factors) {
                const SetFamily p = product_family(a, b);
                o.require(p.size() == a.size() * b.size(), "product size");
                o.require(!find_sunflower(p, r).has_value(), "product sunflower-free");
                ++checked;
            }
    }
    const double t = seconds_since(start);
    o.detail << checked << " constructions checked in " << t << "s";
    o.require(t < 120.0, "time");
}

// find_sunflower, ls_dimension and vc_dimension against oracles
void ac4(Outcome& o, const std::vector<SetFamily>& families)
{
    std::size_t mismatches = 0;
    for (const SetFamily& f : families) {
        bool bad = false;
        for (std::size_t r : {3, 4}) {
            const auto s = find_sunflower(f, r);
            bad |= s.has_value() != oracle::has_sunflower(f, r);
            bad |= s && !oracle::pairwise_equal(f, s->members);
        }
        const std::size_t ls = ls_dimension(f).value;
        std::size_t tree_ls = 0;
        while (ls_dimension_tree(f, tree_ls + 1))
            ++tree_ls;
        bad |= ls != tree_ls;
        bad |= ls != oracle::ls_dimension(f);
        bad |= vc_dimension(f).value != oracle::vc_dimension(f);
        if (bad) {
            if (mismatches == 0)
                o.detail << "first mismatch on " << describe(f) << "; ";
            ++mismatches;
        }
    }
    o.detail << families.size() << " families, " << mismatches << " mismatches";
    o.require(families.size() >= 500 && mismatches == 0, "oracle mismatch");
}

// inequality battery
void ac5(Outcome& o, const std::vector<SetFamily>& families)
{
    std::map<std::string, std::array<std::size_t, 3>> tally; // pass, fail, skipped
    const std::vector<std::string> wanted{"vc<=ls", "ls<=log2m", "sauer-shelah", "nu<=tau", "dsw", "popular-element"};
    std::size_t popular_samples = 0;
    for (const SetFamily& f : families) {
        const FamilyAnalysis a = analyze_family(f);
        for (const std::string& name : wanted) {
            const CheckResult* c = a.checks.find(name);
            if (!c) {
                o.require(false, "missing check " + name);
                continue;
            }
            ++tally[name][static_cast<std::size_t>(c->status)];
            if (c->status == CheckStatus::fail)
                o.require(false, name + " violated on " + describe(f) + " (" + c->detail + ")");
        }
        // every (r+1)-sunflower-free sample of nonempty sets must run the popular check
        if (!f.empty() && !f.has_empty_member() && !oracle::has_sunflower(f, 4)) {
            ++popular_samples;
            o.require(a.checks.find("popular-element")->status == CheckStatus::pass, "popular check not run");
        }
    }
    for (const std::string& name : wanted)
        o.detail << name << " " << tally[name][0] << "/" << tally[name][1] << "/" << tally[name][2] << " ";
    o.detail << "(pass/fail/skipped); popular-element applicable on " << popular_samples;
}

// alpha consistency
void ac6(Outcome& o, const std::vector<SetFamily>& families)
{
    const std::size_t r = 3;
    std::size_t free_count = 0;
    for (const SetFamily& f : families) {
        const std::size_t m = f.size();
        const Rational a = alpha_exact(f, r);
        Rational expect(static_cast<unsigned long>(oracle::sunflower_tuples(f, r)), static_cast<unsigned long>(m * m * m));
        expect.canonicalize();
        o.require(a == expect, "alpha != tuples/m^r on " + describe(f));
        if (!f.has_duplicates() && f.is_antichain() && !oracle::has_sunflower(f, r)) {
            ++free_count;
            o.require(a == Rational(1, static_cast<unsigned long>(m * m)), "sunflower-free alpha");
        }
    }
    const Rational triple = alpha_exact(SetFamily(3, {{0}, {1}, {2}}), r);
    o.require(triple == Rational(1, 3), "disjoint triple");

    double worst = 0;
    for (std::size_t i = 0; i < 20; ++i) {
        const SetFamily& f = families[i * 25];
        const double exact = alpha_exact(f, r).get_d();
        const AlphaEstimate e = alpha_monte_carlo(f, r, 100000, 1000 + i, 1);
        const AlphaEstimate e4 = alpha_monte_carlo(f, r, 100000, 1000 + i, 4);
        const AlphaEstimate again = alpha_monte_carlo(f, r, 100000, 1000 + i, 1);
        o.require(e.hits == e4.hits && e.hits == again.hits, "monte carlo determinism");
        const double sigma = e.sigma(exact);
        const double dev = sigma > 0 ? std::abs(e.estimate() - exact) / sigma : (e.estimate() == exact ? 0.0 : 1e9);
        worst = std::max(worst, dev);
        o.require(dev <= 5.0, "monte carlo outside 5 sigma");
    }
    o.detail << families.size() << " exact checks, " << free_count << " sunflower-free at m^(1-r), triple=" << triple.get_str()
             << ", worst Monte-Carlo deviation " << worst << " sigma";
}

// bound evaluators
void ac7(Outcome& o)
{
    BoundParams er;
    er.r = 3;
    er.k = 2;
    const Rational erv = evaluate_bound(BoundId::ER, er).value;
    BoundParams t3 = er;
    t3.d = 1;
    const Rational t3v = evaluate_bound(BoundId::T3U, t3).value;
    BoundParams dsw;
    dsw.lambda = 1;
    dsw.nu = 1;
    const Rational dswv = evaluate_bound(BoundId::DSW, dsw).value;
    ExtremalOptions opt;
    opt.kind = ExtremalKind::ls_bounded;
    opt.r = 3;
    opt.k = 2;
    opt.d = 1;
    const std::size_t h = extremal_search(opt).value;
    o.require(erv == 8, "ER");
    o.require(t3v == 6, "T3U");
    o.require(h == 4 && Rational(static_cast<unsigned long>(h)) <= t3v, "h^1_3(2) <= T3U");
    o.require(dswv == 220, "DSW");
    const std::vector<std::uint64_t> ks{2, 4, 5, 16, 65536};
    const std::vector<std::uint32_t> expect{0, 1, 2, 2, 3};
    o.detail << "ER=" << erv.get_str() << " T3U=" << t3v.get_str() << " h=" << h << " DSW=" << dswv.get_str() << " log*=";
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const std::uint32_t v = log_star(ks[i]);
        o.detail << v << (i + 1 < ks.size() ? "," : "");
        o.require(v == expect[i], "log_star");
    }
}

std::vector<Point2> rational_points(std::size_t count, std::uint64_t seed)
{
    std::vector<Point2> pts = random_points(count, 1000, seed);
    for (Point2& p : pts) {
        p.x /= 97;
        p.y /= 89;
        p.x.canonicalize();
        p.y.canonicalize();
    }
    return pts;
}

// geometry
void ac8(Outcome& o)
{
    std::size_t max_vc = 0;
    std::size_t k_runs = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::vector<Point2> pts = rational_points(10, seed);
        const SetFamily f = trace_disks(pts, random_disks(pts, 40, seed));
        const std::size_t vc = vc_dimension(f).value;
        max_vc = std::max(max_vc, vc);
        o.require(vc <= 3, "disk trace vc > 3");
        const std::size_t k = 1 + seed % 4;
        const KCapturingDisks kd = gen_k_capturing_disks(pts, k, 30, seed);
        o.require(kd.family.size() == 30 && kd.family.is_uniform() && kd.family.max_member_size() == k, "k-uniform");
        ++k_runs;
    }
    const std::vector<Point2> pts = rational_points(15, 4242);
    const KCapturingDisks kd = gen_k_capturing_disks(pts, 3, 300, 4242);
    const auto s = find_sunflower(kd.family, 3);
    o.require(kd.family.is_uniform() && kd.family.max_member_size() == 3, "300-disk uniformity");
    o.require(s.has_value(), "300-disk scene without a 3-sunflower");
    const LambdaNumber lambda = lambda_number(trace_disks(pts, kd.disks), 8);
    o.detail << "100 scenes, max vc " << max_vc << "; " << k_runs << " k-capturing runs uniform; 300-disk scene "
             << (s ? "has" : "lacks") << " a 3-sunflower; lambda of that trace " << (lambda.cap_hit ? ">=" : "")
             << lambda.value;
}

// lower-bound construction at override scale
void ac9(Outcome& o)
{
    std::size_t free = 0, ls_ok = 0;
    const std::size_t d = 2, seeds = 10;
    std::ostringstream per;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        LowerBoundParameters p;
        p.d = d;
        p.r = 3;
        p.k = 5;
        p.n_override = 30;
        p.m_override = 20;
        p.seed = seed;
        const LowerBoundFamily a = random_lowerbound_family(p);
        const LowerBoundFamily b = random_lowerbound_family(p);
        o.require(a.family == b.family && a.report.distinct == b.report.distinct, "determinism");
        o.require(a.family.is_uniform() && a.family.max_member_size() == 5 && a.family.ground_size() == 30, "shape");
        const bool sf = !find_sunflower(a.family, 3).has_value();
        const std::size_t ls = ls_dimension(a.family).value;
        free += sf;
        ls_ok += ls <= d;
        if (seed < 3)
            per << " seed " << seed << ": m=" << a.family.size() << (sf ? " sunflower-free" : " has sunflower") << " ls=" << ls << ";";
    }
    o.detail << "deterministic over " << seeds << " seeds; sunflower-free " << free << "/" << seeds << ", ls<=" << d << " "
             << ls_ok << "/" << seeds << " (measured, not asserted);" << per.str();
}

std::string run(const std::string& command)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return "<popen failed>";
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int status = pclose(pipe);
    out += "\n<exit " + std::to_string(WEXITSTATUS(status)) + ">";
    return out;
}

// reproducibility of seeded CLI commands
void ac10(Outcome& o)
{
    const fs::path dir = fs::temp_directory_path() / ("sflab_ac10_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cli = SFLAB_CLI_PATH;
    const std::string d = dir.string();
    run(cli + " gen points --count 15 --grid 500 --seed 3 -o " + d + "/pts.scene");
    run(cli + " gen tree --r 3 --k 4 -o " + d + "/a_tree.setfam");
    run(cli + " gen ls1 --r 4 --k 3 -o " + d + "/b_ls1.setfam");
    run(cli + " gen randomlb --d 2 --r 3 --k 5 --n 30 --m 20 --seed 5 -o " + d + "/c_rand.setfam");
    const std::vector<std::string> commands{
        "gen randomlb --d 2 --r 3 --k 5 --n 30 --m 20 --seed 11",
        "gen points --count 12 --grid 100 --seed 4",
        "gen disks --points " + d + "/pts.scene --k 3 --count 50 --seed 7",
        "alpha " + d + "/c_rand.setfam --r 3 --trials 100000 --seed 1 --exact",
        "analyze " + d + " --r 3",
        "extremal ls --d 1 --r 3 --k 2",
        "bounds all --r 3 --k 2 --d 2 --lambda 1 --nu 1 --n 5 --g 7",
    };
    std::size_t identical = 0;
    for (const std::string& c : commands) {
        const std::string base = " --format json " + c + " 2>&1";
        const std::string one = run("SUNFLOWER_LAB_THREADS=1 " + cli + base);
        const std::string one_again = run("SUNFLOWER_LAB_THREADS=1 " + cli + base);
        const std::string four = run("SUNFLOWER_LAB_THREADS=4 " + cli + base);
        const bool ok = one == one_again && one == four && one.find("<exit 0>") != std::string::npos
                        && one.find("\"schema\": 1") != std::string::npos;
        identical += ok;
        o.require(ok, "non-reproducible: " + c);
    }
    std::error_code ec;
    fs::remove_all(dir, ec);
    o.detail << identical << "/" << commands.size() << " seeded json commands byte-identical across runs and 1 vs 4 workers";
}

} // namespace

int main()
{
    const std::vector<SetFamily> families = corpus();
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"AC1 exact h^1_r(k) = k+r-1", ac1},
        {"AC2 f_3(1) = 3", ac2},
        {"AC3 construction suite", ac3},
        {"AC4 oracle equivalence", [&](Outcome& o) { ac4(o, families); }},
        {"AC5 inequality battery", [&](Outcome& o) { ac5(o, families); }},
        {"AC6 alpha consistency", [&](Outcome& o) { ac6(o, families); }},
        {"AC7 bound evaluators", ac7},
        {"AC8 geometry", ac8},
        {"AC9 lower-bound construction", ac9},
        {"AC10 reproducibility", ac10},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            check(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " : " << o.detail.str() << std::endl;
        failed += !o.pass;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << std::endl;
    return failed ? 1 : 0;
}
