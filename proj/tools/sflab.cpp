// sflab: command-line front end for the sunflower lab library.
//
// Exit codes: 0 ok, 1 other error, 2 parse error, 3 budget exhausted,
// 4 a property check failed.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sflab/alpha.hpp"
#include "sflab/analysis.hpp"
#include "sflab/bounds.hpp"
#include "sflab/constructions.hpp"
#include "sflab/errors.hpp"
#include "sflab/extremal.hpp"
#include "sflab/geometry.hpp"
#include "sflab/io.hpp"
#include "sflab/report.hpp"

namespace fs = std::filesystem;
using namespace sflab;

namespace {

enum Exit
{
    exit_ok = 0,
    exit_other = 1,
    exit_parse = 2,
    exit_budget = 3,
    exit_check = 4,
};

struct Global
{
    std::string format = "text";
    unsigned threads = 1;

    bool json() const { return format == "json"; }
    unsigned workers() const { return worker_count(threads); }
};

std::string set_text(const Set& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? ", " : "") + std::to_string(s[i]);
    return out + "}";
}

std::string index_text(const std::vector<std::size_t>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + std::to_string(v[i]);
    return out + "]";
}

std::string approx(const Rational& q)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", q.get_d());
    return buf;
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

std::optional<std::chrono::milliseconds> time_limit(std::uint64_t ms)
{
    if (ms == 0)
        return std::nullopt;
    return std::chrono::milliseconds(ms);
}

bool is_scene(const std::string& text)
{
    const std::size_t start = text.find_first_not_of(" \t\r\n");
    return start != std::string::npos && text.compare(start, 5, "scene") == 0;
}

SetFamily load_family(const fs::path& path)
{
    const std::string text = read_file(path);
    if (is_scene(text))
        return std::visit([](const auto& scene) { return trace(scene); }, read_scene(text));
    return read_setfam(text);
}

// ---------------------------------------------------------------- gen

struct GenArgs
{
    std::string kind;
    std::size_t r = 3, k = 1, d = 1;
    std::string first, second, points;
    std::optional<std::uint64_t> n, m;
    std::size_t count = 10;
    std::uint64_t grid = 1000;
    std::uint64_t seed = 0;
    std::string output, scene_out;
};

int run_gen(const Global& g, const GenArgs& a)
{
    Json report{{"kind", a.kind}};
    std::optional<SetFamily> family;
    std::optional<Scene2> scene;
    std::string text_report;

    if (a.kind == "tree") {
        family = tree_family(a.r, a.k);
        report["params"] = Json{{"r", a.r}, {"k", a.k}};
    } else if (a.kind == "ls1") {
        family = ls1_family(a.r, a.k);
        report["params"] = Json{{"r", a.r}, {"k", a.k}};
    } else if (a.kind == "product") {
        if (a.first.empty() || a.second.empty())
            throw InvalidArgument("gen product needs --first and --second");
        family = product_family(load_family(a.first), load_family(a.second));
        report["params"] = Json{{"first", a.first}, {"second", a.second}};
    } else if (a.kind == "randomlb") {
        LowerBoundParameters p{a.d, a.r, a.k, a.n, a.m, a.seed};
        LowerBoundFamily lb = random_lowerbound_family(p);
        family = std::move(lb.family);
        report["params"] = Json{{"d", a.d}, {"r", a.r}, {"k", a.k}, {"seed", a.seed}};
        report["lowerbound"] = to_json(lb.report);
        text_report = "n " + std::to_string(lb.report.n) + " (formula " + std::to_string(lb.report.n_formula)
                      + "), t " + std::to_string(lb.report.t) + ", m " + std::to_string(lb.report.m) + " (formula "
                      + lb.report.m_formula.get_str() + "), distinct " + std::to_string(lb.report.distinct)
                      + (lb.report.used_overrides ? ", overrides used" : "") + "\n";
    } else if (a.kind == "points") {
        scene = Scene2{random_points(a.count, a.grid, a.seed), {}};
        report["params"] = Json{{"count", a.count}, {"grid", a.grid}, {"seed", a.seed}};
    } else if (a.kind == "disks") {
        std::vector<Point2> pts;
        if (!a.points.empty()) {
            const Scene s = read_scene(read_file(a.points));
            if (!std::holds_alternative<Scene2>(s))
                throw InvalidArgument("gen disks needs a planar scene");
            pts = std::get<Scene2>(s).points;
        } else {
            throw InvalidArgument("gen disks needs --points");
        }
        KCapturingDisks kd = gen_k_capturing_disks(pts, a.k, a.count, a.seed);
        report["params"] = Json{{"points", a.points}, {"k", a.k}, {"count", a.count}, {"seed", a.seed}};
        report["resamples"] = kd.resamples;
        family = std::move(kd.family);
        if (!a.scene_out.empty())
            write_file(a.scene_out, write_scene(Scene2{pts, kd.disks}));
    } else {
        throw InvalidArgument("unknown generator '" + a.kind + "'");
    }

    const std::string content = family ? write_setfam(*family) : write_scene(*scene);
    if (family) {
        report["ground_size"] = family->ground_size();
        report["members"] = family->size();
        report["multi"] = family->multifamily();
        report["family"] = to_json(*family);
    } else {
        report["points"] = scene->points.size();
    }
    if (!a.output.empty()) {
        write_file(a.output, content);
        report["output"] = a.output;
    }

    if (g.json()) {
        print_json(envelope("gen", report));
    } else if (a.output.empty()) {
        std::cout << content;
    } else {
        std::cout << "wrote " << a.output << ": ";
        if (family)
            std::cout << family->size() << " members over " << family->ground_size() << " elements"
                      << (family->multifamily() ? " (multi)" : "") << '\n';
        else
            std::cout << scene->points.size() << " points\n";
        std::cout << text_report;
    }
    return exit_ok;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs
{
    std::vector<std::string> paths;
    std::size_t r = 3;
    std::size_t lambda_cap = 8;
    std::optional<std::uint64_t> f, g;
    std::uint64_t node_limit = std::uint64_t{1} << 28;
    std::uint64_t time_ms = 0;
};

std::vector<fs::path> expand(const std::vector<std::string>& inputs)
{
    std::vector<fs::path> out;
    for (const std::string& in : inputs) {
        const fs::path p(in);
        if (fs::is_directory(p)) {
            for (const auto& entry : fs::directory_iterator(p)) {
                const std::string ext = entry.path().extension().string();
                if (entry.is_regular_file() && (ext == ".setfam" || ext == ".scene"))
                    out.push_back(entry.path());
            }
        } else {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct FileOutcome
{
    std::optional<FamilyAnalysis> analysis;
    std::string error;
    int code = exit_ok;
};

FileOutcome analyze_one(const fs::path& path, const AnalysisOptions& options)
{
    FileOutcome out;
    try {
        out.analysis = analyze_family(load_family(path), options);
        if (out.analysis->checks.any_failed())
            out.code = exit_check;
    } catch (const ParseError& e) {
        out.error = e.what();
        out.code = exit_parse;
    } catch (const BudgetExceeded& e) {
        out.error = e.what();
        out.code = exit_budget;
    } catch (const std::exception& e) {
        out.error = e.what();
        out.code = exit_other;
    }
    return out;
}

void print_analysis(const fs::path& path, const FamilyAnalysis& a)
{
    std::cout << "file: " << path.string() << '\n';
    std::cout << "members: " << a.members << " (distinct " << a.distinct_members << "), active elements "
              << a.active_elements << ", max member size " << a.max_member_size << '\n';
    std::cout << "vc: " << a.vc.value << " witness " << set_text(a.vc.witness) << '\n';
    std::cout << "ls: " << a.ls.value << '\n';
    std::cout << "lambda: " << (a.lambda.cap_hit ? ">= " : "") << a.lambda.value
              << (a.lambda.cap_hit ? " (cap reached)" : "") << " witness " << index_text(a.lambda.witness) << '\n';
    if (a.dual_vc)
        std::cout << "dual vc: " << *a.dual_vc << '\n';
    std::cout << "nu: " << a.nu.value << " witness " << index_text(a.nu.witness) << '\n';
    if (a.tau)
        std::cout << "tau: " << a.tau->value << " witness " << set_text(a.tau->witness) << '\n';
    else
        std::cout << "tau: undefined (empty member)\n";
    const auto flower = [](std::size_t r, const std::optional<Sunflower>& s) {
        std::cout << r << "-sunflower: ";
        if (s)
            std::cout << "core " << set_text(s->core) << " members " << index_text(s->members) << '\n';
        else
            std::cout << "none\n";
    };
    flower(a.r, a.sunflower);
    flower(a.r + 1, a.sunflower_next);
    if (a.popular)
        std::cout << "popular element: " << a.popular->element << " in " << a.popular->fraction.get_str() << '\n';
    if (a.alpha)
        std::cout << "alpha (r=" << a.r << "): " << a.alpha->get_str() << " ~ " << approx(*a.alpha) << ", tuples "
                  << a.tuples->get_str() << '\n';
    else
        std::cout << "alpha: not computed within budget\n";
    std::cout << "checks:\n";
    for (const CheckResult& c : a.checks.checks) {
        const std::string status = to_string(c.status);
        std::cout << "  " << status << std::string(9 - status.size(), ' ') << c.name
                  << std::string(c.name.size() < 22 ? 22 - c.name.size() : 1, ' ') << c.detail << '\n';
    }
}

int run_analyze(const Global& g, const AnalyzeArgs& a)
{
    AnalysisOptions options;
    options.r = a.r;
    options.lambda_cap = a.lambda_cap;
    options.node_limit = a.node_limit;
    options.time_limit = time_limit(a.time_ms);
    options.f_value = a.f;
    options.g_value = a.g;

    const std::vector<fs::path> files = expand(a.paths);
    if (files.empty())
        throw InvalidArgument("no input files");
    std::vector<FileOutcome> outcomes(files.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++)
            outcomes[i] = analyze_one(files[i], options);
    };
    const unsigned workers = std::min<std::size_t>(g.workers(), files.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (std::thread& t : pool)
            t.join();
    }

    int code = exit_ok;
    Json results = Json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        const FileOutcome& o = outcomes[i];
        code = std::max(code, o.code);
        if (g.json()) {
            Json entry{{"file", files[i].string()}};
            if (o.analysis)
                entry["analysis"] = to_json(*o.analysis);
            else
                entry["error"] = o.error;
            results.push_back(std::move(entry));
        } else {
            if (i)
                std::cout << '\n';
            if (o.analysis)
                print_analysis(files[i], *o.analysis);
            else
                std::cout << "file: " << files[i].string() << "\nerror: " << o.error << '\n';
        }
    }
    if (g.json())
        print_json(envelope("analyze", Json{{"r", a.r}, {"results", std::move(results)}}));
    // ordering of severities: parse and budget errors outrank check failures
    if (code == exit_check) {
        for (const FileOutcome& o : outcomes)
            if (o.code == exit_parse || o.code == exit_budget || o.code == exit_other)
                return o.code;
    }
    return code;
}

// ---------------------------------------------------------------- alpha

struct AlphaArgs
{
    std::string path;
    std::size_t r = 3;
    bool exact = false;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t node_limit = std::uint64_t{1} << 32;
};

int run_alpha(const Global& g, const AlphaArgs& a)
{
    const SetFamily family = load_family(a.path);
    AlphaEstimate est;
    if (a.trials)
        est = alpha_monte_carlo(family, a.r, a.trials, a.seed, g.workers());
    est.r = a.r;
    est.m = family.size();
    if (a.exact || !a.trials)
        est.exact = alpha_exact(family, a.r, Budget(a.node_limit));

    if (g.json()) {
        print_json(envelope("alpha", Json{{"file", a.path}, {"alpha", to_json(est)}}));
        return exit_ok;
    }
    std::cout << "m: " << est.m << ", r: " << est.r << '\n';
    if (est.exact)
        std::cout << "exact: " << est.exact->get_str() << " ~ " << approx(*est.exact) << '\n';
    if (est.trials) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "monte carlo: %.6f (%llu/%llu hits, seed %llu, sigma %.6f)", est.estimate(),
                      static_cast<unsigned long long>(est.hits), static_cast<unsigned long long>(est.trials),
                      static_cast<unsigned long long>(est.seed), est.sigma(est.estimate()));
        std::cout << buf << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs
{
    std::string id;
    BoundParams params;
    bool full = false;
};

std::string value_text(const Rational& v, bool full)
{
    std::string s = v.get_str();
    if (full || s.size() <= 200)
        return s;
    return s.substr(0, 40) + "... (" + std::to_string(s.size()) + " characters; --full prints all)";
}

int run_bounds(const Global& g, const BoundsArgs& a)
{
    std::vector<BoundValue> values;
    if (a.id == "all") {
        for (BoundId id : all_bound_ids()) {
            try {
                values.push_back(evaluate_bound(id, a.params));
            } catch (const InvalidArgument&) {
            }
        }
    } else {
        values.push_back(evaluate_bound(parse_bound_id(a.id), a.params));
    }
    if (g.json()) {
        Json list = Json::array();
        for (const BoundValue& b : values)
            list.push_back(to_json(b));
        print_json(envelope("bounds", Json{{"bounds", std::move(list)}}));
        return exit_ok;
    }
    for (const BoundValue& b : values) {
        std::cout << to_string(b.id) << "  " << b.formula << " = ";
        if (b.divided_by_e)
            std::cout << value_text(b.value, a.full) << " / e  in [" << value_text(b.enclosure.lo, a.full) << ", "
                      << value_text(b.enclosure.hi, a.full) << "]";
        else
            std::cout << value_text(b.value, a.full);
        std::cout << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------- extremal

struct ExtremalArgs
{
    std::string kind;
    std::size_t r = 3, k = 1, d = 1;
    std::optional<std::uint32_t> ground_cap;
    std::uint64_t node_limit = std::uint64_t{1} << 32;
    std::uint64_t time_ms = 0;
};

int run_extremal(const Global& g, const ExtremalArgs& a)
{
    if (a.kind == "identity") {
        const MultifamilyIdentity id = multifamily_identity(a.r, a.k, a.node_limit);
        if (g.json()) {
            print_json(envelope("extremal", Json{{"kind", "identity"},
                                                 {"r", id.r},
                                                 {"k", id.k},
                                                 {"exact", id.exact},
                                                 {"f", id.f},
                                                 {"g", id.g},
                                                 {"(r-1)f+1", id.r_minus_1_times_f_plus_1},
                                                 {"(k-1)f+1", id.k_minus_1_times_f_plus_1},
                                                 {"(r-1)(f-1)+1", id.r_minus_1_times_f_minus_1_plus_1}}));
        } else {
            std::cout << "f = " << id.f << ", g = " << id.g << (id.exact ? "" : " (inexact)") << '\n'
                      << "(r-1)f+1     = " << id.r_minus_1_times_f_plus_1 << '\n'
                      << "(k-1)f+1     = " << id.k_minus_1_times_f_plus_1 << '\n'
                      << "(r-1)(f-1)+1 = " << id.r_minus_1_times_f_minus_1_plus_1 << '\n';
        }
        return id.exact ? exit_ok : exit_budget;
    }
    ExtremalOptions o;
    o.kind = parse_extremal_kind(a.kind);
    o.r = a.r;
    o.k = a.k;
    o.d = a.d;
    o.ground_cap = a.ground_cap;
    o.node_limit = a.node_limit;
    o.time_limit = time_limit(a.time_ms);
    const ExtremalResult res = extremal_search(o);
    if (g.json()) {
        print_json(envelope("extremal", to_json(res)));
    } else {
        std::cout << to_string(o.kind) << " r=" << o.r << " k=" << o.k;
        if (o.kind == ExtremalKind::ls_bounded || o.kind == ExtremalKind::vc_bounded)
            std::cout << " d=" << o.d;
        std::cout << ": " << (res.exact ? "" : ">= ") << res.value << (res.exact ? "" : " (budget exhausted)")
                  << '\n';
        std::cout << "witness (" << res.witness.size() << " members):";
        for (const Set& s : res.witness.members())
            std::cout << ' ' << set_text(s);
        std::cout << "\nnodes " << res.stats.nodes << ", candidates " << res.stats.candidates << '\n';
    }
    return res.exact ? exit_ok : exit_budget;
}

// ---------------------------------------------------------------- trace

int run_trace(const Global& g, const std::string& path, const std::string& output)
{
    const SetFamily family = std::visit([](const auto& s) { return trace(s); }, read_scene(read_file(path)));
    const std::string content = write_setfam(family);
    if (!output.empty())
        write_file(output, content);
    if (g.json())
        print_json(envelope("trace", Json{{"file", path}, {"family", to_json(family)}}));
    else if (output.empty())
        std::cout << content;
    else
        std::cout << "wrote " << output << ": " << family.size() << " members over " << family.ground_size()
                  << " points\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"sflab: sunflowers, dimensions and extremal set systems"};
    app.require_subcommand(1);
    app.fallthrough();
    Global global;
    global.threads = std::max(1U, std::thread::hardware_concurrency());
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", global.threads, "worker threads (SUNFLOWER_LAB_THREADS overrides)")
        ->check(CLI::Range(1U, 256U));

    std::function<int()> action;

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a family or scene");
    gen_cmd->add_option("kind", gen.kind, "tree | ls1 | product | randomlb | points | disks")
        ->required()
        ->check(CLI::IsMember({"tree", "ls1", "product", "randomlb", "points", "disks"}));
    gen_cmd->add_option("--r", gen.r, "sunflower size")->capture_default_str();
    gen_cmd->add_option("--k", gen.k, "member size (disks: points per disk)")->capture_default_str();
    gen_cmd->add_option("--d", gen.d, "dimension bound (randomlb)")->capture_default_str();
    gen_cmd->add_option("--first", gen.first, "first factor (product)");
    gen_cmd->add_option("--second", gen.second, "second factor (product)");
    gen_cmd->add_option("--n", gen.n, "ground size override (randomlb)");
    gen_cmd->add_option("--m", gen.m, "draw count override (randomlb)");
    gen_cmd->add_option("--points", gen.points, "planar scene with the points (disks)");
    gen_cmd->add_option("--count", gen.count, "number of points or disks")->capture_default_str();
    gen_cmd->add_option("--grid", gen.grid, "integer grid size (points)")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "random seed")->capture_default_str();
    gen_cmd->add_option("-o,--output", gen.output, "output file (default: stdout)");
    gen_cmd->add_option("--scene-out", gen.scene_out, "also write the disk scene (disks)");
    gen_cmd->callback([&] { action = [&] { return run_gen(global, gen); }; });

    AnalyzeArgs an;
    auto* an_cmd = app.add_subcommand("analyze", "dimensions, sunflowers and inequality checks");
    an_cmd->add_option("paths", an.paths, ".setfam/.scene files or directories")->required();
    an_cmd->add_option("--r", an.r, "sunflower size")->capture_default_str();
    an_cmd->add_option("--lambda-cap", an.lambda_cap, "largest lambda searched")->capture_default_str();
    an_cmd->add_option("--f", an.f, "known f value for the alpha upper bound check");
    an_cmd->add_option("--g", an.g, "known g value for the alpha lower bound check");
    an_cmd->add_option("--node-limit", an.node_limit, "node budget per computation")->capture_default_str();
    an_cmd->add_option("--time-limit", an.time_ms, "time budget per computation in ms (0: none)");
    an_cmd->callback([&] { action = [&] { return run_analyze(global, an); }; });

    AlphaArgs al;
    auto* al_cmd = app.add_subcommand("alpha", "probability that r draws form a sunflower");
    al_cmd->add_option("path", al.path, "family file")->required();
    al_cmd->add_option("--r", al.r, "number of draws")->capture_default_str();
    al_cmd->add_flag("--exact", al.exact, "exact value (default when --trials is absent)");
    al_cmd->add_option("--trials", al.trials, "Monte-Carlo trials");
    al_cmd->add_option("--seed", al.seed, "random seed")->capture_default_str();
    al_cmd->add_option("--node-limit", al.node_limit, "node budget for the exact count")->capture_default_str();
    al_cmd->callback([&] { action = [&] { return run_alpha(global, al); }; });

    BoundsArgs bd;
    auto* bd_cmd = app.add_subcommand("bounds", "evaluate a closed-form bound exactly");
    bd_cmd->add_option("id", bd.id, "ER T1 T2 T3U T3L T7 DSW SS L3 C1 T4 T6, or all")->required();
    bd_cmd->add_option("--r", bd.params.r);
    bd_cmd->add_option("--k", bd.params.k);
    bd_cmd->add_option("--d", bd.params.d);
    bd_cmd->add_option("--lambda", bd.params.lambda);
    bd_cmd->add_option("--nu", bd.params.nu);
    bd_cmd->add_option("--n", bd.params.n);
    bd_cmd->add_option("--g", bd.params.g);
    bd_cmd->add_flag("--full", bd.full, "print every digit of large values");
    bd_cmd->callback([&] { action = [&] { return run_bounds(global, bd); }; });

    ExtremalArgs ex;
    auto* ex_cmd = app.add_subcommand("extremal", "exhaustive search for an extremal value");
    ex_cmd->add_option("kind", ex.kind, "family | multifamily | ls | vc | identity")
        ->required()
        ->check(CLI::IsMember({"family", "multifamily", "ls", "vc", "identity"}));
    ex_cmd->add_option("--r", ex.r, "sunflower size")->capture_default_str();
    ex_cmd->add_option("--k", ex.k, "member size")->capture_default_str();
    ex_cmd->add_option("--d", ex.d, "dimension bound")->capture_default_str();
    ex_cmd->add_option("--ground-cap", ex.ground_cap, "largest ground set considered");
    ex_cmd->add_option("--node-limit", ex.node_limit, "node budget")->capture_default_str();
    ex_cmd->add_option("--time-limit", ex.time_ms, "time budget in ms (0: none)");
    ex_cmd->callback([&] { action = [&] { return run_extremal(global, ex); }; });

    std::string trace_path, trace_out;
    auto* tr_cmd = app.add_subcommand("trace", "trace a scene into a family");
    tr_cmd->add_option("scene", trace_path, "scene file")->required();
    tr_cmd->add_option("-o,--output", trace_out, "output .setfam file");
    tr_cmd->callback([&] { action = [&] { return run_trace(global, trace_path, trace_out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_other;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_other;
    }
}
