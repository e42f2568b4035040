#include "sflab/analysis.hpp"

#include <sstream>

#include "sflab/alpha.hpp"
#include "sflab/bounds.hpp"
#include "sflab/errors.hpp"

namespace sflab {

std::string to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool InequalityReport::any_failed() const
{
    for (const CheckResult& c : checks)
        if (c.status == CheckStatus::fail)
            return true;
    return false;
}

const CheckResult* InequalityReport::find(const std::string& name) const
{
    for (const CheckResult& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

FamilyAnalysis analyze_family(const SetFamily& family, const AnalysisOptions& options)
{
    if (options.r < 3)
        throw InvalidArgument("analysis requires r >= 3");
    FamilyAnalysis a;
    a.r = options.r;
    a.members = family.size();
    const SetFamily distinct = family.distinct();
    a.distinct_members = distinct.size();
    a.active_elements = family.active_elements().count();
    a.max_member_size = family.max_member_size();
    a.has_empty_member = family.has_empty_member();
    a.antichain = family.is_antichain();

    const auto budget = [&] { return Budget(options.node_limit, options.time_limit); };
    a.vc = vc_dimension(family, budget());
    a.ls = ls_dimension(family, {}, budget());
    if (!family.empty())
        a.lambda = lambda_number(family, options.lambda_cap, budget());
    a.dual_vc = vc_dimension(dual_family(distinct), budget()).value;
    a.nu = packing_number(family, budget());
    if (!a.has_empty_member)
        a.tau = transversal_number(family, budget());
    a.sunflower = find_sunflower(family, options.r, false, budget());
    a.sunflower_next = find_sunflower(family, options.r + 1, false, budget());
    if (!family.empty() && !a.has_empty_member)
        a.popular = popular_element(family);
    if (!family.empty()) {
        try {
            a.tuples = count_sunflower_tuples(family, options.r, budget());
            Rational alpha(*a.tuples, pow(BigInt(static_cast<unsigned long>(family.size())), options.r));
            alpha.canonicalize();
            a.alpha = alpha;
        } catch (const BudgetExceeded&) {
            a.tuples.reset();
        }
    }
    a.checks = check_inequalities(a, options);
    return a;
}

namespace {

std::string str(std::size_t v)
{
    return std::to_string(v);
}

CheckResult verdict(std::string name, bool ok, std::string detail)
{
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

CheckResult skipped(std::string name, std::string why)
{
    return {std::move(name), CheckStatus::skipped, std::move(why)};
}

} // namespace

InequalityReport check_inequalities(const FamilyAnalysis& a, const AnalysisOptions& options)
{
    InequalityReport rep;
    auto& out = rep.checks;
    const std::size_t r = a.r;

    out.push_back(verdict("vc<=ls", a.vc.value <= a.ls.value, "vc=" + str(a.vc.value) + " ls=" + str(a.ls.value)));

    if (a.distinct_members >= 1) {
        const std::size_t ceiling = floor_log2(a.distinct_members);
        out.push_back(verdict("ls<=log2m", a.ls.value <= ceiling,
                              "ls=" + str(a.ls.value) + " floor(log2 " + str(a.distinct_members) + ")=" + str(ceiling)));
    } else {
        out.push_back(skipped("ls<=log2m", "empty family"));
    }

    {
        const BigInt cap = sauer_shelah_capacity(a.active_elements, a.vc.value);
        out.push_back(verdict("sauer-shelah", BigInt(static_cast<unsigned long>(a.distinct_members)) <= cap,
                              "m=" + str(a.distinct_members) + " capacity(n=" + str(a.active_elements)
                                  + ", d=" + str(a.vc.value) + ")=" + cap.get_str()));
    }

    if (a.tau) {
        out.push_back(verdict("nu<=tau", a.nu.value <= a.tau->value,
                              "nu=" + str(a.nu.value) + " tau=" + str(a.tau->value)));
    } else {
        out.push_back(skipped("nu<=tau", "a member is empty, tau undefined"));
    }

    if (!a.tau) {
        out.push_back(skipped("dsw", "tau undefined"));
    } else if (!a.lambda.exact()) {
        out.push_back(skipped("dsw", "lambda reached its cap (" + str(a.lambda.value) + "), value not exact"));
    } else {
        BoundParams p;
        p.lambda = a.lambda.value;
        p.nu = a.nu.value;
        const BoundValue b = evaluate_bound(BoundId::DSW, p);
        out.push_back(verdict("dsw", Rational(static_cast<unsigned long>(a.tau->value)) <= b.value,
                              "tau=" + str(a.tau->value) + " bound(lambda=" + str(a.lambda.value) + ", nu="
                                  + str(a.nu.value) + ")=" + b.value.get_str()));
    }

    if (!a.lambda.exact()) {
        out.push_back(skipped("lambda>=vc(dual)", "lambda not exact"));
    } else if (a.dual_vc) {
        out.push_back(verdict("lambda>=vc(dual)", a.lambda.value >= *a.dual_vc,
                              "lambda=" + str(a.lambda.value) + " vc(dual)=" + str(*a.dual_vc)));
    }

    if (!a.popular) {
        out.push_back(skipped("popular-element", "needs a nonempty family of nonempty sets"));
    } else if (a.sunflower_next) {
        out.push_back(skipped("popular-element", "family contains an (r+1)-sunflower"));
    } else {
        // no (r+1)-sunflower among sets of size <= k: some element lies in >= 1/(kr) of them
        Rational need(1, static_cast<unsigned long>(a.max_member_size * r));
        need.canonicalize();
        out.push_back(verdict("popular-element", a.popular->fraction >= need,
                              "element " + std::to_string(a.popular->element) + " in fraction "
                                  + a.popular->fraction.get_str() + ", 1/(kr)=" + need.get_str()));
    }

    if (!a.alpha) {
        out.push_back(skipped("alpha-floor", "alpha not computed within budget"));
    } else {
        const Rational floor_value = pow(Rational(static_cast<unsigned long>(a.members)), 1 - static_cast<std::int64_t>(r));
        out.push_back(verdict("alpha-floor", *a.alpha >= floor_value,
                              "alpha=" + a.alpha->get_str() + " m^(1-r)=" + floor_value.get_str()));
    }

    const bool witness_like = a.members == a.distinct_members && a.antichain && !a.sunflower && a.members > 0;
    if (!a.alpha) {
        out.push_back(skipped("alpha-sunflower-free", "alpha not computed"));
    } else if (!witness_like) {
        out.push_back(skipped("alpha-sunflower-free", "family has repeats, nested members or an r-sunflower"));
    } else {
        const Rational expect = pow(Rational(static_cast<unsigned long>(a.members)), 1 - static_cast<std::int64_t>(r));
        out.push_back(verdict("alpha-sunflower-free", *a.alpha == expect,
                              "alpha=" + a.alpha->get_str() + " expected m^(1-r)=" + expect.get_str()));
    }

    if (options.f_value) {
        const std::uint64_t f = *options.f_value;
        if (!a.alpha || !witness_like) {
            out.push_back(skipped("alpha-upper", "family is not a sunflower-free antichain of distinct sets"));
        } else if (f == 0 || a.members > f - 1) {
            out.push_back(verdict("alpha-upper", false,
                                  "sunflower-free family of size " + str(a.members) + " contradicts f=" + std::to_string(f)));
        } else if (a.members < f - 1) {
            out.push_back(skipped("alpha-upper", "family smaller than f-1, not an extremal witness"));
        } else {
            const Rational bound = pow(Rational(static_cast<unsigned long>(f - 1)), 1 - static_cast<std::int64_t>(r));
            out.push_back(verdict("alpha-upper", *a.alpha <= bound,
                                  "alpha=" + a.alpha->get_str() + " (f-1)^(1-r)=" + bound.get_str()));
        }
    }

    if (options.g_value) {
        const std::uint64_t g = *options.g_value;
        if (!a.alpha) {
            out.push_back(skipped("alpha-lower", "alpha not computed"));
        } else if (g == 0) {
            out.push_back(skipped("alpha-lower", "g must be positive"));
        } else {
            const Rational base = pow(Rational(static_cast<unsigned long>(g)), 1 - static_cast<std::int64_t>(r));
            const RationalInterval inv_e = inverse_e_enclosure();
            const std::string detail = "alpha=" + a.alpha->get_str() + " g^(1-r)/e in [" + Rational(base * inv_e.lo).get_str()
                                       + ", " + Rational(base * inv_e.hi).get_str() + "]";
            if (*a.alpha >= base * inv_e.hi)
                out.push_back({"alpha-lower", CheckStatus::pass, detail});
            else if (*a.alpha < base * inv_e.lo)
                out.push_back({"alpha-lower", CheckStatus::fail, detail});
            else
                out.push_back(skipped("alpha-lower", "inside the 1/e enclosure: " + detail));
        }
    }
    return rep;
}

} // namespace sflab
