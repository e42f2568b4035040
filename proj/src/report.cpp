#include "sflab/report.hpp"

#include "sflab/errors.hpp"

namespace sflab {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const Rational& value)
{
    return Json{{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
}

Rational rational_from_json(const Json& j)
{
    try {
        Rational q(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
        if (q.get_den() == 0)
            throw InvalidArgument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed rational: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw InvalidArgument("malformed rational digits");
    }
}

Json to_json(const SetFamily& family)
{
    Json members = Json::array();
    for (const Set& s : family.members())
        members.push_back(s);
    return Json{{"n", family.ground_size()}, {"multi", family.multifamily()}, {"members", std::move(members)}};
}

SetFamily family_from_json(const Json& j)
{
    try {
        std::vector<Set> members;
        for (const Json& m : j.at("members"))
            members.push_back(m.get<Set>());
        return SetFamily(j.at("n").get<std::uint32_t>(), std::move(members), j.at("multi").get<bool>());
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed family: ") + e.what());
    }
}

Json to_json(const Sunflower& sunflower)
{
    return Json{{"core", sunflower.core}, {"members", sunflower.members}};
}

Json to_json(const InequalityReport& report)
{
    Json out = Json::array();
    for (const CheckResult& c : report.checks)
        out.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return out;
}

Json to_json(const FamilyAnalysis& a)
{
    Json out;
    out["r"] = a.r;
    out["members"] = a.members;
    out["distinct_members"] = a.distinct_members;
    out["active_elements"] = a.active_elements;
    out["max_member_size"] = a.max_member_size;
    out["has_empty_member"] = a.has_empty_member;
    out["antichain"] = a.antichain;
    out["vc"] = Json{{"value", a.vc.value}, {"witness", a.vc.witness}};
    out["ls"] = Json{{"value", a.ls.value}, {"internal", a.ls.witness.internal}, {"leaves", a.ls.witness.leaves}};
    out["lambda"] = Json{{"value", a.lambda.value}, {"witness", a.lambda.witness}, {"cap_hit", a.lambda.cap_hit}};
    out["dual_vc"] = optional_json(a.dual_vc);
    out["nu"] = Json{{"value", a.nu.value}, {"witness", a.nu.witness}};
    out["tau"] = a.tau ? Json{{"value", a.tau->value}, {"witness", a.tau->witness}} : Json(nullptr);
    out["sunflower"] = a.sunflower ? to_json(*a.sunflower) : Json(nullptr);
    out["sunflower_next"] = a.sunflower_next ? to_json(*a.sunflower_next) : Json(nullptr);
    out["popular"] = a.popular ? Json{{"element", a.popular->element}, {"fraction", to_json(a.popular->fraction)}}
                               : Json(nullptr);
    out["tuples"] = a.tuples ? Json(a.tuples->get_str()) : Json(nullptr);
    out["alpha"] = a.alpha ? to_json(*a.alpha) : Json(nullptr);
    out["checks"] = to_json(a.checks);
    return out;
}

Json to_json(const BoundValue& b)
{
    Json params = Json::object();
    const auto put = [&](const char* name, const std::optional<std::uint64_t>& v) {
        if (v)
            params[name] = *v;
    };
    put("r", b.params.r);
    put("k", b.params.k);
    put("d", b.params.d);
    put("lambda", b.params.lambda);
    put("nu", b.params.nu);
    put("n", b.params.n);
    put("g", b.params.g);
    Json out{{"id", to_string(b.id)}, {"formula", b.formula}, {"params", std::move(params)}, {"value", to_json(b.value)},
             {"divided_by_e", b.divided_by_e}, {"asymptotic", b.asymptotic}};
    if (b.divided_by_e)
        out["enclosure"] = Json{{"lo", to_json(b.enclosure.lo)}, {"hi", to_json(b.enclosure.hi)}};
    return out;
}

Json to_json(const ExtremalResult& r)
{
    return Json{{"kind", to_string(r.options.kind)},
                {"r", r.options.r},
                {"k", r.options.k},
                {"d", r.options.d},
                {"ground_cap", optional_json(r.options.ground_cap)},
                {"node_limit", r.options.node_limit},
                {"exact", r.exact},
                {"value", r.value},
                {"ground_used", r.ground_used},
                {"witness", to_json(r.witness)},
                {"stats", Json{{"nodes", r.stats.nodes},
                               {"candidates", r.stats.candidates},
                               {"rejected_sunflower", r.stats.rejected_sunflower},
                               {"rejected_constraint", r.stats.rejected_constraint}}}};
}

Json to_json(const AlphaEstimate& e)
{
    Json out{{"r", e.r}, {"m", e.m}, {"exact", e.exact ? to_json(*e.exact) : Json(nullptr)}};
    if (e.trials) {
        out["monte_carlo"] = Json{{"trials", e.trials}, {"hits", e.hits}, {"seed", e.seed},
                                  {"estimate", e.estimate()}, {"sigma", e.sigma(e.estimate())}};
    } else {
        out["monte_carlo"] = nullptr;
    }
    return out;
}

Json to_json(const LowerBoundReport& r)
{
    return Json{{"n_formula", r.n_formula}, {"n", r.n},         {"t", r.t},
                {"m_formula", r.m_formula.get_str()}, {"m", r.m}, {"distinct", r.distinct},
                {"used_overrides", r.used_overrides}};
}

Json to_json(const Disk& d)
{
    return Json{{"cx", to_json(d.center.x)}, {"cy", to_json(d.center.y)}, {"r2", to_json(d.radius_squared)}};
}

Json envelope(const std::string& command, Json payload)
{
    Json out{{"schema", json_schema}, {"command", command}};
    for (auto& [key, value] : payload.items())
        out[key] = value;
    return out;
}

} // namespace sflab
