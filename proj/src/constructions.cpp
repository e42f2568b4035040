#include "sflab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "sflab/errors.hpp"
#include "sflab/rng.hpp"

namespace sflab {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > max_generated_members / base)
            throw InvalidArgument("construction exceeds " + std::to_string(max_generated_members) + " members");
        out *= base;
    }
    return out;
}

} // namespace

SetFamily tree_family(std::size_t r, std::size_t k)
{
    if (r < 3)
        throw InvalidArgument("tree_family requires r >= 3");
    if (k < 1)
        throw InvalidArgument("tree_family requires k >= 1");
    const std::uint64_t arity = r - 1;
    const std::uint64_t leaves = checked_power(arity, k - 1);

    std::vector<std::uint64_t> level_offset(k, 0);
    std::uint64_t total = 0;
    for (std::size_t level = 0; level < k; ++level) {
        level_offset[level] = total;
        total += checked_power(arity, level);
    }
    if (total > std::numeric_limits<std::uint32_t>::max())
        throw InvalidArgument("tree_family ground set exceeds 32 bits");

    std::vector<Set> members;
    members.reserve(leaves);
    for (std::uint64_t leaf = 0; leaf < leaves; ++leaf) {
        Set path(k);
        std::uint64_t index = leaf;
        for (std::size_t level = k; level-- > 0;) {
            path[level] = static_cast<Element>(level_offset[level] + index);
            index /= arity;
        }
        members.push_back(std::move(path));
    }
    return SetFamily(static_cast<std::uint32_t>(total), std::move(members), false);
}

SetFamily product_family(const SetFamily& first, const SetFamily& second)
{
    if (first.multifamily() || second.multifamily() || first.has_duplicates() || second.has_duplicates())
        throw InvalidArgument("product_family requires families of distinct sets");
    if (!first.is_uniform() || !second.is_uniform())
        throw InvalidArgument("product_family requires uniform families");
    const std::uint64_t count = static_cast<std::uint64_t>(first.size()) * second.size();
    if (count > max_generated_members)
        throw InvalidArgument("product_family exceeds " + std::to_string(max_generated_members) + " members");
    const std::uint64_t ground =
        first.ground_size() + static_cast<std::uint64_t>(first.size()) * second.ground_size();
    if (ground > std::numeric_limits<std::uint32_t>::max())
        throw InvalidArgument("product_family ground set exceeds 32 bits");

    std::vector<Set> members;
    members.reserve(count);
    for (std::size_t a = 0; a < first.size(); ++a) {
        const auto shift = static_cast<Element>(first.ground_size() + a * second.ground_size());
        for (const Set& t : second.members()) {
            Set s = first.member(a);
            for (Element e : t)
                s.push_back(e + shift);
            members.push_back(std::move(s));
        }
    }
    return SetFamily(static_cast<std::uint32_t>(ground), std::move(members), false);
}

SetFamily ls1_family(std::size_t r, std::size_t k)
{
    if (r < 2)
        throw InvalidArgument("ls1_family requires r >= 2");
    if (k < 1)
        throw InvalidArgument("ls1_family requires k >= 1");
    // cores 0..k-2 sit in every member except the one that drops them
    const Element cores = static_cast<Element>(k - 1);
    Element next = cores;
    std::vector<Set> members;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        Set s(cores);
        std::iota(s.begin(), s.end(), Element{0});
        s.push_back(next++);
        members.push_back(std::move(s));
    }
    for (Element dropped = 0; dropped < cores; ++dropped) {
        Set s;
        for (Element c = 0; c < cores; ++c)
            if (c != dropped)
                s.push_back(c);
        s.push_back(next++);
        s.push_back(next++);
        members.push_back(std::move(s));
    }
    return SetFamily(next, std::move(members), false);
}

SetFamily pad_to_uniform(const SetFamily& family, std::size_t k)
{
    std::uint64_t needed = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family.member(i).size() > k)
            throw InvalidArgument("member " + std::to_string(i) + " has more than " + std::to_string(k)
                                  + " elements");
        needed += k - family.member(i).size();
    }
    if (family.ground_size() + needed > std::numeric_limits<std::uint32_t>::max())
        throw InvalidArgument("pad_to_uniform ground set exceeds 32 bits");
    Element next = family.ground_size();
    std::vector<Set> members;
    members.reserve(family.size());
    for (const Set& s : family.members()) {
        Set t = s;
        while (t.size() < k)
            t.push_back(next++);
        members.push_back(std::move(t));
    }
    return SetFamily(next, std::move(members), family.multifamily());
}

namespace {

// Floyd's sampler: uniform k-subset of [0, n).
Set random_k_subset(Rng& rng, std::uint64_t n, std::size_t k)
{
    std::set<Element> chosen;
    for (std::uint64_t j = n - k; j < n; ++j) {
        const auto t = static_cast<Element>(rng.below(j + 1));
        if (!chosen.insert(t).second)
            chosen.insert(static_cast<Element>(j));
    }
    return Set(chosen.begin(), chosen.end());
}

} // namespace

LowerBoundFamily random_lowerbound_family(const LowerBoundParameters& p)
{
    LowerBoundReport rep;
    rep.used_overrides = p.n_override.has_value() || p.m_override.has_value();
    if (p.d < 1 || p.r < 2 || p.k < 1)
        throw InvalidArgument("random_lowerbound_family requires d >= 1, r >= 2, k >= 1");
    if (!rep.used_overrides && (p.d < 6 || p.r < 3 || p.k < 4 * p.d))
        throw InvalidArgument("construction parameters require d >= 6, r >= 3, k >= 4d (or explicit n/m overrides)");

    rep.t = ceil_log2(p.d);
    const double log_k = std::log2(static_cast<double>(p.k));
    rep.n_formula = log_k > 0 ? static_cast<double>(p.k) * p.k * p.r / (500.0 * p.d * log_k)
                              : std::numeric_limits<double>::infinity();
    rep.n = p.n_override ? *p.n_override
                         : (std::isfinite(rep.n_formula) ? static_cast<std::uint64_t>(std::floor(rep.n_formula)) : 0);

    if (rep.n > 0 && p.d >= rep.t) {
        const std::uint64_t e = p.d - rep.t;
        const BigInt num = pow(BigInt(static_cast<unsigned long>(rep.n)), e);
        const BigInt den = BigInt(static_cast<unsigned long>(rep.n)) * pow(BigInt(static_cast<unsigned long>(p.k)), e);
        rep.m_formula = num / den;
    }
    if (p.m_override) {
        rep.m = *p.m_override;
    } else {
        if (!rep.m_formula.fits_ulong_p() || rep.m_formula > max_generated_members)
            throw InvalidArgument("formula m = " + rep.m_formula.get_str() + " is too large to sample");
        rep.m = rep.m_formula.get_ui();
    }

    if (rep.n < p.k || rep.m < 1)
        throw InvalidArgument("infeasible construction: n = " + std::to_string(rep.n) + " (formula "
                              + std::to_string(rep.n_formula) + "), k = " + std::to_string(p.k) + ", m = "
                              + std::to_string(rep.m) + "; supply overrides");
    if (rep.n > std::numeric_limits<std::uint32_t>::max() || rep.m > max_generated_members)
        throw InvalidArgument("construction exceeds desk-scale limits");

    Rng rng(p.seed);
    std::set<Set> seen;
    std::vector<Set> members;
    for (std::uint64_t i = 0; i < rep.m; ++i) {
        Set s = random_k_subset(rng, rep.n, p.k);
        if (seen.insert(s).second)
            members.push_back(std::move(s));
    }
    rep.distinct = members.size();
    return {SetFamily(static_cast<std::uint32_t>(rep.n), std::move(members), false), rep};
}

} // namespace sflab
