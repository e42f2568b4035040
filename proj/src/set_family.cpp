#include "sflab/set_family.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "sflab/errors.hpp"

namespace sflab {

SetFamily::SetFamily(std::uint32_t ground_size, std::vector<Set> members, bool multifamily)
    : _ground_size(ground_size), _members(std::move(members)), _multifamily(multifamily)
{
    if (_members.size() > std::numeric_limits<std::uint32_t>::max())
        throw InvalidFamily("family has more than 2^32-1 members");
    _masks.reserve(_members.size());
    for (std::size_t i = 0; i < _members.size(); ++i) {
        const Set& s = _members[i];
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (s[j] >= ground_size)
                throw InvalidFamily("member " + std::to_string(i) + " has element " + std::to_string(s[j])
                                    + " outside ground set of size " + std::to_string(ground_size));
            if (j > 0 && s[j - 1] >= s[j])
                throw InvalidFamily("member " + std::to_string(i) + " is not strictly increasing");
        }
        _masks.push_back(to_mask(s, ground_size));
    }
    if (!_multifamily && has_duplicates())
        throw InvalidFamily("repeated member in a family not flagged as multifamily");
}

SetFamily SetFamily::normalized(std::uint32_t ground_size, std::vector<Set> members, bool multifamily)
{
    for (Set& s : members) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return SetFamily(ground_size, std::move(members), multifamily);
}

std::size_t SetFamily::max_member_size() const
{
    std::size_t best = 0;
    for (const Set& s : _members)
        best = std::max(best, s.size());
    return best;
}

std::size_t SetFamily::min_member_size() const
{
    if (_members.empty())
        return 0;
    std::size_t best = _members.front().size();
    for (const Set& s : _members)
        best = std::min(best, s.size());
    return best;
}

bool SetFamily::is_uniform() const
{
    return min_member_size() == max_member_size();
}

bool SetFamily::has_empty_member() const
{
    return std::any_of(_members.begin(), _members.end(), [](const Set& s) { return s.empty(); });
}

bool SetFamily::has_duplicates() const
{
    std::set<Set> seen;
    for (const Set& s : _members)
        if (!seen.insert(s).second)
            return true;
    return false;
}

bool SetFamily::is_antichain() const
{
    for (std::size_t i = 0; i < _masks.size(); ++i)
        for (std::size_t j = 0; j < _masks.size(); ++j)
            if (_masks[i] != _masks[j] && _masks[i].is_subset_of(_masks[j]))
                return false;
    return true;
}

Bitset SetFamily::active_elements() const
{
    Bitset out(_ground_size);
    for (const Bitset& m : _masks)
        out |= m;
    return out;
}

SetFamily SetFamily::distinct() const
{
    std::set<Set> seen;
    std::vector<Set> out;
    for (const Set& s : _members)
        if (seen.insert(s).second)
            out.push_back(s);
    return SetFamily(_ground_size, std::move(out), false);
}

SetFamily SetFamily::subfamily(std::span<const std::size_t> indices) const
{
    std::vector<Set> out;
    out.reserve(indices.size());
    for (std::size_t i : indices)
        out.push_back(_members.at(i));
    return SetFamily(_ground_size, std::move(out), _multifamily);
}

SetFamily SetFamily::subfamily(const Bitset& member_mask) const
{
    std::vector<Set> out;
    member_mask.for_each([&](std::size_t i) { out.push_back(_members[i]); });
    return SetFamily(_ground_size, std::move(out), _multifamily);
}

Set set_intersection(const Set& a, const Set& b)
{
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Set set_difference(const Set& a, const Set& b)
{
    Set out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Bitset to_mask(const Set& s, std::size_t width)
{
    Bitset b(width);
    for (Element e : s)
        b.set(e);
    return b;
}

namespace {

// One relabel-and-sort step over a member list whose labels are < n.
std::vector<Set> relabel_step(const std::vector<Set>& members, std::uint32_t n, std::uint32_t& used)
{
    std::vector<Element> label(n, std::numeric_limits<Element>::max());
    used = 0;
    for (const Set& s : members)
        for (Element e : s)
            if (label[e] == std::numeric_limits<Element>::max())
                label[e] = used++;
    std::vector<Set> out;
    out.reserve(members.size());
    for (const Set& s : members) {
        Set t;
        t.reserve(s.size());
        for (Element e : s)
            t.push_back(label[e]);
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SetFamily canonicalize(const SetFamily& family)
{
    std::vector<Set> current = family.members();
    std::sort(current.begin(), current.end());
    std::uint32_t n = family.ground_size();
    std::map<std::vector<Set>, std::size_t> seen;
    std::vector<std::vector<Set>> trail;
    while (true) {
        std::uint32_t used = 0;
        std::vector<Set> next = relabel_step(current, n, used);
        n = used;
        if (next == current)
            break;
        auto [it, fresh] = seen.emplace(next, trail.size());
        if (!fresh) {
            // Cycle: settle on its lexicographically least state, which is
            // itself a member of the cycle and so maps back into it.
            current = *std::min_element(trail.begin() + static_cast<std::ptrdiff_t>(it->second), trail.end());
            break;
        }
        trail.push_back(next);
        current = std::move(next);
    }
    std::uint32_t used = 0;
    (void)relabel_step(current, n, used);
    return SetFamily(used, std::move(current), family.multifamily());
}

SetFamily restrict_containing(const SetFamily& family, Element x)
{
    std::vector<Set> out;
    for (const Set& s : family.members()) {
        if (std::binary_search(s.begin(), s.end(), x)) {
            Set t;
            t.reserve(s.size() - 1);
            for (Element e : s)
                if (e != x)
                    t.push_back(e);
            out.push_back(std::move(t));
        }
    }
    return SetFamily(family.ground_size(), std::move(out), family.multifamily());
}

SetFamily restrict_avoiding(const SetFamily& family, Element x)
{
    std::vector<Set> out;
    for (const Set& s : family.members())
        if (!std::binary_search(s.begin(), s.end(), x))
            out.push_back(s);
    return SetFamily(family.ground_size(), std::move(out), family.multifamily());
}

SetFamily dual_family(const SetFamily& family)
{
    if (family.multifamily())
        throw InvalidArgument("dual_family requires a family of distinct members");
    std::vector<Set> duals(family.ground_size());
    for (std::size_t i = 0; i < family.size(); ++i)
        for (Element e : family.member(i))
            duals[e].push_back(static_cast<Element>(i));
    std::set<Set> seen;
    std::vector<Set> out;
    for (Set& d : duals)
        if (!d.empty() && seen.insert(d).second)
            out.push_back(std::move(d));
    return canonicalize(SetFamily(static_cast<std::uint32_t>(family.size()), std::move(out), false));
}

FrequencyProfile element_frequencies(const SetFamily& family)
{
    if (family.empty())
        throw InvalidArgument("element_frequencies of an empty family");
    FrequencyProfile p;
    p.members = family.size();
    p.counts.assign(family.ground_size(), 0);
    for (const Set& s : family.members())
        for (Element e : s)
            ++p.counts[e];
    p.fractions.reserve(p.counts.size());
    for (std::size_t c : p.counts) {
        Rational q(static_cast<unsigned long>(c), static_cast<unsigned long>(p.members));
        q.canonicalize();
        p.fractions.push_back(q);
    }
    return p;
}

PopularElement popular_element(const SetFamily& family)
{
    if (family.empty())
        throw InvalidArgument("popular_element of an empty family");
    if (family.has_empty_member())
        throw InvalidArgument("popular_element requires nonempty members");
    FrequencyProfile p = element_frequencies(family);
    std::size_t best = 0;
    for (std::size_t e = 1; e < p.counts.size(); ++e)
        if (p.counts[e] > p.counts[best])
            best = e;
    return {static_cast<Element>(best), p.fractions[best]};
}

} // namespace sflab
