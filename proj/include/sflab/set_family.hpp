#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sflab/bitset.hpp"
#include "sflab/numeric.hpp"

namespace sflab {

using Element = std::uint32_t;
using Set = std::vector<Element>; ///< strictly increasing

/// An ordered (multi)family of finite subsets of {0, ..., ground_size-1}.
///
/// Members are stored as sorted element vectors and mirrored as bitsets of
/// width ground_size. Instances are immutable after construction; the
/// constructor validates every invariant and throws InvalidFamily otherwise.
class SetFamily
{
public:
    SetFamily() = default;
    SetFamily(std::uint32_t ground_size, std::vector<Set> members, bool multifamily = false);

    /// Sorts each member and drops repeated elements before validating.
    static SetFamily normalized(std::uint32_t ground_size, std::vector<Set> members, bool multifamily = false);

    std::uint32_t ground_size() const { return _ground_size; }
    std::size_t size() const { return _members.size(); }
    bool empty() const { return _members.empty(); }
    bool multifamily() const { return _multifamily; }

    const Set& member(std::size_t i) const { return _members[i]; }
    const Bitset& mask(std::size_t i) const { return _masks[i]; }
    const std::vector<Set>& members() const { return _members; }
    const std::vector<Bitset>& masks() const { return _masks; }

    std::size_t max_member_size() const;
    std::size_t min_member_size() const;
    bool is_uniform() const;
    bool has_empty_member() const;
    bool has_duplicates() const;
    /// No member is a proper subset of another.
    bool is_antichain() const;

    /// Elements that lie in at least one member.
    Bitset active_elements() const;

    /// Collapses repeated members, keeping first occurrences in order.
    SetFamily distinct() const;

    /// Members selected by `indices`, in the given order.
    SetFamily subfamily(std::span<const std::size_t> indices) const;
    SetFamily subfamily(const Bitset& member_mask) const;

    friend bool operator==(const SetFamily& a, const SetFamily& b)
    {
        return a._ground_size == b._ground_size && a._multifamily == b._multifamily && a._members == b._members;
    }

private:
    std::uint32_t _ground_size = 0;
    std::vector<Set> _members;
    std::vector<Bitset> _masks;
    bool _multifamily = false;
};

Set set_intersection(const Set& a, const Set& b);
Set set_difference(const Set& a, const Set& b);
Bitset to_mask(const Set& s, std::size_t width);

/// Lexicographic member order, relabel elements by first appearance, drop
/// unused elements; repeated until a fixed point so that the result is
/// idempotent.
SetFamily canonicalize(const SetFamily& family);

/// {S \ {x} : x in S}
SetFamily restrict_containing(const SetFamily& family, Element x);
/// {S : x not in S}
SetFamily restrict_avoiding(const SetFamily& family, Element x);

/// Ground set = member indices; one member {i : v in S_i} per element v.
/// Empty duals and duplicates are dropped and the result canonicalized.
/// Throws InvalidArgument on multifamilies.
SetFamily dual_family(const SetFamily& family);

struct FrequencyProfile
{
    std::vector<std::size_t> counts; ///< members containing each element
    std::vector<Rational> fractions; ///< counts / m
    std::size_t members = 0;
};

FrequencyProfile element_frequencies(const SetFamily& family);

struct PopularElement
{
    Element element;
    Rational fraction;
};

/// Most frequent element; ties go to the smallest index.
PopularElement popular_element(const SetFamily& family);

} // namespace sflab
