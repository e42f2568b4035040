#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sflab/budget.hpp"
#include "sflab/numeric.hpp"
#include "sflab/set_family.hpp"

namespace sflab {

/// r members whose pairwise intersections all equal `core`.
struct Sunflower
{
    Set core;
    std::vector<std::size_t> members; ///< increasing member indices

    friend bool operator==(const Sunflower&, const Sunflower&) = default;
};

/// Common pairwise intersection of `sets`, or nullopt if two pairs disagree.
/// Requires at least max(2, r_min) pairwise distinct sets.
std::optional<Set> is_sunflower(std::span<const Set> sets, std::size_t r_min = 2);

/// Exact r-sunflower search (r >= 3).
///
/// Every core is a pairwise intersection of two members, so only those
/// (plus the empty set and whole members) are tried; for each core the
/// members containing it must supply r pairwise disjoint petals, which is
/// decided by `find_packing`. Cores are visited in lexicographic order and
/// the lexicographically least petal indices are returned for the first
/// core that works.
///
/// With `distinct_only`, repeated members of a multifamily are collapsed to
/// their first occurrence, so the witness consists of distinct sets.
/// Otherwise r copies of one set count as a sunflower.
std::optional<Sunflower> find_sunflower(const SetFamily& family, std::size_t r, bool distinct_only = false,
                                        Budget budget = {});

/// Ordered r-tuples of member indices (repetition allowed) whose pairwise
/// intersections all agree. r >= 2, family nonempty.
BigInt count_sunflower_tuples(const SetFamily& family, std::size_t r, Budget budget = {});

} // namespace sflab
