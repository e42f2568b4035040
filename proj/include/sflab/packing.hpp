#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sflab/bitset.hpp"
#include "sflab/budget.hpp"
#include "sflab/set_family.hpp"

namespace sflab {

/// Upper bound on the number of pairwise disjoint sets among `sets`
/// (restricted to `candidates`): empty sets count individually, the rest are
/// greedily grouped into stars around a max-degree element and each star
/// contributes at most one.
std::size_t packing_upper_bound(std::span<const Bitset> sets, std::span<const std::size_t> candidates);

/// Lexicographically least index sequence of `target` pairwise disjoint sets,
/// if one exists. Branch and bound with `packing_upper_bound` pruning.
std::optional<std::vector<std::size_t>> find_packing(std::span<const Bitset> sets, std::size_t target,
                                                     Budget& budget);

/// Maximum packing; the witness is the lexicographically least of maximum size.
std::vector<std::size_t> max_packing(std::span<const Bitset> sets, Budget& budget);

struct PackingNumber
{
    std::size_t value = 0;
    std::vector<std::size_t> witness; ///< member indices
};

/// Exact maximum number of pairwise disjoint members.
PackingNumber packing_number(const SetFamily& family, Budget budget = {});

struct TransversalNumber
{
    std::size_t value = 0;
    Set witness; ///< elements meeting every member
};

/// Exact minimum hitting set. Throws EmptyMemberError if a member is empty.
TransversalNumber transversal_number(const SetFamily& family, Budget budget = {});

struct LambdaNumber
{
    std::size_t value = 0;
    std::vector<std::size_t> witness; ///< member indices
    bool cap_hit = false;             ///< value == cap, larger values not searched
    bool exact() const { return !cap_hit; }
};

/// Largest l <= cap such that some l members have, for every pair, an element
/// lying in exactly that pair among the l chosen.
LambdaNumber lambda_number(const SetFamily& family, std::size_t cap = 8, Budget budget = {});

} // namespace sflab
