#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "sflab/numeric.hpp"
#include "sflab/set_family.hpp"

namespace sflab {

/// Largest family a generator will materialize.
inline constexpr std::uint64_t max_generated_members = std::uint64_t{1} << 22;

/// Root-to-leaf vertex sets of the complete (r-1)-ary tree with k levels.
/// Vertices are numbered level by level from the root (0). The family is
/// k-uniform with (r-1)^(k-1) members and contains no r-sunflower.
SetFamily tree_family(std::size_t r, std::size_t k);

/// For each member S of `first`, a fresh copy of `second` with S added to
/// each of its members. Both inputs must be uniform families of distinct sets.
/// Ground layout: first's elements, then one block of second.ground_size()
/// elements per member of `first`.
SetFamily product_family(const SetFamily& first, const SetFamily& second);

/// k-uniform family of k+r-2 members with Littlestone dimension 1 and no
/// r-sunflower. Core elements 0..k-2; r-1 members hold every core plus one
/// private element, and for each core c one member holds the other cores plus
/// two private elements. Every element lies in one member or all but one.
SetFamily ls1_family(std::size_t r, std::size_t k);

/// Fills every member up to k elements with fresh elements, each used once.
SetFamily pad_to_uniform(const SetFamily& family, std::size_t k);

struct LowerBoundParameters
{
    std::size_t d = 0, r = 0, k = 0;
    std::optional<std::uint64_t> n_override;
    std::optional<std::uint64_t> m_override;
    std::uint64_t seed = 0;
};

struct LowerBoundReport
{
    double n_formula = 0;     ///< k^2 r / (500 d log2 k) before rounding
    std::uint64_t n = 0;      ///< ground size used
    std::uint64_t t = 0;      ///< ceil(log2 d)
    BigInt m_formula;         ///< floor(n^-1 (n/k)^(d-t)) from the used n
    std::uint64_t m = 0;      ///< draws used
    std::size_t distinct = 0; ///< members after collapsing repeats
    bool used_overrides = false;
};

struct LowerBoundFamily
{
    SetFamily family;
    LowerBoundReport report;
};

/// m independent uniform k-subsets of [n], repeats collapsed. Without
/// overrides n, t and m follow the probabilistic lower-bound construction
/// (base-2 logs, n and m rounded down); InvalidArgument is thrown when those
/// values are infeasible (n < k or m < 1) or when d < 6, r < 3 or k < 4d.
LowerBoundFamily random_lowerbound_family(const LowerBoundParameters& params);

} // namespace sflab
