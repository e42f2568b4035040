#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sflab/budget.hpp"
#include "sflab/numeric.hpp"
#include "sflab/set_family.hpp"

namespace sflab {

struct VcDimension
{
    std::size_t value = 0;
    Set witness; ///< lexicographically least shattered set of maximum size
};

/// Exact VC-dimension. Duplicates are collapsed first; the empty family has
/// VC-dimension 0. Candidate sets grow one element at a time from shattered
/// sets whose every maximal proper subset is shattered, and are accepted when
/// they carry 2^|S| distinct traces.
VcDimension vc_dimension(const SetFamily& family, Budget budget = {});

/// A labeled complete binary tree of depth `depth` in heap order: node i has
/// children 2i+1 (left, label present) and 2i+2 (right, label absent).
struct LsTree
{
    std::size_t depth = 0;
    std::vector<Element> internal;  ///< 2^depth - 1 element labels
    std::vector<std::size_t> leaves; ///< 2^depth member indices, left to right
};

/// Checks that `tree` is shattered by `family`.
bool is_shattered_tree(const SetFamily& family, const LsTree& tree);

struct LsDimension
{
    std::size_t value = 0;
    LsTree witness;
};

struct LsOptions
{
    std::size_t memo_budget = std::size_t{1} << 22; ///< max cached subfamilies
};

/// Exact Littlestone dimension from the recursion
///   LS(F) = 1 + max_x min(LS(F_x), LS(F'_x)),   LS(F) = 0 for |F| <= 1.
/// Subfamilies are cached by the set of surviving member indices. Only
/// elements splitting the current subfamily are tried, and candidates are
/// skipped when floor(log2) of the smaller side cannot beat the best so far.
LsDimension ls_dimension(const SetFamily& family, LsOptions options = {}, Budget budget = {});

/// Exhaustive check for a shattered labeling of the depth-d tree. Independent
/// of `ls_dimension`: it tries every element at every node with no pruning.
std::optional<LsTree> ls_dimension_tree(const SetFamily& family, std::size_t depth, Budget budget = {});

/// sum_{i=0}^{d} C(n, i)
BigInt sauer_shelah_capacity(std::uint64_t n, std::uint64_t d);

struct DimensionReport
{
    VcDimension vc;
    LsDimension ls;
};

DimensionReport dimension_report(const SetFamily& family, Budget budget = {});

} // namespace sflab
