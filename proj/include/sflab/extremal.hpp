#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "sflab/set_family.hpp"

namespace sflab {

enum class ExtremalKind
{
    family,      ///< f_r(k): distinct k-sets
    multifamily, ///< g_r(k): repeated k-sets allowed
    ls_bounded,  ///< h^d_r(k): Littlestone dimension <= d
    vc_bounded,  ///< f^d_r(k): VC-dimension <= d
};

std::string to_string(ExtremalKind kind);
ExtremalKind parse_extremal_kind(const std::string& text);

struct ExtremalOptions
{
    ExtremalKind kind = ExtremalKind::family;
    std::size_t r = 3;
    std::size_t k = 1;
    std::size_t d = 1;
    std::optional<std::uint32_t> ground_cap; ///< unset: unbounded (a family of m k-sets never needs more than m*k)
    std::uint64_t node_limit = std::uint64_t{1} << 32;
    std::optional<std::chrono::milliseconds> time_limit;
};

struct ExtremalStats
{
    std::uint64_t nodes = 0;                ///< canonical families visited
    std::uint64_t candidates = 0;           ///< extensions generated in canonical order
    std::uint64_t rejected_sunflower = 0;
    std::uint64_t rejected_constraint = 0;
};

struct ExtremalResult
{
    ExtremalOptions options;
    bool exact = false;      ///< false when the budget ran out
    std::size_t value = 1;   ///< least m forcing an r-sunflower (or lower bound when inexact)
    SetFamily witness;       ///< largest sunflower-free family found, size value-1
    std::uint32_t ground_used = 0;
    ExtremalStats stats;
};

/// Exhaustive search over k-uniform (multi)families up to relabeling.
///
/// Families are grown in orderly form: members in nondecreasing
/// lexicographic order and elements introduced in first-appearance order
/// (a new member uses some old elements plus the next unused labels). Every
/// family has such a form (take the labeling whose sorted member list is
/// lexicographically least) and every prefix of one is again in that form,
/// so the hereditary constraints (sunflower freeness, LS/VC bounds) can prune
/// at every level without losing completeness.
ExtremalResult extremal_search(const ExtremalOptions& options);

/// Measured g_r(k) against the candidate identities relating it to f_r(k).
struct MultifamilyIdentity
{
    std::size_t r = 0, k = 0;
    bool exact = false;
    std::size_t f = 0, g = 0;
    std::size_t r_minus_1_times_f_plus_1 = 0;         ///< (r-1) f + 1
    std::size_t k_minus_1_times_f_plus_1 = 0;         ///< (k-1) f + 1
    std::size_t r_minus_1_times_f_minus_1_plus_1 = 0; ///< (r-1)(f-1) + 1
};

MultifamilyIdentity multifamily_identity(std::size_t r, std::size_t k, std::uint64_t node_limit = std::uint64_t{1} << 32);

} // namespace sflab
