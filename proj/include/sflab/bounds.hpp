#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sflab/numeric.hpp"

namespace sflab {

/// Iterated base-2 logarithm: the least i with log^(i) k <= 2. Computed by
/// comparing k against the tower 2, 2^2, 2^2^2, ... so no floating point is
/// involved. k >= 1.
std::uint32_t log_star(const BigInt& k);
std::uint32_t log_star(std::uint64_t k);

enum class BoundId
{
    ER,  ///< k! (r-1)^k
    T1,  ///< r^(10k)
    T2,  ///< 2^(10k (dr)^(2 log* k))
    T3U, ///< (rk)^d
    T3L, ///< (rk/d)^d, asymptotic form only
    T7,  ///< (lambda + r)^(6 lambda k)
    DSW, ///< 11 lambda^2 (lambda + nu + 3) C(lambda + nu, lambda)^2
    SS,  ///< sum_{i<=d} C(n, i)
    L3,  ///< g^(1-r) / e
    C1,  ///< (k! (r-1)^(k+1) + 1)^(1-r) / e
    T4,  ///< (500 + r)^(900k)
    T6,  ///< 2^(-10k (dr)^(2 log* k))
};

std::string to_string(BoundId id);
BoundId parse_bound_id(const std::string& text);
std::vector<BoundId> all_bound_ids();

struct BoundParams
{
    std::optional<std::uint64_t> r, k, d, lambda, nu, n, g;
};

/// Closed interval of rationals.
struct RationalInterval
{
    Rational lo, hi;
};

/// 1/e lies in this interval.
RationalInterval inverse_e_enclosure();

struct BoundValue
{
    BoundId id = BoundId::ER;
    BoundParams params;
    /// Exact value; for the bounds divided by e this is the factor in front
    /// of 1/e, and `enclosure` brackets the true value.
    Rational value;
    bool divided_by_e = false;
    RationalInterval enclosure;
    bool asymptotic = false; ///< T3L: o(d) term dropped, not a certified bound
    std::string formula;
};

/// Largest binary exponent a bound value may have before evaluation is
/// refused with BudgetExceeded.
inline constexpr std::uint64_t max_bound_bits = std::uint64_t{1} << 26;

/// Exact value of one closed-form bound. Throws InvalidArgument for missing
/// parameters or parameters outside the statement's range, BudgetExceeded
/// when the value has more than `max_bound_bits` bits.
BoundValue evaluate_bound(BoundId id, const BoundParams& params);

} // namespace sflab
