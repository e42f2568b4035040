#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "sflab/budget.hpp"
#include "sflab/numeric.hpp"
#include "sflab/set_family.hpp"

namespace sflab {

/// Probability that r independent uniform draws (with replacement) have
/// pairwise equal intersections: count_sunflower_tuples / m^r. r = 2 gives 1.
Rational alpha_exact(const SetFamily& family, std::size_t r, Budget budget = {});

struct AlphaEstimate
{
    std::size_t r = 0;
    std::size_t m = 0;
    std::optional<Rational> exact;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    std::uint64_t seed = 0;

    double estimate() const { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }
    /// Binomial standard deviation of the estimate at probability p.
    double sigma(double p) const;
};

/// Trials run in fixed chunks of `chunk_trials`; chunk c draws from its own
/// stream seeded by (seed, c), so the estimate does not depend on `workers`.
inline constexpr std::uint64_t chunk_trials = 4096;

AlphaEstimate alpha_monte_carlo(const SetFamily& family, std::size_t r, std::uint64_t trials, std::uint64_t seed,
                                unsigned workers = 1);

/// Worker count from SUNFLOWER_LAB_THREADS, else `fallback`.
unsigned worker_count(unsigned fallback = 1);

} // namespace sflab
