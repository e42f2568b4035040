#include "sflab/alpha.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "sflab/errors.hpp"
#include "sflab/rng.hpp"
#include "sflab/sunflower.hpp"

namespace sflab {

Rational alpha_exact(const SetFamily& family, std::size_t r, Budget budget)
{
    if (family.empty())
        throw InvalidArgument("alpha of an empty family");
    if (r < 2)
        throw InvalidArgument("alpha requires r >= 2");
    if (r == 2)
        return Rational(1);
    Rational out(count_sunflower_tuples(family, r, budget), pow(BigInt(static_cast<unsigned long>(family.size())), r));
    out.canonicalize();
    return out;
}

double AlphaEstimate::sigma(double p) const
{
    return trials ? std::sqrt(p * (1.0 - p) / static_cast<double>(trials)) : 0.0;
}

namespace {

bool draws_agree(const SetFamily& family, const std::vector<std::size_t>& draw)
{
    const Bitset core = family.mask(draw[0]) & family.mask(draw[1]);
    for (std::size_t a = 0; a < draw.size(); ++a)
        for (std::size_t b = a + 1; b < draw.size(); ++b)
            if ((a != 0 || b != 1) && (family.mask(draw[a]) & family.mask(draw[b])) != core)
                return false;
    return true;
}

std::uint64_t run_chunk(const SetFamily& family, std::size_t r, std::uint64_t seed, std::uint64_t chunk,
                        std::uint64_t trials)
{
    Rng rng(stream_seed(seed, chunk));
    std::vector<std::size_t> draw(r);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (std::size_t& d : draw)
            d = static_cast<std::size_t>(rng.below(family.size()));
        if (draws_agree(family, draw))
            ++hits;
    }
    return hits;
}

} // namespace

AlphaEstimate alpha_monte_carlo(const SetFamily& family, std::size_t r, std::uint64_t trials, std::uint64_t seed,
                                unsigned workers)
{
    if (family.empty())
        throw InvalidArgument("alpha of an empty family");
    if (r < 2)
        throw InvalidArgument("alpha requires r >= 2");
    if (trials < 1)
        throw InvalidArgument("alpha_monte_carlo requires at least one trial");
    AlphaEstimate est;
    est.r = r;
    est.m = family.size();
    est.trials = trials;
    est.seed = seed;

    const std::uint64_t chunks = (trials + chunk_trials - 1) / chunk_trials;
    std::vector<std::uint64_t> hits(chunks, 0);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const std::uint64_t n = std::min(chunk_trials, trials - c * chunk_trials);
            hits[c] = run_chunk(family, r, seed, c, n);
        }
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(chunks, 256))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (std::thread& t : pool)
            t.join();
    }
    for (std::uint64_t h : hits)
        est.hits += h;
    return est;
}

unsigned worker_count(unsigned fallback)
{
    if (const char* env = std::getenv("SUNFLOWER_LAB_THREADS")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v >= 1)
                return static_cast<unsigned>(std::min<unsigned long>(v, 256));
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

} // namespace sflab
