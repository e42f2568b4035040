#pragma once

#include <cstdint>
#include <random>

namespace sflab {

/// splitmix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream)
{
    return mix_seed(mix_seed(seed) ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

/// mt19937_64 with a portable bounded draw. The standard distributions are
/// implementation-defined, so they are avoided wherever output must match
/// across platforms.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : _engine(mix_seed(seed)) {}

    std::uint64_t next() { return _engine(); }

    /// Uniform in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = _engine();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 _engine;
};

} // namespace sflab
