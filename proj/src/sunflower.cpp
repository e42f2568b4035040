#include "sflab/sunflower.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "sflab/errors.hpp"
#include "sflab/packing.hpp"

namespace sflab {

std::optional<Set> is_sunflower(std::span<const Set> sets, std::size_t r_min)
{
    if (sets.size() < std::max<std::size_t>(2, r_min))
        throw InvalidArgument("is_sunflower needs at least " + std::to_string(std::max<std::size_t>(2, r_min))
                              + " sets");
    std::set<Set> seen(sets.begin(), sets.end());
    if (seen.size() != sets.size())
        throw InvalidArgument("is_sunflower requires pairwise distinct sets");
    const Set core = set_intersection(sets[0], sets[1]);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (set_intersection(sets[i], sets[j]) != core)
                return std::nullopt;
    return core;
}

namespace {

// Candidate cores in lexicographic order: all S_i & S_j (i <= j) and the empty set.
std::vector<Set> candidate_cores(const SetFamily& family, std::span<const std::size_t> indices)
{
    std::unordered_set<Bitset, BitsetHash> cores;
    cores.insert(Bitset(family.ground_size()));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a; b < indices.size(); ++b)
            cores.insert(family.mask(indices[a]) & family.mask(indices[b]));
    std::vector<Set> out;
    out.reserve(cores.size());
    for (const Bitset& c : cores)
        out.push_back(c.to_vector());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<Sunflower> find_sunflower(const SetFamily& family, std::size_t r, bool distinct_only, Budget budget)
{
    if (r < 3)
        throw InvalidArgument("find_sunflower requires r >= 3");
    std::vector<std::size_t> indices;
    {
        std::set<Set> seen;
        for (std::size_t i = 0; i < family.size(); ++i)
            if (!distinct_only || seen.insert(family.member(i)).second)
                indices.push_back(i);
    }
    if (indices.size() < r)
        return std::nullopt;

    for (const Set& core : candidate_cores(family, indices)) {
        const Bitset core_mask = to_mask(core, family.ground_size());
        std::vector<std::size_t> owners;
        std::vector<Bitset> petals;
        for (std::size_t i : indices) {
            if (core_mask.is_subset_of(family.mask(i))) {
                owners.push_back(i);
                petals.push_back(difference(family.mask(i), core_mask));
            }
        }
        if (owners.size() < r)
            continue;
        if (auto pick = find_packing(petals, r, budget)) {
            Sunflower s;
            s.core = core;
            for (std::size_t p : *pick)
                s.members.push_back(owners[p]);
            return s;
        }
    }
    return std::nullopt;
}

namespace {

// Number of j-subsets of pairwise disjoint petals, for j = 0..r.
void count_packings(std::span<const Bitset> petals, const std::vector<std::size_t>& cands, std::size_t depth,
                    std::size_t r, std::vector<BigInt>& counts, Budget& budget)
{
    budget.tick();
    counts[depth] += 1;
    if (depth == r)
        return;
    for (std::size_t pos = 0; pos < cands.size(); ++pos) {
        const std::size_t c = cands[pos];
        std::vector<std::size_t> next;
        for (std::size_t q = pos + 1; q < cands.size(); ++q)
            if (!petals[c].intersects(petals[cands[q]]))
                next.push_back(cands[q]);
        count_packings(petals, next, depth + 1, r, counts, budget);
    }
}

} // namespace

BigInt count_sunflower_tuples(const SetFamily& family, std::size_t r, Budget budget)
{
    if (family.empty())
        throw InvalidArgument("count_sunflower_tuples of an empty family");
    if (r < 2)
        throw InvalidArgument("count_sunflower_tuples requires r >= 2");
    const std::size_t m = family.size();
    if (r == 2)
        return BigInt(static_cast<unsigned long>(m)) * static_cast<unsigned long>(m);

    // Each qualifying tuple has a unique core C = pairwise intersection; its
    // members all contain C with pairwise disjoint petals. Copies of C itself
    // (empty petals) may repeat, nonempty petals may not.
    std::unordered_set<Bitset, BitsetHash> cores;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b)
            cores.insert(family.mask(a) & family.mask(b));

    std::vector<BigInt> falling(r + 1); // r! / (r - j)!
    falling[0] = 1;
    for (std::size_t j = 1; j <= r; ++j)
        falling[j] = falling[j - 1] * static_cast<unsigned long>(r - j + 1);

    BigInt total = 0;
    for (const Bitset& core : cores) {
        std::size_t copies = 0;
        std::vector<Bitset> petals;
        for (std::size_t i = 0; i < m; ++i) {
            if (!core.is_subset_of(family.mask(i)))
                continue;
            Bitset petal = difference(family.mask(i), core);
            if (petal.none())
                ++copies;
            else
                petals.push_back(std::move(petal));
        }
        std::vector<BigInt> packings(r + 1, BigInt(0));
        std::vector<std::size_t> all(petals.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;
        count_packings(petals, all, 0, r, packings, budget);
        for (std::size_t j = 0; j <= r; ++j) {
            if (packings[j] == 0)
                continue;
            const BigInt fill = pow(BigInt(static_cast<unsigned long>(copies)), r - j);
            total += packings[j] * falling[j] * fill;
        }
    }
    return total;
}

} // namespace sflab
