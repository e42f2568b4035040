#include "sflab/extremal.hpp"

#include <algorithm>
#include <functional>

#include "sflab/budget.hpp"
#include "sflab/dimensions.hpp"
#include "sflab/errors.hpp"
#include "sflab/packing.hpp"

namespace sflab {

std::string to_string(ExtremalKind kind)
{
    switch (kind) {
    case ExtremalKind::family: return "family";
    case ExtremalKind::multifamily: return "multifamily";
    case ExtremalKind::ls_bounded: return "ls";
    case ExtremalKind::vc_bounded: return "vc";
    }
    return "?";
}

ExtremalKind parse_extremal_kind(const std::string& text)
{
    if (text == "family" || text == "f")
        return ExtremalKind::family;
    if (text == "multifamily" || text == "multi" || text == "g")
        return ExtremalKind::multifamily;
    if (text == "ls" || text == "ls_bounded" || text == "h")
        return ExtremalKind::ls_bounded;
    if (text == "vc" || text == "vc_bounded")
        return ExtremalKind::vc_bounded;
    throw InvalidArgument("unknown extremal kind '" + text + "' (family | multifamily | ls | vc)");
}

namespace {

class OrderlySearch
{
public:
    OrderlySearch(const ExtremalOptions& options, Budget& budget, ExtremalStats& stats)
        : _opt(options), _budget(budget), _stats(stats)
    {
    }

    void run() { grow(0); }

    const std::vector<Set>& best() const { return _best; }
    std::uint32_t best_ground() const { return _best_ground; }

private:
    bool multi() const { return _opt.kind == ExtremalKind::multifamily; }

    // Would adding `x` to the current family complete an r-sunflower?
    bool closes_sunflower(const Set& x, std::uint32_t width) const
    {
        if (_members.size() + 1 < _opt.r)
            return false;
        const Bitset xm = to_mask(x, width);
        std::vector<Bitset> masks;
        masks.reserve(_members.size());
        for (const Set& s : _members)
            masks.push_back(to_mask(s, width));
        std::vector<Bitset> cores;
        for (const Bitset& s : masks) {
            Bitset c = s & xm;
            if (std::find(cores.begin(), cores.end(), c) == cores.end())
                cores.push_back(std::move(c));
        }
        Budget unlimited;
        for (const Bitset& core : cores) {
            std::vector<Bitset> petals;
            for (const Bitset& s : masks)
                if ((s & xm) == core)
                    petals.push_back(difference(s, core));
            if (petals.size() + 1 < _opt.r)
                continue;
            if (find_packing(petals, _opt.r - 1, unlimited))
                return true;
        }
        return false;
    }

    bool satisfies_constraint(std::uint32_t width) const
    {
        if (_opt.kind != ExtremalKind::ls_bounded && _opt.kind != ExtremalKind::vc_bounded)
            return true;
        const SetFamily f(width, _members, false);
        if (_opt.kind == ExtremalKind::ls_bounded)
            return ls_dimension(f).value <= _opt.d;
        return vc_dimension(f).value <= _opt.d;
    }

    std::vector<Set> extensions(std::uint32_t used) const
    {
        std::vector<Set> out;
        const std::size_t k = _opt.k;
        for (std::size_t fresh = 0; fresh <= k; ++fresh) {
            if (_opt.ground_cap && used + fresh > *_opt.ground_cap)
                break;
            const std::size_t old = k - fresh;
            if (old > used)
                continue;
            // All `old`-subsets of [0, used), then the next `fresh` labels.
            std::vector<Element> pick(old);
            std::function<void(std::size_t, Element)> rec = [&](std::size_t pos, Element from) {
                if (pos == old) {
                    Set x = pick;
                    for (std::size_t j = 0; j < fresh; ++j)
                        x.push_back(static_cast<Element>(used + j));
                    out.push_back(std::move(x));
                    return;
                }
                for (Element e = from; e + (old - pos) <= used; ++e) {
                    pick[pos] = e;
                    rec(pos + 1, e + 1);
                }
            };
            rec(0, 0);
        }
        std::sort(out.begin(), out.end());
        if (!_members.empty()) {
            const Set& last = _members.back();
            std::erase_if(out, [&](const Set& x) { return multi() ? x < last : x <= last; });
        }
        return out;
    }

    void grow(std::uint32_t used)
    {
        _budget.tick();
        ++_stats.nodes;
        if (_members.size() > _best.size() || (_best.empty() && _members.empty())) {
            _best = _members;
            _best_ground = used;
        }
        for (const Set& x : extensions(used)) {
            ++_stats.candidates;
            const auto next_used = std::max<std::uint32_t>(used, x.empty() ? 0 : x.back() + 1);
            if (closes_sunflower(x, next_used)) {
                ++_stats.rejected_sunflower;
                continue;
            }
            _members.push_back(x);
            if (!satisfies_constraint(next_used)) {
                ++_stats.rejected_constraint;
                _members.pop_back();
                continue;
            }
            grow(next_used);
            _members.pop_back();
        }
    }

    const ExtremalOptions& _opt;
    Budget& _budget;
    ExtremalStats& _stats;
    std::vector<Set> _members;
    std::vector<Set> _best;
    std::uint32_t _best_ground = 0;
};

} // namespace

ExtremalResult extremal_search(const ExtremalOptions& options)
{
    if (options.r < 3)
        throw InvalidArgument("extremal_search requires r >= 3");
    if (options.k < 1)
        throw InvalidArgument("extremal_search requires k >= 1");
    ExtremalResult result;
    result.options = options;
    Budget budget(options.node_limit, options.time_limit);
    OrderlySearch search(options, budget, result.stats);
    try {
        search.run();
        result.exact = true;
    } catch (const BudgetExceeded&) {
        result.exact = false;
    }
    result.witness = SetFamily(search.best_ground(), search.best(), options.kind == ExtremalKind::multifamily);
    result.value = search.best().size() + 1;
    result.ground_used = search.best_ground();
    return result;
}

MultifamilyIdentity multifamily_identity(std::size_t r, std::size_t k, std::uint64_t node_limit)
{
    MultifamilyIdentity out;
    out.r = r;
    out.k = k;
    ExtremalOptions opt;
    opt.r = r;
    opt.k = k;
    opt.node_limit = node_limit;
    opt.kind = ExtremalKind::family;
    const ExtremalResult f = extremal_search(opt);
    opt.kind = ExtremalKind::multifamily;
    const ExtremalResult g = extremal_search(opt);
    out.exact = f.exact && g.exact;
    out.f = f.value;
    out.g = g.value;
    out.r_minus_1_times_f_plus_1 = (r - 1) * out.f + 1;
    out.k_minus_1_times_f_plus_1 = (k - 1) * out.f + 1;
    out.r_minus_1_times_f_minus_1_plus_1 = (r - 1) * (out.f - 1) + 1;
    return out;
}

} // namespace sflab
