#include "sflab/packing.hpp"

#include <algorithm>
#include <numeric>

#include "sflab/errors.hpp"

namespace sflab {

std::size_t packing_upper_bound(std::span<const Bitset> sets, std::span<const std::size_t> candidates)
{
    std::size_t groups = 0;
    std::vector<std::size_t> alive;
    alive.reserve(candidates.size());
    for (std::size_t c : candidates) {
        if (sets[c].none())
            ++groups;
        else
            alive.push_back(c);
    }
    if (alive.empty())
        return groups;
    const std::size_t width = sets[alive.front()].width();
    std::vector<std::size_t> degree(width);
    while (!alive.empty()) {
        std::fill(degree.begin(), degree.end(), 0);
        for (std::size_t c : alive)
            sets[c].for_each([&](std::size_t e) { ++degree[e]; });
        const std::size_t hub =
            static_cast<std::size_t>(std::max_element(degree.begin(), degree.end()) - degree.begin());
        ++groups;
        std::erase_if(alive, [&](std::size_t c) { return sets[c].test(hub); });
    }
    return groups;
}

namespace {

class PackingSearch
{
public:
    PackingSearch(std::span<const Bitset> sets, Budget& budget) : _sets(sets), _budget(budget) {}

    bool find(const std::vector<std::size_t>& cands, std::size_t target)
    {
        _budget.tick();
        if (_chosen.size() >= target)
            return true;
        if (_chosen.size() + cands.size() < target)
            return false;
        if (_chosen.size() + packing_upper_bound(_sets, cands) < target)
            return false;
        for (std::size_t pos = 0; pos < cands.size(); ++pos) {
            if (_chosen.size() + (cands.size() - pos) < target)
                return false;
            const std::size_t c = cands[pos];
            std::vector<std::size_t> next;
            for (std::size_t q = pos + 1; q < cands.size(); ++q)
                if (!_sets[c].intersects(_sets[cands[q]]))
                    next.push_back(cands[q]);
            _chosen.push_back(c);
            if (find(next, target))
                return true;
            _chosen.pop_back();
        }
        return false;
    }

    void maximize(const std::vector<std::size_t>& cands)
    {
        _budget.tick();
        if (_chosen.size() > _best.size())
            _best = _chosen;
        if (_chosen.size() + cands.size() <= _best.size())
            return;
        if (_chosen.size() + packing_upper_bound(_sets, cands) <= _best.size())
            return;
        for (std::size_t pos = 0; pos < cands.size(); ++pos) {
            if (_chosen.size() + (cands.size() - pos) <= _best.size())
                return;
            const std::size_t c = cands[pos];
            std::vector<std::size_t> next;
            for (std::size_t q = pos + 1; q < cands.size(); ++q)
                if (!_sets[c].intersects(_sets[cands[q]]))
                    next.push_back(cands[q]);
            _chosen.push_back(c);
            maximize(next);
            _chosen.pop_back();
        }
    }

    const std::vector<std::size_t>& chosen() const { return _chosen; }
    const std::vector<std::size_t>& best() const { return _best; }

private:
    std::span<const Bitset> _sets;
    Budget& _budget;
    std::vector<std::size_t> _chosen;
    std::vector<std::size_t> _best;
};

std::vector<std::size_t> iota_indices(std::size_t n)
{
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

} // namespace

std::optional<std::vector<std::size_t>> find_packing(std::span<const Bitset> sets, std::size_t target,
                                                     Budget& budget)
{
    PackingSearch search(sets, budget);
    if (search.find(iota_indices(sets.size()), target))
        return search.chosen();
    return std::nullopt;
}

std::vector<std::size_t> max_packing(std::span<const Bitset> sets, Budget& budget)
{
    PackingSearch search(sets, budget);
    search.maximize(iota_indices(sets.size()));
    return search.best();
}

PackingNumber packing_number(const SetFamily& family, Budget budget)
{
    PackingNumber out;
    out.witness = max_packing(family.masks(), budget);
    out.value = out.witness.size();
    return out;
}

// ---------------------------------------------------------------------------
// Transversal

namespace {

class HittingSetSearch
{
public:
    HittingSetSearch(const SetFamily& family, Budget& budget) : _family(family), _budget(budget) {}

    // Members pairwise disjoint among `unhit`, each needing its own element.
    std::size_t lower_bound(const std::vector<std::size_t>& unhit) const
    {
        std::vector<std::size_t> order = unhit;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return _family.member(a).size() < _family.member(b).size();
        });
        Bitset used(_family.ground_size());
        std::size_t count = 0;
        for (std::size_t u : order) {
            if (!_family.mask(u).intersects(used)) {
                used |= _family.mask(u);
                ++count;
            }
        }
        return count;
    }

    std::vector<std::size_t> without(const std::vector<std::size_t>& unhit, Element e) const
    {
        std::vector<std::size_t> next;
        for (std::size_t u : unhit)
            if (!_family.mask(u).test(e))
                next.push_back(u);
        return next;
    }

    Set greedy(std::vector<std::size_t> unhit) const
    {
        Set out;
        std::vector<std::size_t> degree(_family.ground_size());
        while (!unhit.empty()) {
            std::fill(degree.begin(), degree.end(), 0);
            for (std::size_t u : unhit)
                for (Element e : _family.member(u))
                    ++degree[e];
            const auto e = static_cast<Element>(std::max_element(degree.begin(), degree.end()) - degree.begin());
            out.push_back(e);
            unhit = without(unhit, e);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void minimize(const std::vector<std::size_t>& unhit)
    {
        _budget.tick();
        if (unhit.empty()) {
            if (_chosen.size() < _best.size())
                _best = _chosen;
            return;
        }
        if (_chosen.size() + lower_bound(unhit) >= _best.size())
            return;
        std::size_t pivot = unhit.front();
        for (std::size_t u : unhit)
            if (_family.member(u).size() < _family.member(pivot).size())
                pivot = u;
        for (Element e : _family.member(pivot)) {
            _chosen.push_back(e);
            minimize(without(unhit, e));
            _chosen.pop_back();
        }
    }

    // Lexicographically least hitting set of exactly `size` elements.
    bool lex_least(Element from, const std::vector<std::size_t>& unhit, std::size_t size)
    {
        _budget.tick();
        if (unhit.empty())
            return true;
        if (_chosen.size() >= size || _chosen.size() + lower_bound(unhit) > size)
            return false;
        for (std::size_t u : unhit)
            if (_family.member(u).back() < from)
                return false;
        for (Element e = from; e < _family.ground_size(); ++e) {
            std::vector<std::size_t> next = without(unhit, e);
            if (next.size() == unhit.size())
                continue;
            _chosen.push_back(e);
            if (lex_least(e + 1, next, size))
                return true;
            _chosen.pop_back();
        }
        return false;
    }

    void seed_best(Set s) { _best = std::move(s); }
    const Set& best() const { return _best; }
    const Set& chosen() const { return _chosen; }
    void clear_chosen() { _chosen.clear(); }

private:
    const SetFamily& _family;
    Budget& _budget;
    Set _chosen;
    Set _best;
};

} // namespace

TransversalNumber transversal_number(const SetFamily& family, Budget budget)
{
    for (std::size_t i = 0; i < family.size(); ++i)
        if (family.member(i).empty())
            throw EmptyMemberError(i);
    TransversalNumber out;
    if (family.empty())
        return out;
    const std::vector<std::size_t> all = iota_indices(family.size());
    HittingSetSearch search(family, budget);
    search.seed_best(search.greedy(all));
    search.minimize(all);
    out.value = search.best().size();
    search.clear_chosen();
    search.lex_least(0, all, out.value);
    out.witness = search.chosen();
    return out;
}

// ---------------------------------------------------------------------------
// Lambda

namespace {

class LambdaSearch
{
public:
    LambdaSearch(const SetFamily& family, std::size_t cap, Budget& budget)
        : _family(family), _cap(cap), _budget(budget)
    {
    }

    // Does chosen + {c} keep a private witness for every pair?
    bool compatible(std::size_t c) const
    {
        const Bitset& sc = _family.mask(c);
        const std::size_t q = _chosen.size();
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = a + 1; b < q; ++b)
                if (difference(_witness[a * _cap + b], sc).none())
                    return false;
        for (std::size_t a = 0; a < q; ++a) {
            Bitset w = _family.mask(_chosen[a]) & sc;
            for (std::size_t t = 0; t < q; ++t)
                if (t != a)
                    w.subtract(_family.mask(_chosen[t]));
            if (w.none())
                return false;
        }
        return true;
    }

    void push(std::size_t c)
    {
        const Bitset& sc = _family.mask(c);
        const std::size_t q = _chosen.size();
        _saved.push_back(_witness);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = a + 1; b < q; ++b)
                _witness[a * _cap + b].subtract(sc);
        for (std::size_t a = 0; a < q; ++a) {
            Bitset w = _family.mask(_chosen[a]) & sc;
            for (std::size_t t = 0; t < q; ++t)
                if (t != a)
                    w.subtract(_family.mask(_chosen[t]));
            _witness[a * _cap + q] = std::move(w);
        }
        _chosen.push_back(c);
    }

    void pop()
    {
        _chosen.pop_back();
        _witness = std::move(_saved.back());
        _saved.pop_back();
    }

    // Returns false once the cap is reached (search stops).
    bool search(const std::vector<std::size_t>& cands)
    {
        _budget.tick();
        if (_chosen.size() > _best.size())
            _best = _chosen;
        if (_chosen.size() >= _cap) {
            _cap_hit = true;
            return false;
        }
        if (_chosen.size() + cands.size() <= _best.size())
            return true;
        for (std::size_t pos = 0; pos < cands.size(); ++pos) {
            if (_chosen.size() + (cands.size() - pos) <= _best.size())
                return true;
            const std::size_t c = cands[pos];
            if (!compatible(c))
                continue;
            push(c);
            std::vector<std::size_t> next;
            for (std::size_t q = pos + 1; q < cands.size(); ++q)
                if (compatible(cands[q]))
                    next.push_back(cands[q]);
            const bool go_on = search(next);
            pop();
            if (!go_on)
                return false;
        }
        return true;
    }

    void init() { _witness.assign(_cap * _cap, Bitset(_family.ground_size())); }

    const std::vector<std::size_t>& best() const { return _best; }
    bool cap_hit() const { return _cap_hit; }

private:
    const SetFamily& _family;
    std::size_t _cap;
    Budget& _budget;
    std::vector<std::size_t> _chosen;
    std::vector<std::size_t> _best;
    std::vector<Bitset> _witness; ///< _witness[a * cap + b], a < b: private elements of pair (a, b)
    std::vector<std::vector<Bitset>> _saved;
    bool _cap_hit = false;
};

} // namespace

LambdaNumber lambda_number(const SetFamily& family, std::size_t cap, Budget budget)
{
    if (cap == 0)
        throw InvalidArgument("lambda cap must be positive");
    LambdaNumber out;
    if (family.empty())
        return out;
    LambdaSearch search(family, cap, budget);
    search.init();
    search.search(iota_indices(family.size()));
    out.witness = search.best();
    out.value = out.witness.size();
    out.cap_hit = search.cap_hit();
    return out;
}

} // namespace sflab
