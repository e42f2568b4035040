#include "sflab/dimensions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "sflab/errors.hpp"

namespace sflab {

namespace {

// Distinct members plus, for each, the index of its first occurrence.
struct DistinctView
{
    SetFamily family;
    std::vector<std::size_t> origin;
};

DistinctView distinct_view(const SetFamily& family)
{
    DistinctView v;
    std::set<Set> seen;
    std::vector<Set> members;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (seen.insert(family.member(i)).second) {
            members.push_back(family.member(i));
            v.origin.push_back(i);
        }
    }
    v.family = SetFamily(family.ground_size(), std::move(members), false);
    return v;
}

// Member-index mask of the members containing each element.
std::vector<Bitset> columns(const SetFamily& family)
{
    std::vector<Bitset> cols(family.ground_size(), Bitset(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i)
        for (Element e : family.member(i))
            cols[e].set(i);
    return cols;
}

bool traces_shatter(const SetFamily& family, const Set& s)
{
    const std::size_t patterns = std::size_t{1} << s.size();
    if (family.size() < patterns)
        return false;
    std::vector<char> seen(patterns, 0);
    std::size_t distinct = 0;
    for (const Bitset& mask : family.masks()) {
        std::size_t code = 0;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (mask.test(s[j]))
                code |= std::size_t{1} << j;
        if (!seen[code]) {
            seen[code] = 1;
            if (++distinct == patterns)
                return true;
        }
    }
    return false;
}

} // namespace

VcDimension vc_dimension(const SetFamily& input, Budget budget)
{
    const SetFamily family = input.distinct();
    VcDimension out;
    const std::size_t m = family.size();
    if (m < 2)
        return out;

    std::vector<std::size_t> count(family.ground_size(), 0);
    for (const Set& s : family.members())
        for (Element e : s)
            ++count[e];
    std::vector<Element> splitters;
    for (Element e = 0; e < family.ground_size(); ++e)
        if (count[e] > 0 && count[e] < m)
            splitters.push_back(e);

    std::vector<Set> level;
    for (Element e : splitters)
        level.push_back({e});
    while (!level.empty()) {
        out.value = level.front().size();
        out.witness = level.front();
        const std::size_t next_size = out.value + 1;
        if ((std::size_t{1} << next_size) > m || next_size >= 63)
            break;
        const std::set<Set> known(level.begin(), level.end());
        std::vector<Set> next;
        for (const Set& base : level) {
            for (Element e : splitters) {
                if (e <= base.back())
                    continue;
                budget.tick();
                Set cand = base;
                cand.push_back(e);
                bool closed = true;
                for (std::size_t drop = 0; drop + 1 < cand.size() && closed; ++drop) {
                    Set sub;
                    for (std::size_t j = 0; j < cand.size(); ++j)
                        if (j != drop)
                            sub.push_back(cand[j]);
                    closed = known.count(sub) > 0;
                }
                if (closed && traces_shatter(family, cand))
                    next.push_back(std::move(cand));
            }
        }
        level = std::move(next);
    }
    return out;
}

bool is_shattered_tree(const SetFamily& family, const LsTree& tree)
{
    const std::size_t leaves = std::size_t{1} << tree.depth;
    if (tree.internal.size() != leaves - 1 || tree.leaves.size() != leaves)
        return false;
    for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
        const std::size_t member = tree.leaves[leaf];
        if (member >= family.size())
            return false;
        std::size_t node = leaf + leaves - 1;
        while (node > 0) {
            const std::size_t parent = (node - 1) / 2;
            const bool left = node == 2 * parent + 1;
            const Element label = tree.internal[parent];
            if (label >= family.ground_size() || family.mask(member).test(label) != left)
                return false;
            node = parent;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Littlestone dimension, recursive form

namespace {

class LsSolver
{
public:
    LsSolver(const SetFamily& family, const LsOptions& options, Budget& budget)
        : _budget(budget), _memo_budget(options.memo_budget)
    {
        const std::vector<Bitset> cols = columns(family);
        std::unordered_set<Bitset, BitsetHash> seen;
        for (Element x = 0; x < family.ground_size(); ++x) {
            const std::size_t c = cols[x].count();
            if (c == 0 || c == family.size())
                continue;
            if (seen.insert(cols[x]).second) {
                _cols.push_back(cols[x]);
                _labels.push_back(x);
            }
        }
    }

    std::size_t solve(const Bitset& t)
    {
        const std::size_t n = t.count();
        if (n <= 1)
            return 0;
        if (auto it = _memo.find(t); it != _memo.end())
            return it->second;
        _budget.tick();
        const std::size_t ceiling = floor_log2(n);
        std::size_t best = 1;
        for (std::size_t c = 0; c < _cols.size() && best < ceiling; ++c) {
            Bitset in = t & _cols[c];
            const std::size_t n_in = in.count();
            if (n_in == 0 || n_in == n)
                continue;
            const std::size_t n_out = n - n_in;
            if (1 + floor_log2(std::min(n_in, n_out)) <= best)
                continue;
            Bitset out = difference(t, _cols[c]);
            const bool in_first = n_in <= n_out;
            const std::size_t v1 = solve(in_first ? in : out);
            if (1 + v1 <= best)
                continue;
            const std::size_t v2 = solve(in_first ? out : in);
            best = std::max(best, 1 + std::min(v1, v2));
        }
        if (_memo.size() < _memo_budget)
            _memo.emplace(t, static_cast<unsigned char>(best));
        return best;
    }

    // Fills heap node `node` of a depth-`total` tree from subfamily `t`,
    // where solve(t) >= remaining.
    void build(LsTree& tree, std::size_t node, const Bitset& t, std::size_t remaining,
               const std::vector<std::size_t>& origin)
    {
        if (remaining == 0) {
            tree.leaves[node - tree.internal.size()] = origin[t.first()];
            return;
        }
        // Columns are in increasing label order, so the first fit is the
        // smallest element.
        std::size_t pick = _cols.size();
        for (std::size_t c = 0; c < _cols.size() && pick == _cols.size(); ++c) {
            Bitset in = t & _cols[c];
            Bitset out = difference(t, _cols[c]);
            if (in.none() || out.none())
                continue;
            if (solve(in) + 1 >= remaining && solve(out) + 1 >= remaining)
                pick = c;
        }
        if (pick == _cols.size())
            throw Error("internal: no splitting element while rebuilding Littlestone tree");
        tree.internal[node] = _labels[pick];
        build(tree, 2 * node + 1, t & _cols[pick], remaining - 1, origin);
        build(tree, 2 * node + 2, difference(t, _cols[pick]), remaining - 1, origin);
    }

private:
    Budget& _budget;
    std::size_t _memo_budget;
    std::vector<Bitset> _cols;
    std::vector<Element> _labels;
    std::unordered_map<Bitset, unsigned char, BitsetHash> _memo;
};

LsTree empty_tree(std::size_t depth)
{
    LsTree tree;
    tree.depth = depth;
    tree.internal.assign((std::size_t{1} << depth) - 1, 0);
    tree.leaves.assign(std::size_t{1} << depth, 0);
    return tree;
}

} // namespace

LsDimension ls_dimension(const SetFamily& input, LsOptions options, Budget budget)
{
    const DistinctView view = distinct_view(input);
    LsDimension out;
    if (view.family.empty())
        return out;
    LsSolver solver(view.family, options, budget);
    const Bitset all = Bitset::full(view.family.size());
    out.value = solver.solve(all);
    out.witness = empty_tree(out.value);
    solver.build(out.witness, 0, all, out.value, view.origin);
    return out;
}

// ---------------------------------------------------------------------------
// Littlestone dimension, tree form

namespace {

class TreeOracle
{
public:
    TreeOracle(const SetFamily& family, Budget& budget) : _cols(columns(family)), _budget(budget) {}

    bool shattered(const Bitset& t, std::size_t depth)
    {
        if (depth == 0)
            return t.any();
        auto key = std::make_pair(t.words(), depth);
        if (auto it = _memo.find(key); it != _memo.end())
            return it->second;
        _budget.tick();
        bool ok = false;
        for (std::size_t x = 0; x < _cols.size() && !ok; ++x)
            ok = shattered(t & _cols[x], depth - 1) && shattered(difference(t, _cols[x]), depth - 1);
        _memo.emplace(std::move(key), ok);
        return ok;
    }

    void build(LsTree& tree, std::size_t node, const Bitset& t, std::size_t remaining,
               const std::vector<std::size_t>& origin)
    {
        if (remaining == 0) {
            tree.leaves[node - tree.internal.size()] = origin[t.first()];
            return;
        }
        for (std::size_t x = 0; x < _cols.size(); ++x) {
            Bitset in = t & _cols[x];
            Bitset out = difference(t, _cols[x]);
            if (shattered(in, remaining - 1) && shattered(out, remaining - 1)) {
                tree.internal[node] = static_cast<Element>(x);
                build(tree, 2 * node + 1, in, remaining - 1, origin);
                build(tree, 2 * node + 2, out, remaining - 1, origin);
                return;
            }
        }
        throw Error("internal: tree oracle lost its witness");
    }

private:
    std::vector<Bitset> _cols;
    Budget& _budget;
    std::map<std::pair<std::vector<Bitset::Word>, std::size_t>, bool> _memo;
};

} // namespace

std::optional<LsTree> ls_dimension_tree(const SetFamily& input, std::size_t depth, Budget budget)
{
    const DistinctView view = distinct_view(input);
    if (depth >= 63 || view.family.size() < (std::size_t{1} << depth))
        return std::nullopt;
    TreeOracle oracle(view.family, budget);
    const Bitset all = Bitset::full(view.family.size());
    if (!oracle.shattered(all, depth))
        return std::nullopt;
    LsTree tree = empty_tree(depth);
    oracle.build(tree, 0, all, depth, view.origin);
    return tree;
}

BigInt sauer_shelah_capacity(std::uint64_t n, std::uint64_t d)
{
    BigInt total = 0;
    for (std::uint64_t i = 0; i <= std::min(n, d); ++i)
        total += binomial(n, i);
    return total;
}

DimensionReport dimension_report(const SetFamily& family, Budget budget)
{
    DimensionReport r;
    r.vc = vc_dimension(family, budget);
    r.ls = ls_dimension(family, {}, budget);
    return r;
}

} // namespace sflab
