#include "sflab/geometry.hpp"

#include <algorithm>
#include <set>

#include "sflab/errors.hpp"
#include "sflab/rng.hpp"

namespace sflab {

namespace {

constexpr std::uint64_t grid_steps = std::uint64_t{1} << 16;

template <class P>
void require_distinct(const std::vector<P>& points)
{
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw InvalidArgument("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

SetFamily collect(std::size_t points, std::vector<Set> members)
{
    std::set<Set> seen(members.begin(), members.end());
    const bool multi = seen.size() != members.size();
    return SetFamily(static_cast<std::uint32_t>(points), std::move(members), multi);
}

Rational grid_rational(std::uint64_t i)
{
    Rational q(BigInt(std::to_string(i)), BigInt(std::to_string(grid_steps)));
    q.canonicalize();
    return q;
}

struct Box
{
    Rational x0, y0, dx, dy;
};

Box bounding_box(const std::vector<Point2>& points)
{
    Rational x0 = points[0].x, x1 = x0, y0 = points[0].y, y1 = y0;
    for (const Point2& p : points) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return {x0, y0, x1 - x0, y1 - y0};
}

Point2 grid_center(const Box& box, Rng& rng)
{
    Point2 c{box.x0 + box.dx * grid_rational(rng.below(grid_steps + 1)),
             box.y0 + box.dy * grid_rational(rng.below(grid_steps + 1))};
    c.x.canonicalize();
    c.y.canonicalize();
    return c;
}

} // namespace

Rational squared_distance(const Point2& p, const Point2& q)
{
    const Rational dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

SetFamily trace_disks(const std::vector<Point2>& points, const std::vector<Disk>& disks)
{
    require_distinct(points);
    std::vector<Set> members;
    members.reserve(disks.size());
    for (std::size_t d = 0; d < disks.size(); ++d) {
        if (disks[d].radius_squared <= 0)
            throw InvalidArgument("disk " + std::to_string(d) + " has non-positive radius");
        Set inside;
        for (std::size_t p = 0; p < points.size(); ++p) {
            const int s = cmp(squared_distance(points[p], disks[d].center), disks[d].radius_squared);
            if (s == 0)
                throw GeneralPositionError(p, d);
            if (s < 0)
                inside.push_back(static_cast<Element>(p));
        }
        members.push_back(std::move(inside));
    }
    return collect(points.size(), std::move(members));
}

SetFamily trace_halfspaces(const std::vector<Point3>& points, const std::vector<Halfspace3>& halfspaces)
{
    require_distinct(points);
    std::vector<Set> members;
    members.reserve(halfspaces.size());
    for (std::size_t h = 0; h < halfspaces.size(); ++h) {
        const Halfspace3& H = halfspaces[h];
        if (H.a == 0 && H.b == 0 && H.c == 0)
            throw InvalidArgument("half-space " + std::to_string(h) + " has a zero normal");
        Set inside;
        for (std::size_t p = 0; p < points.size(); ++p) {
            const Point3& q = points[p];
            const int s = cmp(H.a * q.x + H.b * q.y + H.c * q.z, H.w);
            if (s == 0)
                throw GeneralPositionError(p, h);
            if (s < 0)
                inside.push_back(static_cast<Element>(p));
        }
        members.push_back(std::move(inside));
    }
    return collect(points.size(), std::move(members));
}

SetFamily trace(const Scene2& scene)
{
    return trace_disks(scene.points, scene.disks);
}

SetFamily trace(const Scene3& scene)
{
    return trace_halfspaces(scene.points, scene.halfspaces);
}

std::optional<Disk> k_capturing_disk(const std::vector<Point2>& points, const Point2& center, std::size_t k)
{
    if (k == 0 || points.size() <= k)
        throw InvalidArgument("k-capturing disk needs 1 <= k < number of points");
    std::vector<Rational> dist;
    dist.reserve(points.size());
    for (const Point2& p : points)
        dist.push_back(squared_distance(p, center));
    std::sort(dist.begin(), dist.end());
    if (dist[k - 1] == dist[k])
        return std::nullopt;
    Rational r2 = (dist[k - 1] + dist[k]) / 2;
    r2.canonicalize();
    return Disk{center, r2};
}

KCapturingDisks gen_k_capturing_disks(const std::vector<Point2>& points, std::size_t k, std::size_t count,
                                      std::uint64_t seed)
{
    if (k == 0 || points.size() <= k)
        throw InvalidArgument("gen_k_capturing_disks needs 1 <= k < number of points");
    require_distinct(points);
    const Box box = bounding_box(points);
    Rng rng(seed);
    KCapturingDisks out;
    out.disks.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::optional<Disk> disk;
        for (std::uint64_t attempt = 0; !disk; ++attempt) {
            if (attempt == max_center_resamples)
                throw BudgetExceeded("no center with distinct k-th and (k+1)-th distances after "
                                     + std::to_string(max_center_resamples) + " draws");
            if (attempt > 0)
                ++out.resamples;
            disk = k_capturing_disk(points, grid_center(box, rng), k);
        }
        out.disks.push_back(std::move(*disk));
    }
    out.family = trace_disks(points, out.disks);
    return out;
}

std::vector<Point2> random_points(std::size_t count, std::uint64_t grid, std::uint64_t seed)
{
    if (grid == 0 || count > grid * grid)
        throw InvalidArgument("grid too small for the requested number of distinct points");
    Rng rng(seed);
    std::set<std::pair<std::uint64_t, std::uint64_t>> used;
    std::vector<Point2> out;
    while (out.size() < count) {
        const std::uint64_t x = rng.below(grid), y = rng.below(grid);
        if (!used.insert({x, y}).second)
            continue;
        out.push_back({Rational(BigInt(std::to_string(x))), Rational(BigInt(std::to_string(y)))});
    }
    return out;
}

std::vector<Disk> random_disks(const std::vector<Point2>& points, std::size_t count, std::uint64_t seed)
{
    if (points.empty())
        throw InvalidArgument("random_disks needs at least one point");
    const Box box = bounding_box(points);
    Rational diameter2 = box.dx * box.dx + box.dy * box.dy;
    if (diameter2 == 0)
        diameter2 = 1;
    Rng rng(seed);
    std::vector<Disk> out;
    out.reserve(count);
    while (out.size() < count) {
        Disk d{grid_center(box, rng), diameter2 * grid_rational(1 + rng.below(grid_steps))};
        d.radius_squared.canonicalize();
        const bool on_circle = std::any_of(points.begin(), points.end(), [&](const Point2& p) {
            return squared_distance(p, d.center) == d.radius_squared;
        });
        if (!on_circle)
            out.push_back(std::move(d));
    }
    return out;
}

} // namespace sflab
