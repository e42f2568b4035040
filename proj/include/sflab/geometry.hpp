#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sflab/numeric.hpp"
#include "sflab/set_family.hpp"

namespace sflab {

struct Point2
{
    Rational x, y;
    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3
{
    Rational x, y, z;
    friend bool operator==(const Point3&, const Point3&) = default;
};

struct Disk
{
    Point2 center;
    Rational radius_squared;
    friend bool operator==(const Disk&, const Disk&) = default;
};

/// Closed half-space a x + b y + c z <= w.
struct Halfspace3
{
    Rational a, b, c, w;
    friend bool operator==(const Halfspace3&, const Halfspace3&) = default;
};

struct Scene2
{
    std::vector<Point2> points;
    std::vector<Disk> disks;
    friend bool operator==(const Scene2&, const Scene2&) = default;
};

struct Scene3
{
    std::vector<Point3> points;
    std::vector<Halfspace3> halfspaces;
    friend bool operator==(const Scene3&, const Scene3&) = default;
};

Rational squared_distance(const Point2& p, const Point2& q);

/// One member per disk: the indices of the points strictly inside it. The
/// family is flagged as a multifamily exactly when two disks capture the
/// same points. Throws GeneralPositionError when a point lies on a circle,
/// InvalidArgument for a non-positive radius or repeated points.
SetFamily trace_disks(const std::vector<Point2>& points, const std::vector<Disk>& disks);

/// One member per half-space. Throws GeneralPositionError when a point lies
/// on a bounding plane, InvalidArgument for a zero normal or repeated points.
SetFamily trace_halfspaces(const std::vector<Point3>& points, const std::vector<Halfspace3>& halfspaces);

SetFamily trace(const Scene2& scene);
SetFamily trace(const Scene3& scene);

/// The disk around `center` holding exactly the k nearest points, with
/// radius squared halfway between the k-th and (k+1)-th squared distances.
/// nullopt when those two distances tie.
std::optional<Disk> k_capturing_disk(const std::vector<Point2>& points, const Point2& center, std::size_t k);

struct KCapturingDisks
{
    std::vector<Disk> disks;
    SetFamily family;
    std::uint64_t resamples = 0;
};

/// Per-disk attempts before a degenerate point set is reported.
inline constexpr std::uint64_t max_center_resamples = 1000;

/// `count` disks holding exactly k points each. Centers are drawn on the
/// grid of spacing 1/2^16 of the bounding box. Throws InvalidArgument when
/// k == 0 or |points| <= k, BudgetExceeded when a center cannot be placed
/// within `max_center_resamples` draws.
KCapturingDisks gen_k_capturing_disks(const std::vector<Point2>& points, std::size_t k, std::size_t count,
                                      std::uint64_t seed);

/// `count` distinct integer points in [0, grid)^2.
std::vector<Point2> random_points(std::size_t count, std::uint64_t grid, std::uint64_t seed);

/// `count` disks with centers on the bounding-box grid and radius squared
/// drawn uniformly from (0, diameter^2] on the same grid, redrawn whenever a
/// point falls on the circle.
std::vector<Disk> random_disks(const std::vector<Point2>& points, std::size_t count, std::uint64_t seed);

} // namespace sflab
