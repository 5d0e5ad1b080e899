#pragma once

// Seeded point-set generators. Output is deterministic for a fixed seed and
// always in general position.

#include <cstdint>
#include <string_view>

#include "planepaths/geometry.hpp"

namespace planepaths {

enum class GenKind { Random, Convex, Wheel };
GenKind parse_gen_kind(std::string_view name);  // throws Parse

// Uniform integer points in [-10^6, 10^6]^2, rejecting candidates that
// duplicate a point or are collinear with two earlier ones.
PointSet random_points(std::size_t n, std::uint64_t seed);

// Distinct x in [-1000, 1000] on the parabola y = x^2.
PointSet convex_points(std::size_t n, std::uint64_t seed);

// n-1 vertices of a regular polygon of radius 10^6 around the origin, snapped
// to the grid and rotated by a seeded angle, plus the origin as last point.
// n must be even and >= 6; throws UnsupportedN otherwise.
PointSet wheel_points(std::size_t n, std::uint64_t seed);

PointSet generate(GenKind kind, std::size_t n, std::uint64_t seed);

}  // namespace planepaths
