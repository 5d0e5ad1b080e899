#include "planepaths/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "planepaths/construct_three.hpp"

namespace planepaths {

GenKind parse_gen_kind(std::string_view name) {
  if (name == "random") return GenKind::Random;
  if (name == "convex") return GenKind::Convex;
  if (name == "wheel") return GenKind::Wheel;
  fail(Errc::Parse, "unknown generator kind '" + std::string(name) + "'");
}

namespace {

bool fits(const std::vector<Point>& pts, Point c) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == c) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (orient_sign(pts[i], pts[j], c) == 0) return false;
    }
  }
  return true;
}

}  // namespace

PointSet random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-1'000'000, 1'000'000);
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const Point c{coord(rng), coord(rng)};
    if (fits(pts, c)) pts.push_back(c);
  }
  return PointSet::validate(std::move(pts));
}

PointSet convex_points(std::size_t n, std::uint64_t seed) {
  if (n > 2001) fail(Errc::UnsupportedN, "convex generator supports n <= 2001");
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> xs(2001);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<std::int64_t>(i) - 1000;
  std::shuffle(xs.begin(), xs.end(), rng);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({xs[i], xs[i] * xs[i]});
  return PointSet::validate(std::move(pts));
}

PointSet wheel_points(std::size_t n, std::uint64_t seed) {
  if (n < 6 || n % 2 != 0) {
    fail(Errc::UnsupportedN, "wheel needs even n >= 6, got " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  const std::size_t m = n - 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double phase = angle(rng);
    const double radius = 1e6 - 1000.0 * attempt;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < m; ++i) {
      const double a = phase + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
      pts.push_back({std::llround(radius * std::cos(a)), std::llround(radius * std::sin(a))});
    }
    pts.push_back({0, 0});
    try {
      PointSet S = PointSet::validate(std::move(pts));
      if (is_wheel(S) == n - 1) return S;
    } catch (const Error&) {
    }
  }
  internal_failure("could not snap a wheel configuration");
}

PointSet generate(GenKind kind, std::size_t n, std::uint64_t seed) {
  switch (kind) {
    case GenKind::Random: return random_points(n, seed);
    case GenKind::Convex: return convex_points(n, seed);
    case GenKind::Wheel: return wheel_points(n, seed);
  }
  fail(Errc::Parse, "unknown generator kind");
}

}  // namespace planepaths
