#include "planepaths/construct_two.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>

#include "planepaths/oracle.hpp"
#include "planepaths/partition.hpp"

namespace planepaths {

std::string_view case_name(TwoPathCase c) noexcept {
  switch (c) {
    case TwoPathCase::OddNotHalving: return "odd-not-halving";
    case TwoPathCase::EvenHalvingA: return "even-halving-A";
    case TwoPathCase::EvenHalvingB: return "even-halving-B";
    case TwoPathCase::EvenHalvingC: return "even-halving-C";
    case TwoPathCase::SEqualsT: return "s-equals-t";
    case TwoPathCase::N5Adhoc: return "n5-adhoc";
  }
  return "unknown";
}

namespace {

using Int256 = boost::multiprecision::int256_t;

bool contains(const std::vector<Index>& v, Index x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

Index smallest_except(std::vector<Index> v, std::initializer_list<Index> excluded) {
  std::sort(v.begin(), v.end());
  for (Index x : v) {
    if (std::find(excluded.begin(), excluded.end(), x) == excluded.end()) return x;
  }
  internal_failure("no admissible visible point");
}

std::vector<Index> without(std::span<const Index> subset, std::initializer_list<Index> excluded) {
  std::vector<Index> out;
  for (Index v : subset) {
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) out.push_back(v);
  }
  return out;
}

// Strict supporting line at hull vertex v, parallel to the chord between its
// two hull neighbours.
Line supporting_line(const PointSet& S, std::span<const Index> hull, Index v) {
  const Point chord = S[ccw_neighbor(hull, v)] - S[cw_neighbor(hull, v)];
  return Line::through_with_direction(S[v], chord);
}

// Both s and t extreme, |subset| >= 3: order the points by the rotation of the
// line through them and the meeting point of the two supporting lines.
PathSeq sweep_path(const PointSet& S, std::span<const Index> subset, Index s, Index t) {
  const auto hull = convex_hull(S, subset);
  const Line ls = supporting_line(S, hull, s);
  const Line lt = supporting_line(S, hull, t);
  PathSeq order(subset.begin(), subset.end());

  const Int256 D = Int256(ls.a) * Int256(lt.b) - Int256(lt.a) * Int256(ls.b);
  if (D == 0) {
    // Parallel supporting lines: sweep a parallel line from s to t.
    auto level = [&](Index v) {
      const Int128 val = ls.a * S[v].x + ls.b * S[v].y + ls.c;
      return val < 0 ? -val : val;
    };
    const Point along = ls.direction();
    std::sort(order.begin(), order.end(), [&](Index u, Index w) {
      const Int128 lu = level(u), lw = level(w);
      if (lu != lw) return lu < lw;
      return dot(along, S[u]) < dot(along, S[w]);
    });
  } else {
    // x = (X / D, Y / D); all comparisons use D * (y - x), which only scales
    // every vector by the same factor.
    const Int256 X = Int256(ls.b) * Int256(lt.c) - Int256(lt.b) * Int256(ls.c);
    const Int256 Y = Int256(ls.c) * Int256(lt.a) - Int256(lt.c) * Int256(ls.a);
    auto rel = [&](Index v) {
      return std::pair<Int256, Int256>{D * S[v].x - X, D * S[v].y - Y};
    };
    auto cross256 = [](const std::pair<Int256, Int256>& u, const std::pair<Int256, Int256>& w) {
      const Int256 c = u.first * w.second - u.second * w.first;
      return c > 0 ? 1 : (c < 0 ? -1 : 0);
    };
    const int o = cross256(rel(s), rel(t));
    if (o == 0) internal_failure("supporting lines meet on line st");
    std::sort(order.begin(), order.end(), [&](Index u, Index w) {
      const auto ru = rel(u), rw = rel(w);
      const int c = cross256(ru, rw) * o;
      if (c != 0) return c > 0;
      return ru.first * ru.first + ru.second * ru.second <
             rw.first * rw.first + rw.second * rw.second;
    });
  }
  if (order.front() != s || order.back() != t) internal_failure("sweep does not run from s to t");
  return order;
}

}  // namespace

PathSeq fan_path(const PointSet& S, std::span<const Index> subset, Index start) {
  PathSeq out{start};
  const auto rest = sorted_around_extreme(S, start, subset);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

PathSeq st_path(const PointSet& S, std::span<const Index> subset, Index s, Index t) {
  if (s == t) fail(Errc::PreconditionViolated, "st_path needs s != t", {s});
  if (subset.size() == 2) return {s, t};
  const auto hull = convex_hull(S, subset);
  const bool s_out = hull_position(hull, s) != npos;
  const bool t_out = hull_position(hull, t) != npos;
  if (s_out && t_out) return sweep_path(S, subset, s, t);
  if (s_out) return reverse(st_path(S, subset, t, s));

  // s is interior. The line st crosses some hull edge ab in its relative
  // interior; split by the line and join the two halves through ab.
  const Point ps = S[s], pt = S[t];
  for (std::size_t i = 0; i < hull.size(); ++i) {
    Index a = hull[i];
    Index b = hull[(i + 1) % hull.size()];
    const int sa = orient_sign(ps, pt, S[a]);
    const int sb = orient_sign(ps, pt, S[b]);
    if (sa == 0 || sb == 0 || sa == sb) continue;
    std::vector<Index> A{s}, B{t};
    for (Index v : subset) {
      if (v == s || v == t) continue;
      (orient_sign(ps, pt, S[v]) == sa ? A : B).push_back(v);
    }
    PathSeq path = st_path(S, A, s, a);
    const PathSeq tail = st_path(S, B, b, t);
    path.insert(path.end(), tail.begin(), tail.end());
    return path;
  }
  internal_failure("line st meets no hull edge");
}

std::pair<Index, Index> select_disjoint_visibility(const PointSet& S, std::span<const Index> T,
                                                   Point p, Point q, Index c) {
  if (T.size() < 3) fail(Errc::PreconditionViolated, "|T| < 3");
  if (p == q) fail(Errc::PreconditionViolated, "p == q");
  auto Sp = visible_hull_points(S, p, T);
  auto Sq = visible_hull_points(S, q, T);
  std::sort(Sp.begin(), Sp.end());
  std::sort(Sq.begin(), Sq.end());
  std::vector<Index> uni;
  std::set_union(Sp.begin(), Sp.end(), Sq.begin(), Sq.end(), std::back_inserter(uni));
  if (uni.size() < 3) fail(Errc::PreconditionViolated, "|T(p) u T(q)| < 3");
  if (!contains(Sq, c)) fail(Errc::PreconditionViolated, "c is not seen from q", {c});

  auto disjoint = [&](Index a, Index b) { return a != b && !segments_cross(p, S[a], q, S[b]); };
  std::pair<Index, Index> out{0, 0};
  bool found = false;
  if (Sp.size() == 2 && Sq.size() == 2) {
    for (Index a : Sp) {
      for (Index b : Sq) {
        if (!found && b != c && disjoint(a, b)) out = {a, b}, found = true;
      }
    }
  } else if (Sq.size() == 2) {
    const Index d = Sq[0] == c ? Sq[1] : Sq[0];
    out = {smallest_except(Sp, {c, d}), d};
    found = true;
  } else {
    const Index x = smallest_except(Sp, {c});
    const Index y = smallest_except(Sq, {x, c});
    out = disjoint(x, y) ? std::pair{x, y} : std::pair{y, x};
    found = true;
  }
  if (!found || !contains(Sp, out.first) || !contains(Sq, out.second) || out.second == c ||
      !disjoint(out.first, out.second)) {
    internal_failure("disjoint visibility selection failed");
  }
  return out;
}

namespace {

// a in T(p), b in T(q) \ {c} with disjoint segments, for the case that c is
// not visible from q at all; first such pair in index order.
std::pair<Index, Index> any_disjoint_visibility(const PointSet& S, std::span<const Index> T, Point p,
                                                Point q, Index c) {
  auto Sp = visible_hull_points(S, p, T);
  auto Sq = visible_hull_points(S, q, T);
  std::sort(Sp.begin(), Sp.end());
  std::sort(Sq.begin(), Sq.end());
  for (Index a : Sp) {
    for (Index b : Sq) {
      if (a != b && b != c && !segments_cross(p, S[a], q, S[b])) return {a, b};
    }
  }
  internal_failure("no disjoint visibility pair");
}

PathSeq join(std::initializer_list<PathSeq> parts) {
  PathSeq out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// The hull edge of P's members that crosses P's line and faces s.
Edge bridge_facing(const PointSet& S, const Partition& P, Index s) {
  const auto hull = convex_hull(S, P.members());
  for (const Edge& e : P.bridges()) {
    const bool forward = ccw_neighbor(hull, e.a) == e.b;
    const Point from = S[forward ? e.a : e.b];
    const Point to = S[forward ? e.b : e.a];
    if (hull.size() == 2 || orient_sign(from, to, S[s]) < 0) return e;
  }
  internal_failure("no bridge faces the apex");
}

TwoPathResult odd_not_halving(const PointSet& S, std::span<const Index> subset, Index s, Index t) {
  const Partition P = balancing_line_through_extreme(S, subset, s, t);
  if (P.side_of(t) != 2) internal_failure("balancing line put t in the larger class");
  const Edge seen = bridge_facing(S, P, s);
  const Index s0 = seen.a;
  const PathSeq Z = zigzag_from(S, P, s0);

  const Index s1 = smallest_except(visible_hull_points(S, S[s], P.s1()), {s0});
  const Index t1 = smallest_except(visible_hull_points(S, S[s], P.s2()), {t});
  TwoPathResult r;
  r.p = join({{s}, Z});
  const PathSeq lower = st_path(S, P.s2(), t, t1);
  const PathSeq fan = fan_path(S, P.s1(), s1);
  r.q = join({lower, {s}, fan});
  r.case_tag = TwoPathCase::OddNotHalving;
  return r;
}

TwoPathResult even_halving(const PointSet& S, std::span<const Index> subset, Index s, Index t) {
  const auto rest = without(subset, {s, t});
  const Partition P = Partition::by_line(S, rest, Line::through(S[s], S[t]));
  const auto& br = P.bridges();
  const Edge left = compare_along(S, S[t] - S[s], br[0], br[1]) <= 0 ? br[0] : br[1];
  const Index s0 = left.a, t0 = left.b;

  auto seen_by_both = [&](int side) {
    auto a = visible_hull_points(S, S[s], P.cls(side));
    auto b = visible_hull_points(S, S[t], P.cls(side));
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return static_cast<std::size_t>(std::unique(a.begin(), a.end()) - a.begin());
  };

  TwoPathResult r;
  int k = 0;  // class the zig-zag path starts in
  if (seen_by_both(2) >= 3) {
    k = 1;
    r.case_tag = TwoPathCase::EvenHalvingA;
  } else if (seen_by_both(1) >= 3) {
    k = 2;
    r.case_tag = TwoPathCase::EvenHalvingB;
  }

  if (k != 0) {
    const auto& K = P.cls(k);
    const auto& O = P.cls(3 - k);
    const Index start = k == 1 ? s0 : t0;
    const PathSeq Z = zigzag_from(S, P, start);
    const Index zh = Z.back();
    r.p = join({{s}, Z, {t}});
    const auto Ot = visible_hull_points(S, S[t], O);
    const auto [a, b] = contains(Ot, zh) ? select_disjoint_visibility(S, O, S[s], S[t], zh)
                                         : any_disjoint_visibility(S, O, S[s], S[t], zh);
    const Index c1 = smallest_except(visible_hull_points(S, S[s], K), {start});
    const PathSeq across = st_path(S, O, b, a);
    const PathSeq fan = fan_path(S, K, c1);
    r.q = join({{t}, across, {s}, fan});
    return r;
  }

  r.case_tag = TwoPathCase::EvenHalvingC;
  const PathSeq Z = zigzag_from(S, P, s0);
  const std::size_t h = Z.size() - 1;
  r.p = join({{s}, Z, {t}});
  const PathSeq first = st_path(S, P.s1(), Z[h - 1], s0);
  const PathSeq second = st_path(S, P.s2(), Z[h], t0);
  r.q = join({{t}, first, second, {s}});
  return r;
}

constexpr std::size_t kSmallHalving = 6;

void check_result(const PointSet& S, std::span<const Index> subset, Index s, Index t,
                  const TwoPathResult& r) {
  const std::string tag(case_name(r.case_tag));
  if (r.p.empty() || r.q.empty() || r.p.front() != s || r.q.front() != t) {
    internal_failure("two paths (" + tag + "): wrong start");
  }
  if (!is_spanning(S, subset, r.p) || !is_spanning(S, subset, r.q)) {
    internal_failure("two paths (" + tag + "): not spanning");
  }
  if (!is_plane(S, r.p) || !is_plane(S, r.q)) internal_failure("two paths (" + tag + "): crossing");
  const PathSeq both[] = {r.p, r.q};
  if (!pairwise_edge_disjoint(both)) internal_failure("two paths (" + tag + "): shared edge");
  if (s != t) {
    const Edge st = Edge{s, t}.canonical();
    for (const auto& p : both) {
      for (const Edge& e : path_edges(p)) {
        if (e == st) internal_failure("two paths (" + tag + "): uses edge st");
      }
    }
  }
}

}  // namespace

TwoPathResult two_paths_prescribed(const PointSet& S, std::span<const Index> subset, Index s,
                                   Index t) {
  const std::size_t n = subset.size();
  if (n < 5) fail(Errc::TooFew, "need at least 5 points, got " + std::to_string(n));
  const auto hull = convex_hull(S, subset);
  for (Index v : {s, t}) {
    if (hull_position(hull, v) == npos) {
      std::string listing;
      for (Index h : hull) listing += " " + std::to_string(h);
      fail(Errc::NotOnHull, "point " + std::to_string(v) + " is not on the hull; hull:" + listing,
           {v});
    }
  }

  TwoPathResult r;
  if (s == t) {
    const auto rest = without(subset, {s});
    const auto arc = visible_hull_points(S, S[s], rest);
    const Index a = arc[0], b = arc[1];
    if (n >= 6) {
      const TwoPathResult inner = two_paths_prescribed(S, rest, a, b);
      r.p = join({{s}, inner.p});
      r.q = join({{s}, inner.q});
      r.case_tag = TwoPathCase::SEqualsT;
    } else {
      const Index starts[] = {a, b};
      const auto found = find_paths_with_starts(S, rest, starts);
      if (found.status != SearchStatus::Found) internal_failure("no two paths on four points");
      r.p = join({{s}, found.paths[0]});
      r.q = join({{s}, found.paths[1]});
      r.case_tag = TwoPathCase::N5Adhoc;
    }
  } else {
    bool halving = false;
    if (n % 2 == 0) {
      std::size_t left = 0;
      for (Index v : subset) {
        if (v != s && v != t && orient_sign(S[s], S[t], S[v]) > 0) ++left;
      }
      halving = 2 * left == n - 2;
    }
    if (halving && n <= kSmallHalving) {
      // The fixed construction can cross itself on tiny sets; search instead.
      try {
        r = even_halving(S, subset, s, t);
        check_result(S, subset, s, t, r);
        return r;
      } catch (const InternalError&) {
      } catch (const Error&) {
      }
      const Index starts[] = {s, t};
      const Edge st[] = {Edge{s, t}};
      const auto found = find_paths_with_starts(S, subset, starts, 10'000'000, st);
      if (found.status != SearchStatus::Found) internal_failure("no two paths on a small halving set");
      r.p = found.paths[0];
      r.q = found.paths[1];
      r.case_tag = TwoPathCase::EvenHalvingC;
    } else {
      r = halving ? even_halving(S, subset, s, t) : odd_not_halving(S, subset, s, t);
    }
  }
  check_result(S, subset, s, t, r);
  return r;
}

TwoPathResult two_paths_prescribed(const PointSet& S, Index s, Index t) {
  const auto all = S.indices();
  return two_paths_prescribed(S, all, s, t);
}

}  // namespace planepaths
