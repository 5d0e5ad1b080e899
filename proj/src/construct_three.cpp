#include "planepaths/construct_three.hpp"

#include <algorithm>
#include <string>

#include "planepaths/construct_two.hpp"
#include "planepaths/oracle.hpp"

namespace planepaths {

namespace {

std::vector<Index> with(std::vector<Index> v, std::initializer_list<Index> extra) {
  v.insert(v.end(), extra.begin(), extra.end());
  std::sort(v.begin(), v.end());
  return v;
}

bool in_path(const PathSeq& Z, Index a, Index b) {
  for (std::size_t i = 0; i + 1 < Z.size(); ++i) {
    if ((Z[i] == a && Z[i + 1] == b) || (Z[i] == b && Z[i + 1] == a)) return true;
  }
  return false;
}

// (s1 endpoint, s2 endpoint) form of an edge between the classes.
Edge oriented(const Partition& P, Index x, Index y) {
  return P.side_of(x) == 1 ? Edge{x, y} : Edge{y, x};
}

void check_three(const PointSet& S, const std::vector<PathSeq>& paths, const std::string& where) {
  const auto report = verify_paths(S, paths);
  if (paths.size() != 3 || !report.ok()) {
    internal_failure(where + ": assembled paths fail verification\n" + report.summary());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Wheel

std::optional<Index> is_wheel(const PointSet& S) {
  const std::size_t n = S.size();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  const auto hull = convex_hull(S);
  if (hull.size() != n - 1) return std::nullopt;
  Index center = 0;
  while (hull_position(hull, center) != npos) ++center;
  for (Index r : hull) {
    std::size_t left = 0;
    for (Index w = 0; w < n; ++w) {
      if (w != r && w != center && orient_sign(S[center], S[r], S[w]) > 0) ++left;
    }
    if (2 * left != n - 2) return std::nullopt;
  }
  return center;
}

std::vector<PathSeq> wheel_paths(const PointSet& S, Index center) {
  if (is_wheel(S) != center) fail(Errc::NotAWheel, "not a wheel with this center", {center});
  const std::size_t n = S.size();
  if (n < 6) fail(Errc::NotAWheel, "wheel paths need n >= 6");
  const auto rim = convex_hull(S);  // ccw, labels 0..m-1
  const std::size_t m = n - 1;
  const std::size_t half = n / 2;
  const std::size_t inv2 = (m + 1) / 2;
  std::vector<PathSeq> out;
  for (std::size_t k = 1; k + 1 <= half - 1 + 1 && k <= half - 1; ++k) {
    // Consecutive labels on rim path k sum to tau1 or tau2 (mod m).
    const std::size_t tau1 = (2 * k + half - 3) % m;
    const std::size_t tau2 = (tau1 + 1) % m;
    std::vector<std::size_t> lab{tau1 * inv2 % m};
    for (std::size_t i = 1; i < m; ++i) {
      const std::size_t sigma = i % 2 == 1 ? tau2 : tau1;
      lab.push_back((sigma + m - lab.back()) % m);
    }
    // Reroute the rim edge between labels k-1 and k+n/2-2 through the center.
    const std::size_t x = (k - 1) % m;
    const std::size_t y = (k + half - 2) % m;
    PathSeq path;
    bool rerouted = false;
    for (std::size_t i = 0; i < m; ++i) {
      path.push_back(rim[lab[i]]);
      if (i + 1 < m && !rerouted &&
          ((lab[i] == x && lab[i + 1] == y) || (lab[i] == y && lab[i + 1] == x))) {
        path.push_back(center);
        rerouted = true;
      }
    }
    if (!rerouted) internal_failure("wheel path lacks the edge to reroute");
    out.push_back(std::move(path));
  }
  const auto report = verify_paths(S, out);
  if (!report.ok()) internal_failure("wheel paths fail verification\n" + report.summary());
  return out;
}

// ---------------------------------------------------------------------------
// Structural search

std::string witness_kind(const StructuralWitness& w) {
  switch (w.index()) {
    case 0: return "crossing-pair";
    case 1: return "switchable-plus-bridged";
    default: return "wheel";
  }
}

bool validate_witness(const PointSet& S, const StructuralWitness& w) {
  if (const auto* c = std::get_if<CrossingPair>(&w)) {
    const auto V = visibility_graph(S, c->partition);
    return V.contains(c->e1) && V.contains(c->e2) &&
           segments_cross(S[c->e1.a], S[c->e1.b], S[c->e2.a], S[c->e2.b]);
  }
  if (const auto* sb = std::get_if<SwitchablePlusBridged>(&w)) {
    const auto V = visibility_graph(S, sb->partition);
    const auto& p = sb->path;
    return is_switchable(S, sb->partition, V, p) && sb->partition.is_bridged(sb->bridged) &&
           std::find(p.begin(), p.end(), sb->bridged) == p.end() && V.degree(sb->bridged) >= 2;
  }
  const auto& wh = std::get<Wheel>(w);
  return is_wheel(S) == wh.center;
}

std::pair<Index, Index> claim_halving_partner(const PointSet& S, Index u, Index v) {
  const std::size_t n = S.size();
  if (n % 2 != 0 || n < 4) fail(Errc::PreconditionViolated, "need an even set");
  if (hull_position(convex_hull(S), u) == npos) {
    fail(Errc::PreconditionViolated, "u is not extreme", {u});
  }
  std::vector<Index> A, B;  // left / right of u->v
  for (Index w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    (orient_sign(S[u], S[v], S[w]) > 0 ? A : B).push_back(w);
  }
  if (A.size() != B.size()) fail(Errc::PreconditionViolated, "uv is not halving", {u, v});

  const Edge xy = inner_tangent(S, A, B);
  if (segments_cross(S[u], S[v], S[xy.a], S[xy.b])) return {xy.a, xy.b};
  for (Index q : convex_hull(S, B)) {
    bool all_right = true;
    for (Index w : B) {
      if (w != q && orient_sign(S[v], S[q], S[w]) >= 0) all_right = false;
    }
    if (all_right) return {v, q};
  }
  internal_failure("halving partner: no tangent from v");
}

namespace {

// `G` decides, `S` (same indices, possibly mirrored relative to G) builds the
// partitions that go into the witness.
CrossingPair crossing(const PointSet& S, std::vector<Index> s1, std::vector<Index> s2, Edge e1,
                      Edge e2) {
  return CrossingPair{Partition::from_classes(S, std::move(s1), std::move(s2)), e1, e2};
}

StructuralWitness odd_case(const PointSet& S, const PointSet& G, Index u, bool mirror_ok) {
  const std::size_t n = G.size();
  const auto all = G.indices();
  const auto y = sorted_around_extreme(G, u, all);
  const Index a = y[(n - 1) / 2];
  const Index b = y[(n - 3) / 2];
  const std::vector<Index> A(y.begin() + static_cast<std::ptrdiff_t>((n + 1) / 2), y.end());
  const std::vector<Index> B(y.begin(), y.begin() + static_cast<std::ptrdiff_t>((n - 3) / 2));
  auto below_ab = [&](const std::vector<Index>& X) {
    return std::any_of(X.begin(), X.end(),
                       [&](Index w) { return orient_sign(G[a], G[b], G[w]) < 0; });
  };
  const auto s1 = with(A, {a});
  const auto s2 = with(B, {b, u});
  const auto h1 = convex_hull(G, s1);
  if (below_ab(A)) {
    return crossing(S, s1, s2, Edge{a, u}, Edge{cw_neighbor(h1, a), b});
  }
  if (below_ab(B)) {
    if (!mirror_ok) internal_failure("odd case: both quadrants occupied after mirroring");
    return odd_case(S, G.mirrored(), u, false);
  }
  const auto h2 = convex_hull(G, s2);
  return crossing(S, s1, s2, Edge{ccw_neighbor(h1, a), b}, Edge{a, cw_neighbor(h2, b)});
}

struct Advance {
  Index next_u;
};

std::variant<StructuralWitness, Advance> even_once(const PointSet& S, const PointSet& G, Index u,
                                                   bool mirror_ok) {
  const std::size_t n = G.size();
  const auto all = G.indices();
  const auto y = sorted_around_extreme(G, u, all);
  const Index v = y[(n - 2) / 2];
  const std::vector<Index> A(y.begin() + static_cast<std::ptrdiff_t>(n / 2), y.end());
  const std::vector<Index> B(y.begin(), y.begin() + static_cast<std::ptrdiff_t>((n - 2) / 2));

  const auto [p, q] = claim_halving_partner(G, u, v);
  if (p != v) return crossing(S, with(A, {v}), with(B, {u}), Edge{v, u}, Edge{p, q});
  const auto [p2, r] = claim_halving_partner(G.mirrored(), u, v);
  if (p2 != v) return crossing(S, with(B, {v}), with(A, {u}), Edge{v, u}, Edge{p2, r});

  auto right_of_qr = [&](const std::vector<Index>& X, Index skip) {
    return std::any_of(X.begin(), X.end(), [&](Index w) {
      return w != skip && orient_sign(G[q], G[r], G[w]) < 0;
    });
  };
  const bool a2 = right_of_qr(A, r);
  const bool b2 = right_of_qr(B, q);
  const auto s1 = with(A, {u});
  const auto s2 = with(B, {v});
  if (a2 && b2) {
    const Index r_ccw = ccw_neighbor(convex_hull(G, s1), r);
    const Index q_cw = cw_neighbor(convex_hull(G, s2), q);
    return crossing(S, s1, s2, Edge{r_ccw, q}, Edge{r, q_cw});
  }
  if (a2) {
    const Index r_ccw = ccw_neighbor(convex_hull(G, s1), r);
    return SwitchablePlusBridged{Partition::from_classes(S, s1, s2), {v, r, q, r_ccw}, u};
  }
  if (b2) {
    if (!mirror_ok) internal_failure("even case: quadrant split not resolved by mirroring");
    return even_once(S, G.mirrored(), u, false);
  }
  return Advance{r};
}

}  // namespace

StructuralWitness structural_search(const PointSet& S) {
  const std::size_t n = S.size();
  if (n < 5) fail(Errc::TooFew, "structural search needs n >= 5");
  const auto hull = convex_hull(S);
  Index u = *std::min_element(hull.begin(), hull.end());

  auto checked = [&](StructuralWitness w) {
    if (!validate_witness(S, w)) internal_failure("structural search produced an invalid " + witness_kind(w));
    return w;
  };
  if (n % 2 == 1) return checked(odd_case(S, S, u, true));

  for (std::size_t round = 0; round < n / 2; ++round) {
    auto step = even_once(S, S, u, true);
    if (auto* w = std::get_if<StructuralWitness>(&step)) return checked(std::move(*w));
    u = std::get<Advance>(step).next_u;
  }
  const auto center = is_wheel(S);
  if (!center) internal_failure("structural search exhausted its rounds on a non-wheel");
  return Wheel{*center, hull};
}

// ---------------------------------------------------------------------------
// Assembly

ThreePaths three_from_two_free_edges(const PointSet& S, const Partition& P, const PathSeq& Z,
                                     Edge e1, Edge e2) {
  if (S.size() < 10) fail(Errc::PreconditionViolated, "need n >= 10");
  const auto V = visibility_graph(S, P);
  for (const Edge& e : {e1, e2}) {
    if (P.side_of(e.a) != 1 || P.side_of(e.b) != 2 || !V.contains(e) || in_path(Z, e.a, e.b)) {
      fail(Errc::PreconditionViolated, "edge is not free", {e.a, e.b});
    }
  }
  if (e1 == e2) fail(Errc::PreconditionViolated, "free edges coincide");
  const auto r1 = two_paths_prescribed(S, P.s1(), e1.a, e2.a);
  const auto r2 = two_paths_prescribed(S, P.s2(), e1.b, e2.b);
  ThreePaths out;
  out.paths = {Z, concat(reverse(r2.p), r1.p), concat(reverse(r2.q), r1.q)};
  out.route = "two-free-edges";
  check_three(S, out.paths, out.route);
  return out;
}

ThreePaths three_from_switchable(const PointSet& S, const Partition& P, const PathSeq& Z,
                                 const SwitchablePath& sp) {
  if (S.size() < 10) fail(Errc::PreconditionViolated, "need n >= 10");
  PathSeq z = Z;
  auto at = [&](Index v) { return static_cast<std::size_t>(std::find(z.begin(), z.end(), v) - z.begin()); };
  if (at(sp[0]) > at(sp[3])) z = reverse(z);
  const std::size_t i = at(sp[0]);
  for (std::size_t j = 1; j < 4; ++j) {
    if (i + j >= z.size() || z[i + j] != sp[j]) {
      fail(Errc::PreconditionViolated, "path does not contain the switchable path");
    }
  }
  PathSeq z2(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(i));
  z2.insert(z2.end(), {sp[0], sp[2], sp[1], sp[3]});
  z2.insert(z2.end(), z.begin() + static_cast<std::ptrdiff_t>(i + 4), z.end());
  if (!is_plane(S, z2)) throw PlanarityFailure("rerouted zig-zag path is not plane");

  const int k = P.side_of(sp[0]);
  const auto r1 = two_paths_prescribed(S, P.cls(k), sp[0], sp[2]);
  const auto r2 = two_paths_prescribed(S, P.cls(3 - k), sp[1], sp[3]);
  ThreePaths out;
  out.paths = {z2, concat(reverse(r1.p), r2.p), concat(reverse(r1.q), r2.q)};
  out.route = "switchable";
  check_three(S, out.paths, out.route);
  return out;
}

namespace {

struct Diamond {
  Index a, b, c, d;  // a, c consecutive on ch(s1); b, d on ch(s2); ad crosses cb
};

bool is_diamond(const PointSet& S, const VisibilityGraph& V, const Diamond& q) {
  return V.contains(q.a, q.b) && V.contains(q.a, q.d) && V.contains(q.c, q.b) &&
         V.contains(q.c, q.d) && segments_cross(S[q.a], S[q.d], S[q.c], S[q.b]);
}

std::vector<Diamond> diamonds(const PointSet& S, const Partition& P, const VisibilityGraph& V,
                              Edge e1, Edge e2) {
  const auto h1 = convex_hull(S, P.s1());
  const auto h2 = convex_hull(S, P.s2());
  std::vector<Diamond> out;
  auto push = [&](const Diamond& q) {
    if (!is_diamond(S, V, q)) return;
    for (const auto& o : out) {
      if (o.a == q.a && o.b == q.b && o.c == q.c && o.d == q.d) return;
    }
    out.push_back(q);
  };
  // Keep one endpoint of each crossing edge and step to a hull neighbour of
  // the other; the points between them see each other pairwise.
  for (const auto& [keep, other] : {std::pair{e2, e1}, std::pair{e1, e2}}) {
    const Index c = keep.a, d = other.b;
    for (Index a : {cw_neighbor(h1, c), ccw_neighbor(h1, c)}) {
      for (Index b : {cw_neighbor(h2, d), ccw_neighbor(h2, d)}) push({a, b, c, d});
    }
  }
  for (std::size_t i = 0; i < h1.size(); ++i) {
    for (std::size_t j = 0; j < h2.size(); ++j) {
      const Index x1 = h1[i], x2 = h1[(i + 1) % h1.size()];
      const Index y1 = h2[j], y2 = h2[(j + 1) % h2.size()];
      push({x1, y1, x2, y2});
      push({x1, y2, x2, y1});
      push({x2, y1, x1, y2});
      push({x2, y2, x1, y1});
    }
  }
  return out;
}

ThreePaths from_diamond(const PointSet& S, const Partition& P, const Diamond& q) {
  const int big = P.s1().size() >= P.s2().size() ? 1 : 2;
  const PathSeq Z = zigzag_path(S, P, big);
  // The four diamond edges form the cycle a-b-c-d-a.
  const Edge cyc[4] = {{q.a, q.b}, {q.c, q.b}, {q.c, q.d}, {q.a, q.d}};
  std::vector<Edge> free;
  int missing = -1;
  for (int i = 0; i < 4; ++i) {
    if (!in_path(Z, cyc[i].a, cyc[i].b)) {
      free.push_back(cyc[i]);
      missing = i;
    }
  }
  if (free.empty()) internal_failure("zig-zag path contains all four diamond edges");
  if (free.size() >= 2) {
    auto r = three_from_two_free_edges(S, P, Z, free[0], free[1]);
    r.route = "crossing/" + r.route;
    return r;
  }
  static constexpr int kRot[4][4] = {{1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}, {0, 1, 2, 3}};
  const Index cycle[4] = {q.a, q.b, q.c, q.d};
  SwitchablePath sp;
  for (int j = 0; j < 4; ++j) sp[j] = cycle[kRot[missing][j]];
  auto r = three_from_switchable(S, P, Z, sp);
  r.route = "crossing/" + r.route;
  return r;
}

}  // namespace

ThreePaths three_from_crossing(const PointSet& S, const Partition& P, Edge e1, Edge e2) {
  if (S.size() < 10) fail(Errc::PreconditionViolated, "need n >= 10");
  const auto V = visibility_graph(S, P);
  if (e1.same_as(e2) || !V.contains(e1) || !V.contains(e2) ||
      !segments_cross(S[e1.a], S[e1.b], S[e2.a], S[e2.b])) {
    fail(Errc::PreconditionViolated, "edges are not a crossing pair of the visibility graph");
  }
  const auto candidates = diamonds(S, P, V, oriented(P, e1.a, e1.b), oriented(P, e2.a, e2.b));
  if (candidates.empty()) internal_failure("no crossing pair between consecutive hull vertices");
  std::string first_error;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    try {
      auto r = from_diamond(S, P, candidates[i]);
      if (i > 0) r.route += " (diamond " + std::to_string(i) + ")";
      return r;
    } catch (const InternalError& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  internal_failure("every diamond failed; first: " + first_error);
}

ThreePaths three_from_switchable_plus_bridge(const PointSet& S, const Partition& P,
                                             const SwitchablePath& sp, Index u) {
  if (S.size() < 10) fail(Errc::PreconditionViolated, "need n >= 10");
  const auto V = visibility_graph(S, P);
  if (P.side_of(u) == 0 || P.cls(P.side_of(u)).size() < P.cls(3 - P.side_of(u)).size() ||
      !P.is_bridged(u) || std::find(sp.begin(), sp.end(), u) != sp.end() || V.degree(u) < 2 ||
      !is_switchable(S, P, V, sp)) {
    fail(Errc::PreconditionViolated, "bridged vertex or switchable path invalid", {u});
  }
  const PathSeq Z = zigzag_from(S, P, u);
  if (Z.front() != u) internal_failure("zig-zag path does not start at the bridged vertex");
  Index w = u;
  for (Index x : V.neighbors(u)) {
    if (x != Z[1]) {
      w = x;
      break;
    }
  }
  if (w == u) internal_failure("bridged vertex has no free edge");
  const Edge free_u = oriented(P, u, w);
  for (int j = 0; j < 3; ++j) {
    if (!in_path(Z, sp[j], sp[j + 1])) {
      auto r = three_from_two_free_edges(S, P, Z, free_u, oriented(P, sp[j], sp[j + 1]));
      r.route = "bridged/" + r.route;
      return r;
    }
  }
  auto r = three_from_switchable(S, P, Z, sp);
  r.route = "bridged/" + r.route;
  return r;
}

ThreePathResult three_paths(const PointSet& S) {
  const std::size_t n = S.size();
  if (n < 7) fail(Errc::TooFew, "three paths need n >= 7, got " + std::to_string(n));
  ThreePathResult out;
  if (n <= 9) {
    SearchConfig cfg;
    cfg.k = 3;
    cfg.max_nodes = 500'000'000;
    auto r = find_k_disjoint_paths(S, cfg);
    if (r.status != SearchStatus::Found) {
      internal_failure(std::string("oracle fallback: ") + status_name(r.status));
    }
    out.paths = std::move(r.paths);
    out.witness = OracleFallback{n};
    out.route = "oracle";
  } else {
    auto w = structural_search(S);
    ThreePaths t;
    if (const auto* c = std::get_if<CrossingPair>(&w)) {
      t = three_from_crossing(S, c->partition, c->e1, c->e2);
    } else if (const auto* sb = std::get_if<SwitchablePlusBridged>(&w)) {
      const Partition& P = sb->partition;
      const bool swap = P.side_of(sb->bridged) != 1;
      t = three_from_switchable_plus_bridge(S, swap ? P.swapped() : P, sb->path, sb->bridged);
    } else {
      auto all = wheel_paths(S, std::get<Wheel>(w).center);
      t.paths.assign(all.begin(), all.begin() + 3);
      t.route = "wheel";
    }
    out.paths = std::move(t.paths);
    out.route = std::move(t.route);
    out.witness = std::move(w);
  }
  check_three(S, out.paths, "three paths");
  return out;
}

}  // namespace planepaths
