#include <doctest.h>

#include "planepaths/generators.hpp"
#include "planepaths/io.hpp"

using namespace planepaths;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("instance parsing") {
  const auto S = parse_instance("# a comment\n3\n\n0 0\n  10 -2\n# mid\n4 7\n");
  CHECK(S.size() == 3);
  CHECK(S[1] == Point{10, -2});
  CHECK(error_of("x\n").find("line 1") != std::string::npos);
  CHECK(error_of("2\n0 0\n1\n").find("line 3") != std::string::npos);
  CHECK(error_of("2\n0 0\n").find("expected 2 points") != std::string::npos);
  CHECK(error_of("1\n0 0\n1 1\n").find("line 3") != std::string::npos);
  CHECK(error_of("1\n0 0.5\n").find("line 2") != std::string::npos);
  CHECK(error_of("").find("missing point count") != std::string::npos);
  CHECK(error_of("3\n0 0\n1 1\n2 2\n").find("CollinearTriple: 0 1 2") != std::string::npos);
}

TEST_CASE("instance round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto S = random_points(15, seed);
    const auto T = parse_instance(format_instance(S));
    REQUIRE(T.size() == S.size());
    for (Index i = 0; i < S.size(); ++i) CHECK(T[i] == S[i]);
  }
}

TEST_CASE("result document round trip and recomputed verdicts") {
  const auto S = random_points(12, 3);
  const auto r = three_paths(S);
  ResultDocument doc{S, r.paths, witness_json(r), r.route};
  const auto text = serialize(doc);
  const auto back = parse_result(text);
  CHECK(back.paths == r.paths);
  CHECK(back.case_tag == r.route);
  CHECK(back.points.size() == S.size());
  const auto j = nlohmann::json::parse(text);
  for (const char* key : {"points", "paths", "witness", "case_tag", "verified"}) CHECK(j.contains(key));
  CHECK(j["verified"]["ok"] == true);

  // verdicts reflect the paths handed to the serializer, not earlier state
  doc.paths[0] = reverse(doc.paths[1]);
  const auto j2 = to_json(doc);
  CHECK(j2["verified"]["ok"] == false);
  CHECK(j2["verified"]["edge_disjoint"] == false);
  CHECK(serialize(doc) == serialize(doc));
}

TEST_CASE("bare path lists") {
  CHECK(parse_paths("[[0,1,2],[2,0,1]]", 3) == std::vector<PathSeq>{{0, 1, 2}, {2, 0, 1}});
  CHECK_THROWS_AS(parse_paths("[[0,5]]", 3), Error);
  CHECK_THROWS_AS(parse_paths("[[0,-1]]", 3), Error);
  CHECK_THROWS_AS(parse_paths("{not json", 3), Error);
}

TEST_CASE("svg output") {
  const auto W = wheel_points(8, 1);
  const auto paths = wheel_paths(W, 7);
  SvgOptions opt;
  opt.show_hull = true;
  const auto svg = render_svg(W, paths, opt);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "<polyline class=\"path-") == 3);
  CHECK(count(svg, "  .path-") == 3);
  CHECK(count(svg, "<circle") == 8);
  CHECK(count(svg, "class=\"hull\"") == 1);
  CHECK(render_svg(W, paths, opt) == svg);

  const auto bare = render_svg(W, {});
  CHECK(count(bare, "<polyline") == 0);
  CHECK(count(bare, "<circle") == 8);
  CHECK(count(bare, "class=\"hull\"") == 0);
}
