#pragma once

// Instance files, result documents and SVG figures.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "planepaths/construct_three.hpp"
#include "planepaths/geometry.hpp"
#include "planepaths/paths.hpp"

namespace planepaths {

// "n" on the first content line, then n lines "x y". Lines starting with
// '#' and blank lines are skipped. Errors carry the 1-based line number.
PointSet parse_instance(std::string_view text);
std::string format_instance(const PointSet& S);

std::string read_file(const std::string& path);  // throws Parse on IO failure
void write_file(const std::string& path, std::string_view content);

struct ResultDocument {
  PointSet points;
  std::vector<PathSeq> paths;
  nlohmann::json witness;  // null when there is none
  std::string case_tag;
};

// Keys: points, paths, witness, case_tag, verified. The verdicts under
// "verified" are computed here from points and paths.
nlohmann::json to_json(const ResultDocument& doc);
std::string serialize(const ResultDocument& doc);
// Accepts a full document or a bare list of paths (points then stay empty).
ResultDocument parse_result(std::string_view text);
std::vector<PathSeq> parse_paths(std::string_view text, std::size_t n);

nlohmann::json witness_json(const StructuralWitness& w);
nlohmann::json witness_json(const ThreePathResult& r);

struct SvgOptions {
  bool show_hull = false;
  int size = 800;
};
std::string render_svg(const PointSet& S, const std::vector<PathSeq>& paths,
                       const SvgOptions& opt = {});

}  // namespace planepaths
