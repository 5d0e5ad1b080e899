#include "planepaths/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace planepaths {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_int(const std::string& tok, std::int64_t& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace

PointSet parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<Point> pts;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (!n) {
      std::int64_t v = 0;
      if (tok.size() != 1 || !parse_int(tok[0], v) || v < 0) {
        parse_fail(lineno, "expected the point count, got '" + line + "'");
      }
      n = static_cast<std::size_t>(v);
      continue;
    }
    if (pts.size() == *n) parse_fail(lineno, "more than " + std::to_string(*n) + " points");
    Point p;
    if (tok.size() != 2 || !parse_int(tok[0], p.x) || !parse_int(tok[1], p.y)) {
      parse_fail(lineno, "expected 'x y', got '" + line + "'");
    }
    pts.push_back(p);
  }
  if (!n) parse_fail(lineno, "missing point count");
  if (pts.size() != *n) {
    parse_fail(lineno, "expected " + std::to_string(*n) + " points, found " + std::to_string(pts.size()));
  }
  return PointSet::validate(std::move(pts));
}

std::string format_instance(const PointSet& S) {
  std::string out = std::to_string(S.size()) + "\n";
  for (const Point& p : S.points()) out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) fail(Errc::Parse, "cannot write '" + path + "'");
}

json to_json(const ResultDocument& doc) {
  json pts = json::array();
  for (const Point& p : doc.points.points()) pts.push_back({p.x, p.y});
  json j;
  j["points"] = pts;
  j["paths"] = doc.paths;
  j["witness"] = doc.witness;
  j["case_tag"] = doc.case_tag;

  const auto report = verify_paths(doc.points, doc.paths);
  json plane = json::array(), spanning = json::array();
  for (std::size_t i = 0; i < doc.paths.size(); ++i) {
    plane.push_back(report.plane(i));
    spanning.push_back(report.spanning(i));
  }
  j["verified"] = {{"plane", plane},
                   {"spanning", spanning},
                   {"edge_disjoint", report.edge_disjoint()},
                   {"ok", report.ok()}};
  return j;
}

std::string serialize(const ResultDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace {

std::vector<PathSeq> paths_from(const json& arr, std::size_t n) {
  if (!arr.is_array()) fail(Errc::Parse, "paths must be a list of index lists");
  std::vector<PathSeq> out;
  for (const auto& p : arr) {
    if (!p.is_array()) fail(Errc::Parse, "each path must be a list of indices");
    PathSeq seq;
    for (const auto& v : p) {
      if (!v.is_number_unsigned()) fail(Errc::Parse, "path entries must be non-negative integers");
      const auto i = v.get<Index>();
      if (n != 0 && i >= n) fail(Errc::Parse, "index " + std::to_string(i) + " out of range", {i});
      seq.push_back(i);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::Parse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

ResultDocument parse_result(std::string_view text) {
  const json j = parse_json(text);
  ResultDocument doc;
  if (j.is_array()) {
    doc.paths = paths_from(j, 0);
    return doc;
  }
  if (!j.is_object()) fail(Errc::Parse, "expected a JSON object or array");
  if (j.contains("points")) {
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        fail(Errc::Parse, "points must be [x, y] integer pairs");
      }
      pts.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
    }
    doc.points = PointSet::validate(std::move(pts));
  }
  doc.paths = paths_from(j.value("paths", json::array()), doc.points.size());
  doc.witness = j.value("witness", json());
  doc.case_tag = j.value("case_tag", "");
  return doc;
}

std::vector<PathSeq> parse_paths(std::string_view text, std::size_t n) {
  auto doc = parse_result(text);
  for (const auto& p : doc.paths) {
    for (Index v : p) {
      if (v >= n) fail(Errc::Parse, "index " + std::to_string(v) + " out of range", {v});
    }
  }
  return std::move(doc.paths);
}

namespace {

json edge_json(Edge e) { return json::array({e.a, e.b}); }

json partition_json(const Partition& P) {
  return {{"s1", P.s1()}, {"s2", P.s2()}};
}

}  // namespace

json witness_json(const StructuralWitness& w) {
  json j;
  j["kind"] = witness_kind(w);
  if (const auto* c = std::get_if<CrossingPair>(&w)) {
    j["partition"] = partition_json(c->partition);
    j["edges"] = {edge_json(c->e1), edge_json(c->e2)};
  } else if (const auto* sb = std::get_if<SwitchablePlusBridged>(&w)) {
    j["partition"] = partition_json(sb->partition);
    j["path"] = sb->path;
    j["bridged"] = sb->bridged;
  } else {
    const auto& wh = std::get<Wheel>(w);
    j["center"] = wh.center;
    j["rim"] = wh.rim;
  }
  return j;
}

json witness_json(const ThreePathResult& r) {
  if (const auto* o = std::get_if<OracleFallback>(&r.witness)) {
    return {{"kind", "oracle"}, {"n", o->n}};
  }
  return witness_json(std::get<StructuralWitness>(r.witness));
}

// ---------------------------------------------------------------------------
// SVG

namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const PointSet& S, const std::vector<PathSeq>& paths,
                       const SvgOptions& opt) {
  const double size = opt.size, margin = 30;
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (S.size() > 0) {
    minx = maxx = static_cast<double>(S[0].x);
    miny = maxy = static_cast<double>(S[0].y);
    for (const Point& p : S.points()) {
      minx = std::min(minx, double(p.x));
      maxx = std::max(maxx, double(p.x));
      miny = std::min(miny, double(p.y));
      maxy = std::max(maxy, double(p.y));
    }
  }
  const double span = std::max({maxx - minx, maxy - miny, 1.0});
  const double scale = (size - 2 * margin) / span;
  auto X = [&](Index i) { return fmt(margin + (double(S[i].x) - minx) * scale); };
  auto Y = [&](Index i) { return fmt(size - margin - (double(S[i].y) - miny) * scale); };

  std::ostringstream o;
  const std::string sz = std::to_string(opt.size);
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << sz
    << "\" height=\"" << sz << "\" viewBox=\"0 0 " << sz << " " << sz << "\">\n"
    << "<style>\n"
    << "  .point { fill: #000; }\n"
    << "  .label { font: 11px sans-serif; fill: #444; }\n"
    << "  .hull { fill: none; stroke: #888; stroke-width: 1; stroke-dasharray: 5,4; }\n";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    o << "  .path-" << i << " { fill: none; stroke: " << kPalette[i % std::size(kPalette)]
      << "; stroke-width: 2; stroke-linejoin: round; }\n";
  }
  o << "</style>\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";

  if (opt.show_hull && S.size() >= 3) {
    o << "<polygon class=\"hull\" points=\"";
    bool first = true;
    for (Index h : convex_hull(S)) {
      o << (first ? "" : " ") << X(h) << "," << Y(h);
      first = false;
    }
    o << "\"/>\n";
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    o << "<polyline class=\"path-" << i << "\" points=\"";
    for (std::size_t j = 0; j < paths[i].size(); ++j) {
      if (paths[i][j] >= S.size()) fail(Errc::Parse, "path index out of range", {paths[i][j]});
      o << (j ? " " : "") << X(paths[i][j]) << "," << Y(paths[i][j]);
    }
    o << "\"/>\n";
  }
  for (Index i = 0; i < S.size(); ++i) {
    o << "<circle class=\"point\" cx=\"" << X(i) << "\" cy=\"" << Y(i) << "\" r=\"4\"/>\n";
    o << "<text class=\"label\" x=\"" << fmt(margin + (double(S[i].x) - minx) * scale + 6)
      << "\" y=\"" << fmt(size - margin - (double(S[i].y) - miny) * scale - 6) << "\">" << i
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace planepaths
