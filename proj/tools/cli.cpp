#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "planepaths/construct_three.hpp"
#include "planepaths/construct_two.hpp"
#include "planepaths/generators.hpp"
#include "planepaths/io.hpp"
#include "planepaths/oracle.hpp"

namespace planepaths::cli {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string paths;
  std::uint64_t seed = 0;
  std::size_t k = 3;
  std::uint64_t budget = 50'000'000;
  Index s = 0, t = 0;
  std::string kind;
  std::size_t n = 0;
  bool hull = false;
  bool max = false;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

PointSet load(const Options& o) { return parse_instance(read_file(o.in)); }

// FNV-1a, for a stable diagnostics file name.
std::uint64_t fingerprint(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string save_diagnostics(const std::string& command, const std::string& instance,
                             const std::string& message) {
  const char* dir = std::getenv("PLANEPATHS_DIAG_DIR");
  char name[64];
  std::snprintf(name, sizeof name, "planepaths-failure-%016llx.txt",
                static_cast<unsigned long long>(fingerprint(instance)));
  const std::string path = (dir && *dir ? std::string(dir) + "/" : std::string()) + name;
  std::string body = "# command: " + command + "\n";
  std::istringstream lines(message);
  for (std::string l; std::getline(lines, l);) body += "# " + l + "\n";
  body += instance;
  try {
    write_file(path, body);
  } catch (const Error&) {
    return {};
  }
  return path;
}

int cmd_pack(const Options& o, std::ostream& out, std::ostream& err) {
  const PointSet S = load(o);
  ThreePathResult r;
  try {
    r = three_paths(S);
  } catch (const InternalError& e) {
    const auto where = save_diagnostics("pack", format_instance(S), e.what());
    err << "internal error: " << e.what() << "\n";
    if (!where.empty()) err << "instance saved to " << where << "\n";
    return kInternalError;
  }
  ResultDocument doc{S, r.paths, witness_json(r), r.route};
  emit(o, out, serialize(doc));
  return kOk;
}

int cmd_two(const Options& o, std::ostream& out, std::ostream& err) {
  const PointSet S = load(o);
  if (o.s >= S.size() || o.t >= S.size()) {
    fail(Errc::NotOnHull, "index out of range", {std::max(o.s, o.t)});
  }
  TwoPathResult r;
  try {
    r = two_paths_prescribed(S, o.s, o.t);
  } catch (const InternalError& e) {
    const auto where = save_diagnostics("two " + std::to_string(o.s) + " " + std::to_string(o.t),
                                        format_instance(S), e.what());
    err << "internal error: " << e.what() << "\n";
    if (!where.empty()) err << "instance saved to " << where << "\n";
    return kInternalError;
  }
  ResultDocument doc{S, {r.p, r.q}, nullptr, std::string(case_name(r.case_tag))};
  emit(o, out, serialize(doc));
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream&) {
  emit(o, out, format_instance(generate(parse_gen_kind(o.kind), o.n, o.seed)));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const PointSet S = load(o);
  const auto paths = parse_paths(read_file(o.paths), S.size());
  const auto report = verify_paths(S, paths);
  std::ostringstream text;
  text << (report.ok() ? "PASS" : "FAIL") << " (" << paths.size() << " paths, " << S.size()
       << " points)\n";
  if (!report.ok()) text << report.summary();
  emit(o, out, text.str());
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream&) {
  const PointSet S = load(o);
  std::vector<PathSeq> paths;
  if (!o.paths.empty()) {
    const std::string text = read_file(o.paths);
    if (text.find_first_not_of(" \t\r\n") != std::string::npos) paths = parse_paths(text, S.size());
  }
  SvgOptions opt;
  opt.show_hull = o.hull;
  emit(o, out, render_svg(S, paths, opt));
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream&) {
  const PointSet S = load(o);
  ResultDocument doc{S, {}, nullptr, ""};
  if (o.max) {
    const auto r = max_disjoint_paths(S, o.budget);
    doc.case_tag = r.definitive ? "max" : "max-lower-bound";
    doc.witness = {{"kind", "oracle-max"}, {"k", r.k}, {"definitive", r.definitive}, {"nodes", r.nodes}};
  } else {
    SearchConfig cfg;
    cfg.k = o.k;
    cfg.max_nodes = o.budget;
    cfg.allow_large = true;
    auto r = find_k_disjoint_paths(S, cfg);
    doc.paths = std::move(r.paths);
    doc.case_tag = status_name(r.status);
    doc.witness = {{"kind", "oracle"}, {"k", o.k}, {"status", status_name(r.status)}, {"nodes", r.nodes}};
  }
  emit(o, out, serialize(doc));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-disjoint plane spanning paths in point sets"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&, std::ostream&)> handler;

  auto input = [&](CLI::App* sub) { sub->add_option("--in", o.in, "instance file")->required(); };
  auto output = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file (default: stdout)"); };

  auto* pack = app.add_subcommand("pack", "three edge-disjoint plane spanning paths");
  input(pack);
  output(pack);
  pack->callback([&] { handler = cmd_pack; });

  auto* two = app.add_subcommand("two", "two paths starting at hull points s and t");
  input(two);
  output(two);
  two->add_option("s", o.s, "start of the first path")->required();
  two->add_option("t", o.t, "start of the second path")->required();
  two->callback([&] { handler = cmd_two; });

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", o.kind, "random | convex | wheel")->required();
  gen->add_option("n", o.n, "number of points")->required();
  gen->add_option("--seed", o.seed, "64-bit seed");
  output(gen);
  gen->callback([&] { handler = cmd_gen; });

  auto* verify = app.add_subcommand("verify", "check paths independently");
  input(verify);
  verify->add_option("--paths,paths", o.paths, "result document or list of paths")->required();
  output(verify);
  verify->callback([&] { handler = cmd_verify; });

  auto* render = app.add_subcommand("render", "draw points and paths as SVG");
  input(render);
  render->add_option("--paths,paths", o.paths, "result document or list of paths");
  output(render);
  render->add_flag("--hull", o.hull, "draw the convex hull dashed");
  render->callback([&] { handler = cmd_render; });

  auto* oracle = app.add_subcommand("oracle", "exhaustive search on small sets");
  input(oracle);
  output(oracle);
  oracle->add_option("--k", o.k, "number of paths")->check(CLI::PositiveNumber);
  oracle->add_option("--budget", o.budget, "search node budget")->check(CLI::PositiveNumber);
  oracle->add_flag("--max", o.max, "largest k instead of a fixed one");
  oracle->callback([&] { handler = cmd_oracle; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return handler(o, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace planepaths::cli
