#include "cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwitt/diagram.hpp"
#include "gwitt/grassmann_witt.hpp"
#include "gwitt/io.hpp"
#include "gwitt/picard.hpp"
#include "gwitt/witt_modules.hpp"
#include "render.hpp"

namespace gwitt::cli {

namespace {

using io::Json;

struct Options {
  std::string format = "ascii";
  bool trivial_base = false;
  int cell_size = 24;
  bool annotate = false;
  int d = 0;
  int e = 0;
  std::string scope = "all";
  int max_frame = 6;
  std::string which = "iota";
  std::vector<int> rows;
  std::vector<int> dvec;
  std::vector<int> evec;
  int ambient = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rows_string(const FramedDiagram& diagram) { return to_string(BasisElement(diagram)); }

GradedDegree shown_degree(const GradedDegree& degree, bool trivial_base) {
  return trivial_base ? degree.trivialized() : degree;
}

void print_lines(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << l << '\n';
}

render::SvgOptions svg_options(const Options& o) { return {o.cell_size, o.annotate}; }

// ---- enumerate ----------------------------------------------------------

int cmd_enumerate(const Options& o, std::ostream& out) {
  const GradedBasis basis(o.d, o.e);
  if (o.format == "json") {
    Json diagrams = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& diagram = std::get<FramedDiagram>(basis.element(i));
      Json j;
      j["rows"] = io::to_json(diagram)["rows"];
      j["degree"] = io::to_json(shown_degree(basis.degree_of(i), o.trivial_base));
      if (o.annotate) j["class"] = std::string(to_string(classify(diagram)));
      diagrams.push_back(std::move(j));
    }
    Json j;
    j["frame"] = Json::array({o.d, o.e});
    j["count"] = basis.size();
    j["diagrams"] = std::move(diagrams);
    out << j.dump(2) << '\n';
  } else if (o.format == "svg") {
    std::map<std::pair<int, int>, std::vector<FramedDiagram>> groups;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& deg = basis.degree_of(i);
      groups[{deg.shift, deg.det_twist}].push_back(std::get<FramedDiagram>(basis.element(i)));
    }
    std::vector<render::SheetRow> rows;
    for (auto& [key, diagrams] : groups) {
      const std::string caption = "shift " + std::to_string(key.first) + ", twist " +
                                  std::to_string(key.second) + " (" +
                                  std::to_string(diagrams.size()) + ")";
      rows.push_back({caption, std::move(diagrams)});
    }
    out << render::svg_sheet(rows, svg_options(o));
  } else {
    out << "frame " << o.d << "x" << o.e << ": " << basis.size() << " even diagrams\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& diagram = std::get<FramedDiagram>(basis.element(i));
      const auto deg = shown_degree(basis.degree_of(i), o.trivial_base);
      out << "\n" << rows_string(diagram) << "  shift " << deg.shift << "  base "
          << to_string(deg.base) << "  twist " << deg.det_twist;
      if (o.annotate) out << "  " << to_string(classify(diagram));
      out << '\n';
      print_lines(out, render::ascii_rows(diagram));
    }
  }
  return ok;
}

// ---- table --------------------------------------------------------------

int cmd_table(const Options& o, std::ostream& out) {
  const RankTable table = rank_table(o.d, o.e, o.trivial_base);
  if (o.format == "json") {
    out << io::table_json(o.d, o.e, o.trivial_base, table).dump(2) << '\n';
    return ok;
  }
  if (o.format == "svg") throw UsageError("table: svg output is not available");
  out << "frame " << o.d << "x" << o.e << (o.trivial_base ? " (trivial base)" : "") << '\n';
  out << "shift  twist  " << (o.trivial_base ? "" : "base          ") << "rank\n";
  for (const auto& [key, rank] : table) {
    std::string base = "0";
    if (!key.base.empty()) {
      base.clear();
      for (int i : key.base) base += (base.empty() ? "" : "+") + ("BaseDet(" + std::to_string(i) + ")");
    }
    out << key.shift << "      " << key.twist << "      ";
    if (!o.trivial_base) {
      base.resize(std::max<std::size_t>(base.size(), 14), ' ');
      out << base;
    }
    out << rank << '\n';
  }
  out << "total " << table_total(table) << '\n';
  return ok;
}

// ---- verify -------------------------------------------------------------

struct Suite {
  Json body = Json::array();
  bool passed = true;
};

Suite suite_exactness(int max_frame) {
  Suite s;
  for (int d = 1; d <= max_frame; ++d) {
    for (int e = 1; e <= max_frame; ++e) {
      Json entry;
      entry["frame"] = Json::array({d, e});
      bool frame_ok = true;
      const auto over_z = verify_exactness(d, e);
      entry["Z"] = over_z.exact();
      frame_ok &= over_z.exact() && over_z.verdicts_agree();
      for (std::int64_t p : {2, 3, 5}) {
        const auto mod_p = verify_exactness(d, e, p);
        entry["F_" + std::to_string(p)] = mod_p.exact();
        frame_ok &= mod_p.exact() && mod_p.verdicts_agree();
      }
      entry["ok"] = frame_ok;
      if (!frame_ok) entry["report"] = io::to_json(over_z);
      s.passed &= frame_ok;
      s.body.push_back(std::move(entry));
    }
  }
  return s;
}

Suite suite_degrees(int max_frame) {
  Suite s;
  for (int d = 2; d <= max_frame; ++d) {
    for (int e = 2; e <= max_frame; ++e) {
      const auto report = verify_degree_transport(d, e);
      const bool homogeneous = maps_homogeneous_trivial_base(d, e);
      Json entry;
      entry["frame"] = Json::array({d, e});
      entry["transport"] = report.ok();
      entry["checked"] = report.checks.size();
      entry["homogeneous_trivial_base"] = homogeneous;
      if (!report.ok()) entry["report"] = io::to_json(report);
      s.passed &= report.ok() && homogeneous;
      s.body.push_back(std::move(entry));
    }
  }
  return s;
}

Suite suite_cond_even(int max_frame) {
  Suite s;
  for (int d = 1; d <= max_frame; ++d) {
    for (int e = 1; e <= max_frame; ++e) {
      Json failures = Json::array();
      const auto diagrams = enumerate_even(d, e);
      for (const auto& diagram : diagrams) {
        if (!verify_cond_even(diagram) || !pushforward_admissible(diagram)) {
          failures.push_back(io::to_json(diagram));
        }
      }
      Json entry;
      entry["frame"] = Json::array({d, e});
      entry["diagrams"] = diagrams.size();
      entry["ok"] = failures.empty();
      if (!failures.empty()) entry["failures"] = std::move(failures);
      s.passed &= failures.empty();
      s.body.push_back(std::move(entry));
    }
  }
  return s;
}

Suite suite_bord(int max_frame) {
  Suite s;
  for (int d = 2; d <= max_frame; ++d) {
    for (int e = 2; e <= max_frame; ++e) {
      Json entry;
      entry["frame"] = Json::array({d, e});
      const bool zero = map_matrix(MapKind::bord, d, e).is_zero();
      const bool predicted = d % 2 == 0 && e % 2 == 0;
      entry["bord_zero"] = zero;
      entry["both_even"] = predicted;
      s.passed &= zero == predicted;
      s.body.push_back(std::move(entry));
    }
  }
  return s;
}

Suite suite_duality(int max_frame) {
  Suite s;
  for (int d = 1; d <= max_frame; ++d) {
    for (int e = 1; e <= max_frame; ++e) {
      const auto report = duality_check(d, e);
      Json entry = io::to_json(report);
      entry["ok"] = report.ok();
      s.passed &= report.ok();
      s.body.push_back(std::move(entry));
    }
  }
  return s;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::vector<std::string> all = {"exactness", "degrees", "cond-even", "bord", "duality"};
  const std::vector<std::string> scopes = o.scope == "all" ? all : std::vector{o.scope};
  Json report;
  report["scope"] = o.scope;
  report["max_frame"] = o.max_frame;
  Json suites;
  bool passed = true;
  for (const auto& scope : scopes) {
    Suite s;
    if (scope == "exactness") s = suite_exactness(o.max_frame);
    if (scope == "degrees") s = suite_degrees(o.max_frame);
    if (scope == "cond-even") s = suite_cond_even(o.max_frame);
    if (scope == "bord") s = suite_bord(o.max_frame);
    if (scope == "duality") s = suite_duality(o.max_frame);
    Json j;
    j["ok"] = s.passed;
    j["frames"] = std::move(s.body);
    suites[scope] = std::move(j);
    passed &= s.passed;
  }
  report["ok"] = passed;
  report["suites"] = std::move(suites);
  out << report.dump(2) << '\n';
  return passed ? ok : verification_failed;
}

// ---- maps ---------------------------------------------------------------

int cmd_maps(const Options& o, std::ostream& out) {
  const auto which = parse_map_kind(o.which);
  if (!which) throw UsageError("maps: unknown map " + o.which);
  const BasisMap map = map_matrix(*which, o.d, o.e);
  if (o.format == "json") {
    out << io::to_json(map).dump(2) << '\n';
  } else if (o.format == "svg") {
    out << render::svg_map(map, svg_options(o));
  } else {
    out << to_string(map.which) << ": F(" << map.source.d() << "," << map.source.e() << ") -> F("
        << map.target.d() << "," << map.target.e() << ")\n";
    std::size_t arrows = 0;
    for (std::size_t c = 0; c < map.source.size(); ++c) {
      const auto r = map.image_of(c);
      if (!r) continue;
      ++arrows;
      auto src = render::ascii_rows(map.source.element(c));
      auto tgt = render::ascii_rows(map.target.element(*r));
      std::vector<std::string> arrow(std::max(src.size(), tgt.size()), "");
      arrow[(arrow.size() - 1) / 2] = "-->";
      out << '\n';
      print_lines(out, render::side_by_side({src, arrow, tgt}, "  "));
    }
    if (arrows == 0) out << "\nzero map\n";
  }
  return ok;
}

// ---- classify -----------------------------------------------------------

Json classify_json(const FramedDiagram& diagram) {
  const auto cls = classify(diagram);
  const auto [shift, twist] = class_degree(cls, diagram.d(), diagram.e());
  Json j;
  j["rows"] = io::to_json(diagram)["rows"];
  j["class"] = std::string(to_string(cls));
  j["shift"] = shift;
  j["twist"] = twist;
  return j;
}

int cmd_classify(const Options& o, std::ostream& out) {
  std::vector<FramedDiagram> diagrams;
  if (!o.rows.empty()) {
    FramedDiagram diagram(o.d, o.e, o.rows);
    if (!is_even(diagram)) throw UsageError("classify: " + rows_string(diagram) + " is not even");
    diagrams.push_back(std::move(diagram));
  } else {
    diagrams = enumerate_even(o.d, o.e);
  }
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& diagram : diagrams) list.push_back(classify_json(diagram));
    Json j;
    j["frame"] = Json::array({o.d, o.e});
    j["diagrams"] = std::move(list);
    out << j.dump(2) << '\n';
    return ok;
  }
  if (o.format == "svg") throw UsageError("classify: svg output is not available");
  for (const auto& diagram : diagrams) {
    const auto j = classify_json(diagram);
    out << rows_string(diagram) << "  " << j["class"].get<std::string>() << "  shift "
        << j["shift"].get<int>() << "  twist " << j["twist"].get<int>() << '\n';
  }
  return ok;
}

// ---- canonical ----------------------------------------------------------

int cmd_canonical(const Options& o, std::ostream& out) {
  const JumpTuples tuples{o.dvec, o.evec};
  const int n = o.ambient;
  if (tuples.dvec.size() != tuples.evec.size() || tuples.dvec.empty()) {
    throw UsageError("canonical: --dvec and --evec need the same non-zero length");
  }
  const int d = tuples.dvec.back();
  const int e = n - d;
  if (d < 1 || e < 1 || !valid_jump_tuples(tuples, d, e)) {
    throw UsageError("canonical: jump tuples do not describe a diagram in a " + std::to_string(d) +
                     "x" + std::to_string(e) + " frame");
  }
  const FramedDiagram diagram = from_jump_tuples(tuples, d, e);
  const bool even = is_even(diagram);

  Json j;
  j["frame"] = Json::array({d, e});
  j["rows"] = io::to_json(diagram)["rows"];
  j["tuples"] = io::to_json(tuples);
  j["relative_dimension"] = relative_dimension(tuples);
  j["canonical_flag"] = io::to_json(rel_canonical_flag(tuples, n));
  j["canonical_grassmannian"] = io::to_json(rel_canonical_grass(d, n));
  j["canonical_resolution"] = io::to_json(rel_canonical_ff(tuples, d, e));
  j["pushforward_admissible"] = pushforward_admissible(diagram);
  j["even"] = even;
  if (even) {
    j["twist"] = io::to_json(twist_class(diagram));
    j["square_class_identity"] = verify_cond_even(diagram);
  }
  if (o.format == "json") {
    out << j.dump(2) << '\n';
    return ok;
  }
  if (o.format == "svg") throw UsageError("canonical: svg output is not available");
  out << "diagram " << rows_string(diagram) << " in " << d << "x" << e << '\n';
  out << "relative dimension   " << relative_dimension(tuples) << '\n';
  out << "canonical (flag)     " << to_string(rel_canonical_flag(tuples, n)) << '\n';
  out << "canonical (grass)    " << to_string(rel_canonical_grass(d, n)) << '\n';
  out << "canonical (resol.)   " << to_string(rel_canonical_ff(tuples, d, e)) << '\n';
  out << "admissible           " << (pushforward_admissible(diagram) ? "yes" : "no") << '\n';
  out << "even                 " << (even ? "yes" : "no") << '\n';
  if (even) {
    out << "twist                " << to_string(twist_class(diagram)) << '\n';
    out << "square-class check   " << (verify_cond_even(diagram) ? "holds" : "fails") << '\n';
  }
  return ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Even Young diagrams and Witt groups of Grassmannians", "gwitt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"ascii", "svg", "json"}));
  app.add_flag("--trivial-base", o.trivial_base, "Drop base twists from degrees");
  app.add_option("--cell-size", o.cell_size, "SVG pixels per lattice cell")
      ->check(CLI::PositiveNumber);
  app.add_flag("--annotate", o.annotate, "Add classes and captions");

  auto frame = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "Rows of the frame")->required()->check(CLI::Range(1, 30));
    sub->add_option("--e", o.e, "Columns of the frame")->required()->check(CLI::Range(1, 30));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List even diagrams with degrees");
  frame(enumerate);
  auto* table = app.add_subcommand("table", "Rank table per (shift, twist)");
  frame(table);
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--scope", o.scope, "Suite to run")
      ->check(CLI::IsMember({"exactness", "degrees", "cond-even", "bord", "duality", "all"}));
  verify->add_option("--max-frame", o.max_frame, "Largest d and e")->check(CLI::Range(2, 12));
  auto* maps = app.add_subcommand("maps", "Matrix of iota, kappa or bord around F(d,e)");
  frame(maps);
  maps->add_option("--which", o.which, "Map")->check(CLI::IsMember({"iota", "kappa", "bord"}));
  auto* classify_cmd = app.add_subcommand("classify", "Generator classes of even diagrams");
  frame(classify_cmd);
  classify_cmd->add_option("--rows", o.rows, "Classify a single diagram")->delimiter(',');
  auto* canonical = app.add_subcommand("canonical", "Canonical classes for jump tuples");
  canonical->add_option("--dvec", o.dvec, "d_1 < ... < d_k")->required()->delimiter(',');
  canonical->add_option("--evec", o.evec, "e_1 > ... > e_k")->required()->delimiter(',');
  canonical->add_option("--ambient", o.ambient, "Rank of V")->required()->check(CLI::Range(2, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? ok : usage_error;
  }
  if (o.format == "svg" && o.cell_size < 4) {
    err << "error: --cell-size must be at least 4 for svg output\n";
    return usage_error;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (maps->parsed()) return cmd_maps(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (canonical->parsed()) return cmd_canonical(o, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace gwitt::cli
