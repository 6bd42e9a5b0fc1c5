#include "latinv/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>

#include "latinv/error.hpp"
#include "latinv/io.hpp"
#include "latinv/metrics.hpp"
#include "latinv/projection.hpp"
#include "latinv/reconstruct.hpp"
#include "latinv/reduction.hpp"

namespace latinv {

namespace {

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
};

InputFormat input_format(const std::string& f) {
  if (f == "csv") return InputFormat::csv;
  if (f == "json") return InputFormat::json;
  return InputFormat::detect;
}

template <typename Fn>
auto with_input(const InputOptions& o, std::istream& in, Fn fn) {
  if (o.path == "-") return fn(in, input_format(o.format));
  std::ifstream file(o.path);
  if (!file) throw ParseError("cannot open input file '" + o.path + "'");
  InputFormat fmt = input_format(o.format);
  if (fmt == InputFormat::detect && o.path.size() > 5 &&
      o.path.compare(o.path.size() - 5, 5, ".json") == 0)
    fmt = InputFormat::json;
  return fn(file, fmt);
}

std::vector<LatticeRecord> load_records(const InputOptions& o, std::istream& in) {
  return with_input(o, in, [](std::istream& s, InputFormat f) { return parse_records(s, f); });
}

double parse_q(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf") return std::numeric_limits<double>::infinity();
  double q = 0;
  try {
    std::size_t used = 0;
    q = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw UsageError("--q expects a number >= 1 or 'inf', got '" + s + "'");
  }
  if (!(q >= 1)) throw UsageError("--q must be >= 1");
  return q;
}

// Runs fn for one record, prefixing any library error with the record id.
template <typename Fn>
auto for_record(const std::string& id, Fn fn) {
  try {
    return fn();
  } catch (const NumericalError& e) {
    throw NumericalError("record '" + id + "': " + e.what());
  } catch (const InputError& e) {
    throw InputError("record '" + id + "': " + e.what());
  }
}

RootForm record_root_form(const LatticeRecord& r, bool oriented, double tol) {
  return for_record(r.id, [&] { return lattice_root_form(r.basis(), oriented, tol); });
}

void add_input(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("input", o.path, "Input file (CSV or JSON); '-' reads stdin");
  cmd->add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"auto", "csv", "json"}));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Isometry invariants of 3D lattices", "latinv"};
  app.require_subcommand(1);

  InputOptions io;
  double tol = kDefaultRelTol;
  bool oriented = false;
  std::string q_text = "inf";
  std::string second_path;
  bool json_out = false;
  bool distances = false;
  int max_conorm = 6;
  int resolution = 200;
  std::string kind = "qt";
  std::string grid_format = "csv";
  std::function<void()> action;

  auto add_tol = [&](CLI::App* c) {
    c->add_option("--tol", tol, "Relative tolerance")->check(CLI::PositiveNumber);
  };

  auto* reduce = app.add_subcommand("reduce", "Reduce each lattice to an obtuse superbase");
  add_input(reduce, io);
  add_tol(reduce);
  int max_iter = kDefaultMaxIter;
  reduce->add_option("--max-iter", max_iter, "Reduction step cap")->check(CLI::PositiveNumber);
  reduce->callback([&] {
    action = [&] {
      auto recs = load_records(io, in);
      out << "id,steps,vonorm_sum_before,vonorm_sum_after,v0x,v0y,v0z,v1x,v1y,v1z,v2x,v2y,v2z,"
             "v3x,v3y,v3z\n";
      for (const auto& r : recs) {
        for_record(r.id, [&] {
          Superbase sb = basis_to_superbase(r.basis());
          auto res = reduce_to_obtuse(sb, tol, max_iter);
          out << r.id << ',' << res.trace.iterations() << ',' << format_number(vonorm_sum(sb))
              << ',' << format_number(vonorm_sum(res.superbase));
          for (const Vec3& v : res.superbase.vectors())
            out << ',' << format_number(v.x) << ',' << format_number(v.y) << ','
                << format_number(v.z);
          out << '\n';
        });
      }
    };
  });

  auto* rootform = app.add_subcommand("rootform", "Invariant report for each lattice");
  add_input(rootform, io);
  add_tol(rootform);
  rootform->add_flag("--oriented", oriented, "Fill the r columns with the oriented root form");
  rootform->add_flag("--json", json_out, "Emit a JSON array instead of CSV");
  rootform->callback([&] {
    action = [&] {
      auto recs = load_records(io, in);
      std::vector<InvariantReport> reports;
      for (const auto& r : recs)
        reports.push_back(for_record(r.id, [&] { return make_report(r, tol); }));
      if (json_out) {
        out << report_json(reports) << '\n';
        return;
      }
      out << report_csv_header() << '\n';
      for (const auto& rep : reports) out << report_csv_row(rep, oriented) << '\n';
    };
  });

  auto* dist = app.add_subcommand("dist", "Root metric between lattices");
  add_input(dist, io);
  add_tol(dist);
  dist->add_option("--q", q_text, "Minkowski exponent, a number >= 1 or 'inf'");
  dist->add_flag("--oriented", oriented, "Use oriented root forms");
  dist->add_option("--with", second_path,
                   "Second input file; compares every record of input with every record here");
  dist->callback([&] {
    action = [&] {
      double q = parse_q(q_text);
      BaseDistance d = BaseDistance::minkowski(q);
      auto a = load_records(io, in);
      std::vector<RootForm> fa;
      for (const auto& r : a) fa.push_back(record_root_form(r, oriented, tol));
      out << "id_a,id_b,distance\n";
      if (second_path.empty()) {
        for (std::size_t x = 0; x < a.size(); ++x)
          for (std::size_t y = x + 1; y < a.size(); ++y)
            out << a[x].id << ',' << a[y].id << ',' << format_number(root_metric(fa[x], fa[y], d))
                << '\n';
        return;
      }
      InputOptions other{second_path, io.format};
      auto b = load_records(other, in);
      for (std::size_t x = 0; x < a.size(); ++x)
        for (const auto& rb : b)
          out << a[x].id << ',' << rb.id << ','
              << format_number(root_metric(fa[x], record_root_form(rb, oriented, tol), d)) << '\n';
    };
  });

  auto* dc7 = app.add_subcommand("dc7", "Sorted distances to the seven partial sums");
  add_input(dc7, io);
  add_tol(dc7);
  dc7->add_flag("--distances", distances, "Emit all-pairs DC7 distances instead of vectors");
  dc7->callback([&] {
    action = [&] {
      auto recs = load_records(io, in);
      std::vector<Dc7Vector> vs;
      for (const auto& r : recs)
        vs.push_back(for_record(r.id, [&] {
          return dc7_vector(reduce_to_obtuse(basis_to_superbase(r.basis()), tol).superbase, tol);
        }));
      if (distances) {
        out << "id_a,id_b,dc7_distance\n";
        for (std::size_t x = 0; x < recs.size(); ++x)
          for (std::size_t y = x + 1; y < recs.size(); ++y)
            out << recs[x].id << ',' << recs[y].id << ',' << format_number(dc7_distance(vs[x], vs[y]))
                << '\n';
        return;
      }
      out << "id,d1,d2,d3,d4,d5,d6,d7\n";
      for (std::size_t x = 0; x < recs.size(); ++x) {
        out << recs[x].id;
        for (double v : vs[x]) out << ',' << format_number(v);
        out << '\n';
      }
    };
  });

  auto* collide = app.add_subcommand("collide", "Non-isometric lattices with equal DC7");
  collide->add_option("--max-conorm", max_conorm, "Largest integer conorm searched")
      ->check(CLI::Range(1, 30));
  collide->callback([&] {
    action = [&] {
      out << "a_p23,a_p13,a_p12,a_p01,a_p02,a_p03,b_p23,b_p13,b_p12,b_p01,b_p02,b_p03,"
             "dc7_distance,rm_inf\n";
      for (const auto& c : find_dc7_collisions(max_conorm)) {
        for (auto v : c.a) out << v << ',';
        for (auto v : c.b) out << v << ',';
        out << format_number(dc7_distance(dc7_vector(to_coform(c.a)), dc7_vector(to_coform(c.b))))
            << ','
            << format_number(root_metric(root_form(to_coform(c.a)), root_form(to_coform(c.b)),
                                         BaseDistance::chebyshev()))
            << '\n';
      }
    };
  });

  auto* synth = app.add_subcommand("synth", "Basis from a root form");
  add_input(synth, io);
  synth->callback([&] {
    action = [&] {
      auto forms = with_input(
          io, in, [](std::istream& s, InputFormat f) { return parse_root_forms(s, f); });
      out << "id,b11,b12,b13,b21,b22,b23,b31,b32,b33\n";
      for (const auto& f : forms) {
        Basis b = for_record(f.id, [&] { return reconstruct_superbase(f.rf).basis(); });
        out << f.id;
        for (int k = 0; k < 3; ++k)
          out << ',' << format_number(b[k].x) << ',' << format_number(b[k].y) << ','
              << format_number(b[k].z);
        out << '\n';
      }
    };
  });

  auto* project = app.add_subcommand("project", "Quotient and full triangle coordinates");
  add_input(project, io);
  add_tol(project);
  project->add_flag("--oriented", oriented, "Project oriented root forms");
  project->callback([&] {
    action = [&] {
      auto recs = load_records(io, in);
      out << "id,qt_x,qt_y,ft_x,ft_y\n";
      for (const auto& r : recs) {
        ProjectedForm p = project_root_form(record_root_form(r, oriented, tol));
        auto cells = [](const std::optional<TrianglePoint>& t) {
          return t ? format_number(t->x) + "," + format_number(t->y) : std::string(",");
        };
        out << r.id << ',' << cells(p.qt) << ',' << cells(p.ft) << '\n';
      }
    };
  });

  auto* density = app.add_subcommand("density", "Population density grid of projected forms");
  add_input(density, io);
  add_tol(density);
  density->add_option("--resolution", resolution, "Bins per axis")->check(CLI::Range(1, 4096));
  density->add_option("--kind", kind, "Triangle")->check(CLI::IsMember({"qt", "ft"}));
  density->add_option("--grid-format", grid_format, "Output format")
      ->check(CLI::IsMember({"csv", "pgm", "svg"}));
  density->add_flag("--oriented", oriented, "Project oriented root forms");
  density->callback([&] {
    action = [&] {
      auto recs = load_records(io, in);
      TriangleKind k = kind == "qt" ? TriangleKind::qt : TriangleKind::ft;
      std::vector<TrianglePoint> pts;
      std::size_t skipped = 0;
      for (const auto& r : recs) {
        ProjectedForm p = project_root_form(record_root_form(r, oriented, tol));
        const auto& pt = k == TriangleKind::qt ? p.qt : p.ft;
        if (pt)
          pts.push_back(*pt);
        else
          ++skipped;
      }
      DensityGrid g = accumulate_density(pts, resolution, k);
      if (grid_format == "pgm")
        write_grid_pgm(out, g);
      else if (grid_format == "svg")
        write_grid_svg(out, g);
      else
        write_grid_csv(out, g);
      err << "points: " << pts.size() << ", skipped (zero row): " << skipped << '\n';
    };
  });

  std::vector<const char*> argv{"latinv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace latinv
