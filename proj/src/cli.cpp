#include "cotwell/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cotwell/grid.hpp"
#include "cotwell/report.hpp"
#include "cotwell/wkb.hpp"

namespace cotwell {
namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw UsageError(std::string(what) + ": not an integer: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, sep);)
    if (!part.empty()) parts.push_back(part);
  return parts;
}

// A column-oriented result: CSV header + rows, or a JSON array of objects.
struct Sheet {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  return v.dump();
}

void write_sheet_csv(std::ostream& out, const Sheet& sheet) {
  for (std::size_t c = 0; c < sheet.columns.size(); ++c) out << (c ? "," : "") << sheet.columns[c];
  out << '\n';
  for (const auto& row : sheet.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
}

nlohmann::json sheet_json(const Sheet& sheet) {
  auto arr = nlohmann::json::array();
  for (const auto& row : sheet.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[sheet.columns[c]] = row[c];
    arr.push_back(obj);
  }
  return arr;
}

struct Options {
  double v0 = 1.0;
  int n_grid = 8000;
  double scan_step = 1e-3;
  double bisect_tol = 1e-10;
  double wkb_tol = 1e-8;
  std::string levels = "0..8";
  std::string method = "numerov";
  std::string format = "csv";
  std::string out;
  std::string wall_scheme = "series";

  int level = 0;
  std::string methods = "numerov";
  std::string panel;
  std::string grids = "500,1000,2000,4000";
};

SolverConfig make_config(const Options& opt) {
  if (opt.n_grid % 2 != 0) throw UsageError("--n-grid must be even");
  if (opt.n_grid < 100) throw UsageError("--n-grid must be at least 100");
  SolverConfig config;
  config.model.v0 = opt.v0;
  config.n_grid = opt.n_grid;
  config.numerov.scan_step = opt.scan_step;
  config.numerov.tol = opt.bisect_tol;
  config.numerov.wall = opt.wall_scheme == "series" ? WallScheme::series : WallScheme::last_interior;
  config.wkb_tol = opt.wkb_tol;
  return config;
}

// Writes the payload to --out or to `out`; compare tables also get a
// full-precision sibling file.
class Sink {
 public:
  Sink(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  bool json() const { return opt_.format == "json"; }

  void emit(const std::function<void(std::ostream&)>& write,
            const std::function<void(std::ostream&)>& write_full = {}) {
    if (opt_.out.empty()) {
      write(out_);
      return;
    }
    const auto path = resolve_output_path(opt_.out);
    write_file(path, write);
    if (write_full) {
      auto full = path;
      full.replace_filename(path.stem().string() + ".full" + path.extension().string());
      write_file(full, write_full);
    }
  }

 private:
  void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& write) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + path.string());
    write(file);
    if (!file) throw std::runtime_error("failed writing " + path.string());
    err_ << "wrote " << path.string() << '\n';
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

void report_errors(std::ostream& err, const std::vector<CellError>& errors) {
  for (const auto& e : errors) err << "level " << e.n << " " << e.column << ": " << e.message << '\n';
}

int emit_table(const ComparisonTable& table, const SolverConfig& config, Sink& sink, std::ostream& err) {
  if (sink.json())
    sink.emit([&](std::ostream& o) { o << to_json(table, config).dump(2) << '\n'; });
  else
    sink.emit([&](std::ostream& o) { write_table_csv(o, table); },
              [&](std::ostream& o) { write_table_csv(o, table, -1); });
  if (table.extrapolated) err << "note: levels beyond 7 have no published reference\n";
  report_errors(err, table.errors);
  return table.errors.empty() ? kExitOk : kExitSolver;
}

Sheet solve_sheet(const std::string& method, int first, int last, const SolverConfig& config) {
  Sheet sheet;
  const Potential potential(config.model);
  if (method == "numerov") {
    sheet.columns = {"n", "energy", "nodes", "parity"};
    const auto spectrum = solve_spectrum(potential, Grid(config.n_grid), last, config.numerov);
    for (int n = first; n < last; ++n) {
      const auto& s = spectrum[static_cast<std::size_t>(n)];
      sheet.rows.push_back({n, s.energy, s.node_count, std::string(to_string(s.parity))});
    }
  } else if (method == "wkb") {
    sheet.columns = {"n", "energy", "x1", "x2", "action"};
    for (int n = first; n < last; ++n) {
      const auto lv = quantize(potential, n, config.wkb_tol);
      sheet.rows.push_back({n, lv.energy, lv.turning_points.left, lv.turning_points.right, lv.action});
    }
  } else if (method == "wkb-closed") {
    if (config.model.v0 != 1.0) throw SolverError("wkb-closed: the closed form assumes v0 = 1");
    if (first < 1) throw UsageError("wkb-closed: levels start at 1");
    sheet.columns = {"n", "energy", "integral", "box"};
    for (int n = first; n < last; ++n)
      sheet.rows.push_back({n, closed_form_energy(n), hard_wall_quantize_integral(potential, n), box_energy(n)});
  } else if (method == "spt") {
    if (config.model.v0 != 1.0) throw SolverError("spt: the expansion is built for v0 = 1");
    sheet.columns = {"n", "e0", "e1", "e2", "total"};
    for (int n = first; n < last; ++n) {
      const auto lv = total_energy(n, config.spt);
      sheet.rows.push_back({n, lv.e0, lv.e1, lv.e2, lv.total});
    }
  } else if (method == "analytic") {
    if (first != 0 || last != 1) throw SolverError("analytic: only level 0 has a closed form");
    sheet.columns = {"n", "energy"};
    sheet.rows.push_back({0, solve_state(Method::analytic, 0, config).energy});
  }
  return sheet;
}

int cmd_solve(const Options& opt, Sink& sink, std::ostream& err) {
  const auto config = make_config(opt);
  const auto [first, last] = parse_levels(opt.levels);
  if (opt.method == "all") return emit_table(build_table(first, last, config), config, sink, err);
  const auto sheet = solve_sheet(opt.method, first, last, config);
  if (sink.json())
    sink.emit([&](std::ostream& o) {
      const nlohmann::json doc = {{"method", opt.method}, {"levels", sheet_json(sheet)}, {"config", to_json(config)}};
      o << doc.dump(2) << '\n';
    });
  else
    sink.emit([&](std::ostream& o) { write_sheet_csv(o, sheet); });
  return kExitOk;
}

int cmd_compare(const Options& opt, Sink& sink, std::ostream& err) {
  const auto config = make_config(opt);
  const auto [first, last] = parse_levels(opt.levels);
  return emit_table(build_table(first, last, config), config, sink, err);
}

int cmd_wavefunction(const Options& opt, Sink& sink, std::ostream& err) {
  const auto config = make_config(opt);
  PanelSpec spec;
  if (!opt.panel.empty()) {
    const auto panels = standard_panels();
    const auto it = std::find_if(panels.begin(), panels.end(), [&](const auto& p) { return p.label == opt.panel; });
    if (it == panels.end()) throw UsageError("--panel must be one of a, b, c, d");
    spec = *it;
  } else {
    if (opt.level < 0) throw UsageError("--level must be >= 0");
    spec.label = "level " + std::to_string(opt.level);
    spec.level = opt.level;
    for (const auto& name : split(opt.methods, ',')) {
      try {
        spec.methods.push_back(parse_method(name));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (spec.methods.empty()) throw UsageError("--methods is empty");
  }
  const auto panel = figure_panel(spec, config);
  if (sink.json())
    sink.emit([&](std::ostream& o) { o << to_json(panel).dump(2) << '\n'; });
  else
    sink.emit([&](std::ostream& o) { write_panel_csv(o, panel); });
  report_errors(err, panel.errors);
  return panel.errors.empty() ? kExitOk : kExitSolver;
}

int cmd_convergence(const Options& opt, Sink& sink, std::ostream&) {
  auto config = make_config(opt);
  if (opt.level < 0) throw UsageError("--level must be >= 0");
  std::vector<int> grids;
  for (const auto& g : split(opt.grids, ',')) {
    const int n = parse_int(g, "--grids");
    if (n % 2 != 0) throw UsageError("--grids: grid sizes must be even");
    if (n < 100) throw UsageError("--grids: grid sizes must be at least 100");
    grids.push_back(n);
  }
  if (grids.size() < 2) throw UsageError("--grids: need at least 2 grid sizes");
  const auto rows = convergence_study(opt.level, grids, config);
  if (sink.json())
    sink.emit([&](std::ostream& o) { o << to_json(rows, opt.level).dump(2) << '\n'; });
  else
    sink.emit([&](std::ostream& o) { write_convergence_csv(o, rows); });
  return kExitOk;
}

int cmd_profile(const Options& opt, Sink& sink, std::ostream&) {
  const auto config = make_config(opt);
  const auto rows = export_profile(Potential(config.model), Grid(config.n_grid));
  if (sink.json()) {
    sink.emit([&](std::ostream& o) {
      std::vector<double> x, v;
      for (const auto& [xi, vi] : rows) {
        x.push_back(xi);
        v.push_back(vi);
      }
      o << nlohmann::json{{"x", x}, {"v", v}}.dump(2) << '\n';
    });
  } else {
    sink.emit([&](std::ostream& o) { write_profile_csv(o, rows); });
  }
  return kExitOk;
}

}  // namespace

std::pair<int, int> parse_levels(std::string_view text) {
  const auto dots = text.find("..");
  int first = 0;
  int last = 0;
  if (dots == std::string_view::npos) {
    first = parse_int(text, "--levels");
    last = first + 1;
  } else {
    first = parse_int(text.substr(0, dots), "--levels");
    last = parse_int(text.substr(dots + 2), "--levels");
    if (last == first) last = first + 1;
  }
  if (first < 0) throw UsageError("--levels: levels must be >= 0");
  if (last <= first) throw UsageError("--levels: empty range '" + std::string(text) + "'");
  return {first, last};
}

std::filesystem::path resolve_output_path(const std::filesystem::path& out) {
  if (out.is_absolute()) return out;
  if (const char* dir = std::getenv("COTWELL_OUTPUT_DIR"); dir && *dir) return std::filesystem::path(dir) / out;
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of the cotangent well: Numerov, WKB and perturbation theory", "cotwell"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  Options opt;
  app.add_option("--v0", opt.v0, "Well strength")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--n-grid", opt.n_grid, "Numerov grid intervals (even)")->capture_default_str();
  app.add_option("--scan-step", opt.scan_step, "Numerov energy scan step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--bisect-tol", opt.bisect_tol, "Numerov bisection tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--wkb-tol", opt.wkb_tol, "WKB action tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--levels", opt.levels, "Level range a..b (half-open) or a single level")->capture_default_str();
  app.add_option("--method", opt.method, "Method for solve")
      ->check(CLI::IsMember({"numerov", "wkb", "wkb-closed", "spt", "analytic", "all"}))
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", opt.out, "Output file (relative paths honor COTWELL_OUTPUT_DIR)");
  app.add_option("--wall-scheme", opt.wall_scheme, "Numerov wall treatment")
      ->check(CLI::IsMember({"series", "last-interior"}))
      ->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Energies for one method");
  auto* compare = app.add_subcommand("compare", "WKB, SPT and Numerov energies side by side");
  auto* wave = app.add_subcommand("wavefunction", "|psi|^2 curves on the Numerov grid");
  wave->add_option("--level", opt.level, "Level")->capture_default_str();
  wave->add_option("--methods", opt.methods, "Comma-separated methods: numerov,wkb,spt,analytic")
      ->capture_default_str();
  wave->add_option("--panel", opt.panel, "Standard panel a, b, c or d (overrides --level/--methods)");
  auto* conv = app.add_subcommand("convergence", "Numerov energy against grid size");
  conv->add_option("--level", opt.level, "Level")->capture_default_str();
  conv->add_option("--grids", opt.grids, "Comma-separated grid sizes")->capture_default_str();
  auto* profile = app.add_subcommand("profile", "Potential sampled on the grid");
  for (auto* sub : {solve, compare, wave, conv, profile}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Sink sink(opt, out, err);
  try {
    if (*solve) return cmd_solve(opt, sink, err);
    if (*compare) return cmd_compare(opt, sink, err);
    if (*wave) return cmd_wavefunction(opt, sink, err);
    if (*conv) return cmd_convergence(opt, sink, err);
    return cmd_profile(opt, sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  }
}

}  // namespace cotwell
