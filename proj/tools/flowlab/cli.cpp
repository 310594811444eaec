// Copyright 2026 The flowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "flowlab/diracdisk.hpp"
#include "flowlab/errors.hpp"
#include "flowlab/fullquantum.hpp"
#include "flowlab/io.hpp"
#include "flowlab/report.hpp"
#include "flowlab/semiquantum.hpp"

namespace flowlab::cli {
namespace {

namespace dd = diracdisk;
namespace sq = semiquantum;
using io::Cell;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(what, "'" + s + "' is not a finite number");
}

std::vector<double> expand(const Range& r) { return report::range_grid(r.start, r.step, r.stop); }

// A single number or a start:step:stop range.
std::vector<double> values_or_range(const std::string& s, const std::string& what) {
  if (s.find(':') == std::string::npos) return {to_double(s, what)};
  return expand(parse_range(s));
}

std::vector<int> int_range(const std::string& s) {
  const auto parts = split(s, ':');
  std::vector<int> out;
  const auto as_int = [&](const std::string& p) {
    const double v = to_double(p, "--N");
    if (v != std::floor(v)) throw CLI::ValidationError("--N", "'" + p + "' is not an integer");
    return static_cast<int>(v);
  };
  if (parts.size() == 1) return {as_int(parts[0])};
  int start = 0, step = 1, stop = 0;
  if (parts.size() == 2) {
    start = as_int(parts[0]);
    stop = as_int(parts[1]);
  } else if (parts.size() == 3) {
    start = as_int(parts[0]);
    step = as_int(parts[1]);
    stop = as_int(parts[2]);
  } else {
    throw CLI::ValidationError("--N", "expected N, start:stop or start:step:stop");
  }
  if (step <= 0 || stop < start) throw CLI::ValidationError("--N", "range must be non-empty with positive step");
  for (int n = start; n <= stop; n += step) out.push_back(n);
  return out;
}

dd::Sector parse_sector(const std::string& s) {
  if (s == "minus" || s == "H-") return dd::Sector::minus;
  if (s == "plus" || s == "H+") return dd::Sector::plus;
  if (s == "zero-plus" || s == "H0+") return dd::Sector::zero_plus;
  if (s == "zero-minus" || s == "H0-") return dd::Sector::zero_minus;
  throw CLI::ValidationError("--sector", "unknown sector '" + s + "'");
}

sq::Band parse_band(const std::string& s) {
  if (s == "upper" || s == "E+") return sq::Band::upper;
  if (s == "lower" || s == "E-") return sq::Band::lower;
  throw CLI::ValidationError("--band", "unknown band '" + s + "'");
}

sq::Gauge parse_gauge(const std::string& s) {
  if (s == "up") return sq::Gauge::up;
  if (s == "down") return sq::Gauge::down;
  throw CLI::ValidationError("--gauge", "unknown gauge '" + s + "'");
}

const char* band_name(sq::Band b) { return b == sq::Band::upper ? "E+" : "E-"; }

struct Output {
  std::string format = "csv";
  std::string path;

  void emit(const io::Table& table, std::ostream& out) const {
    const std::string text = format == "json" ? io::to_json(table) : io::to_csv(table);
    if (path.empty()) {
      out << text;
    } else {
      io::write_file(path, text);
    }
  }
};

void add_output_flags(CLI::App* sub, Output& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("-o,--output", o.path, "Write results to this file instead of stdout");
}

void check_writable(const std::string& path) {
  if (path.empty()) return;
  std::ofstream probe(path, std::ios::app);
  if (!probe) throw IoError("output path '" + path + "' is not writable");
}

// Regular states on both sides of the gap within [lo, hi].
std::vector<dd::EigenState> regular_both_sides(const dd::Channel& ch, dd::Sector sector, double lo, double hi,
                                               std::ostream& err) {
  const double gap = std::fabs(ch.t()) + 1e-9 * std::max(1.0, std::fabs(ch.t()));
  std::vector<dd::EigenState> out;
  const auto run = [&](double a, double b) {
    if (!(a < b)) return;
    dd::RegularSolveResult r = dd::regular_solve(ch, sector, a, b);
    for (const std::string& w : r.warnings) err << "warning: " << w << '\n';
    out.insert(out.end(), r.states.begin(), r.states.end());
  };
  run(lo, std::min(hi, -gap));
  run(std::max(lo, gap), hi);
  return out;
}

const std::vector<int> kDefaultChannels{-11, -9, -7, -5, -3, -1, 1, 3, 5, 7, 9, 11};

}  // namespace

Range parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw CLI::ValidationError("range", "expected start:step:stop, got '" + text + "'");
  Range r{to_double(parts[0], "range"), to_double(parts[1], "range"), to_double(parts[2], "range")};
  if (!(r.step > 0.0)) throw CLI::ValidationError("range", "step must be positive in '" + text + "'");
  if (!(r.stop > r.start)) throw CLI::ValidationError("range", "stop must exceed start in '" + text + "'");
  return r;
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw CLI::ValidationError("window", "expected lo:hi, got '" + text + "'");
  const double lo = to_double(parts[0], "window");
  const double hi = to_double(parts[1], "window");
  if (!(lo < hi)) throw CLI::ValidationError("window", "lo must be below hi in '" + text + "'");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral flow, delta-Chern and level transfer calculator", "flowlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "flowlab 0.1.0");

  Output output;
  std::vector<int> two_js;
  double R = 1.0;
  std::string t_text = "0";
  std::string sector_text = "minus";
  std::string window_text = "-12:12";
  std::string plot_path;
  std::string band_text = "upper";
  std::string gauge_text = "up";
  double radius = 0.1;
  int samples = 256;
  std::vector<double> center{0.0, 0.0};
  double sphere_J = 1.0;
  int grid_theta = 64;
  int grid_phi = 64;
  double alpha = 1.0 / 15.0;
  std::string n_text = "13:17";
  double split_energy = 0.0;
  std::string t_sweep = "-1:0.02:1";

  const auto channels_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--two-j", two_js, "Channels as 2j (odd), comma separated")->delimiter(',');
    if (required) o->required();
  };

  CLI::App* kspec = app.add_subcommand("kspec", "Boundary operator eigenvalues kappa-/kappa+");
  channels_opt(kspec, true);
  kspec->add_option("--R", R, "Disk radius");
  kspec->add_option("--t", t_text, "t value or start:step:stop");
  add_output_flags(kspec, output);

  CLI::App* edge = app.add_subcommand("edge", "Edge state of each channel");
  channels_opt(edge, true);
  edge->add_option("--R", R, "Disk radius");
  edge->add_option("--t", t_text, "t value or start:step:stop");
  edge->add_option("--sector", sector_text, "Boundary sector: minus or plus");
  add_output_flags(edge, output);

  CLI::App* regular = app.add_subcommand("regular", "Regular states in an energy window");
  channels_opt(regular, true);
  regular->add_option("--R", R, "Disk radius");
  regular->add_option("--t", t_text, "t value or start:step:stop");
  regular->add_option("--sector", sector_text, "Boundary sector: minus or plus");
  regular->add_option("--e-window", window_text, "Energy window lo:hi");
  add_output_flags(regular, output);

  CLI::App* zeromode = app.add_subcommand("zeromode", "Zero modes at t = 0");
  channels_opt(zeromode, true);
  zeromode->add_option("--R", R, "Disk radius");
  zeromode->add_option("--choice", sector_text, "Boundary choice: H0+ or H0-")->required();
  add_output_flags(zeromode, output);

  CLI::App* sweep = app.add_subcommand("sweep", "Spectrum branches over a t range");
  channels_opt(sweep, true);
  sweep->add_option("--R", R, "Disk radius");
  sweep->add_option("--t", t_sweep, "t range start:step:stop");
  sweep->add_option("--e-window", window_text, "Energy window lo:hi");
  sweep->add_option("--sector", sector_text, "Boundary sector: minus or plus");
  sweep->add_option("--plot", plot_path, "Also write an SVG plot to this path");
  add_output_flags(sweep, output);

  CLI::App* flow = app.add_subcommand("flow", "Spectral flow per channel");
  channels_opt(flow, false);
  flow->add_option("--R", R, "Disk radius");
  flow->add_option("--t", t_sweep, "t range start:step:stop");
  flow->add_option("--e-window", window_text, "Energy window lo:hi");
  flow->add_option("--sector", sector_text, "Boundary sector: minus or plus");
  add_output_flags(flow, output);

  CLI::App* winding = app.add_subcommand("winding", "Winding number of an eigenvector gauge");
  winding->add_option("--t", t_text, "t value or start:step:stop");
  winding->add_option("--band", band_text, "upper or lower");
  winding->add_option("--gauge", gauge_text, "up or down");
  winding->add_option("--radius", radius, "Circle radius");
  winding->add_option("--samples", samples, "Samples on the circle");
  winding->add_option("--center", center, "Circle center p1,p2")->delimiter(',')->expected(2);
  add_output_flags(winding, output);

  CLI::App* chern = app.add_subcommand("chern", "Lattice Chern number of the sphere model");
  chern->add_option("--J", sphere_J, "Sphere radius J");
  chern->add_option("--t", t_text, "t value or start:step:stop");
  chern->add_option("--band", band_text, "upper or lower");
  chern->add_option("--n-theta", grid_theta, "Grid rows");
  chern->add_option("--n-phi", grid_phi, "Grid columns");
  add_output_flags(chern, output);

  CLI::App* bands = app.add_subcommand("bands", "Level counts of the molecular model");
  bands->add_option("--alpha", alpha, "Coupling alpha");
  bands->add_option("--N", n_text, "N, start:stop or start:step:stop");
  bands->add_option("--split", split_energy, "Split energy");
  add_output_flags(bands, output);

  CLI::App* rep = app.add_subcommand("report", "Cross-model consistency report");
  channels_opt(rep, false);
  rep->add_option("--R", R, "Disk radius");
  rep->add_option("--t", t_sweep, "t range start:step:stop");
  rep->add_option("--e-window", window_text, "Energy window lo:hi");
  rep->add_option("--J", sphere_J, "Sphere radius J");
  rep->add_option("--n-theta", grid_theta, "Grid rows");
  rep->add_option("--n-phi", grid_phi, "Grid columns");
  rep->add_option("--alpha", alpha, "Coupling alpha");
  rep->add_option("--N", n_text, "N range start:stop");
  add_output_flags(rep, output);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    check_writable(output.path);
    if (two_js.empty()) two_js = kDefaultChannels;
    for (int tj : two_js) dd::Channel(tj, 0.0, 1.0);

    if (*kspec) {
      io::Table table;
      table.header = {"two_j", "t", "R", "kappa_minus", "kappa_plus"};
      for (int tj : two_js) {
        for (double t : values_or_range(t_text, "--t")) {
          const dd::KSpectrum k = dd::k_spectrum(dd::Channel(tj, t, R));
          table.add_row({Cell{std::int64_t{tj}}, t, R, k.minus.kappa, k.plus.kappa});
        }
      }
      output.emit(table, out);
    } else if (*edge) {
      const dd::Sector sector = parse_sector(sector_text);
      io::Table table;
      table.header = {"two_j", "t", "R", "sector", "E"};
      for (int tj : two_js) {
        const std::vector<double> ts = values_or_range(t_text, "--t");
        for (double t : ts) {
          if (t == 0.0 && ts.size() > 1) continue;
          if (auto s = dd::edge_solve(dd::Channel(tj, t, R), sector)) {
            table.add_row({Cell{std::int64_t{tj}}, t, R, std::string(dd::to_string(sector)), s->energy});
          }
        }
      }
      output.emit(table, out);
    } else if (*regular) {
      const dd::Sector sector = parse_sector(sector_text);
      const auto [lo, hi] = parse_window(window_text);
      io::Table table;
      table.header = {"two_j", "t", "R", "sector", "E"};
      for (int tj : two_js) {
        for (double t : values_or_range(t_text, "--t")) {
          for (const dd::EigenState& s : regular_both_sides(dd::Channel(tj, t, R), sector, lo, hi, err)) {
            table.add_row({Cell{std::int64_t{tj}}, t, R, std::string(dd::to_string(sector)), s.energy});
          }
        }
      }
      output.emit(table, out);
    } else if (*zeromode) {
      const dd::Sector choice = parse_sector(sector_text);
      io::Table table;
      table.header = {"two_j", "R", "choice", "found", "normalization"};
      for (int tj : two_js) {
        const auto z = dd::zero_mode(dd::Channel(tj, 0.0, R), choice);
        table.add_row({Cell{std::int64_t{tj}}, R, std::string(dd::to_string(choice)),
                       std::int64_t{z.has_value() ? 1 : 0}, z ? z->normalization : 0.0});
      }
      output.emit(table, out);
    } else if (*sweep || *flow) {
      const dd::Sector sector = parse_sector(sector_text);
      const auto [lo, hi] = parse_window(window_text);
      const std::vector<double> grid = expand(parse_range(t_sweep));
      io::Table table;
      table.header = *sweep ? std::vector<std::string>{"two_j", "t", "branch_id", "E", "class", "sector"}
                            : std::vector<std::string>{"two_j", "flow"};
      std::vector<dd::SpectrumBranch> all;
      std::int64_t next_id = 0;
      for (int tj : two_js) {
        dd::SweepResult res = dd::spectrum_sweep(tj, R, grid, {lo, hi}, sector);
        for (const std::string& w : res.warnings) err << "warning: " << w << '\n';
        if (*flow) {
          const int f = dd::spectral_flow(res.branches);
          if (two_js.size() == 1 && output.path.empty() && output.format == "csv") {
            out << f << '\n';
            return kExitOk;
          }
          table.add_row({Cell{std::int64_t{tj}}, std::int64_t{f}});
          continue;
        }
        for (const dd::SpectrumBranch& b : res.branches) {
          for (const dd::BranchPoint& p : b.points) {
            const dd::Sector point_sector =
                p.state_class == dd::StateClass::zero_mode ? dd::zero_limit(sector, tj) : sector;
            table.add_row({Cell{std::int64_t{tj}}, p.t, next_id, p.energy, std::string(dd::to_string(p.state_class)),
                           std::string(dd::to_string(point_sector))});
          }
          ++next_id;
          all.push_back(b);
        }
      }
      output.emit(table, out);
      if (*sweep && !plot_path.empty()) {
        io::PlotStyle style;
        style.title = "E(t), R = " + io::format_double(R);
        io::write_file(plot_path, io::plot_svg(all, style));
      }
    } else if (*winding) {
      const sq::Band band = parse_band(band_text);
      const sq::Gauge gauge = parse_gauge(gauge_text);
      const sq::DVectorField field = sq::DVectorField::local_model();
      io::Table table;
      table.header = {"t", "band", "gauge", "winding", "turns"};
      for (double t : values_or_range(t_text, "--t")) {
        const sq::WindingResult w = sq::winding_number(field, t, {center[0], center[1], 0.0}, radius, band, gauge, samples);
        table.add_row({t, std::string(band_name(band)), gauge_text, std::int64_t{w.winding}, w.accumulated_turns});
      }
      output.emit(table, out);
    } else if (*chern) {
      const sq::Band band = parse_band(band_text);
      const sq::DVectorField field = sq::DVectorField::sphere_model(sphere_J);
      io::Table table;
      table.header = {"t", "band", "chern", "flux_max"};
      for (double t : values_or_range(t_text, "--t")) {
        const sq::ChernResult c = sq::chern_sphere(field, t, band, {grid_theta, grid_phi});
        table.add_row({t, std::string(band_name(band)), std::int64_t{c.chern}, c.plaquette_flux_max});
      }
      output.emit(table, out);
    } else if (*bands) {
      const std::vector<int> ns = int_range(n_text);
      io::Table table;
      table.header = {"N", "alpha", "below", "above"};
      for (int n : ns) {
        try {
          const fullquantum::BandCount c = fullquantum::band_count({n, alpha}, split_energy);
          table.add_row({Cell{std::int64_t{n}}, alpha, std::int64_t{c.below}, std::int64_t{c.above}});
        } catch (const OnGapError& e) {
          if (ns.size() == 1) throw;
          err << "warning: N=" << n << " skipped: " << e.what() << '\n';
        }
      }
      output.emit(table, out);
    } else if (*rep) {
      const std::vector<int> ns = int_range(n_text);
      const auto [lo, hi] = parse_window(window_text);
      const Range tr = parse_range(t_sweep);
      report::ReportConfig cfg;
      cfg.R = R;
      cfg.t_min = tr.start;
      cfg.t_step = tr.step;
      cfg.t_max = tr.stop;
      cfg.two_js = two_js;
      cfg.e_min = lo;
      cfg.e_max = hi;
      cfg.sphere_J = sphere_J;
      cfg.grid_theta = grid_theta;
      cfg.grid_phi = grid_phi;
      cfg.alpha = alpha;
      cfg.n_first = ns.front();
      cfg.n_last = ns.back();
      output.emit(report::report_table(report::build_report(cfg)), out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace flowlab::cli
