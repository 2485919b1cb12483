// Copyright 2026 The entgeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "entgeo/geometry.hpp"
#include "json.hpp"

namespace entgeo::cli {

namespace {

using json = nlohmann::json;

struct CommandError {
  ExitCode code;
  std::string message;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%10.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string format_vector(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fixed6(v[i]);
  return s + " ]";
}

std::string format_matrix(const ComplexMatrix& m) {
  bool real = true;
  for (const auto& e : m.entries())
    if (std::abs(e.imag()) > 1e-15) real = false;
  std::string s;
  char buf[96];
  for (std::size_t i = 0; i < m.dim(); ++i) {
    s += "  ";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Complex e = m(i, j);
      if (real)
        s += fixed6(e.real());
      else {
        std::snprintf(buf, sizeof buf, " %10.6f%+10.6fi", e.real() == 0.0 ? 0.0 : e.real(),
                      e.imag() == 0.0 ? 0.0 : e.imag());
        s += buf;
      }
    }
    s += '\n';
  }
  return s;
}

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kBadInput, "cannot read " + path.string()};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw CommandError{kIoError, "cannot write " + path.string()};
}

DensityMatrix resolve_state(const std::string& spec) {
  if (auto named = named_from_string(spec)) return *named;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(spec, ec))
    throw CommandError{kBadInput, "unknown state '" + spec +
                                      "': not a named state and not a readable JSON file"};
  try {
    return state_from_json(read_file(spec));
  } catch (const StateError& e) {
    throw CommandError{kBadInput, spec + ": " + e.what()};
  }
}

Subsystem parse_subsystem(const std::string& s) {
  if (s == "A" || s == "a") return Subsystem::A;
  if (s == "B" || s == "b") return Subsystem::B;
  throw CommandError{kBadInput, "subsystem must be A or B"};
}

Dims parse_dims(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos) throw CommandError{kBadInput, "dims must look like 2x2"};
  try {
    const auto a = std::stoul(s.substr(0, x));
    const auto b = std::stoul(s.substr(x + 1));
    if (a == 0 || b == 0 || a * b > 64) throw std::out_of_range("dims");
    return Dims{a, b};
  } catch (const std::logic_error&) {
    throw CommandError{kBadInput, "bad dims '" + s + "'"};
  }
}

unsigned scan_threads() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ENTGEO_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0)
      threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

std::filesystem::path default_contour_path(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p.replace_extension(".contours.json");
  return p;
}

// --- subcommands -----------------------------------------------------------

struct ProjectArgs {
  std::string state;
  std::string subsystem = "B";
  std::string json_out;
};

void cmd_project(const ProjectArgs& args, std::ostream& out) {
  const DensityMatrix rho = resolve_state(args.state);
  const ProjectReport report = make_project_report(rho, args.state, parse_subsystem(args.subsystem));
  out << report_to_text(report);
  if (!args.json_out.empty()) write_file(args.json_out, report_to_json(report) + "\n");
}

struct StatsArgs {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::string dims = "2x2";
  std::string json_out;
};

void cmd_stats(const StatsArgs& args, std::ostream& out) {
  if (args.samples < 1) throw CommandError{kBadInput, "--samples must be >= 1"};
  const StatsSummary s = run_stats(args.samples, args.seed, parse_dims(args.dims));
  out << stats_to_text(s);
  if (!args.json_out.empty()) write_file(args.json_out, stats_to_json(s) + "\n");
}

struct ScanArgs {
  std::string plane;
  std::string rho1;
  std::string rho2;
  std::size_t resolution = 401;
  double range = 0.9;
  std::string out;
  std::vector<double> contours;
  std::string contours_out;
};

void cmd_scan(const ScanArgs& args, std::ostream& out) {
  std::optional<Plane> plane;
  if (!args.plane.empty()) {
    if (!args.rho1.empty() || !args.rho2.empty())
      throw CommandError{kBadInput, "use either --plane or --rho1/--rho2"};
    plane = plane_from_string(args.plane);
    if (!plane) throw CommandError{kBadInput, "unknown plane '" + args.plane + "'"};
  } else {
    if (args.rho1.empty() || args.rho2.empty())
      throw CommandError{kBadInput, "scan needs --plane or both --rho1 and --rho2"};
    try {
      plane = build_plane(resolve_state(args.rho1), resolve_state(args.rho2));
    } catch (const GeometryError& e) {
      throw CommandError{kBadInput, e.what()};
    }
  }
  if (args.resolution < 2) throw CommandError{kBadInput, "--resolution must be >= 2"};
  if (!(args.range > 0.0)) throw CommandError{kBadInput, "--range must be positive"};

  const AxisRange axis{-args.range, args.range, args.resolution};
  const ScanGrid grid = scan_plane(*plane, axis, axis, scan_threads());

  std::ostringstream csv;
  write_grid_csv(csv, grid);
  write_file(args.out, csv.str());
  out << "wrote " << grid.cells.size() << " cells to " << args.out << "\n";

  if (!args.contours.empty()) {
    std::vector<Contour> contours{boundary_contours(grid, ContourField::state_boundary),
                                  boundary_contours(grid, ContourField::ppt_boundary)};
    for (double level : args.contours)
      contours.push_back(boundary_contours(grid, ContourField::negativity, level));
    const std::filesystem::path path =
        args.contours_out.empty() ? default_contour_path(args.out)
                                  : std::filesystem::path(args.contours_out);
    write_file(path, contours_to_json(contours) + "\n");
    out << "wrote " << contours.size() << " contour sets to " << path.string() << "\n";
  }
}

struct NamedArgs {
  std::string state;
  std::string out;
};

void cmd_named(const NamedArgs& args, std::ostream& out) {
  const auto rho = named_from_string(args.state);
  if (!rho) throw CommandError{kBadInput, "unknown named state '" + args.state + "'"};
  const std::string doc = state_to_json(*rho) + "\n";
  if (args.out.empty())
    out << doc;
  else
    write_file(args.out, doc);
}

}  // namespace

ProjectReport make_project_report(const DensityMatrix& rho, std::string input, Subsystem sub) {
  ProjectReport r;
  r.input = std::move(input);
  r.dims = rho.dims();
  r.projection = closest_pt_state(rho, sub);
  r.two_qubit_negativity = rho.dims() == Dims{2, 2};
  r.negativity = r.two_qubit_negativity ? negativity(rho) : general_negativity(rho);
  r.robustness = robustness_to_identity(rho);
  return r;
}

std::string report_to_text(const ProjectReport& r) {
  const ProjectionResult& p = r.projection;
  std::ostringstream os;
  os << "state:                " << r.input << " (dims " << r.dims.a << "x" << r.dims.b << ")\n";
  os << "PT spectrum d:        " << format_vector(p.pt_eigenvalues) << "\n";
  os << "d_min:                " << full_precision(p.d_min) << "\n";
  os << "E^2 (descending):     " << format_vector(p.e_squared) << "\n";
  os << "lambda:               " << full_precision(p.lambda) << "\n";
  os << "rank of E^2:          " << p.rank() << "\n";
  os << "distance (exact):     " << full_precision(p.distance_exact) << "\n";
  os << "distance (closed):    " << full_precision(p.distance_closed_form) << "\n";
  os << (r.two_qubit_negativity ? "negativity:           " : "negativity (sum|d-|): ")
     << full_precision(r.negativity) << "\n";
  os << "robustness t:         " << full_precision(r.robustness) << "\n";
  os << "rho_s positive:       " << (p.rho_s_is_positive ? "yes" : "no")
     << (p.borderline ? " (borderline)" : "") << ", min eigenvalue "
     << full_precision(p.rho_s_min_eigenvalue) << "\n";
  os << "rho_s:\n" << format_matrix(p.closest_pt_state);
  return os.str();
}

std::string report_to_json(const ProjectReport& r) {
  const ProjectionResult& p = r.projection;
  json doc;
  doc["input"] = r.input;
  doc["dims"] = {r.dims.a, r.dims.b};
  doc["pt_eigenvalues"] = p.pt_eigenvalues;
  doc["d_min"] = p.d_min;
  doc["e_squared"] = p.e_squared;
  doc["lambda"] = p.lambda;
  doc["kept_indices"] = p.kept_indices;
  doc["distance_exact"] = p.distance_exact;
  doc["distance_closed_form"] = p.distance_closed_form;
  doc[r.two_qubit_negativity ? "negativity" : "general_negativity"] = r.negativity;
  doc["robustness"] = r.robustness;
  doc["rho_s_is_positive"] = p.rho_s_is_positive;
  doc["borderline"] = p.borderline;
  doc["rho_s_min_eigenvalue"] = p.rho_s_min_eigenvalue;
  doc["closest_state"] = json::parse(matrix_to_json(p.closest_pt_state, r.dims));
  return doc.dump(2);
}

double StatsSummary::npt_fraction() const {
  return samples == 0 ? 0.0 : static_cast<double>(npt) / static_cast<double>(samples);
}

double StatsSummary::positive_fraction() const {
  return npt == 0 ? 0.0 : static_cast<double>(npt_positive) / static_cast<double>(npt);
}

std::size_t StatsSummary::rank_count(std::size_t rank) const {
  const auto it = rank_counts.find(rank);
  return it == rank_counts.end() ? 0 : it->second;
}

StatsSummary run_stats(std::size_t samples, std::uint64_t seed, Dims dims) {
  HsSampler sampler(dims, seed);
  const bool qubits = dims == Dims{2, 2};
  StatsSummary s;
  s.samples = samples;
  double negativity_sum = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const DensityMatrix rho = sampler.next();
    const ProjectionResult p = closest_pt_state(rho);
    if (p.d_min >= -kPptThreshold) continue;
    ++s.npt;
    double neg = 0.0;
    for (double d : p.pt_eigenvalues)
      if (d < -kPptThreshold) neg -= d;
    negativity_sum += qubits ? -2.0 * p.d_min : neg;
    if (p.rho_s_is_positive) ++s.npt_positive;
    ++s.rank_counts[p.rank()];
    if (p.rank() == 2 && p.rho_s_is_positive) ++s.rank2_positive;
    if (qubits && p.rank() == 3) {
      const double formula = 2.0 / std::sqrt(3.0) * -p.d_min;
      s.rank3_formula_max_error =
          std::max(s.rank3_formula_max_error, std::abs(p.distance_exact - formula));
    }
  }
  s.mean_negativity = negativity_sum / static_cast<double>(samples);
  return s;
}

std::string stats_to_text(const StatsSummary& s) {
  std::ostringstream os;
  os << "samples:                      " << s.samples << "\n";
  os << "NPT samples:                  " << s.npt << " (fraction " << full_precision(s.npt_fraction())
     << ")\n";
  os << "NPT with PSD rho_s:           " << s.npt_positive << " (fraction "
     << full_precision(s.positive_fraction()) << ")\n";
  os << "mean negativity:              " << full_precision(s.mean_negativity) << "\n";
  os << "rank of E^2 over NPT samples:\n";
  for (const auto& [rank, count] : s.rank_counts) {
    os << "  rank " << rank << ": " << count;
    if (rank == 2) os << " (PSD rho_s: " << s.rank2_positive << ", non-PSD: " << count - s.rank2_positive << ")";
    os << "\n";
  }
  if (s.rank_count(2) == 0) os << "  rank 2: 0 (PSD rho_s: 0, non-PSD: 0)\n";
  os << "max |d_exact - 2|d_min|/sqrt3| (rank 3): " << full_precision(s.rank3_formula_max_error)
     << "\n";
  return os.str();
}

std::string stats_to_json(const StatsSummary& s) {
  json doc;
  doc["samples"] = s.samples;
  doc["npt"] = s.npt;
  doc["npt_fraction"] = s.npt_fraction();
  doc["npt_positive"] = s.npt_positive;
  doc["positive_fraction"] = s.positive_fraction();
  doc["mean_negativity"] = s.mean_negativity;
  json ranks = json::object();
  for (const auto& [rank, count] : s.rank_counts) ranks[std::to_string(rank)] = count;
  doc["rank_counts"] = ranks;
  doc["rank2_positive"] = s.rank2_positive;
  doc["rank3_formula_max_error"] = s.rank3_formula_max_error;
  return doc.dump(2);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"entgeo: Hilbert-Schmidt geometry of partially transposed states"};
  app.require_subcommand(1);

  ProjectArgs project;
  auto* project_cmd = app.add_subcommand("project", "Closest partially transposed state report");
  project_cmd->add_option("--state", project.state, "Named state or JSON state file")->required();
  project_cmd->add_option("--subsystem", project.subsystem, "Transposed factor (A or B)");
  project_cmd->add_option("--json", project.json_out, "Write the report as JSON");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Monte-Carlo statistics over HS-random states");
  stats_cmd->add_option("--samples", stats.samples, "Number of samples");
  stats_cmd->add_option("--seed", stats.seed, "RNG seed");
  stats_cmd->add_option("--dims", stats.dims, "Bipartition, e.g. 2x2");
  stats_cmd->add_option("--json", stats.json_out, "Write the summary as JSON");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Grid scan of a plane through I/n");
  scan_cmd->add_option("--plane", scan.plane, "ff1|ff2|ff3|ff4|ff8|random(SEED)");
  scan_cmd->add_option("--rho1", scan.rho1, "First anchor (named or JSON)");
  scan_cmd->add_option("--rho2", scan.rho2, "Second anchor (named or JSON)");
  scan_cmd->add_option("--resolution", scan.resolution, "Grid points per axis");
  scan_cmd->add_option("--range", scan.range, "Half-width of the a and b axes");
  scan_cmd->add_option("--out", scan.out, "CSV output path")->required();
  scan_cmd->add_option("--contours", scan.contours, "Negativity levels to extract")
      ->delimiter(',');
  scan_cmd->add_option("--contours-out", scan.contours_out, "Contour JSON output path");

  NamedArgs named;
  auto* named_cmd = app.add_subcommand("named", "Print a named state as JSON");
  named_cmd->add_option("--state", named.state, "State name")->required();
  named_cmd->add_option("--out", named.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*project_cmd) cmd_project(project, out);
    if (*stats_cmd) cmd_stats(stats, out);
    if (*scan_cmd) cmd_scan(scan, out);
    if (*named_cmd) cmd_named(named, out);
  } catch (const CommandError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}

}  // namespace entgeo::cli
