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

#ifndef ENTGEO_TOOLS_COMMANDS_HPP
#define ENTGEO_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "entgeo/projection.hpp"
#include "entgeo/states.hpp"

namespace entgeo::cli {

enum ExitCode : int { kOk = 0, kBadInput = 2, kIoError = 3 };

struct ProjectReport {
  std::string input;
  Dims dims;
  ProjectionResult projection;
  /// 2|d_min| for two qubits, otherwise the sum of |negative| PT eigenvalues.
  double negativity = 0.0;
  bool two_qubit_negativity = false;
  double robustness = 0.0;
};

ProjectReport make_project_report(const DensityMatrix& rho, std::string input,
                                  Subsystem sub = Subsystem::B);
std::string report_to_text(const ProjectReport& report);
std::string report_to_json(const ProjectReport& report);

struct StatsSummary {
  std::size_t samples = 0;
  std::size_t npt = 0;
  std::size_t npt_positive = 0;     ///< NPT samples whose rho_s is PSD
  double mean_negativity = 0.0;     ///< over all samples
  std::map<std::size_t, std::size_t> rank_counts;  ///< |kept| over NPT samples
  std::size_t rank2_positive = 0;
  /// max |distance_exact - (2/sqrt 3)|d_min|| over rank-3 NPT two-qubit samples
  double rank3_formula_max_error = 0.0;

  double npt_fraction() const;
  double positive_fraction() const;
  std::size_t rank_count(std::size_t rank) const;
};

/// Samples are drawn in order from one HsSampler seeded with `seed`.
StatsSummary run_stats(std::size_t samples, std::uint64_t seed, Dims dims);
std::string stats_to_text(const StatsSummary& s);
std::string stats_to_json(const StatsSummary& s);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace entgeo::cli

#endif  // ENTGEO_TOOLS_COMMANDS_HPP
