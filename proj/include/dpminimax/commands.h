// Copyright 2026 The dpminimax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPMINIMAX_COMMANDS_H_
#define DPMINIMAX_COMMANDS_H_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "dpminimax/config.h"

namespace dpminimax {

// Subcommand results. `csv` is the file content written under the output
// directory; `text` is the human-readable block the tool prints to stdout.
// On error `csv` holds the rows completed before the first failing cell.
struct CommandOutput {
  std::string csv;
  std::string text;
  absl::Status status;
  // Additional files as (relative name, content), e.g. trajectories.
  std::vector<std::pair<std::string, std::string>> extra_files;
};

// Progress lines go to `progress` when it is non-null.
CommandOutput CalibrateCommand(const ExperimentConfig& config,
                               std::ostream* progress = nullptr);
CommandOutput RunCommand(const ExperimentConfig& config,
                         std::ostream* progress = nullptr);
CommandOutput StabilityCommand(const ExperimentConfig& config,
                               std::ostream* progress = nullptr);
CommandOutput GeneralizationCommand(const ExperimentConfig& config,
                                    std::ostream* progress = nullptr);
CommandOutput NoiseCheckCommand(const ExperimentConfig& config,
                                std::ostream* progress = nullptr);
CommandOutput BoundsCommand(const ExperimentConfig& config,
                            std::ostream* progress = nullptr);

// Subcommand names: calibrate, run, stability, generalization, noise-check,
// bounds. Each writes <output>/<name>.csv; run also writes trajectories when
// configured. Writes the partial CSV before returning an error.
absl::Status RunSubcommand(const std::string& name,
                           const ExperimentConfig& config, std::ostream& text,
                           std::ostream* progress);

}  // namespace dpminimax

#endif  // DPMINIMAX_COMMANDS_H_
