#ifndef UAVDEPLOY_EXPERIMENT_HPP
#define UAVDEPLOY_EXPERIMENT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "uavdeploy/scenario.hpp"

namespace uavdeploy {

inline constexpr const char *kToolVersion = "0.1.0";

struct ExperimentOptions {
  unsigned threads = 0;          ///< restart workers; 0 = hardware concurrency
  std::ostream *log = nullptr;   ///< progress lines, optional
};

struct ExperimentResult {
  std::vector<std::string> files;  ///< written artifacts, relative to output_dir
};

/// Hash of the canonical scenario text without its output directory.
std::uint64_t parameter_hash(const Scenario &scenario);

/// Runs the scenario and writes its tables, rasters and manifest into
/// scenario.output_dir. Exceptions from the modules propagate.
ExperimentResult run_experiment(const Scenario &scenario, const ExperimentOptions &options = {});

}  // namespace uavdeploy

#endif
