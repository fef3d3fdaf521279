#pragma once

#include "intermit/demand.hpp"
#include "intermit/experiment.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace intermit {

class ConfigError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Builds a generator from its kind name and textual parameters. Only the
/// keys of that kind are accepted:
///   bernoulli-logarithmic     p0, ell
///   bernoulli-geometric-size  p0, size_p
///   regular-intermittent      period, size (default 1)
///   markov2                   p01, p10
///   obsolescence              p0, ell, profile (linear|abrupt), change_period, end_period
/// Missing required keys, unknown keys and out-of-range values throw ConfigError.
GeneratorSpec make_generator(std::string_view kind, const std::map<std::string, std::string> &params);

/// Flat JSON object mirroring ExperimentSpec, e.g.
///   {"kind": "markov2", "p01": 0.3, "p10": 0.3, "warmup_len": 10000,
///    "eval_len": 100000, "grid": [0.1, 0.2, 0.3], "measures": ["MSE", "mMSE"],
///    "forecasters": ["SES", "CR", "ZF"], "mean_estimator": "series-mean",
///    "master_seed": 42, "setting_id": 0}
/// Everything except the generator keys and "measures" has the defaults of
/// ExperimentSpec.
ExperimentSpec parse_experiment_config(std::string_view json_text);
ExperimentSpec load_experiment_config(const std::filesystem::path &path);

} // namespace intermit
