// Command-line front end: generate series, evaluate forecasts, rank
// forecasters from a config file, and regenerate the published tables.

#include "intermit/config.hpp"
#include "intermit/experiment.hpp"
#include "intermit/series_io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace intermit;

constexpr int kExitUndefined = 3;

struct GlobalOptions {
	std::optional<std::uint64_t> seed;
	std::string out = "text";
	std::optional<std::string> mean_est;
};

std::ifstream open_input(const std::string &path) {
	std::ifstream in(path);
	if (!in) {
		throw std::runtime_error("cannot open '" + path + "'");
	}
	return in;
}

void write_output(const std::string &path, const std::string &text) {
	if (path.empty() || path == "-") {
		std::cout << text;
		return;
	}
	std::ofstream out(path);
	if (!out) {
		throw std::runtime_error("cannot write '" + path + "'");
	}
	out << text;
}

int report_undefined(const std::vector<MeasureId> &undefined) {
	if (undefined.empty()) {
		return 0;
	}
	for (const auto &m : undefined) {
		std::cerr << "error: measure " << m.name() << " is Undefined for every forecaster\n";
	}
	return kExitUndefined;
}

struct GenerateOptions {
	std::string kind = "bernoulli-logarithmic";
	std::map<std::string, std::string> params;
	std::size_t length = 1000;
	std::string output;
};

int run_generate(const GlobalOptions &global, const GenerateOptions &opts) {
	const auto spec = make_generator(opts.kind, opts.params);
	RandomStream stream(global.seed.value_or(kDefaultSeed));
	const auto generated = generate(spec, opts.length, stream);
	std::ostringstream text;
	write_series(text, generated.series, &generated.mean);
	write_output(opts.output, text.str());
	return 0;
}

struct EvaluateOptions {
	std::string series;
	std::string forecasts;
	std::string baseline;
	std::string insample;
	std::vector<std::string> measures;
};

int run_evaluate(const GlobalOptions &global, const EvaluateOptions &opts) {
	auto series_in = open_input(opts.series);
	const auto file = read_series(series_in);
	auto trace_in = open_input(opts.forecasts);
	const auto trace = read_trace(trace_in);
	if (trace.size() != file.series.size()) {
		throw std::runtime_error("forecast file and series file have different lengths");
	}

	ForecastTrace baseline;
	if (opts.baseline.empty()) {
		baseline = run_forecaster(ForecasterSpec::random_walk(), file.series.values());
	} else {
		auto in = open_input(opts.baseline);
		baseline = read_trace(in);
		if (baseline.size() != file.series.size()) {
			throw std::runtime_error("baseline file and series file have different lengths");
		}
	}

	std::vector<double> insample(file.series.values().begin(), file.series.values().end());
	if (!opts.insample.empty()) {
		auto in = open_input(opts.insample);
		const auto history = read_series(in).series.values();
		insample.assign(history.begin(), history.end());
	}

	const auto estimator = MeanEstimatorSpec::parse(global.mean_est.value_or(file.mean ? "known" : "series-mean"));
	const auto mean_path = estimate_mean_path(estimator, file.series, file.mean ? &*file.mean : nullptr);

	std::vector<MeasureId> ids;
	if (opts.measures.empty()) {
		ids = table_measures();
	} else {
		for (const auto &m : opts.measures) {
			ids.push_back(MeasureId::parse(m));
		}
	}

	const EvaluationInput input {file.series.values(), mean_path.values(), trace.values(), baseline.values(),
	                             std::span<const double>(insample)};
	std::string text = global.out == "csv" ? "measure,value\n" : "";
	std::vector<MeasureId> undefined;
	for (const auto &id : ids) {
		const auto value = evaluate(id, input);
		const std::string shown = value.defined() ? fmt::format("{:.5f}", value.value())
		                                          : fmt::format("Undefined({})", reason_name(*value.reason()));
		text += global.out == "csv" ? fmt::format("{},{}\n", id.name(), shown) : fmt::format("{:<8}  {}\n", id.name(), shown);
		if (!value.defined()) {
			undefined.push_back(id);
		}
	}
	std::cout << text;
	return report_undefined(undefined);
}

void apply_globals(const GlobalOptions &global, ExperimentSpec &spec) {
	if (global.seed) {
		spec.master_seed = *global.seed;
	}
	if (global.mean_est) {
		spec.mean_estimator = MeanEstimatorSpec::parse(*global.mean_est);
	}
}

int emit_experiment(const GlobalOptions &global, const ExperimentSpec &spec, std::size_t replications,
                    const std::string &caption) {
	const auto report = run_experiment(spec);
	std::string text = global.out == "csv" ? render_csv(report) : render_text(report, caption);
	if (replications > 1) {
		const auto summary = run_replications(spec, replications);
		text += global.out == "csv" ? "\n" + render_csv(summary) : "\n" + render_text(summary);
	}
	std::cout << text;
	return report_undefined(undefined_for_all(report));
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app {"Intermittent demand forecasting: mean-based error measures and forecaster ranking"};
	app.require_subcommand(1);
	app.fallthrough();

	GlobalOptions global;
	app.add_option("--seed", global.seed, "Master seed (default 42)");
	app.add_option("--out", global.out, "Output format")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
	app.add_option("--mean-est", global.mean_est, "Mean estimator: series-mean | window:K | regression | known");

	GenerateOptions gen;
	auto *generate_cmd = app.add_subcommand("generate", "Write a demand series CSV (t,demand,mean)");
	generate_cmd->add_option("--kind", gen.kind, "Generator kind")
	    ->check(CLI::IsMember({"bernoulli-logarithmic", "bernoulli-geometric-size", "regular-intermittent", "markov2",
	                           "obsolescence"}))
	    ->capture_default_str();
	for (const char *key : {"p0", "ell", "size_p", "period", "size", "p01", "p10", "profile", "change_period",
	                        "end_period"}) {
		std::string flag = std::string("--") + key;
		std::replace(flag.begin(), flag.end(), '_', '-');
		generate_cmd->add_option_function<std::string>(
		    flag, [&gen, key](const std::string &v) { gen.params[key] = v; }, std::string("Generator parameter ") + key);
	}
	generate_cmd->add_option("-n,--length", gen.length, "Number of periods")->check(CLI::PositiveNumber)->capture_default_str();
	generate_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

	EvaluateOptions eval;
	auto *evaluate_cmd = app.add_subcommand("evaluate", "Score a forecast CSV against a series CSV");
	evaluate_cmd->add_option("--series", eval.series, "Series CSV (t,demand[,mean])")->required();
	evaluate_cmd->add_option("--forecasts", eval.forecasts, "Forecast CSV (t,forecast)")->required();
	evaluate_cmd->add_option("--baseline", eval.baseline, "Baseline forecast CSV (default: random walk)");
	evaluate_cmd->add_option("--insample", eval.insample, "In-sample series CSV for scaled measures (default: the series)");
	evaluate_cmd->add_option("--measures", eval.measures, "Measure names, e.g. MAE mMAE iMAPE")->delimiter(',');

	std::string config_path;
	std::size_t rank_replications = 1;
	auto *rank_cmd = app.add_subcommand("rank", "Run an experiment described by a JSON config file");
	rank_cmd->add_option("--config", config_path, "Experiment config (flat JSON object)")->required();
	rank_cmd->add_option("--replications", rank_replications, "Replications for ranking stability")
	    ->check(CLI::PositiveNumber);

	int table_id = 1;
	std::size_t replications = 1;
	auto *reproduce_cmd = app.add_subcommand("reproduce", "Regenerate one of the published result tables");
	reproduce_cmd->add_option("--table", table_id, "Table number")->required()->check(CLI::Range(1, 5));
	reproduce_cmd->add_option("--replications", replications, "Replications for ranking stability")
	    ->check(CLI::PositiveNumber);

	CLI11_PARSE(app, argc, argv);

	try {
		if (*generate_cmd) {
			return run_generate(global, gen);
		}
		if (*evaluate_cmd) {
			return run_evaluate(global, eval);
		}
		if (*rank_cmd) {
			auto spec = load_experiment_config(config_path);
			apply_globals(global, spec);
			return emit_experiment(global, spec, rank_replications, "");
		}
		if (*reproduce_cmd) {
			auto spec = table_spec(table_id);
			apply_globals(global, spec);
			return emit_experiment(global, spec, replications, table_caption(table_id));
		}
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	}
	return 0;
}
