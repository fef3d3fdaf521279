#include "intermit/config.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace intermit {

namespace {

using json = nlohmann::json;

const std::set<std::string> kGeneratorKeys {"p0",   "ell",     "size_p",  "period",        "size",
                                            "p01",  "p10",     "profile", "change_period", "end_period"};

double to_real(const std::map<std::string, std::string> &params, const std::string &key) {
	const auto it = params.find(key);
	if (it == params.end()) {
		throw ConfigError("missing generator parameter '" + key + "'");
	}
	double value = 0.0;
	const auto &text = it->second;
	const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
	if (ec != std::errc() || ptr != text.data() + text.size()) {
		throw ConfigError("generator parameter '" + key + "' is not a number: '" + text + "'");
	}
	return value;
}

std::int64_t to_integer(const std::map<std::string, std::string> &params, const std::string &key) {
	const double value = to_real(params, key);
	if (value != static_cast<double>(static_cast<std::int64_t>(value))) {
		throw ConfigError("generator parameter '" + key + "' must be an integer");
	}
	return static_cast<std::int64_t>(value);
}

void allow_only(const std::map<std::string, std::string> &params, std::string_view kind,
                const std::set<std::string> &allowed) {
	for (const auto &[key, value] : params) {
		if (!allowed.contains(key)) {
			throw ConfigError("parameter '" + key + "' does not apply to generator kind '" + std::string(kind) + "'");
		}
	}
}

template <class T>
T field(const json &doc, const char *key, T fallback) {
	if (!doc.contains(key)) {
		return fallback;
	}
	try {
		return doc.at(key).get<T>();
	} catch (const json::exception &e) {
		throw ConfigError(std::string("config field '") + key + "': " + e.what());
	}
}

} // namespace

GeneratorSpec make_generator(std::string_view kind, const std::map<std::string, std::string> &params) {
	GeneratorSpec spec;
	if (kind == "bernoulli-logarithmic") {
		allow_only(params, kind, {"p0", "ell"});
		spec = BernoulliLogarithmic {to_real(params, "p0"), to_real(params, "ell")};
	} else if (kind == "bernoulli-geometric-size") {
		allow_only(params, kind, {"p0", "size_p"});
		spec = BernoulliGeometricSize {to_real(params, "p0"), to_real(params, "size_p")};
	} else if (kind == "regular-intermittent") {
		allow_only(params, kind, {"period", "size"});
		spec = RegularIntermittent {to_integer(params, "period"), params.contains("size") ? to_real(params, "size") : 1.0};
	} else if (kind == "markov2") {
		allow_only(params, kind, {"p01", "p10"});
		spec = Markov2 {to_real(params, "p01"), to_real(params, "p10")};
	} else if (kind == "obsolescence") {
		allow_only(params, kind, {"p0", "ell", "profile", "change_period", "end_period"});
		const auto profile_it = params.find("profile");
		if (profile_it == params.end()) {
			throw ConfigError("missing generator parameter 'profile'");
		}
		Obsolescence g;
		g.p0 = to_real(params, "p0");
		g.ell = to_real(params, "ell");
		g.change_period = to_integer(params, "change_period");
		if (profile_it->second == "linear") {
			g.profile = ObsolescenceProfile::linear_to_zero;
			g.end_period = to_integer(params, "end_period");
		} else if (profile_it->second == "abrupt") {
			g.profile = ObsolescenceProfile::abrupt_to_zero;
			g.end_period = params.contains("end_period") ? to_integer(params, "end_period") : g.change_period;
		} else {
			throw ConfigError("obsolescence profile must be 'linear' or 'abrupt'");
		}
		spec = g;
	} else {
		throw ConfigError("unknown generator kind '" + std::string(kind) + "'");
	}
	try {
		validate(spec);
	} catch (const std::invalid_argument &e) {
		throw ConfigError(e.what());
	}
	return spec;
}

ExperimentSpec parse_experiment_config(std::string_view json_text) {
	json doc;
	try {
		doc = json::parse(json_text);
	} catch (const json::parse_error &e) {
		throw ConfigError(std::string("config is not valid JSON: ") + e.what());
	}
	if (!doc.is_object()) {
		throw ConfigError("config must be a JSON object");
	}

	static const std::set<std::string> kSpecKeys {"kind",        "warmup_len",     "eval_len",    "grid",
	                                              "measures",    "forecasters",    "mean_estimator",
	                                              "master_seed", "setting_id"};
	std::map<std::string, std::string> generator_params;
	for (const auto &[key, value] : doc.items()) {
		if (kGeneratorKeys.contains(key)) {
			generator_params[key] = value.is_string() ? value.get<std::string>() : value.dump();
		} else if (!kSpecKeys.contains(key)) {
			throw ConfigError("unknown config field '" + key + "'");
		}
	}

	ExperimentSpec spec;
	const auto kind = field<std::string>(doc, "kind", "");
	if (kind.empty()) {
		throw ConfigError("config needs a generator 'kind'");
	}
	spec.generator = make_generator(kind, generator_params);
	spec.warmup_len = field<std::size_t>(doc, "warmup_len", spec.warmup_len);
	spec.eval_len = field<std::size_t>(doc, "eval_len", spec.eval_len);
	spec.grid = field<std::vector<double>>(doc, "grid", spec.grid);
	spec.master_seed = field<std::uint64_t>(doc, "master_seed", spec.master_seed);
	spec.setting_id = field<std::uint64_t>(doc, "setting_id", spec.setting_id);

	const auto measures = field<std::vector<std::string>>(doc, "measures", {});
	if (measures.empty()) {
		throw ConfigError("config needs a non-empty 'measures' list");
	}
	try {
		spec.measures.clear();
		for (const auto &m : measures) {
			spec.measures.push_back(MeasureId::parse(m));
		}
		if (doc.contains("forecasters")) {
			spec.forecasters.clear();
			for (const auto &f : field<std::vector<std::string>>(doc, "forecasters", {})) {
				spec.forecasters.push_back(parse_method(f));
			}
		}
		if (doc.contains("mean_estimator")) {
			spec.mean_estimator = MeanEstimatorSpec::parse(field<std::string>(doc, "mean_estimator", ""));
		}
		validate(spec);
	} catch (const std::invalid_argument &e) {
		throw ConfigError(e.what());
	}
	return spec;
}

ExperimentSpec load_experiment_config(const std::filesystem::path &path) {
	std::ifstream in(path);
	if (!in) {
		throw ConfigError("cannot open config file '" + path.string() + "'");
	}
	std::stringstream buffer;
	buffer << in.rdbuf();
	return parse_experiment_config(buffer.str());
}

} // namespace intermit
