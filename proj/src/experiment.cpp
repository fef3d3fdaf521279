#include "intermit/experiment.hpp"

#include <algorithm>
#include <stdexcept>

namespace intermit {

namespace {

void require(bool condition, const std::string &message) {
	if (!condition) {
		throw std::invalid_argument(message);
	}
}

} // namespace

void validate(const ExperimentSpec &spec) {
	validate(spec.generator);
	require(spec.eval_len >= 1, "evaluation length must be positive");
	require(!spec.grid.empty(), "smoothing grid must not be empty");
	for (double g : spec.grid) {
		require(g > 0.0 && g < 1.0, "smoothing grid values must lie in (0, 1)");
	}
	require(!spec.measures.empty(), "measure list must not be empty");
	require(!spec.forecasters.empty(), "forecaster list must not be empty");
	for (std::size_t i = 0; i < spec.forecasters.size(); ++i) {
		for (std::size_t j = i + 1; j < spec.forecasters.size(); ++j) {
			require(spec.forecasters[i] != spec.forecasters[j], "forecasters must not repeat");
		}
	}
	for (const auto &m : spec.measures) {
		if (needs_insample(m.base) && m.base != BaseMeasure::MMR) {
			require(spec.warmup_len >= 2, m.name() + " uses the warm-up as its in-sample window and needs >= 2 periods");
		}
		if (m.base == BaseMeasure::MMR) {
			require(spec.warmup_len >= 1, "MMR uses the warm-up as its in-sample window and needs >= 1 period");
		}
	}
	if (spec.mean_estimator.kind == MeanEstimatorKind::linear_regression) {
		require(spec.eval_len >= 2, "regression mean estimate needs at least two evaluation periods");
	}
}

Realization make_realization(const ExperimentSpec &spec) {
	RandomStream stream(derive_seed(spec.master_seed, {spec.setting_id, spec.replication}));
	const auto generated = generate(spec.generator, spec.warmup_len + spec.eval_len, stream);
	const auto all = generated.series.values();

	std::vector<double> warmup(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(spec.warmup_len));
	DemandSeries series = generated.series.slice(spec.warmup_len, spec.eval_len);
	MeanPath analytic = generated.mean.slice(spec.warmup_len, spec.eval_len);
	MeanPath estimated = estimate_mean_path(spec.mean_estimator, series, &analytic);
	return Realization {std::move(warmup), std::move(series), std::move(estimated), std::move(analytic)};
}

std::vector<ForecasterSpec> grid_cells(Method method, const std::vector<double> &grid) {
	std::vector<ForecasterSpec> cells;
	switch (method) {
	case Method::ses:
		for (double a : grid) {
			cells.push_back(ForecasterSpec::ses(a));
		}
		break;
	case Method::croston:
		for (double a : grid) {
			for (double b : grid) {
				cells.push_back(ForecasterSpec::croston(a, b));
			}
		}
		break;
	case Method::random_walk:
		cells.push_back(ForecasterSpec::random_walk());
		break;
	case Method::zero:
		cells.push_back(ForecasterSpec::zero());
		break;
	}
	return cells;
}

std::size_t Ranking::rank_of(Method method) const {
	for (std::size_t i = 0; i < groups.size(); ++i) {
		if (std::find(groups[i].begin(), groups[i].end(), method) != groups[i].end()) {
			return i;
		}
	}
	throw std::out_of_range("forecaster " + std::string(method_name(method)) + " is not ranked");
}

std::string Ranking::to_string() const {
	std::string out;
	for (std::size_t i = 0; i < groups.size(); ++i) {
		if (i > 0) {
			out += " > ";
		}
		for (std::size_t j = 0; j < groups[i].size(); ++j) {
			if (j > 0) {
				out += " = ";
			}
			out += method_name(groups[i][j]);
		}
	}
	return out;
}

Ranking rank_forecasters(const MeasureId &id, const std::vector<Method> &forecasters,
                         const std::vector<MeasureValue> &values) {
	require(forecasters.size() == values.size(), "one value per forecaster is required");
	std::vector<std::size_t> order(forecasters.size());
	for (std::size_t i = 0; i < order.size(); ++i) {
		order[i] = i;
	}
	std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
		return compare_values(id, values[a], values[b]) < 0;
	});
	Ranking ranking;
	for (std::size_t k = 0; k < order.size(); ++k) {
		const std::size_t i = order[k];
		if (k > 0 && compare_values(id, values[order[k - 1]], values[i]) == 0) {
			ranking.groups.back().push_back(forecasters[i]);
		} else {
			ranking.groups.push_back({forecasters[i]});
		}
	}
	return ranking;
}

const MeasureRow &ExperimentReport::row(const MeasureId &id) const {
	for (const auto &r : rows) {
		if (r.measure == id) {
			return r;
		}
	}
	throw std::out_of_range("measure " + id.name() + " is not in the report");
}

const BestCell &ExperimentReport::cell(const MeasureId &id, Method method) const {
	const auto &r = row(id);
	for (std::size_t i = 0; i < forecasters.size(); ++i) {
		if (forecasters[i] == method) {
			return r.best[i];
		}
	}
	throw std::out_of_range("forecaster " + std::string(method_name(method)) + " is not in the report");
}

ExperimentReport run_experiment(const ExperimentSpec &spec) {
	validate(spec);
	const Realization data = make_realization(spec);
	const auto series = data.series.values();
	const auto baseline = run_forecaster(ForecasterSpec::random_walk(), series, data.warmup);

	ExperimentReport report;
	report.setting = describe(spec.generator);
	report.master_seed = spec.master_seed;
	report.forecasters = spec.forecasters;
	report.rows.resize(spec.measures.size());
	for (std::size_t m = 0; m < spec.measures.size(); ++m) {
		report.rows[m].measure = spec.measures[m];
		report.rows[m].best.resize(spec.forecasters.size());
	}

	for (std::size_t f = 0; f < spec.forecasters.size(); ++f) {
		bool first = true;
		for (const auto &cell : grid_cells(spec.forecasters[f], spec.grid)) {
			const auto trace = run_forecaster(cell, series, data.warmup);
			const EvaluationInput input {series, data.mean_path.values(), trace.values(), baseline.values(),
			                             std::span<const double>(data.warmup)};
			for (std::size_t m = 0; m < spec.measures.size(); ++m) {
				const auto &id = spec.measures[m];
				auto value = evaluate(id, input);
				auto &best = report.rows[m].best[f];
				if (first || compare_values(id, value, best.value) < 0) {
					best = BestCell {cell, value};
				}
			}
			first = false;
		}
	}

	for (auto &row : report.rows) {
		std::vector<MeasureValue> values;
		values.reserve(row.best.size());
		for (const auto &b : row.best) {
			values.push_back(b.value);
		}
		row.ranking = rank_forecasters(row.measure, report.forecasters, values);
	}
	return report;
}

std::string_view verdict_name(Verdict verdict) {
	switch (verdict) {
	case Verdict::pass:
		return "pass";
	case Verdict::fail:
		return "fail";
	case Verdict::tie:
		return "tie";
	}
	return "?";
}

Verdict check_axiom(const Ranking &ranking) {
	const std::size_t cr = ranking.rank_of(Method::croston);
	const std::size_t ses = ranking.rank_of(Method::ses);
	const std::size_t zf = ranking.rank_of(Method::zero);
	if (cr == ses || ses == zf || cr == zf) {
		return Verdict::tie;
	}
	return cr < ses && ses < zf ? Verdict::pass : Verdict::fail;
}

std::vector<Verdict> check_axiom(const ExperimentReport &report) {
	std::vector<Verdict> verdicts;
	verdicts.reserve(report.rows.size());
	for (const auto &row : report.rows) {
		verdicts.push_back(check_axiom(row.ranking));
	}
	return verdicts;
}

std::vector<MeasureId> table_measures() {
	std::vector<MeasureId> out;
	for (auto base : {BaseMeasure::MAE, BaseMeasure::MdAE, BaseMeasure::MSE, BaseMeasure::iMAPE, BaseMeasure::PB}) {
		out.push_back({base, Target::point});
	}
	for (auto base : {BaseMeasure::MAE, BaseMeasure::MdAE, BaseMeasure::MSE, BaseMeasure::MAPE, BaseMeasure::PB,
	                  BaseMeasure::GMRAE}) {
		out.push_back({base, Target::mean});
	}
	return out;
}

ExperimentSpec table_spec(int table_id, std::uint64_t master_seed) {
	ExperimentSpec spec;
	switch (table_id) {
	case 1:
		spec.generator = BernoulliLogarithmic {0.2, 0.001};
		break;
	case 2:
		spec.generator = BernoulliLogarithmic {0.5, 0.001};
		break;
	case 3:
		spec.generator = BernoulliLogarithmic {0.2, 0.9};
		break;
	case 4:
		spec.generator = BernoulliLogarithmic {0.5, 0.9};
		break;
	case 5:
		spec.generator = Markov2 {0.3, 0.3};
		break;
	default:
		throw std::invalid_argument("table id must be between 1 and 5");
	}
	spec.measures = table_measures();
	spec.master_seed = master_seed;
	spec.setting_id = static_cast<std::uint64_t>(table_id);
	return spec;
}

std::string table_caption(int table_id) {
	switch (table_id) {
	case 1:
		return "Table 1: artificial demand with p0=0.2 and ell=0.001";
	case 2:
		return "Table 2: artificial demand with p0=0.5 and ell=0.001";
	case 3:
		return "Table 3: artificial demand with p0=0.2 and ell=0.9";
	case 4:
		return "Table 4: artificial demand with p0=0.5 and ell=0.9";
	case 5:
		return "Table 5: autocorrelated demand with p01=p10=0.3";
	default:
		throw std::invalid_argument("table id must be between 1 and 5");
	}
}

ReplicationSummary run_replications(const ExperimentSpec &spec, std::size_t replications) {
	require(replications >= 1, "at least one replication is required");
	const bool has_axiom_trio = std::ranges::count(spec.forecasters, Method::croston) &&
	                            std::ranges::count(spec.forecasters, Method::ses) &&
	                            std::ranges::count(spec.forecasters, Method::zero);
	ReplicationSummary summary;
	summary.setting = describe(spec.generator);
	summary.replications = replications;
	summary.measures = spec.measures;
	summary.verdict_counts.resize(spec.measures.size());
	summary.ranking_counts.resize(spec.measures.size());
	for (std::size_t r = 0; r < replications; ++r) {
		ExperimentSpec replica = spec;
		replica.replication = spec.replication + r;
		const auto report = run_experiment(replica);
		for (std::size_t m = 0; m < report.rows.size(); ++m) {
			if (has_axiom_trio) {
				++summary.verdict_counts[m][check_axiom(report.rows[m].ranking)];
			}
			++summary.ranking_counts[m][report.rows[m].ranking.to_string()];
		}
	}
	return summary;
}

std::vector<MeasureId> undefined_for_all(const ExperimentReport &report) {
	std::vector<MeasureId> out;
	for (const auto &row : report.rows) {
		if (std::none_of(row.best.begin(), row.best.end(), [](const BestCell &c) { return c.value.defined(); })) {
			out.push_back(row.measure);
		}
	}
	return out;
}

} // namespace intermit
