#pragma once

#include "intermit/demand.hpp"
#include "intermit/forecast.hpp"
#include "intermit/mean_estimate.hpp"
#include "intermit/measures.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace intermit {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct ExperimentSpec {
	GeneratorSpec generator = BernoulliLogarithmic {};
	std::size_t warmup_len = 10'000;
	std::size_t eval_len = 100'000;
	std::vector<double> grid {0.1, 0.2, 0.3};
	std::vector<MeasureId> measures;
	std::vector<Method> forecasters {Method::ses, Method::croston, Method::zero};
	MeanEstimatorSpec mean_estimator {};
	std::uint64_t master_seed = kDefaultSeed;
	/// Mixed into the realization seed so different settings sharing a master
	/// seed draw unrelated series.
	std::uint64_t setting_id = 0;
	std::uint64_t replication = 0;
};

/// Throws std::invalid_argument when a list is empty, a grid value is outside
/// (0, 1), a length is zero, or the generator is invalid.
void validate(const ExperimentSpec &spec);

/// The single demand realization shared by every forecaster of an experiment.
struct Realization {
	std::vector<double> warmup; ///< may be empty
	DemandSeries series;
	MeanPath mean_path;          ///< chosen by the spec's estimator, over `series`
	MeanPath analytic_mean_path; ///< generator's closed form, over `series`
};

/// The warm-up and evaluation horizons are generated as one contiguous series
/// from a stream seeded by (master_seed, setting_id, replication).
Realization make_realization(const ExperimentSpec &spec);

/// Every parameter setting tried for a method: SES over alpha, CR over the
/// alpha x beta cross product, a single cell for RW and ZF.
std::vector<ForecasterSpec> grid_cells(Method method, const std::vector<double> &grid);

struct BestCell {
	ForecasterSpec params;
	MeasureValue value = MeasureValue::undefined(UndefinedReason::zero_denominator);
};

/// Total preorder over forecasters: groups from best to worst, members of a
/// group tied.
struct Ranking {
	std::vector<std::vector<Method>> groups;

	/// Position of the method's group, 0 = best. Throws std::out_of_range.
	std::size_t rank_of(Method method) const;
	/// e.g. "CR > SES > ZF" or "CR = SES > ZF".
	std::string to_string() const;

	bool operator==(const Ranking &) const = default;
};

/// Ranks forecasters by their values under the measure; Undefined goes last.
Ranking rank_forecasters(const MeasureId &id, const std::vector<Method> &forecasters,
                         const std::vector<MeasureValue> &values);

struct MeasureRow {
	MeasureId measure;
	std::vector<BestCell> best; ///< aligned with ExperimentReport::forecasters
	Ranking ranking;
};

struct ExperimentReport {
	std::string setting;
	std::uint64_t master_seed = 0;
	std::vector<Method> forecasters;
	std::vector<MeasureRow> rows;

	const MeasureRow &row(const MeasureId &id) const;
	const BestCell &cell(const MeasureId &id, Method method) const;
};

/// Generates one realization, runs every forecaster over its grid, and keeps
/// the orientation-best cell per (measure, forecaster). RW's trace is the
/// baseline for relative measures; the warm-up demands are the in-sample
/// window for the scaled measures. Ties between grid cells keep the first.
ExperimentReport run_experiment(const ExperimentSpec &spec);

enum class Verdict { pass, fail, tie };
std::string_view verdict_name(Verdict verdict);

/// pass iff CR is strictly above SES, which is strictly above ZF; tie if any
/// two of the three are tied; fail otherwise.
Verdict check_axiom(const Ranking &ranking);
std::vector<Verdict> check_axiom(const ExperimentReport &report);

/// The measures of the published tables, in row order.
std::vector<MeasureId> table_measures();

/// Canonical settings: 1 (p0=0.2, ell=0.001), 2 (p0=0.5, ell=0.001),
/// 3 (p0=0.2, ell=0.9), 4 (p0=0.5, ell=0.9), 5 (markov2, p01=p10=0.3).
/// Throws std::invalid_argument for other ids.
ExperimentSpec table_spec(int table_id, std::uint64_t master_seed = kDefaultSeed);
std::string table_caption(int table_id);

/// Stability of rankings across replications (derived seeds).
struct ReplicationSummary {
	std::string setting;
	std::size_t replications = 0;
	std::vector<MeasureId> measures;
	std::vector<std::map<Verdict, std::size_t>> verdict_counts;      ///< per measure
	std::vector<std::map<std::string, std::size_t>> ranking_counts; ///< per measure
};

ReplicationSummary run_replications(const ExperimentSpec &spec, std::size_t replications);

// Rendering. Values use 5 decimal places; Undefined renders as its reason.
std::string render_text(const ExperimentReport &report, const std::string &caption = {});
std::string render_csv(const ExperimentReport &report);
std::string render_text(const ReplicationSummary &summary);
std::string render_csv(const ReplicationSummary &summary);

/// Measures whose value is Undefined for every forecaster in the report.
std::vector<MeasureId> undefined_for_all(const ExperimentReport &report);

} // namespace intermit
