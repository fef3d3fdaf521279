#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace intermit {

enum class UndefinedReason { zero_denominator, empty_after_exclusion, identical_insample, zero_relative_error };

/// "zero-denominator", "empty-after-exclusion", "identical-insample", "zero-relative-error".
std::string_view reason_name(UndefinedReason reason);

/// A finite measure value, or Undefined with a reason. Never holds an
/// infinity or a NaN.
class MeasureValue {
public:
	/// A non-finite input (division by zero upstream) becomes
	/// Undefined(zero-denominator).
	static MeasureValue of(double value);
	static MeasureValue undefined(UndefinedReason reason) { return MeasureValue(reason); }

	bool defined() const { return std::holds_alternative<double>(state_); }

	/// Throws std::logic_error when undefined.
	double value() const;
	std::optional<UndefinedReason> reason() const;

	bool operator==(const MeasureValue &) const = default;

private:
	explicit MeasureValue(std::variant<double, UndefinedReason> state) : state_(state) {}
	std::variant<double, UndefinedReason> state_;
};

enum class BaseMeasure {
	ME,
	MSE,
	RMSE,
	MAE,
	MdAE,
	MAPE,
	iMAPE,
	MdAPE,
	RMSPE,
	RMdSPE,
	sMAPE,
	sMdAPE,
	MRAE,
	MdRAE,
	GMRAE,
	RelMAE,
	RelMSE,
	RelRMSE,
	U2,
	LMR,
	PB,
	PBt,
	MMR,
	MASE,
	RMSSE,
	MdASE,
};

/// Every base measure, in declaration order.
std::span<const BaseMeasure> all_base_measures();

std::string_view base_name(BaseMeasure base);

/// Point target scores forecasts against demands y_t; mean target scores
/// them against the process mean y^m_t ("m"-prefixed measures).
enum class Target { point, mean };
enum class Orientation { lower_better, higher_better };

/// Measures that need baseline forecasts (relative-error, relative, PB, PBt).
bool needs_baseline(BaseMeasure base);
/// Measures that need an in-sample window (MASE, RMSSE, MdASE, MMR).
bool needs_insample(BaseMeasure base);

struct MeasureId {
	BaseMeasure base = BaseMeasure::MAE;
	Target target = Target::point;

	/// Higher is better exactly for PB and PBt (and their mean lifts).
	Orientation orientation() const;

	/// Base name with an "m" prefix for the mean target, e.g. "mGMRAE".
	std::string name() const;

	/// Case-sensitive inverse of name(). Throws std::invalid_argument.
	static MeasureId parse(std::string_view text);

	bool operator==(const MeasureId &) const = default;
};

/// Errors e_t = actuals_t - forecasts_t. Throws std::invalid_argument on a
/// length mismatch or empty input.
std::vector<double> errors(std::span<const double> actuals, std::span<const double> forecasts);

/// Inputs of one measure computation. `actuals` are demands or the mean
/// path, depending on the target.
struct ErrorSample {
	std::span<const double> actuals;
	std::span<const double> forecasts;
	std::optional<std::span<const double>> baseline_forecasts;
	/// Historical demands for the scaled family; always point demands.
	std::optional<std::span<const double>> insample;
};

/// ME, MSE, RMSE, MAE, MdAE.
MeasureValue scale_dependent(BaseMeasure base, const ErrorSample &sample);
/// MAPE, iMAPE, MdAPE, RMSPE, RMdSPE, sMAPE, sMdAPE.
MeasureValue percentage(BaseMeasure base, const ErrorSample &sample);
/// MRAE, MdRAE, GMRAE against the baseline errors.
MeasureValue relative_error(BaseMeasure base, const ErrorSample &sample);
/// RelMAE, RelMSE, RelRMSE, U2, LMR against the baseline's measure.
MeasureValue relative(BaseMeasure base, const ErrorSample &sample);
/// Percentage of periods where |e_t| < |e*_t| strictly.
MeasureValue percent_better(const ErrorSample &sample);
/// For each method, the percentage of periods in which its absolute error is
/// the strict minimum across all methods. Ties on the minimum score nobody.
std::vector<MeasureValue> percent_best(std::span<const double> actuals,
                                       std::span<const std::vector<double>> forecasts_per_method);
/// MASE, RMSSE, MdASE, MMR.
MeasureValue scaled(BaseMeasure base, const ErrorSample &sample);

/// Dispatches to the family computation. PBt here compares the method with
/// the baseline only. Throws std::invalid_argument when a needed baseline or
/// in-sample window is missing, or on length mismatches.
MeasureValue compute(BaseMeasure base, const ErrorSample &sample);

/// Everything a measure can consume for one forecast trace.
struct EvaluationInput {
	std::span<const double> demands;
	std::span<const double> mean_path; ///< may be empty for point-target measures
	std::span<const double> forecasts;
	std::optional<std::span<const double>> baseline_forecasts;
	std::optional<std::span<const double>> insample;
};

/// Picks actuals by target (demands or mean path) and computes the measure.
/// Baseline errors are lifted the same way: e*^m_t = y^m_t - baseline_t.
MeasureValue evaluate(const MeasureId &id, const EvaluationInput &input);

/// Orders two values of the same measure: less means better. Undefined sorts
/// after every defined value. ME is compared by magnitude, since a signed
/// bias closer to zero is the better one.
std::weak_ordering compare_values(const MeasureId &id, const MeasureValue &a, const MeasureValue &b);

} // namespace intermit
