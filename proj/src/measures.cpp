#include "intermit/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace intermit {

namespace {

constexpr std::array kAllBases {
    BaseMeasure::ME,     BaseMeasure::MSE,    BaseMeasure::RMSE,    BaseMeasure::MAE,   BaseMeasure::MdAE,
    BaseMeasure::MAPE,   BaseMeasure::iMAPE,  BaseMeasure::MdAPE,   BaseMeasure::RMSPE, BaseMeasure::RMdSPE,
    BaseMeasure::sMAPE,  BaseMeasure::sMdAPE, BaseMeasure::MRAE,    BaseMeasure::MdRAE, BaseMeasure::GMRAE,
    BaseMeasure::RelMAE, BaseMeasure::RelMSE, BaseMeasure::RelRMSE, BaseMeasure::U2,    BaseMeasure::LMR,
    BaseMeasure::PB,     BaseMeasure::PBt,    BaseMeasure::MMR,     BaseMeasure::MASE,  BaseMeasure::RMSSE,
    BaseMeasure::MdASE,
};

double mean(std::span<const double> xs) {
	double sum = 0.0;
	for (double x : xs) {
		sum += x;
	}
	return sum / static_cast<double>(xs.size());
}

// Midpoint of the two central order statistics for even sizes. Reorders xs.
double median_inplace(std::vector<double> &xs) {
	const std::size_t n = xs.size();
	const auto mid = xs.begin() + static_cast<std::ptrdiff_t>(n / 2);
	std::nth_element(xs.begin(), mid, xs.end());
	const double upper = *mid;
	if (n % 2 == 1) {
		return upper;
	}
	const double lower = *std::max_element(xs.begin(), mid);
	return lower + (upper - lower) / 2.0;
}

std::vector<double> absolute(std::vector<double> xs) {
	for (auto &x : xs) {
		x = std::abs(x);
	}
	return xs;
}

std::vector<double> squared(std::vector<double> xs) {
	for (auto &x : xs) {
		x *= x;
	}
	return xs;
}

void require(bool condition, const char *message) {
	if (!condition) {
		throw std::invalid_argument(message);
	}
}

std::span<const double> baseline_of(const ErrorSample &sample) {
	require(sample.baseline_forecasts.has_value(), "measure needs baseline forecasts");
	require(sample.baseline_forecasts->size() == sample.actuals.size(), "baseline length must match actuals");
	return *sample.baseline_forecasts;
}

MeasureValue undefined(UndefinedReason reason) {
	return MeasureValue::undefined(reason);
}

} // namespace

std::string_view reason_name(UndefinedReason reason) {
	switch (reason) {
	case UndefinedReason::zero_denominator:
		return "zero-denominator";
	case UndefinedReason::empty_after_exclusion:
		return "empty-after-exclusion";
	case UndefinedReason::identical_insample:
		return "identical-insample";
	case UndefinedReason::zero_relative_error:
		return "zero-relative-error";
	}
	return "?";
}

MeasureValue MeasureValue::of(double value) {
	if (!std::isfinite(value)) {
		return MeasureValue(UndefinedReason::zero_denominator);
	}
	return MeasureValue(value);
}

double MeasureValue::value() const {
	if (const double *v = std::get_if<double>(&state_)) {
		return *v;
	}
	throw std::logic_error("measure value is undefined (" + std::string(reason_name(*reason())) + ")");
}

std::optional<UndefinedReason> MeasureValue::reason() const {
	if (const auto *r = std::get_if<UndefinedReason>(&state_)) {
		return *r;
	}
	return std::nullopt;
}

std::span<const BaseMeasure> all_base_measures() {
	return kAllBases;
}

std::string_view base_name(BaseMeasure base) {
	switch (base) {
	case BaseMeasure::ME: return "ME";
	case BaseMeasure::MSE: return "MSE";
	case BaseMeasure::RMSE: return "RMSE";
	case BaseMeasure::MAE: return "MAE";
	case BaseMeasure::MdAE: return "MdAE";
	case BaseMeasure::MAPE: return "MAPE";
	case BaseMeasure::iMAPE: return "iMAPE";
	case BaseMeasure::MdAPE: return "MdAPE";
	case BaseMeasure::RMSPE: return "RMSPE";
	case BaseMeasure::RMdSPE: return "RMdSPE";
	case BaseMeasure::sMAPE: return "sMAPE";
	case BaseMeasure::sMdAPE: return "sMdAPE";
	case BaseMeasure::MRAE: return "MRAE";
	case BaseMeasure::MdRAE: return "MdRAE";
	case BaseMeasure::GMRAE: return "GMRAE";
	case BaseMeasure::RelMAE: return "RelMAE";
	case BaseMeasure::RelMSE: return "RelMSE";
	case BaseMeasure::RelRMSE: return "RelRMSE";
	case BaseMeasure::U2: return "U2";
	case BaseMeasure::LMR: return "LMR";
	case BaseMeasure::PB: return "PB";
	case BaseMeasure::PBt: return "PBt";
	case BaseMeasure::MMR: return "MMR";
	case BaseMeasure::MASE: return "MASE";
	case BaseMeasure::RMSSE: return "RMSSE";
	case BaseMeasure::MdASE: return "MdASE";
	}
	return "?";
}

bool needs_baseline(BaseMeasure base) {
	switch (base) {
	case BaseMeasure::MRAE:
	case BaseMeasure::MdRAE:
	case BaseMeasure::GMRAE:
	case BaseMeasure::RelMAE:
	case BaseMeasure::RelMSE:
	case BaseMeasure::RelRMSE:
	case BaseMeasure::U2:
	case BaseMeasure::LMR:
	case BaseMeasure::PB:
	case BaseMeasure::PBt:
		return true;
	default:
		return false;
	}
}

bool needs_insample(BaseMeasure base) {
	return base == BaseMeasure::MMR || base == BaseMeasure::MASE || base == BaseMeasure::RMSSE ||
	       base == BaseMeasure::MdASE;
}

Orientation MeasureId::orientation() const {
	return base == BaseMeasure::PB || base == BaseMeasure::PBt ? Orientation::higher_better
	                                                           : Orientation::lower_better;
}

std::string MeasureId::name() const {
	std::string out = target == Target::mean ? "m" : "";
	out += base_name(base);
	return out;
}

MeasureId MeasureId::parse(std::string_view text) {
	for (BaseMeasure base : kAllBases) {
		if (base_name(base) == text) {
			return {base, Target::point};
		}
	}
	if (text.size() > 1 && text.front() == 'm') {
		const auto rest = text.substr(1);
		for (BaseMeasure base : kAllBases) {
			if (base_name(base) == rest) {
				return {base, Target::mean};
			}
		}
	}
	throw std::invalid_argument("unknown measure '" + std::string(text) + "'");
}

std::vector<double> errors(std::span<const double> actuals, std::span<const double> forecasts) {
	require(!actuals.empty(), "error sample must not be empty");
	require(actuals.size() == forecasts.size(), "actuals and forecasts must have equal length");
	std::vector<double> e(actuals.size());
	for (std::size_t t = 0; t < e.size(); ++t) {
		e[t] = actuals[t] - forecasts[t];
	}
	return e;
}

MeasureValue scale_dependent(BaseMeasure base, const ErrorSample &sample) {
	auto e = errors(sample.actuals, sample.forecasts);
	switch (base) {
	case BaseMeasure::ME:
		return MeasureValue::of(mean(e));
	case BaseMeasure::MSE:
		return MeasureValue::of(mean(squared(std::move(e))));
	case BaseMeasure::RMSE:
		return MeasureValue::of(std::sqrt(mean(squared(std::move(e)))));
	case BaseMeasure::MAE:
		return MeasureValue::of(mean(absolute(std::move(e))));
	case BaseMeasure::MdAE: {
		auto a = absolute(std::move(e));
		return MeasureValue::of(median_inplace(a));
	}
	default:
		throw std::invalid_argument("not a scale-dependent measure");
	}
}

MeasureValue percentage(BaseMeasure base, const ErrorSample &sample) {
	const auto e = errors(sample.actuals, sample.forecasts);
	const auto y = sample.actuals;
	const auto f = sample.forecasts;
	const std::size_t n = e.size();

	if (base == BaseMeasure::sMAPE || base == BaseMeasure::sMdAPE) {
		std::vector<double> s(n);
		for (std::size_t t = 0; t < n; ++t) {
			const double denom = y[t] + f[t];
			if (denom == 0.0) {
				return undefined(UndefinedReason::zero_denominator);
			}
			s[t] = 200.0 * std::abs(e[t]) / denom;
		}
		return MeasureValue::of(base == BaseMeasure::sMAPE ? mean(s) : median_inplace(s));
	}

	// p_t = 100 e_t / y_t, written as 100 (e_t / y_t) so that e_t == y_t gives exactly 100.
	std::vector<double> p;
	p.reserve(n);
	for (std::size_t t = 0; t < n; ++t) {
		if (y[t] == 0.0) {
			if (base == BaseMeasure::iMAPE) {
				continue;
			}
			return undefined(UndefinedReason::zero_denominator);
		}
		p.push_back(100.0 * (e[t] / y[t]));
	}
	if (p.empty()) {
		return undefined(UndefinedReason::empty_after_exclusion);
	}

	switch (base) {
	case BaseMeasure::MAPE:
	case BaseMeasure::iMAPE:
		return MeasureValue::of(mean(absolute(std::move(p))));
	case BaseMeasure::MdAPE: {
		auto a = absolute(std::move(p));
		return MeasureValue::of(median_inplace(a));
	}
	case BaseMeasure::RMSPE:
		return MeasureValue::of(std::sqrt(mean(squared(std::move(p)))));
	case BaseMeasure::RMdSPE: {
		auto sq = squared(std::move(p));
		return MeasureValue::of(std::sqrt(median_inplace(sq)));
	}
	default:
		throw std::invalid_argument("not a percentage measure");
	}
}

MeasureValue relative_error(BaseMeasure base, const ErrorSample &sample) {
	const auto e = errors(sample.actuals, sample.forecasts);
	const auto eb = errors(sample.actuals, baseline_of(sample));
	std::vector<double> r(e.size());
	for (std::size_t t = 0; t < e.size(); ++t) {
		if (eb[t] == 0.0) {
			return undefined(UndefinedReason::zero_denominator);
		}
		r[t] = std::abs(e[t] / eb[t]);
	}
	switch (base) {
	case BaseMeasure::MRAE:
		return MeasureValue::of(mean(r));
	case BaseMeasure::MdRAE:
		return MeasureValue::of(median_inplace(r));
	case BaseMeasure::GMRAE: {
		double log_sum = 0.0;
		for (double x : r) {
			if (x == 0.0) {
				return undefined(UndefinedReason::zero_relative_error);
			}
			log_sum += std::log(x);
		}
		return MeasureValue::of(std::exp(log_sum / static_cast<double>(r.size())));
	}
	default:
		throw std::invalid_argument("not a relative-error measure");
	}
}

MeasureValue relative(BaseMeasure base, const ErrorSample &sample) {
	const ErrorSample baseline_sample {sample.actuals, baseline_of(sample), std::nullopt, std::nullopt};
	BaseMeasure inner = BaseMeasure::MSE;
	switch (base) {
	case BaseMeasure::RelMAE:
		inner = BaseMeasure::MAE;
		break;
	case BaseMeasure::RelMSE:
	case BaseMeasure::LMR:
		inner = BaseMeasure::MSE;
		break;
	case BaseMeasure::RelRMSE:
	case BaseMeasure::U2:
		inner = BaseMeasure::RMSE;
		break;
	default:
		throw std::invalid_argument("not a relative measure");
	}
	const double method = scale_dependent(inner, sample).value();
	const double reference = scale_dependent(inner, baseline_sample).value();
	if (reference == 0.0) {
		return undefined(UndefinedReason::zero_denominator);
	}
	const double ratio = method / reference;
	if (base != BaseMeasure::LMR) {
		return MeasureValue::of(ratio);
	}
	if (ratio == 0.0) {
		return undefined(UndefinedReason::zero_relative_error);
	}
	return MeasureValue::of(std::log(ratio));
}

MeasureValue percent_better(const ErrorSample &sample) {
	const auto e = errors(sample.actuals, sample.forecasts);
	const auto eb = errors(sample.actuals, baseline_of(sample));
	std::size_t wins = 0;
	for (std::size_t t = 0; t < e.size(); ++t) {
		if (std::abs(e[t]) < std::abs(eb[t])) {
			++wins;
		}
	}
	return MeasureValue::of(100.0 * static_cast<double>(wins) / static_cast<double>(e.size()));
}

std::vector<MeasureValue> percent_best(std::span<const double> actuals,
                                       std::span<const std::vector<double>> forecasts_per_method) {
	require(!forecasts_per_method.empty(), "percent best needs at least one method");
	std::vector<std::vector<double>> abs_errors;
	abs_errors.reserve(forecasts_per_method.size());
	for (const auto &f : forecasts_per_method) {
		abs_errors.push_back(absolute(errors(actuals, f)));
	}
	std::vector<std::size_t> wins(abs_errors.size(), 0);
	for (std::size_t t = 0; t < actuals.size(); ++t) {
		std::size_t best = 0;
		bool unique = true;
		for (std::size_t m = 1; m < abs_errors.size(); ++m) {
			if (abs_errors[m][t] < abs_errors[best][t]) {
				best = m;
				unique = true;
			} else if (abs_errors[m][t] == abs_errors[best][t]) {
				unique = false;
			}
		}
		if (unique) {
			++wins[best];
		}
	}
	std::vector<MeasureValue> out;
	out.reserve(wins.size());
	for (std::size_t w : wins) {
		out.push_back(MeasureValue::of(100.0 * static_cast<double>(w) / static_cast<double>(actuals.size())));
	}
	return out;
}

MeasureValue scaled(BaseMeasure base, const ErrorSample &sample) {
	require(sample.insample.has_value(), "measure needs an in-sample window");
	const auto history = *sample.insample;
	auto e = errors(sample.actuals, sample.forecasts);

	if (base == BaseMeasure::MMR) {
		require(!history.empty(), "in-sample window must not be empty");
		const double level = mean(history);
		if (level == 0.0) {
			return undefined(UndefinedReason::zero_denominator);
		}
		return MeasureValue::of(mean(absolute(std::move(e))) / level);
	}

	require(history.size() >= 2, "in-sample window needs at least two periods");
	double diff_sum = 0.0;
	for (std::size_t i = 1; i < history.size(); ++i) {
		diff_sum += std::abs(history[i] - history[i - 1]);
	}
	if (diff_sum == 0.0) {
		return undefined(UndefinedReason::identical_insample);
	}
	const double scale = diff_sum / static_cast<double>(history.size() - 1);
	for (auto &x : e) {
		x /= scale;
	}
	switch (base) {
	case BaseMeasure::MASE:
		return MeasureValue::of(mean(absolute(std::move(e))));
	case BaseMeasure::RMSSE:
		return MeasureValue::of(std::sqrt(mean(squared(std::move(e)))));
	case BaseMeasure::MdASE: {
		auto a = absolute(std::move(e));
		return MeasureValue::of(median_inplace(a));
	}
	default:
		throw std::invalid_argument("not a scaled measure");
	}
}

MeasureValue compute(BaseMeasure base, const ErrorSample &sample) {
	switch (base) {
	case BaseMeasure::ME:
	case BaseMeasure::MSE:
	case BaseMeasure::RMSE:
	case BaseMeasure::MAE:
	case BaseMeasure::MdAE:
		return scale_dependent(base, sample);
	case BaseMeasure::MAPE:
	case BaseMeasure::iMAPE:
	case BaseMeasure::MdAPE:
	case BaseMeasure::RMSPE:
	case BaseMeasure::RMdSPE:
	case BaseMeasure::sMAPE:
	case BaseMeasure::sMdAPE:
		return percentage(base, sample);
	case BaseMeasure::MRAE:
	case BaseMeasure::MdRAE:
	case BaseMeasure::GMRAE:
		return relative_error(base, sample);
	case BaseMeasure::RelMAE:
	case BaseMeasure::RelMSE:
	case BaseMeasure::RelRMSE:
	case BaseMeasure::U2:
	case BaseMeasure::LMR:
		return relative(base, sample);
	case BaseMeasure::PB:
		return percent_better(sample);
	case BaseMeasure::PBt: {
		const auto baseline = baseline_of(sample);
		const std::array<std::vector<double>, 2> methods {
		    std::vector<double>(sample.forecasts.begin(), sample.forecasts.end()),
		    std::vector<double>(baseline.begin(), baseline.end())};
		return percent_best(sample.actuals, methods).front();
	}
	case BaseMeasure::MMR:
	case BaseMeasure::MASE:
	case BaseMeasure::RMSSE:
	case BaseMeasure::MdASE:
		return scaled(base, sample);
	}
	throw std::invalid_argument("unknown measure");
}

MeasureValue evaluate(const MeasureId &id, const EvaluationInput &input) {
	std::span<const double> actuals = input.demands;
	if (id.target == Target::mean) {
		require(!input.mean_path.empty(), "mean-based measure needs a mean path");
		require(input.mean_path.size() == input.demands.size(), "mean path length must match the series");
		actuals = input.mean_path;
	}
	if (needs_baseline(id.base)) {
		require(input.baseline_forecasts.has_value(), "measure needs baseline forecasts");
	}
	if (needs_insample(id.base)) {
		require(input.insample.has_value(), "measure needs an in-sample window");
	}
	return compute(id.base, ErrorSample {actuals, input.forecasts, input.baseline_forecasts, input.insample});
}

std::weak_ordering compare_values(const MeasureId &id, const MeasureValue &a, const MeasureValue &b) {
	if (!a.defined() || !b.defined()) {
		return b.defined() ? std::weak_ordering::greater
		       : a.defined() ? std::weak_ordering::less
		                     : std::weak_ordering::equivalent;
	}
	double ka = a.value();
	double kb = b.value();
	if (id.base == BaseMeasure::ME) {
		ka = std::abs(ka);
		kb = std::abs(kb);
	}
	if (id.orientation() == Orientation::higher_better) {
		std::swap(ka, kb);
	}
	if (ka < kb) {
		return std::weak_ordering::less;
	}
	if (kb < ka) {
		return std::weak_ordering::greater;
	}
	return std::weak_ordering::equivalent;
}

} // namespace intermit
