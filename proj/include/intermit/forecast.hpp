#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace intermit {

/// Single exponential smoothing. The next-period forecast is `smoothed`.
struct SesState {
	/// Throws std::invalid_argument unless 0 < alpha < 1.
	explicit SesState(double alpha, double initial = 1.0);

	double alpha;
	double smoothed;
};

SesState ses_update(SesState state, double y);
inline double ses_forecast(const SesState &state) { return state.smoothed; }

/// Croston's method: SES on nonzero sizes (alpha) and on inter-demand
/// intervals (beta), both initialized at 1. Only nonzero demands move the
/// smoothed values.
struct CrostonState {
	/// Throws std::invalid_argument unless alpha and beta lie in (0, 1).
	CrostonState(double alpha, double beta, double initial_size = 1.0, double initial_interval = 1.0);

	double alpha;
	double beta;
	double smoothed_size;
	double smoothed_interval;
	std::int64_t periods_since_demand = 0;
};

CrostonState croston_update(CrostonState state, double y);

/// Syntetos-Boylan corrected ratio (1 - beta/2) * size / interval.
double croston_forecast(const CrostonState &state);

inline double rw_forecast(double previous_demand) { return previous_demand; }
inline double zf_forecast() { return 0.0; }

enum class Method { ses, croston, random_walk, zero };

/// "SES", "CR", "RW", "ZF".
std::string_view method_name(Method method);

/// Accepts the short names above. Throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);

/// A forecasting method with its smoothing parameters. alpha is used by SES
/// and CR, beta by CR only.
struct ForecasterSpec {
	Method method = Method::zero;
	double alpha = 0.0;
	double beta = 0.0;

	static ForecasterSpec ses(double alpha) { return {Method::ses, alpha, 0.0}; }
	static ForecasterSpec croston(double alpha, double beta) { return {Method::croston, alpha, beta}; }
	static ForecasterSpec random_walk() { return {Method::random_walk, 0.0, 0.0}; }
	static ForecasterSpec zero() { return {Method::zero, 0.0, 0.0}; }

	bool operator==(const ForecasterSpec &) const = default;
};

/// forecasts[i] predicts series[i] and depends only on earlier demands.
struct ForecastTrace {
	std::vector<double> forecasts;

	std::size_t size() const { return forecasts.size(); }
	std::span<const double> values() const { return forecasts; }
	double operator[](std::size_t i) const { return forecasts[i]; }
};

/// Initializes the method's state, consumes `warmup` without recording, then
/// for each period of `series` records the forecast before updating on the
/// observed demand. RW's first forecast is the last warm-up demand, or 0 with
/// no warm-up.
ForecastTrace run_forecaster(const ForecasterSpec &spec, std::span<const double> series,
                             std::span<const double> warmup = {});

} // namespace intermit
