#include "intermit/forecast.hpp"

#include <stdexcept>
#include <string>

namespace intermit {

namespace {

void require_smoothing(double value, const char *name) {
	if (!(value > 0.0 && value < 1.0)) {
		throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
	}
}

// Streaming forecaster over one of the four methods, forecast-then-update.
class Forecaster {
public:
	explicit Forecaster(const ForecasterSpec &spec)
	    : method_(spec.method),
	      ses_(spec.method == Method::ses ? spec.alpha : 0.5),
	      croston_(spec.method == Method::croston ? spec.alpha : 0.5, spec.method == Method::croston ? spec.beta : 0.5) {}

	double forecast() const {
		switch (method_) {
		case Method::ses:
			return ses_forecast(ses_);
		case Method::croston:
			return croston_forecast(croston_);
		case Method::random_walk:
			return rw_forecast(last_);
		case Method::zero:
			return zf_forecast();
		}
		return 0.0;
	}

	void update(double y) {
		switch (method_) {
		case Method::ses:
			ses_ = ses_update(ses_, y);
			break;
		case Method::croston:
			croston_ = croston_update(croston_, y);
			break;
		case Method::random_walk:
			last_ = y;
			break;
		case Method::zero:
			break;
		}
	}

private:
	Method method_;
	SesState ses_;
	CrostonState croston_;
	double last_ = 0.0;
};

} // namespace

SesState::SesState(double alpha_, double initial) : alpha(alpha_), smoothed(initial) {
	require_smoothing(alpha, "alpha");
}

SesState ses_update(SesState state, double y) {
	state.smoothed = state.alpha * y + (1.0 - state.alpha) * state.smoothed;
	return state;
}

CrostonState::CrostonState(double alpha_, double beta_, double initial_size, double initial_interval)
    : alpha(alpha_), beta(beta_), smoothed_size(initial_size), smoothed_interval(initial_interval) {
	require_smoothing(alpha, "alpha");
	require_smoothing(beta, "beta");
}

CrostonState croston_update(CrostonState state, double y) {
	if (y == 0.0) {
		++state.periods_since_demand;
		return state;
	}
	const double interval = static_cast<double>(state.periods_since_demand + 1);
	state.smoothed_size = state.alpha * y + (1.0 - state.alpha) * state.smoothed_size;
	state.smoothed_interval = state.beta * interval + (1.0 - state.beta) * state.smoothed_interval;
	state.periods_since_demand = 0;
	return state;
}

double croston_forecast(const CrostonState &state) {
	return (1.0 - state.beta / 2.0) * state.smoothed_size / state.smoothed_interval;
}

std::string_view method_name(Method method) {
	switch (method) {
	case Method::ses:
		return "SES";
	case Method::croston:
		return "CR";
	case Method::random_walk:
		return "RW";
	case Method::zero:
		return "ZF";
	}
	return "?";
}

Method parse_method(std::string_view name) {
	for (Method m : {Method::ses, Method::croston, Method::random_walk, Method::zero}) {
		if (method_name(m) == name) {
			return m;
		}
	}
	throw std::invalid_argument("unknown forecaster '" + std::string(name) + "' (expected SES, CR, RW or ZF)");
}

ForecastTrace run_forecaster(const ForecasterSpec &spec, std::span<const double> series,
                             std::span<const double> warmup) {
	Forecaster forecaster(spec);
	for (double y : warmup) {
		forecaster.update(y);
	}
	ForecastTrace trace;
	trace.forecasts.reserve(series.size());
	for (double y : series) {
		trace.forecasts.push_back(forecaster.forecast());
		forecaster.update(y);
	}
	return trace;
}

} // namespace intermit
