#include "intermit/mean_estimate.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace intermit {

MeanEstimatorSpec MeanEstimatorSpec::parse(std::string_view text) {
	if (text == "series-mean") {
		return {MeanEstimatorKind::series_mean, 1};
	}
	if (text == "regression") {
		return {MeanEstimatorKind::linear_regression, 1};
	}
	if (text == "known") {
		return {MeanEstimatorKind::known, 1};
	}
	constexpr std::string_view prefix = "window:";
	if (text.starts_with(prefix)) {
		const auto digits = text.substr(prefix.size());
		std::size_t window = 0;
		const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), window);
		if (ec != std::errc() || ptr != digits.data() + digits.size() || window == 0 || window % 2 == 0) {
			throw std::invalid_argument("moving window width must be an odd positive integer");
		}
		return {MeanEstimatorKind::moving_window, window};
	}
	throw std::invalid_argument("unknown mean estimator '" + std::string(text) +
	                            "' (expected series-mean, window:K, regression or known)");
}

std::string MeanEstimatorSpec::to_string() const {
	switch (kind) {
	case MeanEstimatorKind::series_mean:
		return "series-mean";
	case MeanEstimatorKind::moving_window:
		return "window:" + std::to_string(window);
	case MeanEstimatorKind::linear_regression:
		return "regression";
	case MeanEstimatorKind::known:
		return "known";
	}
	return "?";
}

MeanPath estimate_mean_path(const MeanEstimatorSpec &spec, const DemandSeries &series, const MeanPath *known_path) {
	const auto y = series.values();
	const std::size_t n = y.size();
	std::vector<double> path(n);

	switch (spec.kind) {
	case MeanEstimatorKind::series_mean: {
		double sum = 0.0;
		for (double v : y) {
			sum += v;
		}
		std::fill(path.begin(), path.end(), sum / static_cast<double>(n));
		break;
	}
	case MeanEstimatorKind::moving_window: {
		if (spec.window == 0 || spec.window % 2 == 0) {
			throw std::invalid_argument("moving window width must be an odd positive integer");
		}
		// Prefix sums give each truncated window in O(1).
		std::vector<double> prefix(n + 1, 0.0);
		for (std::size_t i = 0; i < n; ++i) {
			prefix[i + 1] = prefix[i] + y[i];
		}
		const std::size_t half = spec.window / 2;
		for (std::size_t i = 0; i < n; ++i) {
			const std::size_t lo = i >= half ? i - half : 0;
			const std::size_t hi = std::min(n, i + half + 1);
			path[i] = (prefix[hi] - prefix[lo]) / static_cast<double>(hi - lo);
		}
		break;
	}
	case MeanEstimatorKind::linear_regression: {
		if (n < 2) {
			throw std::invalid_argument("regression needs at least two periods");
		}
		// Centered time index keeps the normal equations well conditioned.
		const double t_mean = (static_cast<double>(n) + 1.0) / 2.0;
		double y_mean = 0.0;
		for (double v : y) {
			y_mean += v;
		}
		y_mean /= static_cast<double>(n);
		double sxy = 0.0;
		double sxx = 0.0;
		for (std::size_t i = 0; i < n; ++i) {
			const double dt = static_cast<double>(i + 1) - t_mean;
			sxy += dt * (y[i] - y_mean);
			sxx += dt * dt;
		}
		const double slope = sxy / sxx;
		for (std::size_t i = 0; i < n; ++i) {
			path[i] = std::max(0.0, y_mean + slope * (static_cast<double>(i + 1) - t_mean));
		}
		break;
	}
	case MeanEstimatorKind::known:
		if (known_path == nullptr) {
			throw std::invalid_argument("known mean path requested but none is available");
		}
		if (known_path->size() != n) {
			throw std::invalid_argument("known mean path length must match the series");
		}
		return *known_path;
	}
	return MeanPath {std::move(path), MeanProvenance::sample_estimated};
}

} // namespace intermit
