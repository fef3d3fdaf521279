#pragma once

#include "intermit/demand.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace intermit {

enum class MeanEstimatorKind { series_mean, moving_window, linear_regression, known };

/// How to obtain y^m_t for a series whose generating process may be unknown.
struct MeanEstimatorSpec {
	MeanEstimatorKind kind = MeanEstimatorKind::series_mean;
	std::size_t window = 1; ///< odd, moving_window only

	/// Parses "series-mean", "window:K", "regression" or "known".
	/// Throws std::invalid_argument, including for even or zero K.
	static MeanEstimatorSpec parse(std::string_view text);
	std::string to_string() const;

	bool operator==(const MeanEstimatorSpec &) const = default;
};

/// series-mean: every entry is the mean of all demands, zeros included.
/// window:K: centered average over K periods, truncated and renormalized at
/// the ends. regression: least-squares line over (t, y_t), clamped at 0.
/// known: returns `known_path`, which must be non-null and the same length.
///
/// Throws std::invalid_argument for regression on a single period or for a
/// missing/mismatched known path.
MeanPath estimate_mean_path(const MeanEstimatorSpec &spec, const DemandSeries &series,
                            const MeanPath *known_path = nullptr);

} // namespace intermit
