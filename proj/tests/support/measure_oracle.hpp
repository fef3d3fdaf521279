#pragma once

// Direct transcription of each measure's definition, used only by tests as
// an independent check of the library. Deliberately naive: full sorts for
// medians, explicit products for geometric means, no shared helpers with
// src/.

#include "intermit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

namespace oracle {

using intermit::BaseMeasure;
using intermit::UndefinedReason;

using Result = std::variant<double, UndefinedReason>;

inline double avg(const std::vector<double> &xs) {
	double s = 0;
	for (double x : xs) s += x;
	return s / xs.size();
}

inline double med(std::vector<double> xs) {
	std::sort(xs.begin(), xs.end());
	const auto n = xs.size();
	return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2;
}

struct Sample {
	std::vector<double> y;        // actuals
	std::vector<double> f;        // forecasts
	std::vector<double> b;        // baseline forecasts
	std::vector<double> history;  // in-sample demands
};

inline Result evaluate(BaseMeasure m, const Sample &s) {
	const auto n = s.y.size();
	std::vector<double> e(n), eb(n);
	for (std::size_t t = 0; t < n; ++t) {
		e[t] = s.y[t] - s.f[t];
		eb[t] = s.y[t] - s.b[t];
	}
	auto map = [&](auto fn) {
		std::vector<double> out;
		for (std::size_t t = 0; t < n; ++t) out.push_back(fn(t));
		return out;
	};
	auto mse = [&](const std::vector<double> &err) {
		double s2 = 0;
		for (double x : err) s2 += x * x;
		return s2 / err.size();
	};
	auto mae = [&](const std::vector<double> &err) {
		double s1 = 0;
		for (double x : err) s1 += std::fabs(x);
		return s1 / err.size();
	};

	switch (m) {
	case BaseMeasure::ME: return avg(e);
	case BaseMeasure::MSE: return mse(e);
	case BaseMeasure::RMSE: return std::sqrt(mse(e));
	case BaseMeasure::MAE: return mae(e);
	case BaseMeasure::MdAE: return med(map([&](auto t) { return std::fabs(e[t]); }));

	case BaseMeasure::MAPE:
	case BaseMeasure::MdAPE:
	case BaseMeasure::RMSPE:
	case BaseMeasure::RMdSPE: {
		for (double v : s.y)
			if (v == 0) return UndefinedReason::zero_denominator;
		const auto p = map([&](auto t) { return 100 * e[t] / s.y[t]; });
		if (m == BaseMeasure::MAPE) return mae(p);
		if (m == BaseMeasure::RMSPE) return std::sqrt(mse(p));
		if (m == BaseMeasure::MdAPE) return med(map([&](auto t) { return std::fabs(p[t]); }));
		return std::sqrt(med(map([&](auto t) { return p[t] * p[t]; })));
	}
	case BaseMeasure::iMAPE: {
		double total = 0;
		int count = 0;
		for (std::size_t t = 0; t < n; ++t) {
			if (s.y[t] != 0) {
				total += std::fabs(100 * e[t] / s.y[t]);
				++count;
			}
		}
		if (count == 0) return UndefinedReason::empty_after_exclusion;
		return total / count;
	}
	case BaseMeasure::sMAPE:
	case BaseMeasure::sMdAPE: {
		for (std::size_t t = 0; t < n; ++t)
			if (s.y[t] + s.f[t] == 0) return UndefinedReason::zero_denominator;
		const auto q = map([&](auto t) { return 200 * std::fabs(e[t]) / (s.y[t] + s.f[t]); });
		return m == BaseMeasure::sMAPE ? avg(q) : med(q);
	}

	case BaseMeasure::MRAE:
	case BaseMeasure::MdRAE:
	case BaseMeasure::GMRAE: {
		for (double x : eb)
			if (x == 0) return UndefinedReason::zero_denominator;
		const auto r = map([&](auto t) { return std::fabs(e[t] / eb[t]); });
		if (m == BaseMeasure::MRAE) return avg(r);
		if (m == BaseMeasure::MdRAE) return med(r);
		double product = 1;
		for (double x : r) product *= x;
		if (product == 0) return UndefinedReason::zero_relative_error;
		return std::pow(product, 1.0 / n);
	}

	case BaseMeasure::RelMAE:
		if (mae(eb) == 0) return UndefinedReason::zero_denominator;
		return mae(e) / mae(eb);
	case BaseMeasure::RelMSE:
		if (mse(eb) == 0) return UndefinedReason::zero_denominator;
		return mse(e) / mse(eb);
	case BaseMeasure::RelRMSE:
	case BaseMeasure::U2:
		if (mse(eb) == 0) return UndefinedReason::zero_denominator;
		return std::sqrt(mse(e)) / std::sqrt(mse(eb));
	case BaseMeasure::LMR:
		if (mse(eb) == 0) return UndefinedReason::zero_denominator;
		if (mse(e) == 0) return UndefinedReason::zero_relative_error;
		return std::log(mse(e) / mse(eb));

	case BaseMeasure::PB:
	case BaseMeasure::PBt: {
		// With two methods, "strictly best of the pair" and "strictly better
		// than the baseline" coincide.
		int wins = 0;
		for (std::size_t t = 0; t < n; ++t)
			if (std::fabs(e[t]) < std::fabs(eb[t])) ++wins;
		return 100.0 * wins / n;
	}

	case BaseMeasure::MMR: {
		const double level = avg(s.history);
		if (level == 0) return UndefinedReason::zero_denominator;
		return mae(e) / level;
	}
	case BaseMeasure::MASE:
	case BaseMeasure::RMSSE:
	case BaseMeasure::MdASE: {
		const auto h = s.history;
		double d = 0;
		for (std::size_t i = 1; i < h.size(); ++i) d += std::fabs(h[i] - h[i - 1]);
		d /= (h.size() - 1);
		if (d == 0) return UndefinedReason::identical_insample;
		const auto q = map([&](auto t) { return e[t] / d; });
		if (m == BaseMeasure::MASE) return mae(q);
		if (m == BaseMeasure::RMSSE) return std::sqrt(mse(q));
		return med(map([&](auto t) { return std::fabs(q[t]); }));
	}
	}
	return UndefinedReason::zero_denominator;
}

/// Both undefined with the same reason, or both defined and equal to 12
/// significant digits.
inline bool agrees(const intermit::MeasureValue &got, const Result &want) {
	if (const auto *r = std::get_if<UndefinedReason>(&want)) {
		return !got.defined() && *got.reason() == *r;
	}
	if (!got.defined()) return false;
	const double a = got.value();
	const double b = std::get<double>(want);
	return std::fabs(a - b) <= 1e-12 * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

inline std::string show(const Result &r) {
	if (const auto *v = std::get_if<double>(&r)) return std::to_string(*v);
	return std::string("Undefined(") + std::string(intermit::reason_name(std::get<UndefinedReason>(r))) + ")";
}

} // namespace oracle
