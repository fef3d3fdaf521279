#pragma once

#include <boost/math/distributions/chi_squared.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace test_support {

/// Pearson chi-squared test of observed counts over {1, 2, ...} against a pmf.
/// Cells are pooled left to right until each expects at least 5 draws; the
/// remaining upper tail forms the last cell.
inline double chi_squared_pvalue(const std::map<std::int64_t, double> &counts,
                                 const std::function<double(std::int64_t)> &pmf, double draws) {
	std::vector<double> observed;
	std::vector<double> expected;
	double obs_acc = 0;
	double exp_acc = 0;
	double covered = 0;
	std::int64_t k = 1;
	for (; k < 10'000; ++k) {
		const double p = pmf(k);
		const auto it = counts.find(k);
		obs_acc += it == counts.end() ? 0 : it->second;
		exp_acc += p * draws;
		covered += p;
		if (exp_acc >= 5 && (1 - covered) * draws >= 5) {
			observed.push_back(obs_acc);
			expected.push_back(exp_acc);
			obs_acc = exp_acc = 0;
		}
		if ((1 - covered) * draws < 5) {
			break;
		}
	}
	double tail_obs = obs_acc;
	for (const auto &[value, count] : counts) {
		if (value > k) {
			tail_obs += count;
		}
	}
	observed.push_back(tail_obs);
	expected.push_back(exp_acc + (1 - covered) * draws);

	double stat = 0;
	for (std::size_t i = 0; i < observed.size(); ++i) {
		const double d = observed[i] - expected[i];
		stat += d * d / expected[i];
	}
	const double df = static_cast<double>(observed.size() - 1);
	if (df < 1) {
		return 1.0;
	}
	return boost::math::cdf(boost::math::complement(boost::math::chi_squared(df), stat));
}

} // namespace test_support
