#include "intermit/demand.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace intermit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
	using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool condition, const char *message) {
	if (!condition) {
		throw std::invalid_argument(message);
	}
}

bool open_unit(double x) {
	return x > 0.0 && x < 1.0;
}

bool half_open_unit(double x) {
	return x > 0.0 && x <= 1.0;
}

double stationary_one(const Markov2 &m) {
	return m.p01 / (m.p01 + m.p10);
}

} // namespace

DemandSeries::DemandSeries(std::vector<double> demands) : demands_(std::move(demands)) {
	require(!demands_.empty(), "demand series must not be empty");
	for (double d : demands_) {
		require(std::isfinite(d) && d >= 0.0, "demands must be finite and non-negative");
	}
}

DemandSeries DemandSeries::slice(std::size_t first, std::size_t count) const {
	require(first + count <= demands_.size(), "slice out of range");
	return DemandSeries(std::vector<double>(demands_.begin() + static_cast<std::ptrdiff_t>(first),
	                                        demands_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

MeanPath MeanPath::slice(std::size_t first, std::size_t count) const {
	require(first + count <= means.size(), "slice out of range");
	return MeanPath {std::vector<double>(means.begin() + static_cast<std::ptrdiff_t>(first),
	                                     means.begin() + static_cast<std::ptrdiff_t>(first + count)),
	                 provenance};
}

void validate(const GeneratorSpec &spec) {
	std::visit(overloaded {
	               [](const BernoulliLogarithmic &g) {
		               require(half_open_unit(g.p0), "p0 must lie in (0, 1]");
		               require(open_unit(g.ell), "ell must lie in (0, 1)");
	               },
	               [](const BernoulliGeometricSize &g) {
		               require(half_open_unit(g.p0), "p0 must lie in (0, 1]");
		               require(open_unit(g.size_p), "size_p must lie in (0, 1)");
	               },
	               [](const RegularIntermittent &g) {
		               require(g.period >= 1, "period must be positive");
		               require(std::isfinite(g.size) && g.size > 0.0, "size must be positive");
	               },
	               [](const Markov2 &g) {
		               require(open_unit(g.p01), "p01 must lie in (0, 1)");
		               require(open_unit(g.p10), "p10 must lie in (0, 1)");
	               },
	               [](const Obsolescence &g) {
		               require(half_open_unit(g.p0), "p0 must lie in (0, 1]");
		               require(open_unit(g.ell), "ell must lie in (0, 1)");
		               require(g.change_period >= 1, "change period must be positive");
		               if (g.profile == ObsolescenceProfile::linear_to_zero) {
			               require(g.end_period > g.change_period, "end period must follow the change period");
		               }
	               },
	           },
	           spec);
}

std::string kind_name(const GeneratorSpec &spec) {
	return std::visit(overloaded {
	                      [](const BernoulliLogarithmic &) { return std::string("bernoulli-logarithmic"); },
	                      [](const BernoulliGeometricSize &) { return std::string("bernoulli-geometric-size"); },
	                      [](const RegularIntermittent &) { return std::string("regular-intermittent"); },
	                      [](const Markov2 &) { return std::string("markov2"); },
	                      [](const Obsolescence &) { return std::string("obsolescence"); },
	                  },
	                  spec);
}

std::string describe(const GeneratorSpec &spec) {
	const auto params = std::visit(overloaded {
	                                   [](const BernoulliLogarithmic &g) { return fmt::format("p0={} ell={}", g.p0, g.ell); },
	                                   [](const BernoulliGeometricSize &g) {
		                                   return fmt::format("p0={} size_p={}", g.p0, g.size_p);
	                                   },
	                                   [](const RegularIntermittent &g) {
		                                   return fmt::format("period={} size={}", g.period, g.size);
	                                   },
	                                   [](const Markov2 &g) { return fmt::format("p01={} p10={}", g.p01, g.p10); },
	                                   [](const Obsolescence &g) {
		                                   return fmt::format(
		                                       "p0={} ell={} profile={} change={} end={}", g.p0, g.ell,
		                                       g.profile == ObsolescenceProfile::linear_to_zero ? "linear" : "abrupt",
		                                       g.change_period, g.end_period);
	                                   },
	                               },
	                               spec);
	return kind_name(spec) + " " + params;
}

double nonzero_probability(const GeneratorSpec &spec, std::int64_t t) {
	return std::visit(overloaded {
	                      [](const BernoulliLogarithmic &g) { return g.p0; },
	                      [](const BernoulliGeometricSize &g) { return g.p0; },
	                      [t](const RegularIntermittent &g) { return t % g.period == 0 ? 1.0 : 0.0; },
	                      [](const Markov2 &g) { return stationary_one(g); },
	                      [t](const Obsolescence &g) {
		                      if (g.profile == ObsolescenceProfile::abrupt_to_zero) {
			                      return t < g.change_period ? g.p0 : 0.0;
		                      }
		                      if (t <= g.change_period) {
			                      return g.p0;
		                      }
		                      if (t >= g.end_period) {
			                      return 0.0;
		                      }
		                      return g.p0 * static_cast<double>(g.end_period - t) /
		                             static_cast<double>(g.end_period - g.change_period);
	                      },
	                  },
	                  spec);
}

double analytic_mean(const GeneratorSpec &spec, std::int64_t t) {
	return std::visit(overloaded {
	                      [](const BernoulliLogarithmic &g) { return g.p0 * logarithmic_mean(g.ell); },
	                      [](const BernoulliGeometricSize &g) { return g.p0 / g.size_p; },
	                      // The stationary rate; the realized path is periodic.
	                      [](const RegularIntermittent &g) { return g.size / static_cast<double>(g.period); },
	                      [](const Markov2 &g) { return stationary_one(g); },
	                      [&spec, t](const Obsolescence &g) {
		                      return nonzero_probability(spec, t) * logarithmic_mean(g.ell);
	                      },
	                  },
	                  spec);
}

GeneratedSeries generate(const GeneratorSpec &spec, std::size_t n, RandomStream &stream) {
	validate(spec);
	require(n >= 1, "series length must be positive");

	std::vector<double> demands(n);
	std::vector<double> means(n);
	for (std::size_t i = 0; i < n; ++i) {
		means[i] = analytic_mean(spec, static_cast<std::int64_t>(i) + 1);
	}

	std::visit(overloaded {
	               [&](const BernoulliLogarithmic &g) {
		               const LogarithmicParams sizes(g.ell);
		               for (auto &d : demands) {
			               d = sample_bernoulli(stream, g.p0) ? static_cast<double>(sample_logarithmic(stream, sizes)) : 0.0;
		               }
	               },
	               [&](const BernoulliGeometricSize &g) {
		               for (auto &d : demands) {
			               d = sample_bernoulli(stream, g.p0) ? static_cast<double>(sample_geometric(stream, g.size_p)) : 0.0;
		               }
	               },
	               [&](const RegularIntermittent &g) {
		               for (std::size_t i = 0; i < n; ++i) {
			               demands[i] = (static_cast<std::int64_t>(i) + 1) % g.period == 0 ? g.size : 0.0;
		               }
	               },
	               [&](const Markov2 &g) {
		               int state = sample_bernoulli(stream, stationary_one(g));
		               demands[0] = state;
		               for (std::size_t i = 1; i < n; ++i) {
			               state = state == 0 ? sample_bernoulli(stream, g.p01) : 1 - sample_bernoulli(stream, g.p10);
			               demands[i] = state;
		               }
	               },
	               [&](const Obsolescence &g) {
		               const LogarithmicParams sizes(g.ell);
		               for (std::size_t i = 0; i < n; ++i) {
			               const double p = nonzero_probability(spec, static_cast<std::int64_t>(i) + 1);
			               demands[i] = sample_bernoulli(stream, p) ? static_cast<double>(sample_logarithmic(stream, sizes)) : 0.0;
		               }
	               },
	           },
	           spec);

	return GeneratedSeries {DemandSeries(std::move(demands)), MeanPath {std::move(means), MeanProvenance::analytic}};
}

} // namespace intermit
