#include "intermit/demand.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace intermit;

namespace {

double sample_mean(const DemandSeries &s) {
	const auto v = s.values();
	return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double lag1_autocorrelation(const DemandSeries &s) {
	const auto v = s.values();
	const double m = sample_mean(s);
	double num = 0.0;
	double den = 0.0;
	for (std::size_t i = 0; i < v.size(); ++i) {
		den += (v[i] - m) * (v[i] - m);
		if (i > 0) {
			num += (v[i] - m) * (v[i - 1] - m);
		}
	}
	return num / den;
}

} // namespace

TEST_CASE("DemandSeries invariants") {
	CHECK_THROWS_AS(DemandSeries({}), std::invalid_argument);
	CHECK_THROWS_AS(DemandSeries({1.0, -1.0}), std::invalid_argument);
	CHECK_THROWS_AS(DemandSeries({1.0, NAN}), std::invalid_argument);
	const DemandSeries s({0.0, 2.0, 0.0, 1.0});
	CHECK(s.size() == 4);
	CHECK(s.slice(1, 2) == DemandSeries({2.0, 0.0}));
	CHECK_THROWS_AS(s.slice(3, 2), std::invalid_argument);
}

TEST_CASE("generator specs are validated") {
	CHECK_THROWS_AS(validate(BernoulliLogarithmic {0.0, 0.5}), std::invalid_argument);
	CHECK_THROWS_AS(validate(BernoulliLogarithmic {0.5, 1.0}), std::invalid_argument);
	CHECK_NOTHROW(validate(BernoulliLogarithmic {1.0, 0.5}));
	CHECK_THROWS_AS(validate(BernoulliGeometricSize {0.5, 0.0}), std::invalid_argument);
	CHECK_THROWS_AS(validate(RegularIntermittent {0, 1.0}), std::invalid_argument);
	CHECK_THROWS_AS(validate(RegularIntermittent {2, 0.0}), std::invalid_argument);
	CHECK_THROWS_AS(validate(Markov2 {0.0, 0.3}), std::invalid_argument);
	CHECK_THROWS_AS(validate(Markov2 {0.3, 1.0}), std::invalid_argument);
	CHECK_THROWS_AS(validate(Obsolescence {0.2, 0.5, ObsolescenceProfile::linear_to_zero, 10, 10}),
	                std::invalid_argument);
	CHECK_NOTHROW(validate(Obsolescence {0.2, 0.5, ObsolescenceProfile::abrupt_to_zero, 10, 0}));
	RandomStream s(1);
	CHECK_THROWS_AS(generate(BernoulliLogarithmic {}, 0, s), std::invalid_argument);
}

TEST_CASE("analytic means") {
	CHECK(analytic_mean(BernoulliLogarithmic {0.5, 0.9}, 1) == doctest::Approx(1.95434).epsilon(1e-5));
	CHECK(analytic_mean(BernoulliLogarithmic {0.2, 0.001}, 7) == doctest::Approx(0.2001).epsilon(1e-4));
	CHECK(analytic_mean(BernoulliGeometricSize {0.2, 0.5}, 1) == doctest::Approx(0.4));
	for (std::int64_t t : {1, 50, 1000}) {
		CHECK(analytic_mean(Markov2 {0.3, 0.3}, t) == doctest::Approx(0.5));
	}
	CHECK(analytic_mean(RegularIntermittent {4, 2.0}, 3) == doctest::Approx(0.5));

	const Obsolescence linear {0.4, 0.5, ObsolescenceProfile::linear_to_zero, 10, 20};
	const double mu = -0.5 / (0.5 * std::log(0.5));
	CHECK(analytic_mean(linear, 5) == doctest::Approx(0.4 * mu));
	CHECK(analytic_mean(linear, 15) == doctest::Approx(0.2 * mu));
	CHECK(analytic_mean(linear, 20) == 0.0);
	CHECK(analytic_mean(linear, 30) == 0.0);

	const Obsolescence abrupt {0.4, 0.5, ObsolescenceProfile::abrupt_to_zero, 10, 0};
	CHECK(analytic_mean(abrupt, 9) == doctest::Approx(0.4 * mu));
	CHECK(analytic_mean(abrupt, 10) == 0.0);
}

TEST_CASE("stationary generators converge to their analytic mean") {
	constexpr std::size_t n = 100'000;
	const GeneratorSpec specs[] = {BernoulliLogarithmic {0.2, 0.001}, BernoulliLogarithmic {0.5, 0.9},
	                               BernoulliGeometricSize {0.3, 0.4}, Markov2 {0.3, 0.3}, Markov2 {0.7, 0.6}};
	for (const auto &spec : specs) {
		CAPTURE(describe(spec));
		RandomStream s(derive_seed(10, {std::hash<std::string> {}(describe(spec))}));
		const auto g = generate(spec, n, s);
		const double target = analytic_mean(spec, 1);
		for (double m : g.mean.means) {
			REQUIRE(m == target);
		}
		// Variance of the sample mean, inflated for the Markov chain's lag correlation.
		double var = 0.0;
		if (const auto *b = std::get_if<BernoulliLogarithmic>(&spec)) {
			const double l = b->ell;
			const double ex2 = -l / ((1 - l) * (1 - l) * std::log(1 - l));
			var = b->p0 * ex2 - target * target;
		} else if (const auto *g2 = std::get_if<BernoulliGeometricSize>(&spec)) {
			const double q = g2->size_p;
			const double ex2 = (2 - q) / (q * q);
			var = g2->p0 * ex2 - target * target;
		} else if (const auto *mk = std::get_if<Markov2>(&spec)) {
			const double rho = 1 - mk->p01 - mk->p10;
			var = target * (1 - target) * (1 + rho) / (1 - rho);
		}
		CHECK(std::abs(sample_mean(g.series) - target) < 4.0 * std::sqrt(var / n));
	}
}

TEST_CASE("bernoulli-logarithmic sample mean near 0.2001") {
	RandomStream s(2024);
	const auto g = generate(BernoulliLogarithmic {0.2, 0.001}, 100'000, s);
	const double var = 0.2 * (-0.001 / (0.999 * 0.999 * std::log(0.999))) - 0.2001 * 0.2001;
	CHECK(std::abs(sample_mean(g.series) - 0.2001) < 3.0 * std::sqrt(var / 1e5));
	for (double d : g.series.values()) {
		REQUIRE(d == std::floor(d));
	}
}

TEST_CASE("markov2 streaks and alternation") {
	RandomStream s(77);
	const auto positive = generate(Markov2 {0.3, 0.3}, 100'000, s);
	const auto negative = generate(Markov2 {0.7, 0.8}, 100'000, s);
	CHECK(lag1_autocorrelation(positive.series) > 0.0);
	CHECK(lag1_autocorrelation(positive.series) == doctest::Approx(0.4).epsilon(0.05));
	CHECK(lag1_autocorrelation(negative.series) < 0.0);
	for (double d : positive.series.values()) {
		REQUIRE((d == 0.0 || d == 1.0));
	}
	const double frac = sample_mean(positive.series);
	CHECK(std::abs(frac - 0.5) < 3.0 * std::sqrt(0.25 * (1.4 / 0.6) / 1e5));
}

TEST_CASE("regular intermittent is exactly periodic") {
	RandomStream s(1);
	const auto flat = generate(RegularIntermittent {1, 1.0}, 50, s);
	for (std::size_t i = 0; i < 50; ++i) {
		CHECK(flat.series[i] == 1.0);
		CHECK(flat.mean.means[i] == 1.0);
	}
	const auto every3 = generate(RegularIntermittent {3, 2.5}, 30, s);
	for (std::size_t i = 0; i < 30; ++i) {
		CHECK(every3.series[i] == ((i + 1) % 3 == 0 ? 2.5 : 0.0));
		if (i >= 3) {
			CHECK(every3.series[i] == every3.series[i - 3]);
		}
	}
}

TEST_CASE("obsolescence demand dies out") {
	RandomStream s(3);
	const Obsolescence spec {0.5, 0.5, ObsolescenceProfile::linear_to_zero, 100, 200};
	const auto g = generate(spec, 400, s);
	for (std::size_t i = 199; i < 400; ++i) {
		CHECK(g.series[i] == 0.0);
		CHECK(g.mean.means[i] == 0.0);
	}
	CHECK(g.mean.means[0] > g.mean.means[150]);
	CHECK(g.mean.means[150] > 0.0);
}

TEST_CASE("generation is reproducible") {
	RandomStream a(123);
	RandomStream b(123);
	const auto x = generate(BernoulliLogarithmic {0.3, 0.9}, 5000, a);
	const auto y = generate(BernoulliLogarithmic {0.3, 0.9}, 5000, b);
	CHECK(x.series == y.series);
	CHECK(x.mean == y.mean);
}

TEST_CASE("describe names kind and parameters") {
	CHECK(describe(Markov2 {0.3, 0.3}) == "markov2 p01=0.3 p10=0.3");
	CHECK(describe(BernoulliLogarithmic {0.2, 0.001}) == "bernoulli-logarithmic p0=0.2 ell=0.001");
	CHECK(kind_name(RegularIntermittent {}) == "regular-intermittent");
}
