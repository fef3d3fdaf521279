#pragma once

#include "intermit/random.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace intermit {

/// Non-empty sequence of non-negative, finite demands. Index 0 is period t = 1.
class DemandSeries {
public:
	/// Throws std::invalid_argument on an empty input or a negative or
	/// non-finite entry.
	explicit DemandSeries(std::vector<double> demands);

	std::span<const double> values() const { return demands_; }
	std::size_t size() const { return demands_.size(); }
	double operator[](std::size_t i) const { return demands_[i]; }

	/// Sub-series of `count` periods starting at index `first`.
	DemandSeries slice(std::size_t first, std::size_t count) const;

	bool operator==(const DemandSeries &) const = default;

private:
	std::vector<double> demands_;
};

enum class MeanProvenance { analytic, sample_estimated };

/// Per-period process mean y^m_t paired with a demand series.
struct MeanPath {
	std::vector<double> means;
	MeanProvenance provenance = MeanProvenance::analytic;

	std::size_t size() const { return means.size(); }
	std::span<const double> values() const { return means; }
	MeanPath slice(std::size_t first, std::size_t count) const;

	bool operator==(const MeanPath &) const = default;
};

// Generator kinds. Each carries only the parameters it needs.

/// Nonzero with probability p0 each period, sizes logarithmic(ell).
struct BernoulliLogarithmic {
	double p0 = 0.2;
	double ell = 0.001;
};

/// Nonzero with probability p0 each period, sizes geometric(size_p) on {1, 2, ...}.
struct BernoulliGeometricSize {
	double p0 = 0.2;
	double size_p = 0.5;
};

/// Deterministic demand of `size` at every `period`-th period (t = period, 2 period, ...).
struct RegularIntermittent {
	std::int64_t period = 1;
	double size = 1.0;
};

/// Two-state 0/1 Markov chain, started from its stationary distribution.
struct Markov2 {
	double p01 = 0.3;
	double p10 = 0.3;
};

enum class ObsolescenceProfile { linear_to_zero, abrupt_to_zero };

/// Bernoulli-logarithmic demand whose nonzero probability declines to 0.
/// Linear: p0 up to change_period, falling linearly to 0 at end_period.
/// Abrupt: p0 before change_period, 0 from change_period on (end_period unused).
struct Obsolescence {
	double p0 = 0.2;
	double ell = 0.001;
	ObsolescenceProfile profile = ObsolescenceProfile::linear_to_zero;
	std::int64_t change_period = 1;
	std::int64_t end_period = 2;
};

using GeneratorSpec = std::variant<BernoulliLogarithmic, BernoulliGeometricSize, RegularIntermittent, Markov2, Obsolescence>;

/// Throws std::invalid_argument when a parameter is out of range.
void validate(const GeneratorSpec &spec);

/// "bernoulli-logarithmic", "bernoulli-geometric-size", "regular-intermittent",
/// "markov2" or "obsolescence".
std::string kind_name(const GeneratorSpec &spec);

/// Kind and parameters, e.g. "markov2 p01=0.3 p10=0.3".
std::string describe(const GeneratorSpec &spec);

/// Probability of a nonzero demand at period t (1-based).
double nonzero_probability(const GeneratorSpec &spec, std::int64_t t);

/// Closed-form process mean at period t (1-based).
double analytic_mean(const GeneratorSpec &spec, std::int64_t t);

struct GeneratedSeries {
	DemandSeries series;
	MeanPath mean; // analytic
};

/// Generates periods t = 1..n. Validates the spec first.
GeneratedSeries generate(const GeneratorSpec &spec, std::size_t n, RandomStream &stream);

} // namespace intermit
