#include "intermit/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace intermit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts) {
	std::uint64_t h = splitmix64(master);
	for (std::uint64_t part : parts) {
		h = splitmix64(h ^ splitmix64(part + 0x632be59bd9b4e019ULL));
	}
	return h;
}

std::uint64_t seed_part(double value) {
	return std::bit_cast<std::uint64_t>(value);
}

LogarithmicParams::LogarithmicParams(double ell) : ell_(ell) {
	if (!(ell > 0.0 && ell < 1.0)) {
		throw std::invalid_argument("logarithmic parameter must lie in (0, 1)");
	}
	norm_ = -1.0 / std::log1p(-ell);
}

double LogarithmicParams::pmf(std::int64_t k) const {
	if (k < 1) {
		return 0.0;
	}
	const double kd = static_cast<double>(k);
	return norm_ * std::exp(kd * std::log(ell_)) / kd;
}

double LogarithmicParams::mean() const {
	return norm_ * ell_ / (1.0 - ell_);
}

double LogarithmicParams::second_moment() const {
	return norm_ * ell_ / ((1.0 - ell_) * (1.0 - ell_));
}

double logarithmic_mean(double ell) {
	return LogarithmicParams(ell).mean();
}

std::int64_t sample_logarithmic(RandomStream &stream, const LogarithmicParams &params) {
	const double u = stream.uniform();
	const double ell = params.ell();
	double term = params.pmf(1);
	double cdf = term;
	std::int64_t k = 1;
	while (u >= cdf) {
		term *= ell * static_cast<double>(k) / static_cast<double>(k + 1);
		++k;
		const double next = cdf + term;
		// Rounding can leave the accumulated cdf a hair below 1.
		if (next == cdf) {
			break;
		}
		cdf = next;
	}
	return k;
}

std::int64_t sample_geometric(RandomStream &stream, double p) {
	if (!(p > 0.0 && p < 1.0)) {
		throw std::invalid_argument("geometric success probability must lie in (0, 1)");
	}
	const double u = stream.uniform();
	const double failures = std::floor(std::log1p(-u) / std::log1p(-p));
	constexpr double cap = static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2);
	return 1 + static_cast<std::int64_t>(std::min(failures, cap));
}

int sample_bernoulli(RandomStream &stream, double p) {
	if (!(p >= 0.0 && p <= 1.0)) {
		throw std::invalid_argument("bernoulli probability must lie in [0, 1]");
	}
	return stream.uniform() < p ? 1 : 0;
}

} // namespace intermit
