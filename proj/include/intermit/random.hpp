#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace intermit {

// Name and revision of the bit stream produced by RandomStream. Bump the
// revision whenever the engine or the uniform conversion changes, since
// golden outputs depend on it.
inline constexpr std::string_view kRandomStreamAlgorithm = "mt19937_64+u53/v1";

/// Seedable source of uniform variates. The engine is std::mt19937_64, whose
/// output sequence is fixed by the C++ standard, and the uniform conversion
/// is done here rather than through <random> distributions so the stream is
/// identical across standard library implementations.
///
/// A stream is single-owner; derive one stream per independent task.
class RandomStream {
public:
	explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

	std::uint64_t seed() const { return seed_; }

	std::uint64_t next_u64() { return engine_(); }

	/// Uniform on [0, 1) with 53 bits of resolution.
	double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
	std::uint64_t seed_;
	std::mt19937_64 engine_;
};

/// Mixes a master seed with a tuple of identifiers (setting id, replication,
/// parameter bit patterns, ...) into a new seed. Uses the splitmix64
/// finalizer on a running combination, so distinct tuples give unrelated
/// seeds.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts);

/// Bit pattern of a double, for feeding real-valued parameters to derive_seed.
std::uint64_t seed_part(double value);

/// Parameter of the logarithmic (log-series) distribution,
/// Pr[X = k] = -ell^k / (k ln(1 - ell)), k >= 1.
class LogarithmicParams {
public:
	/// Throws std::invalid_argument unless 0 < ell < 1.
	explicit LogarithmicParams(double ell);

	double ell() const { return ell_; }
	double pmf(std::int64_t k) const;
	double mean() const;
	double second_moment() const;

private:
	double ell_;
	double norm_; // -1 / ln(1 - ell)
};

/// Mean of the logarithmic distribution, -ell / ((1 - ell) ln(1 - ell)).
double logarithmic_mean(double ell);

/// Inverse-CDF sequential search; the term is updated incrementally via
/// t_{k+1} = t_k * ell * k / (k + 1).
std::int64_t sample_logarithmic(RandomStream &stream, const LogarithmicParams &params);

/// Number of trials up to and including the first success, support {1, 2, ...}.
/// Throws std::invalid_argument unless 0 < p < 1.
std::int64_t sample_geometric(RandomStream &stream, double p);

/// Returns 1 with probability p. Throws std::invalid_argument unless 0 <= p <= 1.
int sample_bernoulli(RandomStream &stream, double p);

} // namespace intermit
