#pragma once

#include "intermit/demand.hpp"
#include "intermit/forecast.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace intermit {

/// Malformed CSV input; the message names the offending line.
class CsvError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

struct SeriesFile {
	DemandSeries series;
	std::optional<MeanPath> mean;
};

/// Header `t,demand` or `t,demand,mean`; t runs 1..n. Numbers use the
/// shortest representation that round-trips.
void write_series(std::ostream &out, const DemandSeries &series, const MeanPath *mean = nullptr);
SeriesFile read_series(std::istream &in);

/// Header `t,forecast`.
void write_trace(std::ostream &out, const ForecastTrace &trace);
ForecastTrace read_trace(std::istream &in);

std::string format_number(double value);

} // namespace intermit
