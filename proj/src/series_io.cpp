#include "intermit/series_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace intermit {

namespace {

std::vector<std::string_view> split(std::string_view line) {
	std::vector<std::string_view> fields;
	std::size_t start = 0;
	while (true) {
		const auto comma = line.find(',', start);
		fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
		if (comma == std::string_view::npos) {
			break;
		}
		start = comma + 1;
	}
	return fields;
}

std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
		s.remove_suffix(1);
	}
	while (!s.empty() && s.front() == ' ') {
		s.remove_prefix(1);
	}
	return s;
}

double parse_number(std::string_view field, std::size_t line_no) {
	field = trim(field);
	double value = 0.0;
	const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
	if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
		throw CsvError("line " + std::to_string(line_no) + ": '" + std::string(field) + "' is not a finite number");
	}
	return value;
}

// Reads rows of `t,<columns...>` after validating the header, checking t = 1..n.
std::vector<std::vector<double>> read_table(std::istream &in, const std::vector<std::vector<std::string>> &headers,
                                            std::size_t &matched_header) {
	std::string line;
	if (!std::getline(in, line)) {
		throw CsvError("empty input: expected a header line");
	}
	const auto header = split(trim(line));
	matched_header = headers.size();
	for (std::size_t h = 0; h < headers.size(); ++h) {
		if (header.size() != headers[h].size()) {
			continue;
		}
		bool same = true;
		for (std::size_t c = 0; c < header.size(); ++c) {
			same = same && trim(header[c]) == headers[h][c];
		}
		if (same) {
			matched_header = h;
			break;
		}
	}
	if (matched_header == headers.size()) {
		throw CsvError("line 1: unexpected header '" + line + "'");
	}
	const std::size_t width = headers[matched_header].size();

	std::vector<std::vector<double>> columns(width - 1);
	std::size_t line_no = 1;
	while (std::getline(in, line)) {
		++line_no;
		const auto body = trim(line);
		if (body.empty()) {
			continue;
		}
		const auto fields = split(body);
		if (fields.size() != width) {
			throw CsvError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) + " fields");
		}
		const double t = parse_number(fields[0], line_no);
		if (t != static_cast<double>(columns[0].size() + 1)) {
			throw CsvError("line " + std::to_string(line_no) + ": periods must run 1, 2, ... in order");
		}
		for (std::size_t c = 1; c < width; ++c) {
			columns[c - 1].push_back(parse_number(fields[c], line_no));
		}
	}
	if (columns[0].empty()) {
		throw CsvError("no data rows");
	}
	return columns;
}

} // namespace

std::string format_number(double value) {
	std::array<char, 32> buf {};
	const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
	return std::string(buf.data(), ptr);
}

void write_series(std::ostream &out, const DemandSeries &series, const MeanPath *mean) {
	if (mean != nullptr && mean->size() != series.size()) {
		throw std::invalid_argument("mean path length must match the series");
	}
	out << (mean ? "t,demand,mean\n" : "t,demand\n");
	for (std::size_t i = 0; i < series.size(); ++i) {
		out << (i + 1) << ',' << format_number(series[i]);
		if (mean) {
			out << ',' << format_number(mean->means[i]);
		}
		out << '\n';
	}
}

SeriesFile read_series(std::istream &in) {
	std::size_t header = 0;
	auto columns = read_table(in, {{"t", "demand"}, {"t", "demand", "mean"}}, header);
	for (double d : columns[0]) {
		if (d < 0.0) {
			throw CsvError("demands must be non-negative");
		}
	}
	SeriesFile file {DemandSeries(std::move(columns[0])), std::nullopt};
	if (header == 1) {
		for (double m : columns[1]) {
			if (m < 0.0) {
				throw CsvError("means must be non-negative");
			}
		}
		file.mean = MeanPath {std::move(columns[1]), MeanProvenance::analytic};
	}
	return file;
}

void write_trace(std::ostream &out, const ForecastTrace &trace) {
	out << "t,forecast\n";
	for (std::size_t i = 0; i < trace.size(); ++i) {
		out << (i + 1) << ',' << format_number(trace[i]) << '\n';
	}
}

ForecastTrace read_trace(std::istream &in) {
	std::size_t header = 0;
	auto columns = read_table(in, {{"t", "forecast"}}, header);
	return ForecastTrace {std::move(columns[0])};
}

} // namespace intermit
