#include "intermit/experiment.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace intermit {

namespace {

std::string format_value(const MeasureValue &v) {
	if (v.defined()) {
		return fmt::format("{:.5f}", v.value());
	}
	return fmt::format("Undefined({})", reason_name(*v.reason()));
}

std::string format_param(double p) {
	return fmt::format("{}", p);
}

// Column labels contributed by a forecaster: its smoothing parameters, then the error.
std::vector<std::string> forecaster_columns(Method m) {
	const std::string name(method_name(m));
	switch (m) {
	case Method::ses:
		return {name + " alpha", name + " error"};
	case Method::croston:
		return {name + " alpha", name + " beta", name + " error"};
	default:
		return {name + " error"};
	}
}

std::vector<std::string> forecaster_cells(Method m, const BestCell &cell) {
	switch (m) {
	case Method::ses:
		return {format_param(cell.params.alpha), format_value(cell.value)};
	case Method::croston:
		return {format_param(cell.params.alpha), format_param(cell.params.beta), format_value(cell.value)};
	default:
		return {format_value(cell.value)};
	}
}

std::vector<std::vector<std::string>> table_rows(const ExperimentReport &report, std::vector<std::size_t> &breaks) {
	std::vector<std::vector<std::string>> rows;
	std::vector<std::string> header {"measure"};
	for (Method m : report.forecasters) {
		for (auto &c : forecaster_columns(m)) {
			header.push_back(std::move(c));
		}
	}
	header.push_back("ranking");
	rows.push_back(std::move(header));

	for (std::size_t r = 0; r < report.rows.size(); ++r) {
		const auto &row = report.rows[r];
		if (r > 0 && row.measure.target != report.rows[r - 1].measure.target) {
			breaks.push_back(rows.size());
		}
		std::vector<std::string> cells {row.measure.name()};
		for (std::size_t f = 0; f < report.forecasters.size(); ++f) {
			for (auto &c : forecaster_cells(report.forecasters[f], row.best[f])) {
				cells.push_back(std::move(c));
			}
		}
		cells.push_back(row.ranking.to_string());
		rows.push_back(std::move(cells));
	}
	return rows;
}

std::string csv_field(const std::string &s) {
	if (s.find_first_of(",\"\n") == std::string::npos) {
		return s;
	}
	std::string out = "\"";
	for (char c : s) {
		if (c == '"') {
			out += '"';
		}
		out += c;
	}
	return out + "\"";
}

std::string aligned(const std::vector<std::vector<std::string>> &rows, const std::vector<std::size_t> &breaks) {
	std::vector<std::size_t> widths;
	for (const auto &row : rows) {
		widths.resize(std::max(widths.size(), row.size()), 0);
		for (std::size_t c = 0; c < row.size(); ++c) {
			widths[c] = std::max(widths[c], row[c].size());
		}
	}
	std::size_t total = 0;
	for (std::size_t w : widths) {
		total += w + 2;
	}
	const std::string rule(total > 2 ? total - 2 : 0, '-');

	std::string out;
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (r == 1 || std::find(breaks.begin(), breaks.end(), r) != breaks.end()) {
			out += rule + "\n";
		}
		std::string line;
		for (std::size_t c = 0; c < rows[r].size(); ++c) {
			const bool left = c == 0 || c + 1 == rows[r].size();
			if (c > 0) {
				line += "  ";
			}
			line += left ? fmt::format("{:<{}}", rows[r][c], widths[c]) : fmt::format("{:>{}}", rows[r][c], widths[c]);
		}
		line.erase(line.find_last_not_of(' ') + 1);
		out += line + "\n";
	}
	return out;
}

} // namespace

std::string render_text(const ExperimentReport &report, const std::string &caption) {
	std::string out;
	if (!caption.empty()) {
		out += caption + "\n";
	}
	out += fmt::format("setting: {}  seed: {}\n\n", report.setting, report.master_seed);
	std::vector<std::size_t> breaks;
	out += aligned(table_rows(report, breaks), breaks);
	return out;
}

std::string render_csv(const ExperimentReport &report) {
	std::vector<std::size_t> breaks;
	std::string out;
	for (const auto &row : table_rows(report, breaks)) {
		for (std::size_t c = 0; c < row.size(); ++c) {
			if (c > 0) {
				out += ',';
			}
			std::string field = row[c];
			std::replace(field.begin(), field.end(), ' ', c + 1 == row.size() || c == 0 ? ' ' : '_');
			out += csv_field(field);
		}
		out += '\n';
	}
	return out;
}

std::string render_text(const ReplicationSummary &summary) {
	std::string out = fmt::format("setting: {}  replications: {}\n\n", summary.setting, summary.replications);
	std::vector<std::vector<std::string>> rows {{"measure", "pass", "tie", "fail", "most frequent ranking"}};
	for (std::size_t m = 0; m < summary.measures.size(); ++m) {
		const auto &verdicts = summary.verdict_counts[m];
		auto count = [&](Verdict v) {
			const auto it = verdicts.find(v);
			return std::to_string(it == verdicts.end() ? 0 : it->second);
		};
		const auto &rankings = summary.ranking_counts[m];
		const auto top = std::max_element(rankings.begin(), rankings.end(),
		                                  [](const auto &a, const auto &b) { return a.second < b.second; });
		const std::string ranking =
		    top == rankings.end() ? "" : fmt::format("{} ({}/{})", top->first, top->second, summary.replications);
		rows.push_back({summary.measures[m].name(), count(Verdict::pass), count(Verdict::tie), count(Verdict::fail),
		                ranking});
	}
	out += aligned(rows, {});
	return out;
}

std::string render_csv(const ReplicationSummary &summary) {
	std::string out = "measure,ranking,count\n";
	for (std::size_t m = 0; m < summary.measures.size(); ++m) {
		for (const auto &[ranking, count] : summary.ranking_counts[m]) {
			out += fmt::format("{},{},{}\n", summary.measures[m].name(), csv_field(ranking), count);
		}
	}
	return out;
}

} // namespace intermit
