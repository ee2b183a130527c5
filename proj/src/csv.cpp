#include "misfit/csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace misfit {

std::string format_float(double value) { return format_number(value); }

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

void write_param_header(const std::vector<std::pair<std::string, std::string>>& params, std::ostream& out) {
    for (const auto& [name, value] : params) out << name << ',';
}

void check_same_axes(const std::vector<std::pair<std::string, std::string>>& expected,
                     const std::vector<std::pair<std::string, std::string>>& actual) {
    bool same = expected.size() == actual.size();
    for (std::size_t i = 0; same && i < expected.size(); ++i) same = expected[i].first == actual[i].first;
    if (!same) throw std::invalid_argument("write_csv: records carry different sweep axes");
}

}  // namespace

void write_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    static const std::vector<std::pair<std::string, std::string>> none;
    const auto& axes = records.empty() ? none : records.front().params;
    write_param_header(axes, out);
    out << "period,statistic,mean,std,n_runs\n";
    for (const auto& r : records) {
        check_same_axes(axes, r.params);
        for (const auto& [name, value] : r.params) out << value << ',';
        out << r.period << ',' << r.statistic << ',' << format_float(r.mean) << ',' << format_float(r.std)
            << ',' << r.n_runs << '\n';
    }
}

void write_csv(const std::vector<RunRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_csv(records, out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<RunRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: missing header");
    const auto header = split_row(line);
    if (header.size() < 5) throw std::runtime_error("read_csv: malformed header");
    const std::size_t n_axes = header.size() - 5;
    if (header[n_axes] != "period") throw std::runtime_error("read_csv: expected 'period' column");

    std::vector<RunRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_row(line);
        if (cells.size() != header.size()) throw std::runtime_error("read_csv: ragged row '" + line + "'");
        RunRecord r;
        for (std::size_t i = 0; i < n_axes; ++i) r.params.emplace_back(header[i], cells[i]);
        r.period = std::stoi(cells[n_axes]);
        r.statistic = cells[n_axes + 1];
        r.mean = std::stod(cells[n_axes + 2]);
        r.std = std::stod(cells[n_axes + 3]);
        r.n_runs = std::stoul(cells[n_axes + 4]);
        records.push_back(std::move(r));
    }
    return records;
}

void write_histogram_csv(const std::vector<HistogramRecord>& records, const LogHistogram& bins,
                         std::ostream& out) {
    out << "# bin_edges=";
    for (std::size_t i = 0; i < bins.edges.size(); ++i) out << (i ? "," : "") << format_float(bins.edges[i]);
    out << '\n';
    static const std::vector<std::pair<std::string, std::string>> none;
    const auto& axes = records.empty() ? none : records.front().params;
    write_param_header(axes, out);
    out << "bin,lower,mean_count,std_count\n";
    for (const auto& r : records) {
        check_same_axes(axes, r.params);
        for (const auto& [name, value] : r.params) out << value << ',';
        out << r.bin << ',' << format_float(r.lower) << ',' << format_float(r.count.mean) << ','
            << format_float(r.count.std) << '\n';
    }
}

}  // namespace misfit
