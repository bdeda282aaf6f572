#include "stagmesh/harness/trace.hpp"

#include "stagmesh/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace stagmesh::harness {

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

RunTrace::RunTrace(std::vector<std::string> extra_columns) : columns_{"t", "E_tot", "V", "eta", "K"}
{
    columns_.insert(columns_.end(), extra_columns.begin(), extra_columns.end());
}

void RunTrace::open(const std::filesystem::path& path)
{
    csv_.open(path);
    if (!csv_) {
        throw ConfigError("cannot write trace file " + path.string());
    }
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        csv_ << (i ? "," : "") << columns_[i];
    }
    csv_ << '\n' << std::flush;
    manifest_.open(path.parent_path() / "snapshots.csv");
    if (!manifest_) {
        throw ConfigError("cannot write snapshot manifest in " + path.parent_path().string());
    }
    manifest_ << "t,field,file\n" << std::flush;
}

void RunTrace::append(double t, double e_tot, double v, double eta, double k, const std::vector<double>& extras)
{
    if (extras.size() + 5 != columns_.size()) {
        throw ConfigError("trace row has the wrong number of extra columns");
    }
    if (!rows_.empty() && !(t > rows_.back()[0])) {
        throw ConfigError("trace times must increase strictly");
    }
    std::vector<double> row{t, e_tot, v, eta, k};
    row.insert(row.end(), extras.begin(), extras.end());
    if (csv_.is_open()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            csv_ << (i ? "," : "") << format_double(row[i]);
        }
        csv_ << '\n' << std::flush;
    }
    rows_.push_back(std::move(row));
}

void RunTrace::add_snapshot(double t, const std::string& field, const std::filesystem::path& file)
{
    snapshots_.push_back({t, field, file});
    if (manifest_.is_open()) {
        manifest_ << format_double(t) << ',' << field << ',' << file.filename().string() << '\n' << std::flush;
    }
}

std::vector<double> RunTrace::column(const std::string& name) const
{
    const auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) {
        throw ConfigError("trace has no column '" + name + "'");
    }
    const auto idx = static_cast<std::size_t>(it - columns_.begin());
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        out.push_back(r[idx]);
    }
    return out;
}

RunTrace read_trace_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read trace file " + path.string());
    }
    std::string line;
    std::getline(in, line);
    std::vector<std::string> names;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            names.push_back(cell);
        }
    }
    const std::vector<std::string> base{"t", "E_tot", "V", "eta", "K"};
    if (names.size() < base.size() || !std::equal(base.begin(), base.end(), names.begin())) {
        throw ConfigError("trace header must start with t,E_tot,V,eta,K");
    }
    RunTrace trace(std::vector<std::string>(names.begin() + 5, names.end()));
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        if (row.size() != names.size()) {
            throw ConfigError("trace row width does not match the header");
        }
        trace.append(row[0], row[1], row[2], row[3], row[4], std::vector<double>(row.begin() + 5, row.end()));
    }
    return trace;
}

}  // namespace stagmesh::harness
