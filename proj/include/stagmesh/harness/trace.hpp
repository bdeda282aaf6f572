#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace stagmesh::harness {

/// Formats a double with 17 significant digits (round-trips exactly).
[[nodiscard]] std::string format_double(double x);

/// Time series of (t, E_tot, V, eta, K, extras...).
///
/// When opened on a file, every appended row is written and flushed
/// immediately so a partial trace survives an aborted run.
class RunTrace {
public:
    explicit RunTrace(std::vector<std::string> extra_columns = {});

    /// Starts incremental CSV output; writes the header row.
    void open(const std::filesystem::path& path);

    /// Throws ConfigError if t does not increase or the row width is wrong.
    void append(double t, double e_tot, double v, double eta, double k, const std::vector<double>& extras = {});
    void add_snapshot(double t, const std::string& field, const std::filesystem::path& file);

    [[nodiscard]] const std::vector<std::string>& columns() const noexcept { return columns_; }
    [[nodiscard]] const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
    /// Column by name; throws ConfigError for an unknown name.
    [[nodiscard]] std::vector<double> column(const std::string& name) const;

    struct SnapshotEntry {
        double t;
        std::string field;
        std::filesystem::path file;
    };
    [[nodiscard]] const std::vector<SnapshotEntry>& snapshots() const noexcept { return snapshots_; }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
    std::vector<SnapshotEntry> snapshots_;
    std::ofstream csv_;
    std::ofstream manifest_;
};

/// Reads a trace CSV written by RunTrace (header plus numeric rows).
[[nodiscard]] RunTrace read_trace_csv(const std::filesystem::path& path);

}  // namespace stagmesh::harness
