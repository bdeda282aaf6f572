#pragma once

#include "stagmesh/harness/spec.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace stagmesh::cli {

using harness::ExperimentSpec;
using nlohmann::json;

/// An experiment plus presentation options.
struct Config {
    ExperimentSpec spec;
    /// 0 = silent, 1 = summary line, 2 = progress per trace row.
    int verbosity = 1;
};

/// The full document for a config, every key present.
[[nodiscard]] json to_json(const Config& c);

/// Merges `doc` over `base`. Unknown keys and type mismatches throw ConfigError naming the
/// dotted key; the result is validated.
[[nodiscard]] Config from_json(const json& doc, const Config& base = {});

[[nodiscard]] Config load_config(const std::filesystem::path& path);

/// Sets a dotted key ("scheme.dt", "model.tensions.sigma12") from text. The text is parsed
/// as JSON when possible, otherwise taken as a string.
void apply_override(json& doc, const std::string& dotted, const std::string& value);

}  // namespace stagmesh::cli
