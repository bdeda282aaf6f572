#pragma once

#include "stagmesh/harness/spec.hpp"

#include <string>
#include <vector>

namespace stagmesh::harness {

struct PresetInfo {
    std::string name;
    std::string summary;
};

/// Catalog of named experiments, in display order.
[[nodiscard]] const std::vector<PresetInfo>& preset_catalog();

/// Fully specified experiment. Desk scale by default; paper_scale restores the
/// published grid sizes and horizons. Throws ConfigError for an unknown name.
[[nodiscard]] ExperimentSpec preset(const std::string& name, bool paper_scale = false);

}  // namespace stagmesh::harness
