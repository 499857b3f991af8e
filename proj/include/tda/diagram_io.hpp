#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tda/diagram.hpp"

namespace tda {

// Diagram file format (UTF-8 text):
//   - optional header line "# dim <k>" (default k = 0)
//   - other lines starting with '#' are comments
//   - each non-empty data line: "<birth> <death>", with "inf" accepted as
//     the death coordinate
// Writing then reading gives back a multiset-equal diagram.

PersistenceDiagram read_diagram_file(const std::filesystem::path& path);
void write_diagram_file(const PersistenceDiagram& diagram,
                        const std::filesystem::path& path);

// A diagram set is a directory of diagram files plus a manifest
// `labels.csv` whose rows are `<filename>,<group-label>`. Entries keep the
// manifest's row order.
struct DiagramSet {
    std::vector<std::string> names;
    std::vector<PersistenceDiagram> diagrams;
    std::vector<std::string> labels;
};

DiagramSet load_diagram_set(const std::filesystem::path& directory);

} // namespace tda
