// figures.hpp — Plot-ready datasets for the standard spectrum figures:
// coupling scans at fixed delta (2a-2c), delta scans at fixed coupling
// (3a-3c) and the GAA-K vs GAA-L comparison on a single level pair (4).

#pragma once

#include <string>
#include <vector>

namespace qrm {

inline const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"2a", "2b", "2c", "3a", "3b", "3c", "4"};
    return ids;
}

// Writes the CSV dataset for one figure id. `levels` <= 0 selects the
// documented default for that figure. Output is deterministic.
void emit_figure_data(const std::string& figure_id, const std::string& out_path,
                      int levels = 0, int jobs = 1);

}  // namespace qrm
