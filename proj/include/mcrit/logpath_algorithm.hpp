#pragma once

#include <vector>

#include "mcrit/resolution.hpp"

namespace mcrit {

/// Log-path resolution of a single upset.
struct LogPathResolution {
    LogPathGraph graph;
    std::vector<Bigrade> generator_grades;
    std::vector<Bigrade> relation_grades;
    std::vector<Bigrade> syzygy_grades;
    SparseBitMatrix p1;
    SparseBitMatrix p2;
};

LogPathResolution build_logpath_resolution(const Cell& cell);

FreeChainComplex assemble_logpath_output(const LiftMaps& maps);

/// Free resolution of `complex` built from log-path resolutions: paths
/// between generators have logarithmic length and the extra cycles are
/// killed by triangle syzygies.
Resolution resolve_logpath(const MultiCriticalComplex& complex);

}  // namespace mcrit
