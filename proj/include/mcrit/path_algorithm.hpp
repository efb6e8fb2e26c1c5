#pragma once

#include <cstddef>
#include <vector>

#include "mcrit/resolution.hpp"

namespace mcrit {

/// Path resolutions of every cell, one row per dimension.
std::vector<ResolutionRow> build_generators_relations(const MultiCriticalComplex& complex);

/// Relations connecting generators j and l of a cell with n generators:
/// the indices min(j,l) .. max(j,l)-1.
std::vector<std::size_t> connect_path(std::size_t j, std::size_t l);

FreeChainComplex assemble_path_output(const LiftMaps& maps);

/// Free resolution of `complex` built from path resolutions of its cells.
/// Expects a validated complex; throws InvalidBifiltrationError otherwise.
Resolution resolve_path(const MultiCriticalComplex& complex);

}  // namespace mcrit
