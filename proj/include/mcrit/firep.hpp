#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "mcrit/core.hpp"
#include "mcrit/free_complex.hpp"
#include "mcrit/linalg.hpp"

namespace mcrit {

/// Free implicit representation of H_m: graded matrices f: Y -> X and
/// g: Z -> Y with f*g = 0 and H_m = ker f / im g at every grade.
///
/// X has one element per (m-1)-cell, all at the base grade (componentwise
/// minimum of every input coordinate); Y has one per generator of an m-cell;
/// Z lists the generators of the (m+1)-cells followed by the consecutive
/// relations of the m-cells.
struct FIRep {
    std::size_t degree = 0;
    Bigrade base;
    std::vector<Bigrade> x_grades;
    std::vector<Bigrade> y_grades;
    std::vector<Bigrade> z_grades;
    SparseBitMatrix f;
    SparseBitMatrix g;
};

/// Throws std::invalid_argument if m exceeds the top dimension.
FIRep compute_firep(const MultiCriticalComplex& complex, std::size_t m);

/// The representation as a three-term free complex Z -> Y -> X
/// (dimensions 2, 1, 0), which is how it is written to disk.
FreeChainComplex as_chain_complex(const FIRep& rep);

/// Writes the scc2020 document of as_chain_complex(rep), block sizes |Z| |Y| |X|.
void write_firep(std::ostream& out, const FIRep& rep);

}  // namespace mcrit
