#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcrit/core.hpp"
#include "mcrit/linalg.hpp"

namespace mcrit {

/// A 1-critical chain complex: one grade per basis element and a boundary
/// matrix per dimension. boundary(i) maps dimension i to i-1, so boundary(0)
/// has zero rows. Trailing empty dimensions are dropped on construction.
class FreeChainComplex {
public:
    FreeChainComplex() = default;
    /// Throws std::invalid_argument if a boundary has the wrong shape.
    FreeChainComplex(std::vector<std::vector<Bigrade>> grades, std::vector<SparseBitMatrix> boundaries);

    std::size_t dimension_count() const { return grades_.size(); }
    std::span<const Bigrade> grades(std::size_t dim) const;
    std::size_t basis_size(std::size_t dim) const { return grades(dim).size(); }
    const SparseBitMatrix& boundary(std::size_t dim) const { return boundaries_.at(dim); }

    std::size_t basis_count() const;
    std::size_t nnz() const;
    /// Basis elements plus boundary nonzeros.
    std::size_t description_size() const { return basis_count() + nnz(); }

    friend bool operator==(const FreeChainComplex&, const FreeChainComplex&) = default;

private:
    std::vector<std::vector<Bigrade>> grades_;
    std::vector<SparseBitMatrix> boundaries_;
};

/// A multi-critical complex whose supports all have one generator, read as a
/// free complex with boundary columns taken from the facet lists.
/// Throws std::invalid_argument if some cell has more than one generator.
FreeChainComplex as_free_complex(const MultiCriticalComplex& complex);

}  // namespace mcrit
