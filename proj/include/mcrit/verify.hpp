#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcrit/core.hpp"
#include "mcrit/free_complex.hpp"
#include "mcrit/linalg.hpp"

namespace mcrit {

/// Sorted distinct coordinates. Evaluations of a complex are constant on
/// the cells of this grid, so checking grid points suffices.
struct GradeGrid {
    std::vector<Rational> xs;
    std::vector<Rational> ys;

    std::size_t size() const { return xs.size() * ys.size(); }
    /// Grid point below s (largest xs <= s.x, largest ys <= s.y); none if s
    /// is below the grid in either coordinate.
    std::optional<Bigrade> snap_down(const Bigrade& s) const;
};

GradeGrid grade_grid(const MultiCriticalComplex& complex);
GradeGrid grade_grid(const FreeChainComplex& complex);
GradeGrid merge(const GradeGrid& a, const GradeGrid& b);

/// All grid points when there are at most `cap`, otherwise `cap` distinct
/// points drawn with a fixed seed, always including the four corners.
/// Sorted by (x, y).
std::vector<Bigrade> sample_grid(const GradeGrid& grid, std::size_t cap, std::uint64_t seed = 0x5eed);

/// The ungraded complex at one grade. basis[d] lists the original indices
/// present in dimension d; boundary[d] is restricted and reindexed.
struct EvaluatedComplex {
    std::vector<std::vector<std::size_t>> basis;
    std::vector<SparseBitMatrix> boundary;
};

EvaluatedComplex evaluate_at_grade(const MultiCriticalComplex& complex, const Bigrade& s);
EvaluatedComplex evaluate_at_grade(const FreeChainComplex& complex, const Bigrade& s);

/// dim ker d_i - rank d_{i+1}, for every dimension.
std::vector<std::size_t> betti_numbers(const EvaluatedComplex& c);

std::size_t betti_at_grade(const MultiCriticalComplex& complex, const Bigrade& s, std::size_t i);
std::size_t betti_at_grade(const FreeChainComplex& complex, const Bigrade& s, std::size_t i);

/// Betti numbers at many grades at once: result[g][i] for grades[g].
/// One incremental reduction per distinct y instead of one per grade.
std::vector<std::vector<std::size_t>> betti_table(const MultiCriticalComplex& complex, std::span<const Bigrade> grades);
std::vector<std::vector<std::size_t>> betti_table(const FreeChainComplex& complex, std::span<const Bigrade> grades);

struct BettiMismatch {
    Bigrade grade;
    std::size_t dim = 0;
    std::size_t expected = 0;  // input
    std::size_t actual = 0;    // output
};

struct QuasiIsoReport {
    std::size_t grid_size = 0;
    std::size_t grades_checked = 0;
    bool sampled = false;
    std::size_t mismatch_count = 0;
    std::optional<BettiMismatch> first_mismatch;

    bool ok() const { return mismatch_count == 0; }
    std::string text() const;
    std::string json_line() const;
};

/// Compares pointwise Betti numbers of input and output on the joint grid.
QuasiIsoReport check_quasi_iso(const MultiCriticalComplex& input, const FreeChainComplex& output,
                               std::size_t grid_cap = 4096);

enum class DefectKind { boundary_squared, not_graded };

struct Defect {
    DefectKind kind;
    std::size_t dim;  // dimension of the column
    std::size_t column;
    std::size_t row;
};

struct FreeComplexReport {
    std::size_t defect_count = 0;
    std::vector<Defect> defects;  // first few only

    bool ok() const { return defect_count == 0; }
    std::string text() const;
    std::string json_line() const;
};

/// Checks d_i d_{i+1} = 0 and that every entry's row grade is <= its column grade.
FreeComplexReport check_free_complex(const FreeChainComplex& complex);

}  // namespace mcrit
