#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcrit/core.hpp"
#include "mcrit/free_complex.hpp"
#include "mcrit/linalg.hpp"
#include "mcrit/logpath_graph.hpp"

namespace mcrit {

/// Which graph resolves each upset: the plain path, or the path with
/// shortcut edges and filled triangles.
enum class ResolutionShape { path, log_path };

/// Raised when a generator has a facet with no generator below it.
class InvalidBifiltrationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Free resolutions of the upsets of all cells of one dimension, laid out
/// one after another. Generator j of a cell is vertex j of the cell's graph;
/// relations are its edges and syzygies its triangles, in graph index order.
class ResolutionRow {
public:
    ResolutionRow() = default;
    ResolutionRow(std::span<const Cell> cells, ResolutionShape shape);

    ResolutionShape shape() const { return shape_; }
    std::size_t cell_count() const { return support_size_.size(); }
    std::size_t support_size(std::size_t cell) const { return support_size_[cell]; }
    LogPathGraph graph(std::size_t cell) const {
        return LogPathGraph(support_size_[cell] - 1, shape_ == ResolutionShape::log_path);
    }

    std::size_t generator_count() const { return generator_grades_.size(); }
    std::size_t relation_count() const { return relation_grades_.size(); }
    std::size_t syzygy_count() const { return syzygy_grades_.size(); }

    std::span<const Bigrade> generator_grades() const { return generator_grades_; }
    std::span<const Bigrade> relation_grades() const { return relation_grades_; }
    std::span<const Bigrade> syzygy_grades() const { return syzygy_grades_; }

    std::size_t generator_offset(std::size_t cell) const { return generator_offset_[cell]; }
    std::size_t relation_offset(std::size_t cell) const { return relation_offset_[cell]; }
    std::size_t syzygy_offset(std::size_t cell) const { return syzygy_offset_[cell]; }
    std::size_t generator_owner(std::size_t g) const { return generator_owner_[g]; }
    std::size_t relation_owner(std::size_t r) const { return relation_owner_[r]; }

    /// Relations -> generators (edge boundaries).
    const SparseBitMatrix& p1() const { return p1_; }
    /// Syzygies -> relations (triangle boundaries).
    const SparseBitMatrix& p2() const { return p2_; }

    /// Flips the relations on the shortest monotone path between two
    /// generators of one cell (local indices). Nothing when a == b.
    void connect(std::size_t cell, std::size_t a, std::size_t b, ColumnAccumulator& acc) const;

private:
    ResolutionShape shape_ = ResolutionShape::path;
    std::vector<std::size_t> support_size_;
    std::vector<std::size_t> generator_offset_, relation_offset_, syzygy_offset_;
    std::vector<index_t> generator_owner_, relation_owner_;
    std::vector<Bigrade> generator_grades_, relation_grades_, syzygy_grades_;
    SparseBitMatrix p1_, p2_;
};

/// Every map of the resolved complex. Vectors are indexed by the dimension of
/// the source block; a map with no meaning at some index is a zero-row
/// matrix with the right number of columns.
///
///   lift0[j]:  G_j -> G_{j-1}        lift1[j]:  R_j -> R_{j-1}
///   lift2[j]:  S_j -> S_{j-1}        homotopy0[j]: G_j -> R_{j-2}
///   homotopy1[j]: R_j -> S_{j-2}     homotopy2[j]: G_j -> S_{j-3}
struct LiftMaps {
    std::vector<ResolutionRow> rows;
    std::vector<SparseBitMatrix> lift0, lift1, lift2;
    std::vector<SparseBitMatrix> homotopy0, homotopy1, homotopy2;
};

/// Wall time in seconds of each pipeline step.
struct StepTimes {
    double rows = 0;
    double lifts = 0;
    double corrections = 0;
    double higher_corrections = 0;
    double assemble = 0;

    double total() const { return rows + lifts + corrections + higher_corrections + assemble; }
};

struct Resolution {
    FreeChainComplex complex;
    LiftMaps maps;
    StepTimes times;
};

std::vector<ResolutionRow> build_rows(const MultiCriticalComplex& complex, ResolutionShape shape);

/// Generator lift of one dimension: rows are the generators of `below`,
/// which must resolve the cells in `faces`.
SparseBitMatrix generator_lift(std::span<const Cell> cells, std::span<const Cell> faces, const ResolutionRow& below);

/// lift0 for every dimension: each generator of a cell goes to, for every
/// facet, the facet generator below it with the smallest x.
std::vector<SparseBitMatrix> compute_generator_lifts(const MultiCriticalComplex& complex,
                                                     std::span<const ResolutionRow> rows);

/// Rewrites a matrix with rows indexed by generators of `target` into one
/// with rows indexed by its relations. Per column, the generators of each
/// cell are sorted and paired (1st,2nd), (3rd,4th), ... and each pair is
/// replaced by the relations connecting it. An odd group throws
/// std::logic_error.
SparseBitMatrix connect_pairs(const ResolutionRow& target, const SparseBitMatrix& on_generators);

/// Rewrites a matrix with rows indexed by relations of `target` into one
/// with rows indexed by its syzygies, filling each per-cell cycle with
/// triangles. A per-cell part that is not a cycle throws std::logic_error.
SparseBitMatrix fill_cycles(const ResolutionRow& target, const SparseBitMatrix& on_relations);

/// Fills lift1 and homotopy0 from rows and lift0.
void compute_corrections(LiftMaps& maps);

/// Fills lift2, homotopy1 and homotopy2; requires log-path rows.
void compute_higher_corrections(LiftMaps& maps);

/// The output complex: dimension i has basis G_i, R_{i-1}, S_{i-2} in that
/// order and boundary
///   [ lift0      p1         0     ]
///   [ homotopy0  lift1      p2    ]
///   [ homotopy2  homotopy1  lift2 ].
FreeChainComplex assemble_output(const LiftMaps& maps);

/// Names of the commutation identities that fail, e.g. "p1*lift1 = lift0*p1 (dim 2)".
/// Empty when the maps are consistent.
std::vector<std::string> commutation_failures(const LiftMaps& maps);

/// Per-block nonzero counts summed over dimensions, keyed by block name.
struct BlockNnz {
    std::string name;
    std::vector<std::size_t> per_dimension;
};
std::vector<BlockNnz> block_nnz(const LiftMaps& maps);

}  // namespace mcrit
