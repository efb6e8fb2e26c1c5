#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcrit/rational.hpp"

namespace mcrit {

/// A point of the two-parameter grid.
struct Bigrade {
    Rational x;
    Rational y;

    friend bool operator==(const Bigrade&, const Bigrade&) = default;
};

/// Componentwise partial order.
inline bool leq(const Bigrade& a, const Bigrade& b) { return a.x <= b.x && a.y <= b.y; }

/// Least upper bound (componentwise maximum).
inline Bigrade join(const Bigrade& a, const Bigrade& b) {
    return {a.x < b.x ? b.x : a.x, a.y < b.y ? b.y : a.y};
}

inline bool comparable(const Bigrade& a, const Bigrade& b) { return leq(a, b) || leq(b, a); }

std::string to_string(const Bigrade& g);

class EmptySupportError : public std::invalid_argument {
public:
    EmptySupportError() : std::invalid_argument("cell has no entry grade") {}
};

/// Minimal generating set of an upset in the plane.
///
/// Generators are pairwise incomparable and stored sorted by strictly
/// increasing x (hence strictly decreasing y). Instances built through
/// normalize() always satisfy this; unchecked() exists so that malformed
/// data can be represented and reported by validate().
class Support {
public:
    Support() = default;

    static Support normalize(std::vector<Bigrade> grades);
    static Support unchecked(std::vector<Bigrade> grades);

    std::span<const Bigrade> generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const Bigrade& operator[](std::size_t i) const { return gens_[i]; }

    bool is_antichain() const;

    /// True iff some generator lies below s.
    bool contains(const Bigrade& s) const { return leftmost_below(s).has_value(); }

    /// Index of the generator with smallest x among those <= s, found by
    /// binary search. The set of generators below s is a contiguous index
    /// range, so this is the first index whose y fits under s.
    std::optional<std::size_t> leftmost_below(const Bigrade& s) const;

    friend bool operator==(const Support&, const Support&) = default;

private:
    explicit Support(std::vector<Bigrade> gens) : gens_(std::move(gens)) {}
    std::vector<Bigrade> gens_;
};

inline Support normalize_support(std::vector<Bigrade> grades) { return Support::normalize(std::move(grades)); }

struct Cell {
    std::size_t id = 0;
    std::size_t dim = 0;
    Support support;
    std::vector<std::size_t> facets;  // indices into the dim-1 block, ascending

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// A k-critical bifiltered chain complex over Z2, cells grouped by dimension.
class MultiCriticalComplex {
public:
    MultiCriticalComplex() = default;
    explicit MultiCriticalComplex(std::vector<std::vector<Cell>> blocks);

    std::size_t dimension_count() const { return blocks_.size(); }
    int top_dimension() const { return static_cast<int>(blocks_.size()) - 1; }

    /// Cells of the given dimension; empty for dimensions outside the complex.
    std::span<const Cell> cells(std::size_t dim) const;
    const Cell& cell(std::size_t dim, std::size_t id) const { return blocks_.at(dim).at(id); }

    std::size_t cell_count() const;
    /// Largest support size.
    std::size_t criticality() const;
    /// Total number of support generators.
    std::size_t size() const;

    friend bool operator==(const MultiCriticalComplex&, const MultiCriticalComplex&) = default;

private:
    std::vector<std::vector<Cell>> blocks_;
};

/// Incremental construction helper; cells get consecutive ids per dimension.
class ComplexBuilder {
public:
    std::size_t add_cell(std::size_t dim, Support support, std::vector<std::size_t> facets = {});
    std::size_t add_cell(std::size_t dim, std::vector<Bigrade> grades, std::vector<std::size_t> facets = {}) {
        return add_cell(dim, Support::normalize(std::move(grades)), std::move(facets));
    }
    std::size_t count(std::size_t dim) const { return dim < blocks_.size() ? blocks_[dim].size() : 0; }
    const Cell& cell(std::size_t dim, std::size_t id) const { return blocks_.at(dim).at(id); }
    MultiCriticalComplex build() &&;

private:
    std::vector<std::vector<Cell>> blocks_;
};

enum class ViolationKind {
    bad_index,
    unsorted_facets,
    dim0_with_facets,
    empty_support,
    non_antichain_support,
    face_support,
    boundary_squared,
};

std::string to_string(ViolationKind kind);

struct Violation {
    std::size_t dim;
    std::size_t cell;
    ViolationKind kind;
    std::string reason;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Checks every structural invariant of the input; never throws.
ValidationReport validate(const MultiCriticalComplex& complex);

}  // namespace mcrit
