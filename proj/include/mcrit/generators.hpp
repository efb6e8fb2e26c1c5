#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mcrit/core.hpp"

namespace mcrit {

/// Outer cycle of l vertices and edges at (0,0), a center vertex (last
/// vertex id) entering along the staircase (2i, 2(l-1-i)), spokes at
/// (0, 2l-2) for even i and (2l-2, 0) for odd i, and triangles
/// {v_i, v_{i+1}, center} at (2l-2, 2l-2). Edges: outer ones first, then
/// spokes. Requires l even and >= 4.
MultiCriticalComplex gen_wheel(std::size_t l);

/// l edges from outer vertices to the wheel's center, each entering at
/// both (0, 2l-2) and (2l-2, 0). Requires l >= 2.
MultiCriticalComplex gen_star(std::size_t l);

/// The wheel with every edge and triangle shifted by multiples of
/// 1/(4l+1): edge grades become pairwise incomparable, triangle grades
/// too, and every edge enters strictly after its vertices.
MultiCriticalComplex gen_modified_wheel(std::size_t l);

/// Staircases from two functions on a complex. `values` is 1-critical and
/// carries (f0, f1) as the grade of each cell; each cell gets
/// (0, f0), (f1, 0) and the k-2 points where the segment between them
/// meets the rays at angles j*pi/(2(k-1)). Ray points are snapped to
/// multiples of 2^-32. Throws std::invalid_argument for k < 2, negative
/// values, or values that decrease along a face relation.
MultiCriticalComplex gen_bifunction(const MultiCriticalComplex& values, std::size_t k);

/// Triangulated n x n grid of vertices with random vertex values in [0,1]
/// and f0, f1 of a cell the maximum over its vertices, as input for
/// gen_bifunction.
MultiCriticalComplex bifunction_grid(std::size_t n, std::uint64_t seed);

/// Degree-Rips bifiltration of Euclidean points up to max_dim. A cell is
/// present at (s, c) when its diameter is <= s and each of its vertices has
/// at least (|P|-1) - c neighbours within distance s. Distances are
/// snapped to multiples of 2^-32. Requires >= 2 points and max_dim <= 3.
MultiCriticalComplex gen_degree_rips(const std::vector<std::vector<double>>& points, std::size_t max_dim);

/// Uniform random points in the unit cube of the given dimension.
std::vector<std::vector<double>> random_points(std::size_t count, std::size_t dim, std::uint64_t seed);

/// Clique complex of a random graph up to dimension d with at most n_cells
/// cells; each cell gets up to k random grades on {0..grid}^2, pushed up so
/// that every facet is present below each of them.
MultiCriticalComplex gen_random(std::size_t n_cells, std::size_t k, std::size_t d, std::uint64_t seed,
                                std::size_t grid = 16);

}  // namespace mcrit
