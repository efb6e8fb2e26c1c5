#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mcrit {

/// The graph on vertices 0..m whose edges are all (x, x + 2^r) with 2^r | x
/// and x + 2^r <= m, together with the filled triangles
/// (v - 2^r, v, v + 2^r), r maximal with 2^r | v.
///
/// Edges are indexed level by level: first the m unit edges (x, x+1) at
/// index x, then edges of length 2, 4, ... each ordered by start vertex.
/// Every edge of length >= 2 is the long edge of exactly one triangle, so
/// triangle i is the one whose long edge has index m + i.
///
/// With shortcuts disabled this is the plain path graph with no triangles.
/// The object is a few hundred bytes and does no allocation.
class LogPathGraph {
public:
    struct Edge {
        std::size_t lo;
        std::size_t hi;
        friend bool operator==(const Edge&, const Edge&) = default;
    };
    struct Triangle {
        std::size_t lo;
        std::size_t mid;
        std::size_t hi;
        friend bool operator==(const Triangle&, const Triangle&) = default;
    };

    explicit LogPathGraph(std::size_t last_vertex, bool shortcuts = true);

    std::size_t last_vertex() const { return m_; }
    std::size_t vertex_count() const { return m_ + 1; }
    std::size_t edge_count() const { return level_offset_[levels_]; }
    std::size_t triangle_count() const { return edge_count() - m_; }
    bool has_shortcuts() const { return shortcuts_; }
    /// ceil(log2(max(m, 2)))
    int depth() const;

    Edge edge(std::size_t index) const;
    std::optional<std::size_t> edge_index(std::size_t lo, std::size_t hi) const;

    Triangle triangle(std::size_t index) const;
    /// Edge indices of the triangle, ascending.
    std::array<std::size_t, 3> triangle_edges(std::size_t index) const;
    std::optional<std::size_t> triangle_of_middle(std::size_t v) const;

    /// Greedy: from x take the longest edge that does not overshoot y.
    /// Requires x < y <= m.
    std::vector<Edge> shortest_monotone_path(std::size_t x, std::size_t y) const;

    /// Same path, as edge indices, visited in order.
    template <class Visit>
    void for_each_path_edge(std::size_t x, std::size_t y, Visit&& visit) const {
        std::size_t z = x;
        while (z < y) {
            const int r = step_level(z, y);
            const std::size_t next = z + (std::size_t{1} << r);
            visit(level_offset_[r] + (z >> r));
            z = next;
        }
    }

private:
    int step_level(std::size_t z, std::size_t y) const;

    std::size_t m_;
    bool shortcuts_;
    int levels_ = 0;  // number of edge lengths present
    std::array<std::size_t, 66> level_offset_{};
};

/// Splits a closed walk (first vertex repeated at the end) into simple
/// cycles with a vertex stack: every time a vertex repeats, the part of the
/// stack above its earlier occurrence is emitted as a cycle.
std::vector<std::vector<std::size_t>> split_closed_walk(std::span<const std::size_t> walk);

/// Closed walks covering an edge set in which every vertex has even degree,
/// one per connected component, found greedily with visited-edge marking.
/// Each walk starts and ends at the smallest vertex of its component.
std::vector<std::vector<std::size_t>> euler_closed_walks(std::span<const LogPathGraph::Edge> edges);

/// The unique set of triangles whose boundary sum equals the given Z2 cycle
/// (edge indices of `graph`). Throws std::invalid_argument if an edge repeats
/// or a vertex has odd degree. Result is sorted.
std::vector<std::size_t> decompose_and_fill(const LogPathGraph& graph, std::span<const std::size_t> cycle_edges);

}  // namespace mcrit
