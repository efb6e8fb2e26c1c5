#include "mcrit/logpath_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace mcrit {

namespace {

int floor_log2(std::size_t v) { return static_cast<int>(std::bit_width(v)) - 1; }

}  // namespace

LogPathGraph::LogPathGraph(std::size_t last_vertex, bool shortcuts) : m_(last_vertex), shortcuts_(shortcuts) {
    level_offset_[0] = 0;
    if (m_ == 0) return;
    const int max_level = shortcuts_ ? floor_log2(m_) : 0;
    for (int r = 0; r <= max_level; ++r) level_offset_[r + 1] = level_offset_[r] + (m_ >> r);
    levels_ = max_level + 1;
}

int LogPathGraph::depth() const {
    const std::size_t v = std::max<std::size_t>(m_, 2);
    return static_cast<int>(std::bit_width(v - 1));
}

LogPathGraph::Edge LogPathGraph::edge(std::size_t index) const {
    if (index >= edge_count()) throw std::out_of_range("edge index " + std::to_string(index));
    int r = 0;
    while (level_offset_[r + 1] <= index) ++r;
    const std::size_t lo = (index - level_offset_[r]) << r;
    return {lo, lo + (std::size_t{1} << r)};
}

std::optional<std::size_t> LogPathGraph::edge_index(std::size_t lo, std::size_t hi) const {
    if (hi <= lo || hi > m_) return std::nullopt;
    const std::size_t len = hi - lo;
    if (!std::has_single_bit(len)) return std::nullopt;
    const int r = std::countr_zero(len);
    if (r >= levels_) return std::nullopt;
    if (lo & (len - 1)) return std::nullopt;
    return level_offset_[r] + (lo >> r);
}

LogPathGraph::Triangle LogPathGraph::triangle(std::size_t index) const {
    if (index >= triangle_count()) throw std::out_of_range("triangle index " + std::to_string(index));
    const Edge e = edge(m_ + index);
    return {e.lo, (e.lo + e.hi) / 2, e.hi};
}

std::array<std::size_t, 3> LogPathGraph::triangle_edges(std::size_t index) const {
    const Triangle t = triangle(index);
    std::array<std::size_t, 3> out{*edge_index(t.lo, t.mid), *edge_index(t.mid, t.hi), m_ + index};
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> LogPathGraph::triangle_of_middle(std::size_t v) const {
    if (v == 0 || v >= m_) return std::nullopt;
    const std::size_t half = std::size_t{1} << std::countr_zero(v);
    auto long_edge = edge_index(v - half, v + half);
    if (!long_edge) return std::nullopt;
    return *long_edge - m_;
}

int LogPathGraph::step_level(std::size_t z, std::size_t y) const {
    if (!shortcuts_) return 0;
    const int fit = floor_log2(y - z);
    if (z == 0) return fit;
    return std::min(fit, std::countr_zero(z));
}

std::vector<LogPathGraph::Edge> LogPathGraph::shortest_monotone_path(std::size_t x, std::size_t y) const {
    if (!(x < y && y <= m_))
        throw std::invalid_argument("shortest_monotone_path requires x < y <= m");
    std::vector<Edge> path;
    for_each_path_edge(x, y, [&](std::size_t e) { path.push_back(edge(e)); });
    return path;
}

std::vector<std::vector<std::size_t>> split_closed_walk(std::span<const std::size_t> walk) {
    std::vector<std::vector<std::size_t>> cycles;
    if (walk.empty()) return cycles;
    // vertices are arbitrary labels; compact them to index a position table
    std::vector<std::size_t> labels(walk.begin(), walk.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto slot = [&](std::size_t v) {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
    };

    constexpr std::size_t absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pos(labels.size(), absent);
    std::vector<std::size_t> stack;
    for (std::size_t v : walk) {
        const std::size_t s = slot(v);
        if (pos[s] == absent) {
            stack.push_back(v);
            pos[s] = stack.size() - 1;
            continue;
        }
        const std::size_t j = pos[s];
        cycles.emplace_back(stack.begin() + static_cast<std::ptrdiff_t>(j), stack.end());
        for (std::size_t r = j + 1; r < stack.size(); ++r) pos[slot(stack[r])] = absent;
        stack.resize(j + 1);
    }
    // a closed walk leaves exactly its start vertex behind; anything else is not closed
    if (stack.size() != 1) throw std::invalid_argument("walk is not closed");
    // drop degenerate one-vertex "cycles" produced by the closing repeat of a lone vertex
    std::erase_if(cycles, [](const auto& c) { return c.size() < 2; });
    return cycles;
}

std::vector<std::vector<std::size_t>> euler_closed_walks(std::span<const LogPathGraph::Edge> edges) {
    std::vector<std::size_t> labels;
    labels.reserve(2 * edges.size());
    for (const auto& e : edges) {
        labels.push_back(e.lo);
        labels.push_back(e.hi);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto slot = [&](std::size_t v) {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
    };

    const std::size_t n = labels.size();
    std::vector<std::size_t> degree(n + 1, 0);
    for (const auto& e : edges) {
        ++degree[slot(e.lo) + 1];
        ++degree[slot(e.hi) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v + 1] % 2 != 0)
            throw std::invalid_argument("vertex " + std::to_string(labels[v]) + " has odd degree");
    }
    // CSR adjacency: (neighbor slot, edge id)
    for (std::size_t v = 0; v < n; ++v) degree[v + 1] += degree[v];
    std::vector<std::pair<std::size_t, std::size_t>> adj(degree[n]);
    std::vector<std::size_t> fill = degree;
    for (std::size_t id = 0; id < edges.size(); ++id) {
        const std::size_t a = slot(edges[id].lo);
        const std::size_t b = slot(edges[id].hi);
        adj[fill[a]++] = {b, id};
        adj[fill[b]++] = {a, id};
    }

    std::vector<char> used(edges.size(), 0);
    std::vector<std::size_t> next(degree.begin(), degree.end() - 1);
    std::vector<std::vector<std::size_t>> walks;
    for (std::size_t start = 0; start < n; ++start) {
        auto has_unused = [&](std::size_t v) {
            while (next[v] < degree[v + 1] && used[adj[next[v]].second]) ++next[v];
            return next[v] < degree[v + 1];
        };
        if (!has_unused(start)) continue;
        std::vector<std::size_t> stack{start};
        std::vector<std::size_t> circuit;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            if (has_unused(v)) {
                const auto [w, id] = adj[next[v]];
                used[id] = 1;
                stack.push_back(w);
            } else {
                circuit.push_back(labels[v]);
                stack.pop_back();
            }
        }
        std::reverse(circuit.begin(), circuit.end());
        walks.push_back(std::move(circuit));
    }
    return walks;
}

std::vector<std::size_t> decompose_and_fill(const LogPathGraph& graph, std::span<const std::size_t> cycle_edges) {
    std::vector<std::size_t> sorted(cycle_edges.begin(), cycle_edges.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle contains a repeated edge");

    std::vector<LogPathGraph::Edge> edges;
    edges.reserve(sorted.size());
    for (std::size_t e : sorted) edges.push_back(graph.edge(e));

    std::vector<std::size_t> triangles;
    for (const auto& walk : euler_closed_walks(edges)) {
        for (const auto& cycle : split_closed_walk(walk)) {
            const auto [lo_it, hi_it] = std::minmax_element(cycle.begin(), cycle.end());
            const std::size_t lo = *lo_it;
            const std::size_t hi = *hi_it;
            // the unique longest edge of a simple cycle spans its extremal vertices
            const std::size_t k = cycle.size();
            bool spans = false;
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t a = cycle[i];
                const std::size_t b = cycle[(i + 1) % k];
                if (std::min(a, b) == lo && std::max(a, b) == hi) spans = true;
            }
            if (!spans) throw std::logic_error("simple cycle has no edge between its extremal vertices");
            for (std::size_t v : cycle) {
                if (v == lo || v == hi) continue;
                auto t = graph.triangle_of_middle(v);
                if (!t) throw std::logic_error("no triangle for inner vertex " + std::to_string(v));
                triangles.push_back(*t);
            }
        }
    }
    std::sort(triangles.begin(), triangles.end());
    // cancel pairs over Z2
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < triangles.size();) {
        std::size_t j = i;
        while (j < triangles.size() && triangles[j] == triangles[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(triangles[i]);
        i = j;
    }
    return out;
}

}  // namespace mcrit
