#include "mcrit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mcrit {

namespace {

Bigrade at(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

void check_wheel_size(std::size_t l) {
    if (l < 4 || l % 2 != 0) throw std::invalid_argument("wheel size must be even and at least 4");
}

std::vector<Bigrade> center_staircase(std::size_t l) {
    std::vector<Bigrade> out;
    for (std::size_t i = 0; i < l; ++i)
        out.push_back(at(static_cast<std::int64_t>(2 * i), static_cast<std::int64_t>(2 * (l - 1 - i))));
    return out;
}

std::vector<std::size_t> sorted_pair(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

/// Grades of the wheel cells, supplied by a callback so the plain and the
/// shifted variant share the cell structure.
template <class EdgeGrade, class TriangleGrade>
MultiCriticalComplex wheel_with(std::size_t l, EdgeGrade edge_grade, TriangleGrade triangle_grade) {
    ComplexBuilder b;
    for (std::size_t i = 0; i < l; ++i) b.add_cell(0, {at(0, 0)});
    const std::size_t center = b.add_cell(0, center_staircase(l));
    for (std::size_t i = 0; i < l; ++i) b.add_cell(1, {edge_grade(false, i)}, sorted_pair(i, (i + 1) % l));
    for (std::size_t i = 0; i < l; ++i) b.add_cell(1, {edge_grade(true, i)}, {i, center});
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<std::size_t> facets{i, l + i, l + (i + 1) % l};
        std::sort(facets.begin(), facets.end());
        b.add_cell(2, {triangle_grade(i)}, std::move(facets));
    }
    return std::move(b).build();
}

/// For each generator x: x joined with, per facet, the facet generator that
/// moves x the least (one below x if there is one).
Support push_above_facets(const Support& s, const std::vector<std::size_t>& facets, std::span<const Cell> faces) {
    std::vector<Bigrade> out;
    out.reserve(s.size());
    for (Bigrade x : s.generators()) {
        for (std::size_t f : facets) {
            const Support& fs = faces[f].support;
            if (fs.contains(x)) continue;
            std::size_t best = 0;
            Rational best_cost;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                const Rational dx = fs[i].x > x.x ? fs[i].x - x.x : Rational(0);
                const Rational dy = fs[i].y > x.y ? fs[i].y - x.y : Rational(0);
                const Rational cost = dx + dy;
                if (i == 0 || cost < best_cost) {
                    best = i;
                    best_cost = cost;
                }
            }
            x = join(x, fs[best]);
        }
        out.push_back(std::move(x));
    }
    return Support::normalize(std::move(out));
}

/// Every sorted vertex list of size dim+1 that is a clique, per dimension.
std::vector<std::vector<std::vector<std::size_t>>> cliques(std::size_t n_vertices,
                                                           const std::vector<std::vector<char>>& adjacent,
                                                           std::size_t max_dim) {
    std::vector<std::vector<std::vector<std::size_t>>> out(max_dim + 1);
    for (std::size_t v = 0; v < n_vertices; ++v) out[0].push_back({v});
    for (std::size_t d = 1; d <= max_dim; ++d) {
        for (const auto& c : out[d - 1]) {
            for (std::size_t w = c.back() + 1; w < n_vertices; ++w) {
                if (std::all_of(c.begin(), c.end(), [&](std::size_t u) { return adjacent[u][w] != 0; })) {
                    auto next = c;
                    next.push_back(w);
                    out[d].push_back(std::move(next));
                }
            }
        }
    }
    return out;
}

/// Facet indices of each simplex given the sorted simplex lists per dimension.
std::vector<std::vector<std::vector<std::size_t>>> facet_lists(
    const std::vector<std::vector<std::vector<std::size_t>>>& simplices) {
    std::vector<std::vector<std::vector<std::size_t>>> out(simplices.size());
    for (std::size_t d = 0; d < simplices.size(); ++d) {
        out[d].resize(simplices[d].size());
        if (d == 0) continue;
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t i = 0; i < simplices[d - 1].size(); ++i) index.emplace(simplices[d - 1][i], i);
        for (std::size_t i = 0; i < simplices[d].size(); ++i) {
            const auto& s = simplices[d][i];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<std::size_t> face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != drop) face.push_back(s[j]);
                out[d][i].push_back(index.at(face));
            }
            std::sort(out[d][i].begin(), out[d][i].end());
        }
    }
    return out;
}

}  // namespace

MultiCriticalComplex gen_wheel(std::size_t l) {
    check_wheel_size(l);
    const auto top = static_cast<std::int64_t>(2 * l - 2);
    return wheel_with(
        l,
        [&](bool spoke, std::size_t i) {
            if (!spoke) return at(0, 0);
            return i % 2 == 0 ? at(0, top) : at(top, 0);
        },
        [&](std::size_t) { return at(top, top); });
}

MultiCriticalComplex gen_star(std::size_t l) {
    if (l < 2) throw std::invalid_argument("star size must be at least 2");
    const auto top = static_cast<std::int64_t>(2 * l - 2);
    ComplexBuilder b;
    for (std::size_t i = 0; i < l; ++i) b.add_cell(0, {at(0, 0)});
    const std::size_t center = b.add_cell(0, center_staircase(l));
    for (std::size_t i = 0; i < l; ++i) b.add_cell(1, {at(0, top), at(top, 0)}, {i, center});
    return std::move(b).build();
}

MultiCriticalComplex gen_modified_wheel(std::size_t l) {
    check_wheel_size(l);
    const auto n = static_cast<std::int64_t>(l);
    const auto top = static_cast<std::int64_t>(2 * l - 2);
    const Rational unit(1, 4 * n + 1);
    // edge offsets j = 1..2l along an anti-diagonal: even spokes, outer edges, odd spokes
    auto shifted = [&](std::int64_t bx, std::int64_t by, std::int64_t j) {
        return Bigrade{Rational(bx) + Rational(j) * unit, Rational(by) + Rational(2 * n + 1 - j) * unit};
    };
    return wheel_with(
        l,
        [&](bool spoke, std::size_t i) {
            const auto k = static_cast<std::int64_t>(i);
            if (!spoke) return shifted(0, 0, n / 2 + 1 + k);
            return k % 2 == 0 ? shifted(0, top, 1 + k / 2) : shifted(top, 0, 3 * n / 2 + 1 + k / 2);
        },
        [&](std::size_t i) {
            const auto k = static_cast<std::int64_t>(i);
            return Bigrade{Rational(top) + Rational(2 * n + 1 + k) * unit, Rational(top) + Rational(3 * n - k) * unit};
        });
}

MultiCriticalComplex gen_bifunction(const MultiCriticalComplex& values, std::size_t k) {
    if (k < 2) throw std::invalid_argument("bifunction criticality must be at least 2");
    if (values.criticality() > 1) throw std::invalid_argument("function values must be one grade per cell");
    if (const auto report = validate(values); !report.ok())
        throw std::invalid_argument("function values do not respect the face relation: " + report.summary());

    std::vector<std::vector<Cell>> blocks(values.dimension_count());
    for (std::size_t d = 0; d < values.dimension_count(); ++d) {
        for (const Cell& c : values.cells(d)) {
            const Rational f0 = c.support[0].x;
            const Rational f1 = c.support[0].y;
            if (f0 < Rational(0) || f1 < Rational(0)) throw std::invalid_argument("function values must be nonnegative");
            std::vector<Bigrade> pts{{Rational(0), f0}, {f1, Rational(0)}};
            if (f0 > Rational(0) && f1 > Rational(0)) {
                const double a = f0.to_double();
                const double b = f1.to_double();
                for (std::size_t j = 1; j + 1 < k; ++j) {
                    const double slope =
                        std::tan(static_cast<double>(j) * std::numbers::pi / (2.0 * static_cast<double>(k - 1)));
                    const double x = a * b / (a + b * slope);
                    pts.push_back({Rational::snap(x), Rational::snap(x * slope)});
                }
            }
            Support s = Support::normalize(std::move(pts));
            // rounding may leave a ray point a hair below a face's point on the same ray
            if (d > 0) s = push_above_facets(s, c.facets, blocks[d - 1]);
            blocks[d].push_back(Cell{c.id, d, std::move(s), c.facets});
        }
    }
    return MultiCriticalComplex(std::move(blocks));
}

MultiCriticalComplex bifunction_grid(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("grid needs at least 2 vertices per side");
    std::mt19937_64 rng(seed);
    std::vector<Bigrade> vertex_value(n * n);
    for (auto& v : vertex_value)
        v = {Rational(static_cast<std::int64_t>(rng() % 65537), 65536),
             Rational(static_cast<std::int64_t>(rng() % 65537), 65536)};

    std::vector<std::vector<std::vector<std::size_t>>> simplices(3);
    auto id = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (std::size_t v = 0; v < n * n; ++v) simplices[0].push_back({v});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i + 1 < n) simplices[1].push_back({id(i, j), id(i + 1, j)});
            if (j + 1 < n) simplices[1].push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < n && j + 1 < n) {
                simplices[1].push_back({id(i, j), id(i + 1, j + 1)});
                simplices[2].push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
                simplices[2].push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            }
        }
    for (auto& block : simplices) std::sort(block.begin(), block.end());
    const auto facets = facet_lists(simplices);

    ComplexBuilder b;
    for (std::size_t d = 0; d < 3; ++d)
        for (std::size_t i = 0; i < simplices[d].size(); ++i) {
            Bigrade value = vertex_value[simplices[d][i][0]];
            for (std::size_t v : simplices[d][i]) value = join(value, vertex_value[v]);
            b.add_cell(d, {value}, facets[d][i]);
        }
    return std::move(b).build();
}

MultiCriticalComplex gen_degree_rips(const std::vector<std::vector<double>>& points, std::size_t max_dim) {
    const std::size_t n = points.size();
    if (n < 2) throw std::invalid_argument("degree-Rips needs at least 2 points");
    if (max_dim > 3) throw std::invalid_argument("degree-Rips dimension is capped at 3");
    for (const auto& p : points)
        if (p.size() != points[0].size()) throw std::invalid_argument("points have different dimensions");

    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
    std::vector<Rational> scales{Rational(0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double sq = 0;
            for (std::size_t c = 0; c < points[i].size(); ++c) sq += (points[i][c] - points[j][c]) * (points[i][c] - points[j][c]);
            dist[i][j] = dist[j][i] = Rational::snap(std::sqrt(sq));
            scales.push_back(dist[i][j]);
        }
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());

    // degree[v][s] = neighbours of v within scales[s]
    std::vector<std::vector<std::size_t>> degree(n, std::vector<std::size_t>(scales.size()));
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Rational> around;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v) around.push_back(dist[v][u]);
        std::sort(around.begin(), around.end());
        for (std::size_t s = 0; s < scales.size(); ++s)
            degree[v][s] = static_cast<std::size_t>(std::upper_bound(around.begin(), around.end(), scales[s]) -
                                                    around.begin());
    }

    const std::vector<std::vector<char>> all(n, std::vector<char>(n, 1));
    const auto simplices = cliques(n, all, std::min(max_dim, n - 1));
    const auto facets = facet_lists(simplices);
    const auto k_max = static_cast<std::int64_t>(n - 1);

    ComplexBuilder b;
    for (std::size_t d = 0; d < simplices.size(); ++d)
        for (std::size_t i = 0; i < simplices[d].size(); ++i) {
            const auto& s = simplices[d][i];
            Rational diam(0);
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t c = a + 1; c < s.size(); ++c) diam = std::max(diam, dist[s[a]][s[c]]);
            std::vector<Bigrade> grades;
            for (std::size_t sc = 0; sc < scales.size(); ++sc) {
                if (scales[sc] < diam) continue;
                std::size_t min_deg = n;
                for (std::size_t v : s) min_deg = std::min(min_deg, degree[v][sc]);
                grades.push_back({scales[sc], Rational(k_max - static_cast<std::int64_t>(min_deg))});
            }
            b.add_cell(d, std::move(grades), facets[d][i]);
        }
    return std::move(b).build();
}

std::vector<std::vector<double>> random_points(std::size_t count, std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> out(count, std::vector<double>(dim));
    for (auto& p : out)
        for (auto& c : p) c = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return out;
}

namespace {

/// `count` distinct values from {0..grid}, ascending.
std::vector<std::int64_t> distinct_values(std::size_t count, std::size_t grid, std::mt19937_64& rng) {
    std::vector<std::int64_t> all(grid + 1);
    for (std::size_t i = 0; i <= grid; ++i) all[i] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < count; ++i) std::swap(all[i], all[i + rng() % (grid + 1 - i)]);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

MultiCriticalComplex gen_random(std::size_t n_cells, std::size_t k, std::size_t d, std::uint64_t seed,
                                std::size_t grid) {
    if (k == 0) throw std::invalid_argument("criticality must be at least 1");
    std::mt19937_64 rng(seed);
    if (n_cells == 0) return {};
    const std::size_t nv = std::min(n_cells, std::max<std::size_t>(2, n_cells / 6));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < nv; ++u)
        for (std::size_t v = u + 1; v < nv; ++v) pairs.push_back({u, v});
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
    pairs.resize(std::min(pairs.size(), 3 * nv));
    std::vector<std::vector<char>> adjacent(nv, std::vector<char>(nv, 0));
    for (auto [u, v] : pairs) adjacent[u][v] = adjacent[v][u] = 1;

    auto simplices = cliques(nv, adjacent, d);
    std::size_t total = 0;
    for (const auto& block : simplices) total += block.size();
    for (std::size_t dim = simplices.size(); dim-- > 1 && total > n_cells;) {
        auto& block = simplices[dim];
        for (std::size_t i = block.size(); i > 1; --i) std::swap(block[i - 1], block[rng() % i]);
        const std::size_t drop = std::min(block.size(), total - n_cells);
        block.resize(block.size() - drop);
        total -= drop;
        std::sort(block.begin(), block.end());
    }
    const auto facets = facet_lists(simplices);

    std::vector<std::vector<Cell>> blocks(simplices.size());
    for (std::size_t dim = 0; dim < simplices.size(); ++dim) {
        for (std::size_t i = 0; i < simplices[dim].size(); ++i) {
            // distinct xs ascending against distinct ys descending: an antichain
            const std::size_t count = std::min(1 + rng() % k, grid + 1);
            std::vector<std::int64_t> xs = distinct_values(count, grid, rng);
            std::vector<std::int64_t> ys = distinct_values(count, grid, rng);
            std::vector<Bigrade> grades;
            for (std::size_t g = 0; g < count; ++g) grades.push_back(at(xs[g], ys[count - 1 - g]));
            Support s = Support::normalize(std::move(grades));
            if (dim > 0) s = push_above_facets(s, facets[dim][i], blocks[dim - 1]);
            blocks[dim].push_back(Cell{i, dim, std::move(s), facets[dim][i]});
        }
    }
    return MultiCriticalComplex(std::move(blocks));
}

}  // namespace mcrit
