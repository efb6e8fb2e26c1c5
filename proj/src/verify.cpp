#include "mcrit/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mcrit {

namespace {

// Either kind of complex reduced to what evaluation needs: a support per
// basis element and the boundary columns.
struct GradedView {
    std::vector<std::vector<std::span<const Bigrade>>> supports;
    std::vector<SparseBitMatrix> boundary;
    bool graded = true;  // every boundary row present wherever its column is
};

GradedView view_of(const MultiCriticalComplex& c) {
    GradedView v;
    const std::size_t n = c.dimension_count();
    v.supports.resize(n);
    for (std::size_t d = 0; d < n; ++d) {
        const auto cells = c.cells(d);
        const std::size_t below = d ? c.cells(d - 1).size() : 0;
        SparseBitMatrix b(below, 0);
        b.reserve_columns(cells.size());
        for (const Cell& cell : cells) {
            v.supports[d].push_back(cell.support.generators());
            Column col;
            for (std::size_t f : cell.facets) {
                if (f >= below) {
                    v.graded = false;
                    continue;
                }
                col.push_back(static_cast<index_t>(f));
                if (v.graded)
                    for (const Bigrade& g : cell.support.generators())
                        if (!c.cells(d - 1)[f].support.contains(g)) v.graded = false;
            }
            std::sort(col.begin(), col.end());
            col.erase(std::unique(col.begin(), col.end()), col.end());
            b.append_column(std::move(col));
        }
        v.boundary.push_back(std::move(b));
    }
    return v;
}

GradedView view_of(const FreeChainComplex& c) {
    GradedView v;
    const std::size_t n = c.dimension_count();
    v.supports.resize(n);
    for (std::size_t d = 0; d < n; ++d) {
        const auto grades = c.grades(d);
        for (std::size_t j = 0; j < grades.size(); ++j) {
            v.supports[d].push_back(grades.subspan(j, 1));
            if (d > 0)
                for (auto r : c.boundary(d).column(j))
                    if (!leq(c.grades(d - 1)[r], grades[j])) v.graded = false;
        }
        v.boundary.push_back(c.boundary(d));
    }
    return v;
}

bool present(std::span<const Bigrade> support, const Bigrade& s) {
    return std::any_of(support.begin(), support.end(), [&](const Bigrade& g) { return leq(g, s); });
}

EvaluatedComplex evaluate(const GradedView& v, const Bigrade& s) {
    EvaluatedComplex e;
    const std::size_t n = v.supports.size();
    e.basis.resize(n);
    std::vector<std::vector<std::size_t>> new_index(n);
    for (std::size_t d = 0; d < n; ++d) {
        new_index[d].assign(v.supports[d].size(), SIZE_MAX);
        for (std::size_t j = 0; j < v.supports[d].size(); ++j)
            if (present(v.supports[d][j], s)) {
                new_index[d][j] = e.basis[d].size();
                e.basis[d].push_back(j);
            }
    }
    for (std::size_t d = 0; d < n; ++d) {
        SparseBitMatrix b(d ? e.basis[d - 1].size() : 0, 0);
        for (std::size_t j : e.basis[d]) {
            Column col;
            for (auto r : v.boundary[d].column(j))
                if (new_index[d - 1][r] != SIZE_MAX) col.push_back(static_cast<index_t>(new_index[d - 1][r]));
            b.append_column(std::move(col));
        }
        e.boundary.push_back(std::move(b));
    }
    return e;
}

// Incremental column reduction; rank grows as columns are added.
class IncrementalRank {
public:
    explicit IncrementalRank(std::size_t n_rows) : pivot_(n_rows, SIZE_MAX) {}
    void add(Column col) {
        while (!col.empty()) {
            const std::size_t p = pivot_[col.back()];
            if (p == SIZE_MAX) {
                pivot_[col.back()] = reduced_.size();
                reduced_.push_back(std::move(col));
                return;
            }
            col = column_xor(col, reduced_[p]);
        }
    }
    std::size_t rank() const { return reduced_.size(); }

private:
    std::vector<std::size_t> pivot_;
    std::vector<Column> reduced_;
};

std::vector<std::vector<std::size_t>> table(const GradedView& v, std::span<const Bigrade> grades) {
    const std::size_t n = v.supports.size();
    std::vector<std::vector<std::size_t>> out(grades.size(), std::vector<std::size_t>(n, 0));
    if (!v.graded) {
        for (std::size_t g = 0; g < grades.size(); ++g) out[g] = betti_numbers(evaluate(v, grades[g]));
        return out;
    }
    // group grades by y
    std::vector<std::size_t> order(grades.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return grades[a].y < grades[b].y; });

    for (std::size_t lo = 0; lo < order.size();) {
        const Rational& y = grades[order[lo]].y;
        std::size_t hi = lo;
        while (hi < order.size() && grades[order[hi]].y == y) ++hi;

        // per dimension: entry x of each column on this line, sorted, and
        // the rank after each prefix
        std::vector<std::vector<Rational>> entry(n);
        std::vector<std::vector<std::size_t>> rank_after(n);
        for (std::size_t d = 0; d < n; ++d) {
            std::vector<std::pair<Rational, std::size_t>> cols;
            for (std::size_t j = 0; j < v.supports[d].size(); ++j) {
                std::optional<Rational> best;
                for (const Bigrade& g : v.supports[d][j])
                    if (g.y <= y && (!best || g.x < *best)) best = g.x;
                if (best) cols.emplace_back(*best, j);
            }
            std::sort(cols.begin(), cols.end());
            IncrementalRank r(v.boundary[d].rows());
            rank_after[d].push_back(0);
            for (const auto& [x, j] : cols) {
                entry[d].push_back(x);
                if (d > 0) r.add(v.boundary[d].column(j));
                rank_after[d].push_back(r.rank());
            }
        }
        for (std::size_t k = lo; k < hi; ++k) {
            const Rational& x = grades[order[k]].x;
            std::vector<std::size_t> count(n), rk(n);
            for (std::size_t d = 0; d < n; ++d) {
                count[d] = static_cast<std::size_t>(std::upper_bound(entry[d].begin(), entry[d].end(), x) -
                                                    entry[d].begin());
                rk[d] = rank_after[d][count[d]];
            }
            for (std::size_t d = 0; d < n; ++d) out[order[k]][d] = count[d] - rk[d] - (d + 1 < n ? rk[d + 1] : 0);
        }
        lo = hi;
    }
    return out;
}

void add_coordinates(GradeGrid& grid, const Bigrade& g) {
    grid.xs.push_back(g.x);
    grid.ys.push_back(g.y);
}

void finish(GradeGrid& grid) {
    for (auto* v : {&grid.xs, &grid.ys}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
}

}  // namespace

std::optional<Bigrade> GradeGrid::snap_down(const Bigrade& s) const {
    auto ix = std::upper_bound(xs.begin(), xs.end(), s.x);
    auto iy = std::upper_bound(ys.begin(), ys.end(), s.y);
    if (ix == xs.begin() || iy == ys.begin()) return std::nullopt;
    return Bigrade{*std::prev(ix), *std::prev(iy)};
}

GradeGrid grade_grid(const MultiCriticalComplex& complex) {
    GradeGrid grid;
    for (std::size_t d = 0; d < complex.dimension_count(); ++d)
        for (const Cell& c : complex.cells(d))
            for (const Bigrade& g : c.support.generators()) add_coordinates(grid, g);
    finish(grid);
    return grid;
}

GradeGrid grade_grid(const FreeChainComplex& complex) {
    GradeGrid grid;
    for (std::size_t d = 0; d < complex.dimension_count(); ++d)
        for (const Bigrade& g : complex.grades(d)) add_coordinates(grid, g);
    finish(grid);
    return grid;
}

GradeGrid merge(const GradeGrid& a, const GradeGrid& b) {
    GradeGrid grid = a;
    grid.xs.insert(grid.xs.end(), b.xs.begin(), b.xs.end());
    grid.ys.insert(grid.ys.end(), b.ys.begin(), b.ys.end());
    finish(grid);
    return grid;
}

std::vector<Bigrade> sample_grid(const GradeGrid& grid, std::size_t cap, std::uint64_t seed) {
    const std::size_t nx = grid.xs.size(), ny = grid.ys.size();
    std::vector<Bigrade> out;
    if (nx == 0 || ny == 0) return out;
    std::set<std::pair<std::size_t, std::size_t>> picked;
    if (nx * ny <= cap) {
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j) picked.emplace(i, j);
    } else {
        picked = {{0, 0}, {0, ny - 1}, {nx - 1, 0}, {nx - 1, ny - 1}};
        std::mt19937_64 rng(seed);
        while (picked.size() < std::max<std::size_t>(cap, 4)) picked.emplace(rng() % nx, rng() % ny);
    }
    out.reserve(picked.size());
    for (const auto& [i, j] : picked) out.push_back({grid.xs[i], grid.ys[j]});
    return out;
}

EvaluatedComplex evaluate_at_grade(const MultiCriticalComplex& complex, const Bigrade& s) {
    return evaluate(view_of(complex), s);
}

EvaluatedComplex evaluate_at_grade(const FreeChainComplex& complex, const Bigrade& s) {
    return evaluate(view_of(complex), s);
}

std::vector<std::size_t> betti_numbers(const EvaluatedComplex& c) {
    const std::size_t n = c.basis.size();
    std::vector<std::size_t> rk(n + 1, 0);
    for (std::size_t d = 1; d < n; ++d) rk[d] = rank(c.boundary[d]);
    std::vector<std::size_t> out(n);
    for (std::size_t d = 0; d < n; ++d) out[d] = c.basis[d].size() - rk[d] - rk[d + 1];
    return out;
}

std::size_t betti_at_grade(const MultiCriticalComplex& complex, const Bigrade& s, std::size_t i) {
    const auto b = betti_numbers(evaluate_at_grade(complex, s));
    return i < b.size() ? b[i] : 0;
}

std::size_t betti_at_grade(const FreeChainComplex& complex, const Bigrade& s, std::size_t i) {
    const auto b = betti_numbers(evaluate_at_grade(complex, s));
    return i < b.size() ? b[i] : 0;
}

std::vector<std::vector<std::size_t>> betti_table(const MultiCriticalComplex& complex,
                                                  std::span<const Bigrade> grades) {
    return table(view_of(complex), grades);
}

std::vector<std::vector<std::size_t>> betti_table(const FreeChainComplex& complex, std::span<const Bigrade> grades) {
    return table(view_of(complex), grades);
}

QuasiIsoReport check_quasi_iso(const MultiCriticalComplex& input, const FreeChainComplex& output,
                               std::size_t grid_cap) {
    QuasiIsoReport report;
    const GradeGrid grid = merge(grade_grid(input), grade_grid(output));
    const auto grades = sample_grid(grid, grid_cap);
    report.grid_size = grid.size();
    report.grades_checked = grades.size();
    report.sampled = grades.size() < grid.size();

    const auto expected = betti_table(input, grades);
    const auto actual = betti_table(output, grades);
    for (std::size_t g = 0; g < grades.size(); ++g) {
        const std::size_t dims = std::max(expected[g].size(), actual[g].size());
        for (std::size_t i = 0; i < dims; ++i) {
            const std::size_t e = i < expected[g].size() ? expected[g][i] : 0;
            const std::size_t a = i < actual[g].size() ? actual[g][i] : 0;
            if (e == a) continue;
            if (report.mismatch_count++ == 0) report.first_mismatch = BettiMismatch{grades[g], i, e, a};
        }
    }
    return report;
}

std::string QuasiIsoReport::text() const {
    std::ostringstream os;
    os << "quasi-isomorphism: ";
    if (ok()) {
        os << "ok";
    } else {
        const auto& m = *first_mismatch;
        os << "MISMATCH at " << to_string(m.grade) << " dim " << m.dim << ": input " << m.expected << ", output "
           << m.actual << " (" << mismatch_count << " mismatches)";
    }
    os << ", " << grades_checked << " of " << grid_size << " grid grades checked";
    return os.str();
}

std::string QuasiIsoReport::json_line() const {
    nlohmann::json j = {{"check", "quasi_iso"},  {"ok", ok()},
                        {"grid_size", grid_size}, {"grades_checked", grades_checked},
                        {"sampled", sampled},     {"mismatches", mismatch_count}};
    if (first_mismatch)
        j["first_mismatch"] = {{"x", first_mismatch->grade.x.to_string()},
                               {"y", first_mismatch->grade.y.to_string()},
                               {"dim", first_mismatch->dim},
                               {"input", first_mismatch->expected},
                               {"output", first_mismatch->actual}};
    else
        j["first_mismatch"] = nullptr;
    return j.dump();
}

FreeComplexReport check_free_complex(const FreeChainComplex& complex) {
    constexpr std::size_t kept = 20;
    FreeComplexReport report;
    auto note = [&](Defect d) {
        if (report.defect_count++ < kept) report.defects.push_back(d);
    };
    for (std::size_t d = 1; d < complex.dimension_count(); ++d) {
        const auto& b = complex.boundary(d);
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (auto r : b.column(j))
                if (!leq(complex.grades(d - 1)[r], complex.grades(d)[j])) note({DefectKind::not_graded, d, j, r});
        if (d + 1 < complex.dimension_count()) {
            const auto sq = mat_mul(b, complex.boundary(d + 1));
            for (std::size_t j = 0; j < sq.cols(); ++j)
                for (auto r : sq.column(j)) note({DefectKind::boundary_squared, d + 1, j, r});
        }
    }
    return report;
}

namespace {
const char* name(DefectKind k) { return k == DefectKind::boundary_squared ? "boundary_squared" : "not_graded"; }
}  // namespace

std::string FreeComplexReport::text() const {
    std::ostringstream os;
    os << "free complex: ";
    if (ok()) return os.str() + "ok";
    os << defect_count << " defects";
    for (const Defect& d : defects)
        os << "\n  " << name(d.kind) << ": dim " << d.dim << " column " << d.column << " row " << d.row;
    return os.str();
}

std::string FreeComplexReport::json_line() const {
    nlohmann::json list = nlohmann::json::array();
    for (const Defect& d : defects)
        list.push_back({{"kind", name(d.kind)}, {"dim", d.dim}, {"column", d.column}, {"row", d.row}});
    return nlohmann::json{{"check", "free_complex"}, {"ok", ok()}, {"defects", defect_count}, {"first", list}}.dump();
}

}  // namespace mcrit
