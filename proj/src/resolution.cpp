#include "mcrit/resolution.hpp"

#include <algorithm>

namespace mcrit {

ResolutionRow::ResolutionRow(std::span<const Cell> cells, ResolutionShape shape) : shape_(shape) {
    const bool shortcuts = shape == ResolutionShape::log_path;
    std::size_t n_gen = 0, n_rel = 0, n_syz = 0;
    for (const Cell& c : cells) {
        if (c.support.size() == 0) throw EmptySupportError();
        const LogPathGraph g(c.support.size() - 1, shortcuts);
        n_gen += g.vertex_count();
        n_rel += g.edge_count();
        n_syz += g.triangle_count();
    }
    support_size_.reserve(cells.size());
    generator_offset_.reserve(cells.size());
    relation_offset_.reserve(cells.size());
    syzygy_offset_.reserve(cells.size());
    generator_owner_.reserve(n_gen);
    relation_owner_.reserve(n_rel);
    generator_grades_.reserve(n_gen);
    relation_grades_.reserve(n_rel);
    syzygy_grades_.reserve(n_syz);
    p1_ = SparseBitMatrix(n_gen, 0);
    p1_.reserve_columns(n_rel);
    p2_ = SparseBitMatrix(n_rel, 0);
    p2_.reserve_columns(n_syz);

    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto x = cells[ci].support.generators();
        const LogPathGraph g(x.size() - 1, shortcuts);
        const std::size_t go = generator_grades_.size();
        const std::size_t ro = relation_grades_.size();
        support_size_.push_back(x.size());
        generator_offset_.push_back(go);
        relation_offset_.push_back(ro);
        syzygy_offset_.push_back(syzygy_grades_.size());

        for (const Bigrade& b : x) {
            generator_grades_.push_back(b);
            generator_owner_.push_back(static_cast<index_t>(ci));
        }
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto [lo, hi] = g.edge(e);
            relation_grades_.push_back(join(x[lo], x[hi]));
            relation_owner_.push_back(static_cast<index_t>(ci));
            p1_.append_column({static_cast<index_t>(go + lo), static_cast<index_t>(go + hi)});
        }
        for (std::size_t t = 0; t < g.triangle_count(); ++t) {
            const auto [lo, mid, hi] = g.triangle(t);
            Bigrade grade = join(x[lo], x[hi]);
            if (!leq(x[mid], grade)) throw std::logic_error("triangle grade does not cover its middle vertex");
            syzygy_grades_.push_back(std::move(grade));
            Column col;
            for (std::size_t e : g.triangle_edges(t)) col.push_back(static_cast<index_t>(ro + e));
            p2_.append_column(std::move(col));
        }
    }
}

void ResolutionRow::connect(std::size_t cell, std::size_t a, std::size_t b, ColumnAccumulator& acc) const {
    if (a == b) return;
    const std::size_t ro = relation_offset_[cell];
    graph(cell).for_each_path_edge(std::min(a, b), std::max(a, b),
                                   [&](std::size_t e) { acc.flip(static_cast<index_t>(ro + e)); });
}

std::vector<ResolutionRow> build_rows(const MultiCriticalComplex& complex, ResolutionShape shape) {
    std::vector<ResolutionRow> rows;
    rows.reserve(complex.dimension_count());
    for (std::size_t dim = 0; dim < complex.dimension_count(); ++dim) rows.emplace_back(complex.cells(dim), shape);
    return rows;
}

SparseBitMatrix generator_lift(std::span<const Cell> cells, std::span<const Cell> faces, const ResolutionRow& below) {
    std::size_t n_cols = 0;
    for (const Cell& c : cells) n_cols += c.support.size();
    SparseBitMatrix m(below.generator_count(), 0);
    m.reserve_columns(n_cols);
    for (const Cell& c : cells) {
        for (const Bigrade& x : c.support.generators()) {
            Column col;
            col.reserve(c.facets.size());
            for (std::size_t f : c.facets) {
                const auto j = faces[f].support.leftmost_below(x);
                if (!j)
                    throw InvalidBifiltrationError("dimension " + std::to_string(c.dim) + " cell " +
                                                   std::to_string(c.id) + " at " + to_string(x) + ": facet " +
                                                   std::to_string(f) + " has no generator below");
                col.push_back(static_cast<index_t>(below.generator_offset(f) + *j));
            }
            m.append_column(std::move(col));
        }
    }
    return m;
}

std::vector<SparseBitMatrix> compute_generator_lifts(const MultiCriticalComplex& complex,
                                                     std::span<const ResolutionRow> rows) {
    std::vector<SparseBitMatrix> lifts;
    lifts.reserve(rows.size());
    for (std::size_t dim = 0; dim < rows.size(); ++dim) {
        if (dim == 0)
            lifts.emplace_back(0, rows[0].generator_count());
        else
            lifts.push_back(generator_lift(complex.cells(dim), complex.cells(dim - 1), rows[dim - 1]));
    }
    return lifts;
}

SparseBitMatrix connect_pairs(const ResolutionRow& target, const SparseBitMatrix& on_generators) {
    if (on_generators.rows() != target.generator_count())
        throw std::invalid_argument("connect_pairs: row count does not match the generator count");
    SparseBitMatrix out(target.relation_count(), 0);
    out.reserve_columns(on_generators.cols());
    ColumnAccumulator acc(target.relation_count());
    for (std::size_t j = 0; j < on_generators.cols(); ++j) {
        const Column& col = on_generators.column(j);
        for (std::size_t i = 0; i < col.size();) {
            const std::size_t cell = target.generator_owner(col[i]);
            std::size_t end = i;
            while (end < col.size() && target.generator_owner(col[end]) == cell) ++end;
            if ((end - i) % 2 != 0)
                throw std::logic_error("column " + std::to_string(j) + ": cell " + std::to_string(cell) +
                                       " has an unpaired generator");
            const std::size_t go = target.generator_offset(cell);
            for (std::size_t p = i; p < end; p += 2) target.connect(cell, col[p] - go, col[p + 1] - go, acc);
            i = end;
        }
        out.append_column(acc.take());
    }
    return out;
}

SparseBitMatrix fill_cycles(const ResolutionRow& target, const SparseBitMatrix& on_relations) {
    if (on_relations.rows() != target.relation_count())
        throw std::invalid_argument("fill_cycles: row count does not match the relation count");
    SparseBitMatrix out(target.syzygy_count(), 0);
    out.reserve_columns(on_relations.cols());
    std::vector<std::size_t> local;
    for (std::size_t j = 0; j < on_relations.cols(); ++j) {
        const Column& col = on_relations.column(j);
        Column filled;
        for (std::size_t i = 0; i < col.size();) {
            const std::size_t cell = target.relation_owner(col[i]);
            const std::size_t ro = target.relation_offset(cell);
            local.clear();
            for (; i < col.size() && target.relation_owner(col[i]) == cell; ++i) local.push_back(col[i] - ro);
            std::vector<std::size_t> triangles;
            try {
                triangles = decompose_and_fill(target.graph(cell), local);
            } catch (const std::invalid_argument& e) {
                throw std::logic_error("column " + std::to_string(j) + ", cell " + std::to_string(cell) +
                                       ": not a cycle: " + e.what());
            }
            const std::size_t so = target.syzygy_offset(cell);
            for (std::size_t t : triangles) filled.push_back(static_cast<index_t>(so + t));
        }
        out.append_column(std::move(filled));
    }
    return out;
}

namespace {

std::size_t generators_at(const LiftMaps& m, std::ptrdiff_t j) {
    return j >= 0 && j < static_cast<std::ptrdiff_t>(m.rows.size()) ? m.rows[j].generator_count() : 0;
}
std::size_t relations_at(const LiftMaps& m, std::ptrdiff_t j) {
    return j >= 0 && j < static_cast<std::ptrdiff_t>(m.rows.size()) ? m.rows[j].relation_count() : 0;
}
std::size_t syzygies_at(const LiftMaps& m, std::ptrdiff_t j) {
    return j >= 0 && j < static_cast<std::ptrdiff_t>(m.rows.size()) ? m.rows[j].syzygy_count() : 0;
}

}  // namespace

void compute_corrections(LiftMaps& maps) {
    const std::size_t d = maps.rows.size();
    auto& rows = maps.rows;
    maps.lift1.clear();
    maps.homotopy0.clear();
    for (std::size_t i = 0; i < d; ++i) {
        if (i >= 1)
            maps.lift1.push_back(connect_pairs(rows[i - 1], mat_mul(maps.lift0[i], rows[i].p1())));
        else
            maps.lift1.emplace_back(0, rows[i].relation_count());
        if (i >= 2)
            maps.homotopy0.push_back(connect_pairs(rows[i - 2], mat_mul(maps.lift0[i - 1], maps.lift0[i])));
        else
            maps.homotopy0.emplace_back(0, rows[i].generator_count());
    }
    // the higher maps stay zero unless compute_higher_corrections runs
    maps.lift2.clear();
    maps.homotopy1.clear();
    maps.homotopy2.clear();
    for (std::size_t i = 0; i < d; ++i) {
        maps.lift2.emplace_back(syzygies_at(maps, static_cast<std::ptrdiff_t>(i) - 1), rows[i].syzygy_count());
        maps.homotopy1.emplace_back(syzygies_at(maps, static_cast<std::ptrdiff_t>(i) - 2), rows[i].relation_count());
        maps.homotopy2.emplace_back(syzygies_at(maps, static_cast<std::ptrdiff_t>(i) - 3), rows[i].generator_count());
    }
}

void compute_higher_corrections(LiftMaps& maps) {
    const std::size_t d = maps.rows.size();
    auto& rows = maps.rows;
    for (std::size_t i = 0; i < d; ++i) {
        if (i >= 1) maps.lift2[i] = fill_cycles(rows[i - 1], mat_mul(maps.lift1[i], rows[i].p2()));
        if (i >= 2)
            maps.homotopy1[i] = fill_cycles(rows[i - 2], mat_add(mat_mul(maps.homotopy0[i], rows[i].p1()),
                                                                 mat_mul(maps.lift1[i - 1], maps.lift1[i])));
        if (i >= 3)
            maps.homotopy2[i] = fill_cycles(rows[i - 3], mat_add(mat_mul(maps.homotopy0[i - 1], maps.lift0[i]),
                                                                 mat_mul(maps.lift1[i - 2], maps.homotopy0[i])));
    }
}

FreeChainComplex assemble_output(const LiftMaps& maps) {
    const auto d = static_cast<std::ptrdiff_t>(maps.rows.size());
    if (d == 0) return {};
    auto in_range = [&](std::ptrdiff_t j, std::ptrdiff_t lo) { return j >= lo && j < d; };

    std::vector<std::vector<Bigrade>> grades;
    std::vector<SparseBitMatrix> boundaries;
    for (std::ptrdiff_t i = 0; i < d + 2; ++i) {
        std::vector<Bigrade> basis;
        if (in_range(i, 0)) {
            auto g = maps.rows[i].generator_grades();
            basis.insert(basis.end(), g.begin(), g.end());
        }
        if (in_range(i - 1, 0)) {
            auto r = maps.rows[i - 1].relation_grades();
            basis.insert(basis.end(), r.begin(), r.end());
        }
        if (in_range(i - 2, 0)) {
            auto s = maps.rows[i - 2].syzygy_grades();
            basis.insert(basis.end(), s.begin(), s.end());
        }

        if (i == 0) {
            boundaries.emplace_back(0, basis.size());
        } else {
            BlockMatrix b({generators_at(maps, i - 1), relations_at(maps, i - 2), syzygies_at(maps, i - 3)},
                          {generators_at(maps, i), relations_at(maps, i - 1), syzygies_at(maps, i - 2)});
            if (in_range(i, 1)) b.set(0, 0, maps.lift0[i]);
            if (in_range(i - 1, 0)) b.set(0, 1, maps.rows[i - 1].p1());
            if (in_range(i, 2)) b.set(1, 0, maps.homotopy0[i]);
            if (in_range(i - 1, 1)) b.set(1, 1, maps.lift1[i - 1]);
            if (in_range(i - 2, 0)) b.set(1, 2, maps.rows[i - 2].p2());
            if (in_range(i, 3)) b.set(2, 0, maps.homotopy2[i]);
            if (in_range(i - 1, 2)) b.set(2, 1, maps.homotopy1[i - 1]);
            if (in_range(i - 2, 1)) b.set(2, 2, maps.lift2[i - 2]);
            boundaries.push_back(b.build());
        }
        grades.push_back(std::move(basis));
    }
    return FreeChainComplex(std::move(grades), std::move(boundaries));
}

std::vector<std::string> commutation_failures(const LiftMaps& maps) {
    std::vector<std::string> failed;
    const std::size_t d = maps.rows.size();
    const auto& rows = maps.rows;
    auto check = [&](bool ok, const char* name, std::size_t dim) {
        if (!ok) failed.push_back(std::string(name) + " (dim " + std::to_string(dim) + ")");
    };
    for (std::size_t i = 0; i < d; ++i) {
        check(mat_mul(rows[i].p1(), rows[i].p2()).is_zero(), "p1*p2 = 0", i);
        if (i >= 1) {
            check(mat_mul(rows[i - 1].p1(), maps.lift1[i]) == mat_mul(maps.lift0[i], rows[i].p1()),
                  "p1*lift1 = lift0*p1", i);
            check(mat_mul(rows[i - 1].p2(), maps.lift2[i]) == mat_mul(maps.lift1[i], rows[i].p2()),
                  "p2*lift2 = lift1*p2", i);
        }
        if (i >= 2) {
            check(mat_mul(rows[i - 2].p1(), maps.homotopy0[i]) == mat_mul(maps.lift0[i - 1], maps.lift0[i]),
                  "p1*homotopy0 = lift0*lift0", i);
            check(mat_mul(rows[i - 2].p2(), maps.homotopy1[i]) ==
                      mat_add(mat_mul(maps.homotopy0[i], rows[i].p1()), mat_mul(maps.lift1[i - 1], maps.lift1[i])),
                  "p2*homotopy1 = homotopy0*p1 + lift1*lift1", i);
        }
        if (i >= 3) {
            check(mat_mul(rows[i - 3].p2(), maps.homotopy2[i]) ==
                      mat_add(mat_mul(maps.homotopy0[i - 1], maps.lift0[i]),
                              mat_mul(maps.lift1[i - 2], maps.homotopy0[i])),
                  "p2*homotopy2 = homotopy0*lift0 + lift1*homotopy0", i);
        }
    }
    return failed;
}

std::vector<BlockNnz> block_nnz(const LiftMaps& maps) {
    auto count = [](const std::vector<SparseBitMatrix>& ms) {
        std::vector<std::size_t> out;
        for (const auto& m : ms) out.push_back(m.nnz());
        return out;
    };
    std::vector<std::size_t> p1, p2;
    for (const auto& r : maps.rows) {
        p1.push_back(r.p1().nnz());
        p2.push_back(r.p2().nnz());
    }
    return {
        {"lift0", count(maps.lift0)},         {"relation_boundary", p1},
        {"lift1", count(maps.lift1)},         {"homotopy0", count(maps.homotopy0)},
        {"syzygy_boundary", p2},              {"lift2", count(maps.lift2)},
        {"homotopy1", count(maps.homotopy1)}, {"homotopy2", count(maps.homotopy2)},
    };
}

}  // namespace mcrit
