#include "mcrit/firep.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "mcrit/resolution.hpp"
#include "mcrit/scc_io.hpp"

namespace mcrit {

FIRep compute_firep(const MultiCriticalComplex& complex, std::size_t m) {
    if (complex.dimension_count() == 0 || m >= complex.dimension_count())
        throw std::invalid_argument("homology degree " + std::to_string(m) + " out of range");

    FIRep rep;
    rep.degree = m;
    bool first = true;
    for (std::size_t d = 0; d < complex.dimension_count(); ++d)
        for (const Cell& c : complex.cells(d))
            for (const Bigrade& x : c.support.generators()) {
                if (first || x.x < rep.base.x) rep.base.x = x.x;
                if (first || x.y < rep.base.y) rep.base.y = x.y;
                first = false;
            }

    const auto faces = m > 0 ? complex.cells(m - 1) : std::span<const Cell>{};
    const auto cells = complex.cells(m);
    const auto cofaces = complex.cells(m + 1);
    const ResolutionRow row(cells, ResolutionShape::path);
    const ResolutionRow above(cofaces, ResolutionShape::path);

    rep.x_grades.assign(faces.size(), rep.base);
    rep.y_grades.assign(row.generator_grades().begin(), row.generator_grades().end());
    rep.z_grades.assign(above.generator_grades().begin(), above.generator_grades().end());
    rep.z_grades.insert(rep.z_grades.end(), row.relation_grades().begin(), row.relation_grades().end());

    rep.f = SparseBitMatrix(faces.size(), 0);
    rep.f.reserve_columns(row.generator_count());
    for (const Cell& c : cells)
        for (std::size_t j = 0; j < c.support.size(); ++j) rep.f.append_column(Column(c.facets.begin(), c.facets.end()));

    const SparseBitMatrix lift = generator_lift(cofaces, cells, row);
    rep.g = SparseBitMatrix(row.generator_count(), 0);
    rep.g.reserve_columns(rep.z_grades.size());
    for (const auto& col : lift.columns()) rep.g.append_column(col);
    for (const auto& col : row.p1().columns()) rep.g.append_column(col);
    return rep;
}

FreeChainComplex as_chain_complex(const FIRep& rep) {
    std::vector<std::vector<Bigrade>> grades{rep.x_grades, rep.y_grades, rep.z_grades};
    std::vector<SparseBitMatrix> boundaries{SparseBitMatrix(0, rep.x_grades.size()), rep.f, rep.g};
    return FreeChainComplex(std::move(grades), std::move(boundaries));
}

void write_firep(std::ostream& out, const FIRep& rep) {
    const FreeChainComplex c = as_chain_complex(rep);
    if (c.dimension_count() == 3) {
        scc::write(out, c);
        return;
    }
    // keep all three blocks even when Z (or Z and Y) is empty
    out << "scc2020\n2\n" << rep.z_grades.size() << ' ' << rep.y_grades.size() << ' ' << rep.x_grades.size() << '\n';
    for (std::size_t d = 3; d-- > 0;) {
        const auto grades = c.grades(d);
        for (std::size_t j = 0; j < grades.size(); ++j) {
            out << grades[j].x.to_string() << ' ' << grades[j].y.to_string() << " ;";
            for (auto r : c.boundary(d).column(j)) out << ' ' << r;
            out << '\n';
        }
    }
}

}  // namespace mcrit
