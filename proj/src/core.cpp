#include "mcrit/core.hpp"

#include <algorithm>
#include <sstream>

namespace mcrit {

std::string to_string(const Bigrade& g) { return "(" + g.x.to_string() + ", " + g.y.to_string() + ")"; }

Support Support::normalize(std::vector<Bigrade> grades) {
    if (grades.empty()) throw EmptySupportError();
    // Sort by x, then y; a grade survives iff its y is strictly below every
    // y seen so far (all of which have x <= its x).
    std::sort(grades.begin(), grades.end(), [](const Bigrade& a, const Bigrade& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    std::vector<Bigrade> out;
    out.reserve(grades.size());
    for (auto& g : grades) {
        if (out.empty() || g.y < out.back().y) out.push_back(std::move(g));
    }
    return Support(std::move(out));
}

Support Support::unchecked(std::vector<Bigrade> grades) { return Support(std::move(grades)); }

bool Support::is_antichain() const {
    for (std::size_t i = 1; i < gens_.size(); ++i)
        if (!(gens_[i - 1].x < gens_[i].x && gens_[i - 1].y > gens_[i].y)) return false;
    return true;
}

std::optional<std::size_t> Support::leftmost_below(const Bigrade& s) const {
    // y is decreasing along gens_, so "y <= s.y" holds on a suffix.
    auto it = std::partition_point(gens_.begin(), gens_.end(), [&](const Bigrade& g) { return g.y > s.y; });
    if (it == gens_.end() || it->x > s.x) return std::nullopt;
    return static_cast<std::size_t>(it - gens_.begin());
}

MultiCriticalComplex::MultiCriticalComplex(std::vector<std::vector<Cell>> blocks) : blocks_(std::move(blocks)) {
    while (!blocks_.empty() && blocks_.back().empty()) blocks_.pop_back();
}

std::span<const Cell> MultiCriticalComplex::cells(std::size_t dim) const {
    if (dim >= blocks_.size()) return {};
    return blocks_[dim];
}

std::size_t MultiCriticalComplex::cell_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    return n;
}

std::size_t MultiCriticalComplex::criticality() const {
    std::size_t k = 0;
    for (const auto& b : blocks_)
        for (const auto& c : b) k = std::max(k, c.support.size());
    return k;
}

std::size_t MultiCriticalComplex::size() const {
    std::size_t n = 0;
    for (const auto& b : blocks_)
        for (const auto& c : b) n += c.support.size();
    return n;
}

std::size_t ComplexBuilder::add_cell(std::size_t dim, Support support, std::vector<std::size_t> facets) {
    if (blocks_.size() <= dim) blocks_.resize(dim + 1);
    const std::size_t id = blocks_[dim].size();
    blocks_[dim].push_back(Cell{id, dim, std::move(support), std::move(facets)});
    return id;
}

MultiCriticalComplex ComplexBuilder::build() && { return MultiCriticalComplex(std::move(blocks_)); }

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::bad_index: return "bad-index";
        case ViolationKind::unsorted_facets: return "unsorted-facets";
        case ViolationKind::dim0_with_facets: return "vertex-with-facets";
        case ViolationKind::empty_support: return "empty-support";
        case ViolationKind::non_antichain_support: return "non-antichain-support";
        case ViolationKind::face_support: return "face-support";
        case ViolationKind::boundary_squared: return "boundary-squared";
    }
    return "unknown";
}

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream os;
    os << violations.size() << " violation(s)";
    for (const auto& v : violations)
        os << "\n  dim " << v.dim << " cell " << v.cell << ": " << to_string(v.kind) << ": " << v.reason;
    return os.str();
}

ValidationReport validate(const MultiCriticalComplex& complex) {
    ValidationReport report;
    auto flag = [&](std::size_t dim, std::size_t id, ViolationKind kind, std::string reason) {
        report.violations.push_back({dim, id, kind, std::move(reason)});
    };

    for (std::size_t dim = 0; dim < complex.dimension_count(); ++dim) {
        const auto cells = complex.cells(dim);
        const auto faces = dim > 0 ? complex.cells(dim - 1) : std::span<const Cell>{};
        for (const Cell& c : cells) {
            bool indices_ok = true;
            if (c.support.size() == 0) flag(dim, c.id, ViolationKind::empty_support, "no entry grade");
            if (!c.support.is_antichain())
                flag(dim, c.id, ViolationKind::non_antichain_support, "support generators are not a sorted antichain");
            if (dim == 0 && !c.facets.empty()) {
                flag(dim, c.id, ViolationKind::dim0_with_facets, "a vertex cannot have facets");
                continue;
            }
            for (std::size_t j = 0; j < c.facets.size(); ++j) {
                if (c.facets[j] >= faces.size()) {
                    flag(dim, c.id, ViolationKind::bad_index,
                         "facet index " + std::to_string(c.facets[j]) + " out of range");
                    indices_ok = false;
                }
                if (j > 0 && c.facets[j - 1] >= c.facets[j]) {
                    flag(dim, c.id, ViolationKind::unsorted_facets, "facet list not strictly increasing");
                    indices_ok = false;
                }
            }
            if (!indices_ok) continue;

            for (std::size_t f : c.facets) {
                for (const Bigrade& x : c.support.generators()) {
                    if (!faces[f].support.contains(x)) {
                        flag(dim, c.id, ViolationKind::face_support,
                             "facet " + std::to_string(f) + " is absent at generator " + to_string(x));
                        break;
                    }
                }
            }

            if (dim >= 2) {
                std::vector<std::size_t> second;
                for (std::size_t f : c.facets)
                    second.insert(second.end(), faces[f].facets.begin(), faces[f].facets.end());
                std::sort(second.begin(), second.end());
                for (std::size_t j = 0; j < second.size();) {
                    std::size_t run = j;
                    while (run < second.size() && second[run] == second[j]) ++run;
                    if ((run - j) % 2 == 1) {
                        flag(dim, c.id, ViolationKind::boundary_squared,
                             "codimension-2 face " + std::to_string(second[j]) + " appears an odd number of times");
                        break;
                    }
                    j = run;
                }
            }
        }
    }
    return report;
}

}  // namespace mcrit
