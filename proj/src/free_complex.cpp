#include "mcrit/free_complex.hpp"

#include <stdexcept>
#include <string>

namespace mcrit {

FreeChainComplex::FreeChainComplex(std::vector<std::vector<Bigrade>> grades, std::vector<SparseBitMatrix> boundaries)
    : grades_(std::move(grades)), boundaries_(std::move(boundaries)) {
    if (grades_.size() != boundaries_.size())
        throw std::invalid_argument("need one boundary matrix per dimension");
    for (std::size_t i = 0; i < grades_.size(); ++i) {
        const std::size_t want_rows = i == 0 ? 0 : grades_[i - 1].size();
        if (boundaries_[i].rows() != want_rows || boundaries_[i].cols() != grades_[i].size())
            throw std::invalid_argument("boundary " + std::to_string(i) + " is " +
                                        std::to_string(boundaries_[i].rows()) + "x" +
                                        std::to_string(boundaries_[i].cols()) + ", expected " +
                                        std::to_string(want_rows) + "x" + std::to_string(grades_[i].size()));
    }
    while (!grades_.empty() && grades_.back().empty()) {
        grades_.pop_back();
        boundaries_.pop_back();
    }
}

std::span<const Bigrade> FreeChainComplex::grades(std::size_t dim) const {
    if (dim >= grades_.size()) return {};
    return grades_[dim];
}

std::size_t FreeChainComplex::basis_count() const {
    std::size_t n = 0;
    for (const auto& g : grades_) n += g.size();
    return n;
}

std::size_t FreeChainComplex::nnz() const {
    std::size_t n = 0;
    for (const auto& b : boundaries_) n += b.nnz();
    return n;
}

FreeChainComplex as_free_complex(const MultiCriticalComplex& complex) {
    std::vector<std::vector<Bigrade>> grades(complex.dimension_count());
    std::vector<SparseBitMatrix> boundaries;
    for (std::size_t dim = 0; dim < complex.dimension_count(); ++dim) {
        const std::size_t n_rows = dim == 0 ? 0 : complex.cells(dim - 1).size();
        SparseBitMatrix b(n_rows, 0);
        for (const Cell& c : complex.cells(dim)) {
            if (c.support.size() != 1)
                throw std::invalid_argument("cell " + std::to_string(c.id) + " in dimension " + std::to_string(dim) +
                                            " has " + std::to_string(c.support.size()) + " entry grades");
            grades[dim].push_back(c.support[0]);
            b.append_column(Column(c.facets.begin(), c.facets.end()));
        }
        boundaries.push_back(std::move(b));
    }
    return FreeChainComplex(std::move(grades), std::move(boundaries));
}

}  // namespace mcrit
