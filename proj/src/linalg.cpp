#include "mcrit/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mcrit {

namespace {

void check_column(const Column& col, std::size_t n_rows) {
    for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i] >= n_rows)
            throw std::invalid_argument("row index " + std::to_string(col[i]) + " out of range " +
                                        std::to_string(n_rows));
        if (i > 0 && col[i - 1] >= col[i]) throw std::invalid_argument("column not strictly increasing");
    }
}

}  // namespace

SparseBitMatrix::SparseBitMatrix(std::size_t n_rows, std::vector<Column> columns)
    : n_rows_(n_rows), columns_(std::move(columns)) {
    for (const auto& c : columns_) check_column(c, n_rows_);
}

SparseBitMatrix SparseBitMatrix::identity(std::size_t n) {
    SparseBitMatrix m(n, 0);
    m.columns_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) m.columns_.push_back({static_cast<index_t>(i)});
    return m;
}

void SparseBitMatrix::append_column(Column col) {
    check_column(col, n_rows_);
    columns_.push_back(std::move(col));
}

bool SparseBitMatrix::get(std::size_t row, std::size_t col) const {
    const auto& c = columns_.at(col);
    return std::binary_search(c.begin(), c.end(), static_cast<index_t>(row));
}

std::size_t SparseBitMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

bool SparseBitMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

std::size_t SparseBitMatrix::memory_bytes() const {
    return sizeof(*this) + columns_.capacity() * sizeof(Column) + nnz() * sizeof(index_t);
}

Column ColumnAccumulator::take() {
    Column out;
    for (index_t r : touched_) {
        if (bits_[r] & 1) out.push_back(r);
        bits_[r] = 0;
    }
    touched_.clear();
    std::sort(out.begin(), out.end());
    return out;
}

SparseBitMatrix mat_mul(const SparseBitMatrix& a, const SparseBitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    SparseBitMatrix c(a.rows(), 0);
    c.reserve_columns(b.cols());
    ColumnAccumulator acc(a.rows());
    for (const Column& bcol : b.columns()) {
        for (index_t k : bcol) acc.flip_all(a.column(k));
        c.append_column(acc.take());
    }
    return c;
}

Column column_xor(std::span<const index_t> a, std::span<const index_t> b) {
    Column out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SparseBitMatrix mat_add(const SparseBitMatrix& a, const SparseBitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_add: shape mismatch");
    SparseBitMatrix c(a.rows(), 0);
    c.reserve_columns(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) c.append_column(column_xor(a.column(j), b.column(j)));
    return c;
}

std::size_t rank(const SparseBitMatrix& m) {
    // pivot_of[row] = index into reduced of the column whose lowest entry is row
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_of(m.rows(), none);
    std::vector<Column> reduced;
    reduced.reserve(m.cols());
    Column scratch;
    for (const Column& original : m.columns()) {
        Column col = original;
        while (!col.empty()) {
            const std::size_t p = pivot_of[col.back()];
            if (p == none) break;
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), reduced[p].begin(), reduced[p].end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty()) {
            pivot_of[col.back()] = reduced.size();
            reduced.push_back(std::move(col));
        }
    }
    return reduced.size();
}

BlockMatrix::BlockMatrix(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes)
    : row_sizes_(std::move(row_sizes)),
      col_sizes_(std::move(col_sizes)),
      blocks_(row_sizes_.size(), std::vector<const SparseBitMatrix*>(col_sizes_.size(), nullptr)) {}

void BlockMatrix::set(std::size_t block_row, std::size_t block_col, const SparseBitMatrix& m) {
    if (m.rows() != row_sizes_.at(block_row) || m.cols() != col_sizes_.at(block_col))
        throw std::invalid_argument("block (" + std::to_string(block_row) + "," + std::to_string(block_col) +
                                    ") expects " + std::to_string(row_sizes_[block_row]) + "x" +
                                    std::to_string(col_sizes_[block_col]) + ", got " + std::to_string(m.rows()) +
                                    "x" + std::to_string(m.cols()));
    blocks_[block_row][block_col] = &m;
}

SparseBitMatrix BlockMatrix::build() const {
    std::vector<std::size_t> row_offset(row_sizes_.size() + 1, 0);
    for (std::size_t r = 0; r < row_sizes_.size(); ++r) row_offset[r + 1] = row_offset[r] + row_sizes_[r];
    std::size_t total_cols = 0;
    for (auto c : col_sizes_) total_cols += c;

    SparseBitMatrix out(row_offset.back(), 0);
    out.reserve_columns(total_cols);
    for (std::size_t bc = 0; bc < col_sizes_.size(); ++bc) {
        for (std::size_t j = 0; j < col_sizes_[bc]; ++j) {
            Column col;
            for (std::size_t br = 0; br < row_sizes_.size(); ++br) {
                const SparseBitMatrix* m = blocks_[br][bc];
                if (m == nullptr) continue;
                for (index_t r : m->column(j)) col.push_back(static_cast<index_t>(r + row_offset[br]));
            }
            out.append_column(std::move(col));
        }
    }
    return out;
}

}  // namespace mcrit
