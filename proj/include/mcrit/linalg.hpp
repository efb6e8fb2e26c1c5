#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mcrit {

using index_t = std::uint32_t;
using Column = std::vector<index_t>;

/// Column-major sparse matrix over Z2. Each column is a strictly increasing
/// list of row indices.
class SparseBitMatrix {
public:
    SparseBitMatrix() = default;
    /// Zero matrix.
    SparseBitMatrix(std::size_t n_rows, std::size_t n_cols) : n_rows_(n_rows), columns_(n_cols) {}
    /// Throws std::invalid_argument if a column is unsorted or out of range.
    SparseBitMatrix(std::size_t n_rows, std::vector<Column> columns);

    static SparseBitMatrix identity(std::size_t n);

    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return columns_.size(); }
    const Column& column(std::size_t j) const { return columns_[j]; }
    std::span<const Column> columns() const { return columns_; }

    void append_column(Column col);
    void reserve_columns(std::size_t n) { columns_.reserve(n); }

    bool get(std::size_t row, std::size_t col) const;
    std::size_t nnz() const;
    bool is_zero() const;
    std::size_t memory_bytes() const;

    friend bool operator==(const SparseBitMatrix&, const SparseBitMatrix&) = default;

private:
    std::size_t n_rows_ = 0;
    std::vector<Column> columns_;
};

/// Dense scratch column of flip bits that is cleared through the list of
/// touched positions, so reuse costs only what the previous column touched.
class ColumnAccumulator {
public:
    explicit ColumnAccumulator(std::size_t n_rows) : bits_(n_rows, 0) {}

    void flip(index_t row) {
        if (!touched_flag_(row)) touched_.push_back(row);
        bits_[row] ^= 1;
    }
    void flip_all(std::span<const index_t> rows) {
        for (index_t r : rows) flip(r);
    }
    /// Sorted rows with an odd number of flips; resets the accumulator.
    Column take();

private:
    bool touched_flag_(index_t row) {
        // bit 1 marks "already in touched_", bit 0 is the value
        if (bits_[row] & 2) return true;
        bits_[row] |= 2;
        return false;
    }
    std::vector<std::uint8_t> bits_;
    std::vector<index_t> touched_;
};

/// A * B over Z2 using an accumulator array. Throws std::invalid_argument
/// when A.cols() != B.rows().
SparseBitMatrix mat_mul(const SparseBitMatrix& a, const SparseBitMatrix& b);

/// A + B over Z2. Throws std::invalid_argument on shape mismatch.
SparseBitMatrix mat_add(const SparseBitMatrix& a, const SparseBitMatrix& b);

/// Symmetric difference of two sorted columns.
Column column_xor(std::span<const index_t> a, std::span<const index_t> b);

/// Rank over Z2 by column reduction.
std::size_t rank(const SparseBitMatrix& m);

/// Horizontal/vertical block assembly: block (r, c) of the result is
/// blocks[r][c]; missing (default-constructed, 0x0) blocks are zero.
class BlockMatrix {
public:
    BlockMatrix(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes);
    /// Throws std::invalid_argument if the block shape does not match.
    void set(std::size_t block_row, std::size_t block_col, const SparseBitMatrix& m);
    SparseBitMatrix build() const;

private:
    std::vector<std::size_t> row_sizes_;
    std::vector<std::size_t> col_sizes_;
    std::vector<std::vector<const SparseBitMatrix*>> blocks_;
};

}  // namespace mcrit
