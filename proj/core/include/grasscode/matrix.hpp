#pragma once

#include <cstdint>
#include <vector>

#include "grasscode/field.hpp"

namespace grasscode {

// Dense matrix over a finite field. Entries are field element codes.
class Matrix {
public:
    Matrix(Field f, size_t rows, size_t cols);

    static Matrix identity(const Field& f, size_t n);

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { data_[i * cols_ + j] = v; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(uint32_t c) const;
    bool operator==(const Matrix& other) const;

    // Reduces in place to reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref_in_place();

    size_t rank() const;

    // Rows of `top` stacked above rows of `bottom`; both over the same field
    // and with equal column counts.
    static Matrix stack(const Matrix& top, const Matrix& bottom);

    // Basis of the right nullspace {x : A x = 0}, one vector per row.
    Matrix nullspace_basis() const;

private:
    Field field_;
    size_t rows_, cols_;
    std::vector<uint32_t> data_;
};

// Row-packed binary matrix, one 64-bit word per row; supports up to 64
// columns. Mirrors the Matrix operations needed on the q=2 fast path.
class BitMatrix {
public:
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix from_matrix(const Matrix& m);
    Matrix to_matrix(const Field& f) const;

    size_t rows() const { return words_.size(); }
    size_t cols() const { return cols_; }

    bool get(size_t i, size_t j) const { return (words_[i] >> j) & 1; }
    void set(size_t i, size_t j, bool v) {
        words_[i] = (words_[i] & ~(uint64_t{1} << j)) | (uint64_t{v} << j);
    }

    uint64_t row_word(size_t i) const { return words_[i]; }
    void set_row_word(size_t i, uint64_t w) { words_[i] = w; }

    std::vector<size_t> rref_in_place();
    size_t rank() const;
    BitMatrix nullspace_basis() const;
    bool operator==(const BitMatrix& other) const;

private:
    size_t cols_;
    std::vector<uint64_t> words_;
};

// Rank of the rows of `a` and `b` taken together, without materializing the
// stacked matrix. Row words must only use the lowest `cols` bits.
int stacked_rank(const uint64_t* a, int rows_a, const uint64_t* b, int rows_b);

} // namespace grasscode
