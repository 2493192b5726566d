#include "grasscode/matrix.hpp"

#include <bit>

namespace grasscode {

Matrix::Matrix(Field f, size_t rows, size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const Field& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

bool Matrix::is_zero() const {
    for (uint32_t v : data_)
        if (v != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], other.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], other.data_[i]);
    return out;
}

Matrix Matrix::scaled(uint32_t c) const {
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.mul(data_[i], c);
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::vector<size_t> Matrix::rref_in_place() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = r;
        while (sel < rows_ && at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (size_t j = c; j < cols_; ++j) {
                uint32_t t = at(r, j);
                set(r, j, at(sel, j));
                set(sel, j, t);
            }
        uint32_t inv = field_.inv(at(r, c));
        if (inv != 1)
            for (size_t j = c; j < cols_; ++j) set(r, j, field_.mul(at(r, j), inv));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint32_t f = at(i, c);
            if (f == 0) continue;
            for (size_t j = c; j < cols_; ++j)
                set(i, j, field_.sub(at(i, j), field_.mul(f, at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref_in_place().size();
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom) {
    require(top.cols_ == bottom.cols_, "stack: column count mismatch");
    Matrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(),
              out.data_.begin() + static_cast<ptrdiff_t>(top.data_.size()));
    return out;
}

Matrix Matrix::nullspace_basis() const {
    Matrix r = *this;
    std::vector<size_t> pivots = r.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    size_t dim = cols_ - pivots.size();
    Matrix out(field_, dim, cols_);
    size_t row = 0;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        out.set(row, c, 1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            out.set(row, pivots[pi], field_.neg(r.at(pi, c)));
        ++row;
    }
    return out;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), words_(rows, 0) {
    require(cols <= 64, "BitMatrix supports at most 64 columns");
}

BitMatrix BitMatrix::from_matrix(const Matrix& m) {
    require(m.field().q() == 2, "BitMatrix requires a binary matrix");
    BitMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        uint64_t w = 0;
        for (size_t j = 0; j < m.cols(); ++j)
            w |= uint64_t{m.at(i, j) & 1} << j;
        out.words_[i] = w;
    }
    return out;
}

Matrix BitMatrix::to_matrix(const Field& f) const {
    require(f.q() == 2, "BitMatrix converts to binary matrices only");
    Matrix out(f, rows(), cols_);
    for (size_t i = 0; i < rows(); ++i)
        for (size_t j = 0; j < cols_; ++j)
            out.set(i, j, get(i, j));
    return out;
}

std::vector<size_t> BitMatrix::rref_in_place() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows(); ++c) {
        uint64_t bit = uint64_t{1} << c;
        size_t sel = r;
        while (sel < rows() && !(words_[sel] & bit)) ++sel;
        if (sel == rows()) continue;
        std::swap(words_[r], words_[sel]);
        for (size_t i = 0; i < rows(); ++i)
            if (i != r && (words_[i] & bit)) words_[i] ^= words_[r];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t BitMatrix::rank() const {
    BitMatrix copy = *this;
    return copy.rref_in_place().size();
}

BitMatrix BitMatrix::nullspace_basis() const {
    BitMatrix r = *this;
    std::vector<size_t> pivots = r.rref_in_place();
    uint64_t pivot_mask = 0;
    for (size_t c : pivots) pivot_mask |= uint64_t{1} << c;
    BitMatrix out(cols_ - pivots.size(), cols_);
    size_t row = 0;
    for (size_t c = 0; c < cols_; ++c) {
        if (pivot_mask >> c & 1) continue;
        uint64_t w = uint64_t{1} << c;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            if (r.words_[pi] >> c & 1) w |= uint64_t{1} << pivots[pi];
        out.words_[row++] = w;
    }
    return out;
}

bool BitMatrix::operator==(const BitMatrix& other) const {
    return cols_ == other.cols_ && words_ == other.words_;
}

int stacked_rank(const uint64_t* a, int rows_a, const uint64_t* b, int rows_b) {
    uint64_t pivot_of_bit[64];
    uint64_t used = 0;
    int rank = 0;
    auto absorb = [&](uint64_t w) {
        while (w != 0) {
            int h = 63 - std::countl_zero(w);
            if (used >> h & 1) {
                w ^= pivot_of_bit[h];
            } else {
                pivot_of_bit[h] = w;
                used |= uint64_t{1} << h;
                ++rank;
                return;
            }
        }
    };
    for (int i = 0; i < rows_a; ++i) absorb(a[i]);
    for (int i = 0; i < rows_b; ++i) absorb(b[i]);
    return rank;
}

} // namespace grasscode
