#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grasscode/matrix.hpp"

namespace grasscode {

// Binary identifying vector of a subspace: a 1 in every pivot position of the
// reduced row echelon basis.
using IdVector = std::vector<uint8_t>;

size_t weight(const IdVector& v);
size_t hamming_distance(const IdVector& a, const IdVector& b);
IdVector id_from_string(const std::string& s);
std::string id_to_string(const IdVector& v);

// Dots arranged with all rows right-justified and all columns top-aligned;
// equivalently, column heights that never decrease from left to right. Row 0
// is the top (longest) row.
class FerrersDiagram {
public:
    explicit FerrersDiagram(std::vector<size_t> column_heights);
    static FerrersDiagram from_row_lengths(const std::vector<size_t>& lengths);

    size_t num_cols() const { return heights_.size(); }
    size_t num_rows() const { return rows_.size(); }
    size_t dot_count() const { return dots_; }

    const std::vector<size_t>& column_heights() const { return heights_; }
    const std::vector<size_t>& row_lengths() const { return rows_; }
    size_t row_length(size_t i) const { return i < rows_.size() ? rows_[i] : 0; }

    // Bounding-box coordinates: row i from the top, column c from the left.
    bool has_dot(size_t i, size_t c) const {
        return c < heights_.size() && i < heights_[c];
    }

    bool operator==(const FerrersDiagram& other) const {
        return heights_ == other.heights_;
    }

private:
    std::vector<size_t> heights_;
    std::vector<size_t> rows_;
    size_t dots_ = 0;
};

// Diagram of all subspaces with the given identifying vector: row i (for the
// i-th one-bit, left to right) gets one dot per zero position to its right.
FerrersDiagram ferrers_of_vector(const IdVector& v);

// A k-dimensional subspace of F_q^n held as its canonical reduced row
// echelon basis.
class Subspace {
public:
    Subspace(Matrix rre_basis, std::vector<size_t> pivots);

    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    size_t n() const { return basis_.cols(); }
    size_t k() const { return basis_.rows(); }

    IdVector id_vector() const;
    bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

private:
    Matrix basis_;
    std::vector<size_t> pivots_;
};

// Canonicalizes the row space of an arbitrary full-row-rank matrix.
Subspace subspace_from_matrix(Matrix m);

// Builds the subspace with identifying vector v whose free entries are given
// by `filling`, a k x num_cols matrix in the bounding-box coordinates of
// ferrers_of_vector(v) (zero outside the diagram's dots).
Subspace subspace_from_filling(const IdVector& v, const Matrix& filling);

// Reads the free entries of a subspace back into bounding-box coordinates.
Matrix filling_of(const Subspace& s);

// True column index of bounding-box column c for identifying vector v.
size_t bb_column_position(const IdVector& v, size_t c);

// Injection distance routes: the primary implementation stacks the two bases
// and uses the rank; the oracle goes through the orthogonal complements and
// the intersection dimension. Both accept subspaces of any dimensions.
size_t subspace_distance(const Subspace& a, const Subspace& b);
size_t subspace_distance_via_intersection(const Subspace& a, const Subspace& b);

// Number of k-dimensional subspaces of F_q^n, exact; throws on overflow.
uint64_t gaussian_coefficient(uint64_t n, uint64_t k, uint64_t q);

// All of G_q(k, n) in lexicographic pivot/filling order. Guarded against
// blowup: requires gaussian_coefficient(n, k, q) <= 10^6.
std::vector<Subspace> enumerate_grassmannian(const Field& f, size_t n, size_t k);

} // namespace grasscode
