#pragma once

#include <cstdint>
#include <vector>

#include "grasscode/grassmann.hpp"
#include "grasscode/matrix.hpp"

namespace grasscode {

// Linear space of m x ell matrices over F_q, spanned by independent basis
// matrices; minimum distance is the smallest rank of a nonzero codeword.
struct LinearMatrixCode {
    Field field;
    size_t rows = 0, cols = 0;
    std::vector<Matrix> basis;
    size_t declared_min_rank = 0;

    size_t dim() const { return basis.size(); }
    uint64_t size() const { return checked_pow(field.q(), basis.size()); }
    Matrix word(uint64_t index) const;
};

// A LinearMatrixCode whose codewords vanish outside a Ferrers diagram's dots.
struct FerrersCode {
    FerrersDiagram diagram;
    LinearMatrixCode code;
};

// The top-left block (first m1 rows, ell1 leftmost columns) of a diagram,
// used for the co-positioned block distance guarantee.
struct PendingBlockSpec {
    size_t m1 = 0;
    size_t ell1 = 0;
};

size_t rank_distance(const Matrix& a, const Matrix& b);

// Codewords are m symbols over F_{q^ell}: evaluations of linearized
// polynomials of q-degree < m-delta+1 at the first m elements of the
// polynomial basis; each symbol expands to a length-ell row. Dimension
// ell*(m-delta+1), minimum rank distance exactly delta. `shift` rotates the
// evaluation points to x^shift, ..., x^{shift+m-1}.
LinearMatrixCode gabidulin_mrd(size_t m, size_t ell, size_t delta, const Field& f,
                               size_t shift = 0);

// min over i in [0, delta-1] of the dots outside the first i rows and the
// rightmost delta-1-i columns.
size_t theorem1_bound(const FerrersDiagram& fd, size_t delta);

// Largest-dimension code supported on the diagram with min rank distance
// >= delta, built by intersecting an ambient MRD code with the support
// constraints. Throws if the dimension falls short of theorem1_bound after
// trying every evaluation-point shift (never happens for delta <= 2 or for
// diagrams whose first delta-1 rows are full).
FerrersCode fdmrd_intersect(const FerrersDiagram& fd, size_t delta, const Field& f);

// Dimension-x code that repeats one length-x pattern at the head of every
// row; every nonzero codeword has rank = number of rows. Requires each row
// to have at least x more dots than the next and the last row exactly x.
FerrersCode staircase_code(const FerrersDiagram& fd, size_t x, const Field& f);

// One subspace per codeword of the diagram code, all at identifying vector v.
std::vector<Subspace> lift(const FerrersCode& fc, const IdVector& v);

// Largest count of leftmost columns whose removal keeps theorem1_bound
// unchanged (0 if none).
size_t pending_block_size(const FerrersDiagram& fd, size_t delta);

// Distance guarantee for co-positioned blocks: checks that
//   d_S(X,Y) >= d_H(v(X),v(Y)) + 2*rank(B_X - B_Y)
// where B is the block submatrix of each tableaux (rows zero-padded on the
// left). Throws unless both diagrams carry the block at the same true
// columns with row m1+1 shorter than row m1.
bool check_theorem4(const Subspace& x, const Subspace& y, const PendingBlockSpec& block);

// Block submatrix extraction used by check_theorem4 and the audits.
Matrix block_submatrix(const Subspace& s, const PendingBlockSpec& block);

} // namespace grasscode
