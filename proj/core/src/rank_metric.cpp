#include "grasscode/rank_metric.hpp"

#include <string>

namespace grasscode {

Matrix LinearMatrixCode::word(uint64_t index) const {
    Matrix out(field, rows, cols);
    for (const Matrix& b : basis) {
        uint32_t digit = static_cast<uint32_t>(index % field.q());
        index /= field.q();
        if (digit != 0) out = out + b.scaled(digit);
    }
    require(index == 0, "codeword index out of range");
    return out;
}

size_t rank_distance(const Matrix& a, const Matrix& b) {
    return (a - b).rank();
}

LinearMatrixCode gabidulin_mrd(size_t m, size_t ell, size_t delta, const Field& f,
                               size_t shift) {
    require(ell >= m && m >= delta && delta >= 1, "need ell >= m >= delta >= 1");
    ExtField ext(f, static_cast<uint32_t>(ell));
    uint32_t x = ext.generator();
    size_t kk = m - delta + 1;

    std::vector<uint32_t> eval(m);
    for (size_t r = 0; r < m; ++r) eval[r] = ext.pow(x, shift + r);

    LinearMatrixCode code{f, m, ell, {}, delta};
    code.basis.reserve(kk * ell);
    std::vector<uint32_t> frob = eval;
    for (size_t i = 0; i < kk; ++i) {
        uint32_t xb = 1 % ext.size();
        for (size_t b = 0; b < ell; ++b) {
            Matrix w(f, m, ell);
            for (size_t r = 0; r < m; ++r) {
                std::vector<uint32_t> row = ext.to_vector(ext.mul(xb, frob[r]));
                for (size_t c = 0; c < ell; ++c) w.set(r, c, row[c]);
            }
            code.basis.push_back(std::move(w));
            xb = ext.mul(xb, x);
        }
        for (size_t r = 0; r < m; ++r) frob[r] = ext.frobenius(frob[r]);
    }
    return code;
}

size_t theorem1_bound(const FerrersDiagram& fd, size_t delta) {
    require(delta >= 1, "delta must be positive");
    size_t ell = fd.num_cols();
    size_t best = SIZE_MAX;
    for (size_t i = 0; i < delta; ++i) {
        size_t drop_cols = delta - 1 - i;
        size_t w = 0;
        if (drop_cols < ell) {
            for (size_t c = 0; c + drop_cols < ell; ++c) {
                size_t h = fd.column_heights()[c];
                w += h > i ? h - i : 0;
            }
        }
        best = std::min(best, w);
    }
    return best == SIZE_MAX ? 0 : best;
}

namespace {

FerrersDiagram conjugate_diagram(const FerrersDiagram& fd) {
    size_t m = fd.num_rows(), ell = fd.num_cols();
    std::vector<size_t> heights(m, 0);
    for (size_t c = 0; c < ell; ++c)
        for (size_t i = 0; i < fd.column_heights()[c]; ++i)
            ++heights[m - 1 - i];
    return FerrersDiagram(std::move(heights));
}

} // namespace

FerrersCode fdmrd_intersect(const FerrersDiagram& fd, size_t delta, const Field& f) {
    size_t bound = theorem1_bound(fd, delta);
    size_t m = fd.num_rows(), ell = fd.num_cols();
    if (bound == 0) return FerrersCode{fd, LinearMatrixCode{f, m, ell, {}, delta}};

    if (ell < m) {
        // Transposing and rotating by 180 degrees preserves ranks and the
        // dimension bound while making the diagram wide.
        FerrersCode conj = fdmrd_intersect(conjugate_diagram(fd), delta, f);
        LinearMatrixCode code{f, m, ell, {}, delta};
        for (const Matrix& b : conj.code.basis) {
            Matrix w(f, m, ell);
            for (size_t i = 0; i < m; ++i)
                for (size_t c = 0; c < ell; ++c)
                    if (fd.has_dot(i, c)) w.set(i, c, b.at(ell - 1 - c, m - 1 - i));
            code.basis.push_back(std::move(w));
        }
        require(code.basis.size() == bound, "conjugated code dimension mismatch");
        return FerrersCode{fd, std::move(code)};
    }

    size_t zeros = m * ell - fd.dot_count();
    size_t best_dim = 0;
    for (size_t shift = 0; shift < ell; ++shift) {
        LinearMatrixCode amb = gabidulin_mrd(m, ell, delta, f, shift);
        Matrix constraints(f, zeros, amb.dim());
        size_t z = 0;
        for (size_t i = 0; i < m; ++i)
            for (size_t c = 0; c < ell; ++c) {
                if (fd.has_dot(i, c)) continue;
                for (size_t j = 0; j < amb.dim(); ++j)
                    constraints.set(z, j, amb.basis[j].at(i, c));
                ++z;
            }
        Matrix coeffs = constraints.nullspace_basis();
        best_dim = std::max(best_dim, coeffs.rows());
        if (coeffs.rows() < bound) continue;
        require(coeffs.rows() == bound, "diagram code dimension exceeds its bound");

        LinearMatrixCode code{f, m, ell, {}, delta};
        for (size_t r = 0; r < coeffs.rows(); ++r) {
            Matrix w(f, m, ell);
            for (size_t j = 0; j < amb.dim(); ++j) {
                uint32_t cf = coeffs.at(r, j);
                if (cf != 0) w = w + amb.basis[j].scaled(cf);
            }
            code.basis.push_back(std::move(w));
        }
        return FerrersCode{fd, std::move(code)};
    }
    throw domain_error("diagram code dimension " + std::to_string(best_dim) +
                       " below bound " + std::to_string(bound));
}

FerrersCode staircase_code(const FerrersDiagram& fd, size_t x, const Field& f) {
    size_t m = fd.num_rows(), ell = fd.num_cols();
    require(x >= 1 && m >= 1, "staircase needs a nonempty diagram and x >= 1");
    require(fd.row_length(m - 1) == x, "last row must have exactly x dots");
    for (size_t j = 0; j + 1 < m; ++j)
        require(fd.row_length(j) >= fd.row_length(j + 1) + x,
                "each row needs x more dots than the next");

    LinearMatrixCode code{f, m, ell, {}, m};
    for (size_t t = 0; t < x; ++t) {
        Matrix w(f, m, ell);
        for (size_t j = 0; j < m; ++j) w.set(j, ell - fd.row_length(j) + t, 1);
        code.basis.push_back(std::move(w));
    }
    return FerrersCode{fd, std::move(code)};
}

std::vector<Subspace> lift(const FerrersCode& fc, const IdVector& v) {
    require(fc.diagram == ferrers_of_vector(v), "diagram does not match the vector");
    size_t k = weight(v);
    size_t ell = fc.diagram.num_cols();
    const Field& f = fc.code.field;
    uint64_t count = fc.code.size();
    std::vector<Subspace> out;
    out.reserve(count);
    for (uint64_t u = 0; u < count; ++u) {
        Matrix w = fc.code.word(u);
        Matrix filling(f, k, ell);
        for (size_t i = 0; i < fc.code.rows; ++i)
            for (size_t c = 0; c < ell; ++c) filling.set(i, c, w.at(i, c));
        out.push_back(subspace_from_filling(v, filling));
    }
    return out;
}

size_t pending_block_size(const FerrersDiagram& fd, size_t delta) {
    size_t ell = fd.num_cols();
    if (ell == 0) return 0;
    size_t bound = theorem1_bound(fd, delta);
    for (size_t ell1 = ell - 1; ell1 >= 1; --ell1) {
        std::vector<size_t> rest(fd.column_heights().begin() + static_cast<ptrdiff_t>(ell1),
                                 fd.column_heights().end());
        if (theorem1_bound(FerrersDiagram(std::move(rest)), delta) == bound) return ell1;
    }
    return 0;
}

Matrix block_submatrix(const Subspace& s, const PendingBlockSpec& block) {
    Matrix filling = filling_of(s);
    Matrix out(filling.field(), block.m1, block.ell1);
    for (size_t i = 0; i < block.m1; ++i)
        for (size_t c = 0; c < block.ell1; ++c) out.set(i, c, filling.at(i, c));
    return out;
}

bool check_theorem4(const Subspace& x, const Subspace& y, const PendingBlockSpec& block) {
    require(block.m1 >= 1 && block.ell1 >= 1, "empty block");
    require(block.m1 <= x.k() && block.m1 <= y.k(), "block taller than the subspaces");
    for (size_t i = 0; i < block.m1; ++i)
        require(x.pivots()[i] == y.pivots()[i], "blocks are not co-positioned");

    IdVector vx = x.id_vector(), vy = y.id_vector();
    for (const auto* v : {&vx, &vy}) {
        FerrersDiagram fd = ferrers_of_vector(*v);
        require(block.ell1 < fd.num_cols(), "block spans the whole diagram");
        require(fd.row_length(block.m1) < fd.row_length(block.m1 - 1),
                "row below the block must be shorter");
    }
    for (size_t c = 0; c < block.ell1; ++c)
        require(bb_column_position(vx, c) == bb_column_position(vy, c),
                "blocks are not co-positioned");

    size_t block_rank = (block_submatrix(x, block) - block_submatrix(y, block)).rank();
    return subspace_distance(x, y) >= hamming_distance(vx, vy) + 2 * block_rank;
}

} // namespace grasscode
