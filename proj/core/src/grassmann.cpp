#include "grasscode/grassmann.hpp"

#include <algorithm>

namespace grasscode {

size_t weight(const IdVector& v) {
    size_t w = 0;
    for (uint8_t b : v) w += (b != 0);
    return w;
}

size_t hamming_distance(const IdVector& a, const IdVector& b) {
    require(a.size() == b.size(), "identifying vectors have different lengths");
    size_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += ((a[i] != 0) != (b[i] != 0));
    return d;
}

IdVector id_from_string(const std::string& s) {
    IdVector v;
    v.reserve(s.size());
    for (char c : s) {
        require(c == '0' || c == '1', "identifying vector must be binary");
        v.push_back(c == '1');
    }
    return v;
}

std::string id_to_string(const IdVector& v) {
    std::string s;
    s.reserve(v.size());
    for (uint8_t b : v) s.push_back(b ? '1' : '0');
    return s;
}

FerrersDiagram::FerrersDiagram(std::vector<size_t> column_heights)
    : heights_(std::move(column_heights)) {
    for (size_t c = 0; c < heights_.size(); ++c) {
        require(heights_[c] >= 1, "column heights must be positive");
        require(c == 0 || heights_[c - 1] <= heights_[c],
                "column heights must not decrease left to right");
    }
    size_t m = heights_.empty() ? 0 : heights_.back();
    rows_.assign(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t h : heights_)
            if (h > i) ++rows_[i];
    for (size_t h : heights_) dots_ += h;
}

FerrersDiagram FerrersDiagram::from_row_lengths(const std::vector<size_t>& lengths) {
    std::vector<size_t> rows = lengths;
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (size_t i = 0; i < rows.size(); ++i) {
        require(rows[i] >= 1, "row lengths must be positive above the last row");
        require(i == 0 || rows[i] <= rows[i - 1],
                "row lengths must not increase top to bottom");
    }
    size_t ell = rows.empty() ? 0 : rows[0];
    std::vector<size_t> heights(ell, 0);
    for (size_t c = 0; c < ell; ++c)
        for (size_t r : rows)
            if (r >= ell - c) ++heights[c];
    return FerrersDiagram(std::move(heights));
}

FerrersDiagram ferrers_of_vector(const IdVector& v) {
    std::vector<size_t> rows;
    size_t zeros_right = 0;
    for (size_t i = v.size(); i-- > 0;) {
        if (v[i])
            rows.push_back(zeros_right);
        else
            ++zeros_right;
    }
    std::reverse(rows.begin(), rows.end());
    return FerrersDiagram::from_row_lengths(rows);
}

Subspace::Subspace(Matrix rre_basis, std::vector<size_t> pivots)
    : basis_(std::move(rre_basis)), pivots_(std::move(pivots)) {
    size_t k = basis_.rows(), n = basis_.cols();
    require(pivots_.size() == k, "pivot count must equal the dimension");
    for (size_t i = 0; i < k; ++i) {
        size_t p = pivots_[i];
        require(p < n, "pivot out of range");
        require(i == 0 || pivots_[i - 1] < p, "pivots must be strictly increasing");
        for (size_t j = 0; j < p; ++j)
            require(basis_.at(i, j) == 0, "nonzero entry left of a pivot");
        require(basis_.at(i, p) == 1, "pivot entry must be one");
        for (size_t r = 0; r < k; ++r)
            require(r == i || basis_.at(r, p) == 0, "pivot column must be cleared");
    }
}

IdVector Subspace::id_vector() const {
    IdVector v(n(), 0);
    for (size_t p : pivots_) v[p] = 1;
    return v;
}

Subspace subspace_from_matrix(Matrix m) {
    std::vector<size_t> pivots = m.rref_in_place();
    require(pivots.size() == m.rows(), "matrix rows must be independent");
    return Subspace(std::move(m), std::move(pivots));
}

size_t bb_column_position(const IdVector& v, size_t c) {
    size_t n = v.size(), k = weight(v);
    size_t ell = ferrers_of_vector(v).num_cols();
    require(c < ell, "bounding-box column out of range");
    size_t target = (n - k - ell) + c;
    size_t seen = 0;
    for (size_t j = 0; j < n; ++j) {
        if (v[j]) continue;
        if (seen == target) return j;
        ++seen;
    }
    throw domain_error("bounding-box column out of range");
}

Subspace subspace_from_filling(const IdVector& v, const Matrix& filling) {
    size_t n = v.size(), k = weight(v);
    require(k >= 1, "identifying vector must have positive weight");
    FerrersDiagram fd = ferrers_of_vector(v);
    size_t ell = fd.num_cols();
    require(filling.rows() == k && filling.cols() == ell,
            "filling shape must match the diagram bounding box");

    std::vector<size_t> pivots, nonpivots;
    for (size_t j = 0; j < n; ++j) (v[j] ? pivots : nonpivots).push_back(j);

    Matrix re(filling.field(), k, n);
    for (size_t i = 0; i < k; ++i) {
        re.set(i, pivots[i], 1);
        size_t r = fd.row_length(i);
        for (size_t c = 0; c < ell; ++c) {
            uint32_t val = filling.at(i, c);
            if (c + r < ell) {
                require(val == 0, "filling must vanish outside the diagram");
                continue;
            }
            re.set(i, nonpivots[(n - k - ell) + c], val);
        }
    }
    return Subspace(std::move(re), std::move(pivots));
}

Matrix filling_of(const Subspace& s) {
    IdVector v = s.id_vector();
    FerrersDiagram fd = ferrers_of_vector(v);
    size_t ell = fd.num_cols();
    std::vector<size_t> nonpivots;
    for (size_t j = 0; j < s.n(); ++j)
        if (!v[j]) nonpivots.push_back(j);
    Matrix out(s.basis().field(), s.k(), ell);
    for (size_t i = 0; i < s.k(); ++i)
        for (size_t c = ell - fd.row_length(i); c < ell; ++c)
            out.set(i, c, s.basis().at(i, nonpivots[(s.n() - s.k() - ell) + c]));
    return out;
}

size_t subspace_distance(const Subspace& a, const Subspace& b) {
    require(a.n() == b.n(), "subspaces live in different ambient spaces");
    size_t r = Matrix::stack(a.basis(), b.basis()).rank();
    return 2 * r - a.k() - b.k();
}

size_t subspace_distance_via_intersection(const Subspace& a, const Subspace& b) {
    require(a.n() == b.n(), "subspaces live in different ambient spaces");
    Matrix na = a.basis().nullspace_basis();
    Matrix nb = b.basis().nullspace_basis();
    size_t dim_sum_perp = Matrix::stack(na, nb).rank();
    size_t dim_meet = a.n() - dim_sum_perp;
    return a.k() + b.k() - 2 * dim_meet;
}

uint64_t gaussian_coefficient(uint64_t n, uint64_t k, uint64_t q) {
    require(q >= 2, "gaussian coefficient needs q >= 2");
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::vector<uint64_t> prev(k + 1, 0), cur(k + 1, 0);
    prev[0] = 1;
    for (uint64_t nn = 1; nn <= n; ++nn) {
        cur[0] = 1;
        for (uint64_t kk = 1; kk <= std::min(nn, k); ++kk) {
            uint64_t t = prev[kk - 1];
            if (kk <= nn - 1 && prev[kk] != 0)
                t = checked_add(t, checked_mul(checked_pow(q, kk), prev[kk]));
            cur[kk] = t;
        }
        std::swap(prev, cur);
        std::fill(cur.begin(), cur.end(), 0);
    }
    return prev[k];
}

std::vector<Subspace> enumerate_grassmannian(const Field& f, size_t n, size_t k) {
    require(k >= 1 && k <= n, "dimension out of range");
    uint64_t total = gaussian_coefficient(n, k, f.q());
    require(total <= 1000000, "grassmannian too large to enumerate");

    std::vector<Subspace> out;
    out.reserve(total);
    std::vector<size_t> pivots(k);
    for (size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        IdVector v(n, 0);
        for (size_t p : pivots) v[p] = 1;
        FerrersDiagram fd = ferrers_of_vector(v);
        size_t ell = fd.num_cols();
        size_t free_cells = fd.dot_count();
        uint64_t fills = 1;
        for (size_t i = 0; i < free_cells; ++i) fills *= f.q();
        for (uint64_t u = 0; u < fills; ++u) {
            Matrix filling(f, k, ell);
            uint64_t t = u;
            for (size_t i = 0; i < k; ++i)
                for (size_t c = ell - fd.row_length(i); c < ell; ++c) {
                    filling.set(i, c, static_cast<uint32_t>(t % f.q()));
                    t /= f.q();
                }
            out.push_back(subspace_from_filling(v, filling));
        }
        // next pivot combination in lexicographic order
        size_t i = k;
        while (i-- > 0) {
            if (pivots[i] + (k - i) <= n - 1) {
                ++pivots[i];
                for (size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

} // namespace grasscode
