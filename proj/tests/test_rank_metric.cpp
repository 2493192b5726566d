#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "grasscode/rank_metric.hpp"

using namespace grasscode;

namespace {

size_t min_nonzero_rank(const LinearMatrixCode& c) {
    size_t best = SIZE_MAX;
    for (uint64_t i = 1; i < c.size(); ++i) {
        size_t r = c.word(i).rank();
        if (r < best) best = r;
    }
    return best;
}

bool supported_on(const Matrix& w, const FerrersDiagram& fd) {
    for (size_t i = 0; i < w.rows(); ++i)
        for (size_t j = 0; j < w.cols(); ++j)
            if (w.at(i, j) != 0 && !fd.has_dot(i, j)) return false;
    return true;
}

} // namespace

TEST_CASE("rank distance") {
    Field f2(2);
    Matrix a(f2, 2, 3), b(f2, 2, 3);
    a.set(0, 0, 1);
    a.set(1, 2, 1);
    b.set(0, 0, 1);
    CHECK(rank_distance(a, b) == 1);
    CHECK(rank_distance(a, a) == 0);
    b.set(1, 1, 1);
    CHECK(rank_distance(a, b) == 1);
}

TEST_CASE("maximum rank distance codes hit dimension and distance exactly") {
    Field f2(2);
    LinearMatrixCode c = gabidulin_mrd(3, 4, 2, f2);
    CHECK(c.dim() == 8);
    CHECK(c.size() == 256);
    CHECK(c.declared_min_rank == 2);
    CHECK(c.word(200).rows() == 3);
    CHECK(c.word(200).cols() == 4);
    CHECK(min_nonzero_rank(c) == 2);

    LinearMatrixCode shifted = gabidulin_mrd(3, 4, 2, f2, 1);
    CHECK(shifted.dim() == 8);
    CHECK(min_nonzero_rank(shifted) == 2);

    LinearMatrixCode wide = gabidulin_mrd(3, 5, 2, f2);
    CHECK(wide.dim() == 10);
    CHECK(min_nonzero_rank(wide) == 2);

    LinearMatrixCode planes = gabidulin_mrd(2, 2, 2, Field(3));
    CHECK(planes.dim() == 2);
    CHECK(planes.size() == 9);
    CHECK(min_nonzero_rank(planes) == 2);

    CHECK_THROWS_AS(gabidulin_mrd(4, 3, 2, f2), domain_error);
    CHECK_THROWS_AS(gabidulin_mrd(3, 4, 4, f2), domain_error);
    CHECK_THROWS_AS(gabidulin_mrd(3, 4, 0, f2), domain_error);
}

TEST_CASE("dimension bound over a diagram") {
    FerrersDiagram rect({3, 3, 3, 3});
    CHECK(theorem1_bound(rect, 1) == 12);
    CHECK(theorem1_bound(rect, 2) == 8);
    CHECK(theorem1_bound(rect, 3) == 4);
    CHECK(theorem1_bound(FerrersDiagram::from_row_lengths({4, 1}), 2) == 1);
    CHECK(theorem1_bound(FerrersDiagram({3, 3}), 2) == 3);
    CHECK(theorem1_bound(FerrersDiagram({1, 2, 3, 3}), 2) == 5);
    CHECK(theorem1_bound(FerrersDiagram({3, 3, 3}), 3) == 3);
}

TEST_CASE("diagram codes reach the bound on small shapes") {
    Field f2(2);
    for (size_t delta : {size_t{1}, size_t{2}}) {
        FerrersDiagram fd({1, 2, 3, 3});
        FerrersCode fc = fdmrd_intersect(fd, delta, f2);
        CHECK(fc.code.dim() == theorem1_bound(fd, delta));
        CHECK(fc.code.declared_min_rank == delta);
        for (uint64_t i = 1; i < fc.code.size(); ++i) {
            Matrix w = fc.code.word(i);
            CHECK(w.rank() >= delta);
            CHECK(supported_on(w, fd));
        }
    }

    FerrersCode cube = fdmrd_intersect(FerrersDiagram({3, 3, 3}), 3, f2);
    CHECK(cube.code.dim() == 3);
    for (uint64_t i = 1; i < cube.code.size(); ++i)
        CHECK(cube.code.word(i).rank() == 3);

    CHECK_THROWS_WITH_AS(fdmrd_intersect(FerrersDiagram({1, 1, 1, 2, 4}), 3, f2),
                         doctest::Contains("below bound"), domain_error);
}

TEST_CASE("bound is attained for low distances on every box subdiagram") {
    Field f2(2);
    std::vector<std::vector<size_t>> shapes;
    std::vector<size_t> cur;
    auto extend = [&](auto&& self, size_t min_h) -> void {
        if (!cur.empty()) shapes.push_back(cur);
        if (cur.size() == 4) return;
        for (size_t h = min_h; h <= 3; ++h) {
            cur.push_back(h);
            self(self, h);
            cur.pop_back();
        }
    };
    extend(extend, 1);
    size_t checked = 0;
    for (const auto& heights : shapes) {
        if (heights.back() > heights.size()) continue;
        FerrersDiagram fd(heights);
        for (size_t delta : {size_t{1}, size_t{2}}) {
            FerrersCode fc = fdmrd_intersect(fd, delta, f2);
            CHECK(fc.code.dim() == theorem1_bound(fd, delta));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("staircase codes") {
    Field f2(2);
    FerrersCode tall = staircase_code(FerrersDiagram::from_row_lengths({3, 2, 1}), 1, f2);
    CHECK(tall.code.dim() == 1);
    CHECK(tall.code.word(1).rank() == 3);

    FerrersCode flat = staircase_code(FerrersDiagram::from_row_lengths({6, 3}), 3, f2);
    CHECK(flat.code.dim() == 3);
    CHECK(flat.code.size() == 8);
    size_t best = SIZE_MAX;
    for (uint64_t i = 1; i < 8; ++i) {
        Matrix w = flat.code.word(i);
        CHECK(supported_on(w, flat.diagram));
        best = std::min(best, w.rank());
    }
    CHECK(best == 2);

    CHECK_THROWS_AS(staircase_code(FerrersDiagram::from_row_lengths({4, 2}), 1, f2),
                    domain_error);
    CHECK_THROWS_AS(staircase_code(FerrersDiagram::from_row_lengths({3, 1}), 2, f2),
                    domain_error);
}

TEST_CASE("lifting a diagram code keeps the identifying vector and distance") {
    Field f2(2);
    IdVector v = id_from_string("10100");
    FerrersCode fc = fdmrd_intersect(ferrers_of_vector(v), 2, f2);
    CHECK(fc.code.dim() == 2);
    std::vector<Subspace> lifted = lift(fc, v);
    CHECK(lifted.size() == 4);
    for (const Subspace& s : lifted) CHECK(s.id_vector() == v);
    for (size_t i = 0; i < lifted.size(); ++i)
        for (size_t j = i + 1; j < lifted.size(); ++j)
            CHECK(subspace_distance(lifted[i], lifted[j]) >= 4);
}

TEST_CASE("pending block sizing") {
    CHECK(pending_block_size(FerrersDiagram::from_row_lengths({4, 1}), 2) == 2);
    CHECK(pending_block_size(FerrersDiagram({3, 3, 3, 3}), 2) == 0);
    CHECK(pending_block_size(FerrersDiagram::from_row_lengths({5, 1}), 2) == 3);
}

TEST_CASE("co-positioned block distance guarantee") {
    Field f2(2);
    IdVector v1 = id_from_string("01010100");
    IdVector v2 = id_from_string("01010001");
    FerrersDiagram fd1 = ferrers_of_vector(v1);
    FerrersDiagram fd2 = ferrers_of_vector(v2);
    CHECK(bb_column_position(v1, 0) == bb_column_position(v2, 0));

    Matrix zero1(f2, 3, fd1.num_cols());
    Matrix one1 = zero1;
    one1.set(0, 0, 1);
    Matrix zero2(f2, 3, fd2.num_cols());
    Matrix one2 = zero2;
    one2.set(0, 0, 1);

    Subspace x0 = subspace_from_filling(v1, zero1);
    Subspace x1 = subspace_from_filling(v1, one1);
    Subspace y0 = subspace_from_filling(v2, zero2);
    Subspace y1 = subspace_from_filling(v2, one2);

    PendingBlockSpec block{1, 1};
    CHECK(block_submatrix(x1, block).at(0, 0) == 1);
    CHECK(block_submatrix(y0, block).at(0, 0) == 0);

    CHECK(check_theorem4(x1, y0, block));
    CHECK(check_theorem4(x0, y1, block));
    CHECK(check_theorem4(x1, y1, block));
    CHECK(subspace_distance(x1, y0) >= 4);
    CHECK(subspace_distance(x0, y1) >= 4);
    CHECK(subspace_distance(x1, y1) == 2);

    IdVector w1 = id_from_string("1100");
    IdVector w2 = id_from_string("0110");
    Subspace a = subspace_from_filling(w1, Matrix(f2, 2, 2));
    Subspace b = subspace_from_filling(w2, Matrix(f2, 2, 1));
    CHECK_THROWS_AS(check_theorem4(a, b, block), domain_error);
}
