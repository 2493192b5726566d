#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "grasscode/grassmann.hpp"

using namespace grasscode;

TEST_CASE("identifying vector string helpers") {
    IdVector v = id_from_string("10110");
    CHECK(v == IdVector{1, 0, 1, 1, 0});
    CHECK(id_to_string(v) == "10110");
    CHECK(weight(v) == 3);
    CHECK(hamming_distance(id_from_string("10110"), id_from_string("01110")) == 2);
    CHECK_THROWS_AS(id_from_string("102"), domain_error);
}

TEST_CASE("diagram construction from heights and row lengths") {
    FerrersDiagram d({1, 1, 2, 3});
    CHECK(d.num_cols() == 4);
    CHECK(d.num_rows() == 3);
    CHECK(d.dot_count() == 7);
    CHECK(d.row_lengths() == std::vector<size_t>{4, 2, 1});
    CHECK(d == FerrersDiagram::from_row_lengths({4, 2, 1}));
    CHECK(d.row_length(0) == 4);
    CHECK(d.row_length(2) == 1);
    CHECK(d.row_length(5) == 0);

    CHECK(d.has_dot(0, 0));
    CHECK(d.has_dot(0, 3));
    CHECK(d.has_dot(2, 3));
    CHECK_FALSE(d.has_dot(1, 1));
    CHECK_FALSE(d.has_dot(1, 0));
    CHECK(d.has_dot(1, 2));
    CHECK_FALSE(d.has_dot(0, 4));
    CHECK_FALSE(d.has_dot(3, 0));

    CHECK_THROWS_AS(FerrersDiagram({2, 1}), domain_error);
    CHECK_THROWS_AS(FerrersDiagram::from_row_lengths({2, 3}), domain_error);
    CHECK_THROWS_AS(FerrersDiagram::from_row_lengths({2, 0, 1}), domain_error);
}

TEST_CASE("diagram of an identifying vector") {
    FerrersDiagram d = ferrers_of_vector(id_from_string("0110100"));
    CHECK(d.row_lengths() == std::vector<size_t>{3, 3, 2});
    CHECK(d.column_heights() == std::vector<size_t>{2, 3, 3});

    CHECK(ferrers_of_vector(id_from_string("101")) ==
          ferrers_of_vector(id_from_string("00101")));
    CHECK(ferrers_of_vector(id_from_string("111")).dot_count() == 0);
    CHECK(ferrers_of_vector(id_from_string("1110000")) ==
          FerrersDiagram({3, 3, 3, 3}));
}

TEST_CASE("subspace counting matches known values and symmetry") {
    CHECK(gaussian_coefficient(4, 2, 2) == 35);
    CHECK(gaussian_coefficient(5, 2, 2) == 155);
    CHECK(gaussian_coefficient(6, 2, 2) == 651);
    CHECK(gaussian_coefficient(6, 3, 2) == 1395);
    CHECK(gaussian_coefficient(4, 2, 3) == 130);
    CHECK(gaussian_coefficient(7, 0, 2) == 1);
    CHECK(gaussian_coefficient(3, 5, 2) == 0);
    for (uint64_t n = 0; n <= 8; ++n)
        for (uint64_t k = 0; k <= n; ++k)
            CHECK(gaussian_coefficient(n, k, 2) == gaussian_coefficient(n, n - k, 2));
    CHECK_THROWS_AS(gaussian_coefficient(300, 150, 2), overflow_error);
}

TEST_CASE("enumeration agrees with the counting formula") {
    for (uint32_t q : {2u, 3u}) {
        Field f(q);
        size_t max_n = q == 2 ? 6 : 4;
        for (size_t n = 1; n <= max_n; ++n)
            for (size_t k = 1; k <= n; ++k) {
                std::vector<Subspace> all = enumerate_grassmannian(f, n, k);
                CHECK(all.size() == gaussian_coefficient(n, k, q));
                for (const Subspace& s : all) {
                    CHECK(s.n() == n);
                    CHECK(s.k() == k);
                    CHECK(weight(s.id_vector()) == k);
                }
            }
    }
    CHECK_THROWS_AS(enumerate_grassmannian(Field(2), 9, 4), domain_error);
}

TEST_CASE("canonical bases and fillings round-trip") {
    Field f2(2);
    Matrix m(f2, 2, 4);
    m.set(0, 0, 1); m.set(0, 1, 1); m.set(0, 2, 1);
    m.set(1, 1, 1); m.set(1, 3, 1);
    Subspace s = subspace_from_matrix(m);
    CHECK(s.pivots() == std::vector<size_t>{0, 1});
    CHECK(s.basis().at(0, 1) == 0);
    CHECK(id_to_string(s.id_vector()) == "1100");

    CHECK_THROWS_AS(Subspace(m, {0, 1}), domain_error);

    IdVector v = id_from_string("10100");
    CHECK(bb_column_position(v, 0) == 1);
    CHECK(bb_column_position(v, 1) == 3);
    CHECK(bb_column_position(v, 2) == 4);

    FerrersDiagram fd = ferrers_of_vector(v);
    CHECK(fd.row_lengths() == std::vector<size_t>{3, 2});
    Matrix fill(f2, 2, fd.num_cols());
    fill.set(0, 0, 1); fill.set(0, 2, 1); fill.set(1, 1, 1);
    Subspace built = subspace_from_filling(v, fill);
    CHECK(built.id_vector() == v);
    CHECK(filling_of(built) == fill);
    CHECK(built.basis().at(0, 1) == 1);
    CHECK(built.basis().at(1, 3) == 1);

    Matrix bad = fill;
    bad.set(1, 0, 1);
    CHECK_THROWS_AS(subspace_from_filling(v, bad), domain_error);
}

namespace {

Subspace random_subspace(const Field& f, size_t n, size_t k, std::mt19937_64& rng) {
    for (;;) {
        Matrix m(f, k, n);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < n; ++j)
                m.set(i, j, static_cast<uint32_t>(rng() % f.q()));
        if (m.rank() == k) return subspace_from_matrix(m);
    }
}

} // namespace

TEST_CASE("distance via stacked rank equals distance via intersection") {
    std::mt19937_64 rng(99);
    for (uint32_t q : {2u, 3u, 4u}) {
        Field f(q);
        for (int trial = 0; trial < 300; ++trial) {
            size_t n = 3 + rng() % 6;
            size_t ka = 1 + rng() % n;
            size_t kb = 1 + rng() % n;
            Subspace a = random_subspace(f, n, ka, rng);
            Subspace b = random_subspace(f, n, kb, rng);
            CHECK(subspace_distance(a, b) == subspace_distance_via_intersection(a, b));
            CHECK(subspace_distance(a, a) == 0);
            CHECK(subspace_distance(a, b) == subspace_distance(b, a));
        }
    }
}

TEST_CASE("distance facts over a small full grassmannian") {
    Field f2(2);
    std::vector<Subspace> planes = enumerate_grassmannian(f2, 4, 2);
    REQUIRE(planes.size() == 35);
    for (size_t i = 0; i < planes.size(); ++i)
        for (size_t j = i + 1; j < planes.size(); ++j) {
            size_t ds = subspace_distance(planes[i], planes[j]);
            size_t dh = hamming_distance(planes[i].id_vector(), planes[j].id_vector());
            CHECK(ds >= dh);
            CHECK(ds % 2 == 0);
            if (planes[i].id_vector() == planes[j].id_vector()) {
                Matrix diff = planes[i].basis() - planes[j].basis();
                CHECK(ds == 2 * diff.rank());
            }
        }
}
