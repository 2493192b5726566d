#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "grasscode/constructions.hpp"

using namespace grasscode;

namespace {

std::set<std::pair<size_t, size_t>> class_pairs(const SuffixPartition& p, size_t c) {
    std::set<std::pair<size_t, size_t>> out;
    for (const IdVector& v : p.classes[c]) out.insert(ones_of_pair(v));
    return out;
}

uint64_t sum_with_prefix(const SubspaceCode& code, const std::string& prefix) {
    uint64_t total = 0;
    for (const Stratum& s : code.strata) {
        std::string head;
        for (size_t i = 0; i < prefix.size(); ++i) head += char('0' + s.v[i]);
        if (head == prefix) total += s.count(code.field.q());
    }
    return total;
}

std::multiset<size_t> dims_with_prefix(const SubspaceCode& code, const std::string& prefix) {
    std::multiset<size_t> out;
    for (const Stratum& s : code.strata) {
        std::string head;
        for (size_t i = 0; i < prefix.size(); ++i) head += char('0' + s.v[i]);
        if (head == prefix) out.insert(s.dim());
    }
    return out;
}

} // namespace

TEST_CASE("pair partitions are one-factorizations") {
    for (size_t m = 2; m <= 20; ++m) {
        SuffixPartition p = one_factorization(m);
        CHECK(p.m == m);
        CHECK(p.ell() == (m % 2 == 0 ? m - 1 : m));
        std::set<std::pair<size_t, size_t>> seen;
        for (const auto& cls : p.classes) {
            CHECK(cls.size() == m / 2);
            std::set<size_t> touched;
            for (const IdVector& v : cls) {
                CHECK(v.size() == m);
                CHECK(weight(v) == 2);
                auto [a, b] = ones_of_pair(v);
                CHECK(a < b);
                CHECK(b <= m);
                CHECK(touched.insert(a).second);
                CHECK(touched.insert(b).second);
                CHECK(seen.insert({a, b}).second);
            }
        }
        CHECK(seen.size() == m * (m - 1) / 2);
    }
}

TEST_CASE("pair partition classes are reproducible") {
    SuffixPartition p5 = one_factorization(5);
    CHECK(class_pairs(p5, 0) == std::set<std::pair<size_t, size_t>>{{2, 5}, {3, 4}});
    CHECK(class_pairs(p5, 1) == std::set<std::pair<size_t, size_t>>{{1, 3}, {4, 5}});
    CHECK(class_pairs(p5, 2) == std::set<std::pair<size_t, size_t>>{{2, 4}, {1, 5}});
    CHECK(class_pairs(p5, 3) == std::set<std::pair<size_t, size_t>>{{1, 2}, {3, 5}});
    CHECK(class_pairs(p5, 4) == std::set<std::pair<size_t, size_t>>{{1, 4}, {2, 3}});

    SuffixPartition p6 = one_factorization(6);
    CHECK(class_pairs(p6, 0) ==
          std::set<std::pair<size_t, size_t>>{{1, 6}, {2, 5}, {3, 4}});
    CHECK(class_pairs(p6, 1) ==
          std::set<std::pair<size_t, size_t>>{{2, 6}, {1, 3}, {4, 5}});
    CHECK(class_pairs(p6, 2) ==
          std::set<std::pair<size_t, size_t>>{{3, 6}, {2, 4}, {1, 5}});
    CHECK(class_pairs(p6, 3) ==
          std::set<std::pair<size_t, size_t>>{{4, 6}, {1, 2}, {3, 5}});
    CHECK(class_pairs(p6, 4) ==
          std::set<std::pair<size_t, size_t>>{{5, 6}, {1, 4}, {2, 3}});

    SuffixPartition p7 = one_factorization(7);
    CHECK(class_pairs(p7, 0) ==
          std::set<std::pair<size_t, size_t>>{{2, 7}, {3, 6}, {4, 5}});
    CHECK(class_pairs(p7, 5) ==
          std::set<std::pair<size_t, size_t>>{{1, 4}, {2, 3}, {5, 7}});
    CHECK(class_pairs(p7, 6) ==
          std::set<std::pair<size_t, size_t>>{{1, 6}, {2, 5}, {3, 4}});

    auto class_of = [](size_t m, size_t a, size_t b) {
        SuffixPartition p = one_factorization(m);
        for (size_t c = 0; c < p.ell(); ++c)
            for (const IdVector& v : p.classes[c])
                if (ones_of_pair(v) == std::pair{a, b}) return c;
        return SIZE_MAX;
    };
    CHECK(class_of(6, 1, 2) == 3);
    CHECK(class_of(6, 1, 3) == 1);
    CHECK(class_of(6, 1, 4) == 4);
    CHECK(class_of(6, 2, 3) == 4);
    CHECK(class_of(7, 1, 2) == 4);
    CHECK(class_of(7, 1, 3) == 1);
    CHECK(class_of(7, 1, 4) == 5);
    CHECK(class_of(7, 2, 3) == 5);
    CHECK(class_of(8, 1, 2) == 4);
    CHECK(class_of(8, 1, 3) == 1);
    CHECK(class_of(8, 1, 4) == 5);
    CHECK(class_of(8, 2, 3) == 5);
    CHECK(class_of(10, 1, 2) == 5);
    CHECK(class_of(10, 1, 3) == 1);
    CHECK(class_of(10, 1, 4) == 6);
    CHECK(class_of(10, 2, 3) == 6);
}

TEST_CASE("base family sizes across its admissible range") {
    Field f2(2);
    SubspaceCode c8 = construction_0(8, f2);
    CHECK(c8.size() == 1179);
    CHECK(c8.n == 8);
    CHECK(c8.k == 3);
    CHECK(c8.d == 4);
    CHECK(c8.strata.size() == 11);
    CHECK(c8.strata[0].count(2) == 1024);
    CHECK(id_to_string(c8.strata[0].v) == "11100000");
    CHECK(sum_with_prefix(c8, "001") == 8);
    CHECK(sum_with_prefix(c8, "010") == 33 + 16);
    CHECK(sum_with_prefix(c8, "100") == 66 + 32);

    CHECK(construction_0(9, f2).size() == 4747);
    CHECK(construction_0(9, f2).strata.size() == 16);
    CHECK(construction_0(10, f2).size() == 19051);
    CHECK(construction_0(10, f2).strata.size() == 22);
    CHECK(construction_0(11, f2).size() == 76331);
    CHECK(construction_0(11, f2).strata.size() == 29);

    CHECK_THROWS_AS(construction_0(7, f2), domain_error);
    CHECK_THROWS_AS(construction_0(12, f2), domain_error);
}

TEST_CASE("prefix capacity table") {
    NuCapacity c4 = nu_capacity(4, 2);
    CHECK(c4.nu == 34);
    CHECK(c4.prefix_dots == std::vector<size_t>{0, 1, 2, 2, 3, 4});
    NuCapacity c5 = nu_capacity(5, 2);
    CHECK(c5.nu == 154);
    CHECK(c5.prefix_dots.size() == 10);
}

TEST_CASE("first variant of the main construction") {
    Field f2(2);
    SubspaceCode ia = construction_Ia(10, 4, f2);
    CHECK(ia.size() == 272581);
    CHECK(ia.d == 4);
    CHECK(ia.strata.size() == 37);

    std::map<std::string, std::set<size_t>> classes_by_prefix;
    SuffixPartition part = one_factorization(6);
    for (size_t si = 1; si + 1 < ia.strata.size(); ++si) {
        const Stratum& s = ia.strata[si];
        if (weight(IdVector(s.v.begin(), s.v.begin() + 4)) != 2) continue;
        std::string prefix;
        for (size_t i = 0; i < 4; ++i) prefix += char('0' + s.v[i]);
        IdVector suffix(s.v.begin() + 4, s.v.end());
        for (size_t c = 0; c < part.ell(); ++c)
            for (const IdVector& w : part.classes[c])
                if (w == suffix) classes_by_prefix[prefix].insert(c);
    }
    CHECK(classes_by_prefix.size() == 3);
    std::vector<std::set<size_t>> groups;
    for (const auto& [prefix, cls] : classes_by_prefix) groups.push_back(cls);
    std::sort(groups.begin(), groups.end());
    CHECK(groups[0] == std::set<size_t>{0});
    CHECK(groups[1] == std::set<size_t>{1, 2});
    CHECK(groups[2] == std::set<size_t>{3, 4});

    CHECK(construction_Ia(12, 4, f2).size() == 17472192);
    CHECK(construction_Ia(12, 5, f2).size() == 271166496);

    ResidualProvider degenerate = [](size_t n, size_t d, size_t k, const Field& f) {
        IdVector v(n, 0);
        for (size_t i = 0; i < k; ++i) v[i] = 1;
        Stratum s{v, Matrix(f, k, ferrers_of_vector(v).num_cols()), {}, {0, 0},
                  "degenerate"};
        return SubspaceCode{f, n, k, d, {s}, "degenerate"};
    };
    CHECK(construction_Ia(10, 4, f2, degenerate).size() == 272561);

    ResidualProvider mismatched = [](size_t, size_t d, size_t k, const Field& f) {
        return SubspaceCode{f, 3, k, d, {}, "mismatched"};
    };
    CHECK_THROWS_AS(construction_Ia(10, 4, f2, mismatched), domain_error);

    CHECK_THROWS_AS(construction_Ia(9, 4, f2), domain_error);
    CHECK_THROWS_AS(construction_Ia(10, 3, f2), domain_error);
}

TEST_CASE("second variant packs anchor classes under special prefixes") {
    Field f2(2);
    SubspaceCode ib = construction_Ib(10, 4, f2);
    CHECK(ib.size() == 291717);
    CHECK(ib.d == 4);
    CHECK(sum_with_prefix(ib, "1111") == 262144);
    CHECK(sum_with_prefix(ib, "1100") == 17024);
    CHECK(sum_with_prefix(ib, "1010") == 4480);
    CHECK(sum_with_prefix(ib, "0110") == 4128);
    CHECK(sum_with_prefix(ib, "1001") == 2064);
    CHECK(sum_with_prefix(ib, "0011") == 768);
    CHECK(sum_with_prefix(ib, "0101") == 1088);
    CHECK(sum_with_prefix(ib, "0000") == 21);

    CHECK(construction_Ib(12, 5, f2).size() == 294552608);

    for (size_t n : {size_t{11}, size_t{12}}) {
        bool threw = false;
        try {
            construction_Ib(n, 4, f2);
        } catch (const domain_error& e) {
            threw = true;
            CHECK(std::string(e.what()).find("capacity") != std::string::npos);
        }
        CHECK(threw);
    }
}

TEST_CASE("third construction covers higher distances") {
    Field f2(2);
    SubspaceCode ii = construction_II(13, 4, f2);
    CHECK(ii.size() == 266891);
    CHECK(ii.d == 6);
    CHECK(ii.strata.size() == 17);

    uint64_t lifted = 0, a1 = 0, a2 = 0, a3 = 0;
    std::multiset<size_t> a0_dims;
    for (const Stratum& s : ii.strata) {
        bool suffix_zero = true;
        for (size_t i = 7; i < 13; ++i) suffix_zero = suffix_zero && s.v[i] == 0;
        if (suffix_zero) {
            a0_dims.insert(s.dim());
            lifted += s.count(2);
        } else if (s.v[2] && s.v[6]) {
            a1 += s.count(2);
        } else if (s.v[1] && s.v[5]) {
            a2 += s.count(2);
        } else if (s.v[0] && s.v[4]) {
            a3 += s.count(2);
        }
    }
    CHECK(a0_dims == std::multiset<size_t>{12, 18});
    CHECK(lifted + a1 + a2 + a3 == ii.size());
    CHECK(a1 == 48);
    CHECK(a2 == 208);
    CHECK(a3 == 395);

    SubspaceCode big = construction_II(19, 5, f2);
    CHECK(big.size() == 269503083);
    CHECK(big.d == 8);
    CHECK(big.strata.size() == 24);
    std::multiset<size_t> head_dims;
    for (const Stratum& s : big.strata) {
        bool suffix_zero = true;
        for (size_t i = 12; i < 19; ++i) suffix_zero = suffix_zero && s.v[i] == 0;
        if (suffix_zero) head_dims.insert(s.dim());
    }
    CHECK(head_dims == std::multiset<size_t>{14, 20, 28});
    bool saw_v01 = false, saw_v02 = false;
    for (const Stratum& s : big.strata) {
        if (id_to_string(s.v) == "0001011110000000000") {
            saw_v01 = true;
            CHECK(s.dim() == 20);
        }
        if (id_to_string(s.v) == "0000100011110000000") {
            saw_v02 = true;
            CHECK(s.dim() == 14);
        }
    }
    CHECK(saw_v01);
    CHECK(saw_v02);

    CHECK(construction_II(9, 3, f2).size() == construction_0(9, f2).size());
    CHECK(construction_II(9, 3, f2).d == 4);
    CHECK_THROWS_AS(construction_II(12, 4, f2), domain_error);
    CHECK_THROWS_AS(construction_II(16, 4, f2), domain_error);
}

TEST_CASE("column extension multiplies the size and keeps the distance") {
    Field f2(2);
    SubspaceCode base = construction_0(8, f2);
    SubspaceCode ext = extend_code(base, 3);
    CHECK(ext.size() == 75456);
    CHECK(ext.n == 11);
    CHECK(ext.k == 3);
    CHECK(ext.d == 4);
    CHECK(ext.strata.size() == 11);
    for (const Stratum& s : ext.strata) {
        CHECK(s.v.size() == 11);
        CHECK(s.v[8] == 0);
        CHECK(s.v[9] == 0);
        CHECK(s.v[10] == 0);
    }

    CHECK_THROWS_AS(extend_code(base, 2), domain_error);

    SkeletonEntry only;
    only.v = id_from_string("110000");
    only.delta = 1;
    only.label = "plane";
    SubspaceCode weak = multilevel(f2, {only}, 1);
    CHECK(weak.d == 2);
    CHECK_THROWS_AS(extend_code(weak, 3), domain_error);

    CHECK(extended_size(4797, 2, 4, 4) == 19648512);
    CHECK(extended_size(4797, 2, 4, 4) ==
          (uint64_t{1} << 24) + 701 * (uint64_t{1} << 12));
}

TEST_CASE("registry picks the strongest applicable rule") {
    Field f2(2);
    struct Expect {
        size_t n, d, k;
        uint64_t m;
        const char* rule;
    };
    const Expect table[] = {
        {6, 4, 4, 21, "rule=dual"},
        {6, 4, 2, 21, "rule=spread"},
        {7, 4, 5, 32, "rule=dual"},
        {7, 4, 4, 256, "rule="},
        {8, 4, 5, 1179, "rule=dual"},
        {8, 4, 4, 4096, "rule=lifted_mrd"},
        {10, 4, 5, uint64_t{1} << 20, "rule=lifted_mrd"},
        {10, 4, 4, 291717, "rule=construction_Ib"},
        {5, 4, 5, 1, "rule=trivial"},
    };
    for (const Expect& e : table) {
        SubspaceCode c = residual_registry(e.n, e.d, e.k, f2);
        CHECK(c.size() == e.m);
        CHECK(c.n == e.n);
        CHECK(c.k == e.k);
        CHECK(c.d >= e.d);
        CHECK(c.provenance.find(e.rule) != std::string::npos);
    }
    CHECK(residual_registry(15, 4, 5, f2).provenance.find("rule=construction_Ib") !=
          std::string::npos);
    CHECK(residual_registry(6, 2, 3, f2).provenance.find("out_of_scope_distance") !=
          std::string::npos);

    SubspaceCode chained = residual_registry(10, 4, 4, f2);
    CHECK(chained.provenance ==
          "registry n=10 d=4 k=4 rule=construction_Ib | construction_Ib q=2 n=10 "
          "k=4 residual=[registry n=6 d=4 k=4 rule=dual | registry n=6 d=4 k=2 "
          "rule=spread]");
}

TEST_CASE("size bounds match the constructions they describe") {
    BoundValue ia = bound_Ia(10, 4, 2, 21);
    CHECK(ia.applicable);
    CHECK(ia.value == 272581);
    std::map<std::string, uint64_t> terms(ia.terms.begin(), ia.terms.end());
    CHECK(terms["lifted_mrd"] == 262144);
    CHECK(terms["suffix_levels"] == 10416);
    CHECK(terms["residual"] == 21);

    BoundValue ib = bound_Ib(10, 4, 2, 21);
    CHECK_FALSE(ib.applicable);
    CHECK(ib.reason.find("violated") != std::string::npos);
    BoundValue ib12 = bound_Ib(12, 5, 2, 32);
    CHECK(ib12.applicable);
    CHECK(ib12.value == 292138016);

    BoundValue ii = bound_II(13, 4, 2);
    CHECK(ii.applicable);
    CHECK(ii.value == 266891);
    std::map<std::string, uint64_t> ii_terms(ii.terms.begin(), ii.terms.end());
    CHECK(ii_terms["mrd_level_4"] == 262144);
    CHECK(ii_terms["mrd_level_3"] == 4096);
    CHECK(ii_terms["suffix_classes"] == 651);
    CHECK(bound_II(19, 5, 2).value == 269503083);
    CHECK(bound_II(14, 4, 2).value == 1067627);

    BoundValue lm = bound_lifted_mrd(10, 4, 5, 2);
    CHECK(lm.applicable);
    CHECK(lm.value == uint64_t{1} << 20);
    CHECK_FALSE(bound_lifted_mrd(4, 4, 5, 2).applicable);
}

TEST_CASE("recipes parse and build") {
    Field f2(2);
    const std::string text =
        "# comment line\n"
        "prefix 1100 classes 3 mode full\n"
        "prefix 0011 classes 3 mode full\n"
        "prefix 0110 classes 2 mode full\n"
        "prefix 1001 classes 2 mode full\n"
        "prefix 1010 classes 1,4 mode pending\n"
        "prefix 0101 classes 1,4 mode pending\n";
    std::vector<RecipeLine> lines = parse_recipe(text);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0].prefix == id_from_string("1100"));
    CHECK(lines[0].classes == std::vector<size_t>{3});
    CHECK(lines[0].mode == "full");
    CHECK(lines[4].classes == std::vector<size_t>{1, 4});
    CHECK(lines[4].mode == "pending");

    SubspaceCode code = construction_recipe(10, 4, f2, lines);
    CHECK(code.size() == 299621);
    CHECK(code.size() == (uint64_t{1} << 18) + 37477);
    CHECK(code.d == 4);
    CHECK(code.strata.size() == 46);
    CHECK(sum_with_prefix(code, "1111") == 262144);
    CHECK(sum_with_prefix(code, "1100") == 17024);
    CHECK(sum_with_prefix(code, "0011") == 4256);
    CHECK(sum_with_prefix(code, "0110") == 2176);
    CHECK(sum_with_prefix(code, "1001") == 1088);
    CHECK(sum_with_prefix(code, "1010") == 8608);
    CHECK(sum_with_prefix(code, "0101") == 4304);
    CHECK(sum_with_prefix(code, "0000") == 21);
    CHECK(dims_with_prefix(code, "1100") == std::multiset<size_t>{7, 9, 14});
    CHECK(dims_with_prefix(code, "1010") ==
          std::multiset<size_t>{5, 7, 8, 11, 11, 12});

    CHECK_THROWS_WITH_AS(parse_recipe("prefix 1100 classes mode full\n"),
                         doctest::Contains("recipe line"), domain_error);
    CHECK_THROWS_AS(parse_recipe("prefix 1100 classes 1 mode sideways\n"),
                    domain_error);

    auto build = [&](const std::string& t) {
        return construction_recipe(10, 4, f2, parse_recipe(t));
    };
    CHECK_THROWS_AS(build("prefix 1100 classes 1 mode full\n"
                          "prefix 1100 classes 2 mode full\n"),
                    domain_error);
    CHECK_THROWS_AS(build("prefix 1100 classes 1 mode full\n"
                          "prefix 1010 classes 1 mode full\n"),
                    domain_error);
    CHECK_THROWS_AS(build("prefix 1100 classes 1,2 mode full\n"), domain_error);
    CHECK_THROWS_AS(build("prefix 1100 classes 1,2,3 mode pending\n"), domain_error);
    CHECK_THROWS_AS(build("prefix 1100 classes 9 mode full\n"), domain_error);
}
