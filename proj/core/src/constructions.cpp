#include "grasscode/constructions.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace grasscode {

namespace {

struct ZeroPair {
    size_t j = 0, i = 0;
};

std::vector<ZeroPair> zero_pairs(size_t k) {
    std::vector<ZeroPair> out;
    for (size_t j = 1; j < k; ++j)
        for (size_t i = j + 1; i <= k; ++i) out.push_back({j, i});
    return out;
}

IdVector prefix_of_zero_pair(size_t k, ZeroPair zp) {
    IdVector p(k, 1);
    p[zp.j - 1] = 0;
    p[zp.i - 1] = 0;
    return p;
}

size_t zero_pair_dots(ZeroPair zp) { return (zp.j - 1) + (zp.i - 2); }

ZeroPair zero_pair_of_prefix(const IdVector& p) {
    std::vector<size_t> zs;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] == 0) zs.push_back(i + 1);
    require(zs.size() == 2, "prefix weight must be k-2");
    return {zs[0], zs[1]};
}

IdVector concat(const IdVector& a, const IdVector& b) {
    IdVector v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

std::string pair_label(const IdVector& suffix) {
    auto [y1, y2] = ones_of_pair(suffix);
    return std::to_string(y1) + "," + std::to_string(y2);
}

// Entry of one identifying vector prefix++suffix whose top-left block carries
// the base-q digits of `value` on its dots (row-major), free elsewhere.
SkeletonEntry blocked_entry(const Field& f, const IdVector& prefix, ZeroPair zp,
                            const IdVector& suffix, uint64_t value, std::string label) {
    SkeletonEntry e;
    e.v = concat(prefix, suffix);
    e.delta = 2;
    e.label = std::move(label);
    size_t m1 = zp.i - 2;
    size_t ell1 = zp.j == 1 ? 1 : 2;
    if (m1 == 0) {
        require(value == 0, "blockless prefix holds a single class");
        return e;
    }
    FerrersDiagram fd = ferrers_of_vector(e.v);
    uint32_t q = f.q();
    Matrix bf(f, m1, ell1);
    uint64_t rem = value;
    for (size_t t = 0; t < m1; ++t)
        for (size_t c = 0; c < ell1; ++c)
            if (fd.has_dot(t, c)) {
                bf.set(t, c, static_cast<uint32_t>(rem % q));
                rem /= q;
            }
    require(rem == 0, "class ordinal exceeds block capacity");
    e.block = PendingBlockSpec{m1, ell1};
    e.block_filling = std::move(bf);
    return e;
}

// Appends the strata of a residual code on F_q^(n-k), re-rooted at identifying
// vectors 0^k ++ v. The bounding-box geometry is invariant under prepending
// zeros, so offsets, bases, and blocks carry over unchanged.
void append_residual(SubspaceCode& code, const SubspaceCode& res, size_t k) {
    require(res.field.q() == code.field.q(), "residual field mismatch");
    require(res.n + k == code.n, "residual ambient dimension mismatch");
    require(res.k == code.k, "residual subspace dimension mismatch");
    require(res.d >= 4, "residual distance >= 4 violated");
    IdVector zeros(k, 0);
    for (const auto& st : res.strata) {
        Stratum ns = st;
        ns.v = concat(zeros, st.v);
        ns.label = "residual " + st.label;
        code.strata.push_back(std::move(ns));
    }
}

SubspaceCode run_residual(const ResidualProvider& provider, size_t n, size_t d,
                          size_t k, const Field& f) {
    return provider ? provider(n, d, k, f) : residual_registry(n, d, k, f);
}

size_t suffix_class_count(size_t m) { return m % 2 == 0 ? m - 1 : m; }

std::string param_tag(uint32_t q, size_t n, size_t k) {
    return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
           " k=" + std::to_string(k);
}

IdVector full_rect_vector(size_t n, size_t k) {
    IdVector v(n, 0);
    for (size_t i = 0; i < k; ++i) v[i] = 1;
    return v;
}

BoundValue bound_shell(std::string family, uint32_t q, size_t n, size_t k, size_t d) {
    BoundValue b;
    b.family = std::move(family);
    b.q = q;
    b.n = n;
    b.k = k;
    b.d = d;
    return b;
}

uint64_t sum_terms(const std::vector<std::pair<std::string, uint64_t>>& terms) {
    uint64_t v = 0;
    for (const auto& [name, t] : terms) v = checked_add(v, t);
    return v;
}

} // namespace

NuCapacity nu_capacity(size_t k, uint32_t q) {
    require(k >= 4, "k >= 4 violated");
    NuCapacity out;
    uint64_t total = 0;
    for (ZeroPair zp : zero_pairs(k)) {
        size_t dots = zero_pair_dots(zp);
        out.prefix_dots.push_back(dots);
        total = checked_add(total, checked_pow(q, static_cast<unsigned>(dots)));
    }
    out.nu = total - 1;
    return out;
}

SubspaceCode construction_Ia(size_t n, size_t k, const Field& f,
                             const ResidualProvider& residual) {
    require(k >= 4, "k >= 4 violated");
    require(n >= 2 * k + 2, "n >= 2k+2 violated");
    uint32_t q = f.q();
    size_t m = n - k;
    SuffixPartition part = one_factorization(m);
    size_t L = part.ell();
    NuCapacity nu = nu_capacity(k, q);
    require(L <= nu.nu + 1, "number of suffix classes <= nu+1 violated");

    std::vector<SkeletonEntry> entries;
    entries.push_back(SkeletonEntry{full_rect_vector(n, k), 2, {0, 0}, std::nullopt, "A0"});

    auto zps = zero_pairs(k);
    size_t next_class = 0;
    for (size_t pi = 0; pi < zps.size() && next_class < L; ++pi) {
        uint64_t cap = checked_pow(q, static_cast<unsigned>(zero_pair_dots(zps[pi])));
        IdVector prefix = prefix_of_zero_pair(k, zps[pi]);
        for (uint64_t t = 0; t < cap && next_class < L; ++t, ++next_class) {
            for (const auto& suffix : part.classes[next_class]) {
                std::string label = "level " + std::to_string(zps[pi].j) + "," +
                                    std::to_string(zps[pi].i) + " class " +
                                    std::to_string(next_class) + " pair " +
                                    pair_label(suffix);
                entries.push_back(blocked_entry(f, prefix, zps[pi], suffix, t,
                                                std::move(label)));
            }
        }
    }

    SubspaceCode code = multilevel(f, entries, 2);
    SubspaceCode res = run_residual(residual, m, 4, k, f);
    append_residual(code, res, k);
    code.d = 4;
    code.provenance = "construction_Ia " + param_tag(q, n, k) +
                      (L == nu.nu + 1 ? " capacity=saturated" : "") +
                      " residual=[" + res.provenance + "]";
    return code;
}

SubspaceCode construction_Ib(size_t n, size_t k, const Field& f,
                             const ResidualProvider& residual) {
    require(k >= 4, "k >= 4 violated");
    require(n >= 2 * k + 2, "n >= 2k+2 violated");
    uint32_t q = f.q();
    size_t m = n - k;
    SuffixPartition part = one_factorization(m);
    size_t L = part.ell();

    auto find_class = [&](size_t a, size_t b) -> size_t {
        for (size_t c = 0; c < L; ++c)
            for (const auto& suffix : part.classes[c]) {
                auto [y1, y2] = ones_of_pair(suffix);
                if (y1 == a && y2 == b) return c;
            }
        throw domain_error("anchor pair not covered by suffix classes");
    };

    const std::array<ZeroPair, 4> specials{
        {{k - 1, k}, {k - 2, k}, {k - 3, k}, {k - 2, k - 1}}};
    const std::array<std::pair<size_t, size_t>, 4> anchors{
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}}};

    std::vector<SkeletonEntry> entries;
    entries.push_back(SkeletonEntry{full_rect_vector(n, k), 2, {0, 0}, std::nullopt, "A0"});

    std::set<size_t> consumed;
    for (size_t x = 0; x < specials.size(); ++x) {
        size_t cls = find_class(anchors[x].first, anchors[x].second);
        consumed.insert(cls);
        IdVector prefix = prefix_of_zero_pair(k, specials[x]);
        for (const auto& suffix : part.classes[cls]) {
            std::string label = "special " + std::to_string(specials[x].j) + "," +
                                std::to_string(specials[x].i) + " class " +
                                std::to_string(cls) + " pair " + pair_label(suffix);
            entries.push_back(SkeletonEntry{concat(prefix, suffix), 2, {0, 0},
                                            std::nullopt, std::move(label)});
        }
    }

    std::set<ZeroPair, decltype([](ZeroPair a, ZeroPair b) {
                return a.j != b.j ? a.j < b.j : a.i < b.i;
            })>
        special_set(specials.begin(), specials.end());

    std::vector<size_t> remaining;
    for (size_t c = 0; c < L; ++c)
        if (!consumed.count(c)) remaining.push_back(c);

    size_t next = 0;
    for (ZeroPair zp : zero_pairs(k)) {
        if (next >= remaining.size()) break;
        if (special_set.count(zp)) continue;
        uint64_t cap = checked_pow(q, static_cast<unsigned>(zero_pair_dots(zp)));
        IdVector prefix = prefix_of_zero_pair(k, zp);
        for (uint64_t t = 0; t < cap && next < remaining.size(); ++t, ++next) {
            size_t cls = remaining[next];
            for (const auto& suffix : part.classes[cls]) {
                std::string label = "level " + std::to_string(zp.j) + "," +
                                    std::to_string(zp.i) + " class " +
                                    std::to_string(cls) + " pair " + pair_label(suffix);
                entries.push_back(blocked_entry(f, prefix, zp, suffix, t,
                                                std::move(label)));
            }
        }
    }
    require(next == remaining.size(), "capacity condition violated");

    SubspaceCode code = multilevel(f, entries, 2);
    SubspaceCode res = run_residual(residual, m, 4, k, f);
    append_residual(code, res, k);
    code.d = 4;
    code.provenance = "construction_Ib " + param_tag(q, n, k) + " residual=[" +
                      res.provenance + "]";
    return code;
}

namespace {

// Identifying vector of extra first-level stratum j: three zeros, a single
// one among the next k-3 positions, then the same shape one tier down.
IdVector second_tier_vector(size_t k, size_t j, size_t n) {
    if (j == 0) return full_rect_vector(n, k);
    IdVector v(n, 0);
    v[3 + j - 1] = 1;
    IdVector tail = second_tier_vector(k - 1, j - 1, n - k);
    std::copy(tail.begin(), tail.end(), v.begin() + static_cast<long>(k));
    return v;
}

} // namespace

SubspaceCode construction_II(size_t n, size_t k, const Field& f) {
    require(k >= 3, "k >= 3 violated");
    if (k == 3) return construction_0(n, f);

    uint32_t q = f.q();
    size_t s = k * (k + 1) / 2 - 3;
    require(n >= s + k + 2, "n >= s+k+2 violated");
    size_t m = n - s;
    SuffixPartition part = one_factorization(m);
    size_t L = part.ell();
    require(L <= static_cast<size_t>(q) * q + q + 1,
            "number of suffix classes <= q^2+q+1 violated");

    size_t delta = k - 1;
    SubspaceCode code{f, n, k, 2 * (k - 1), {}, ""};

    code.strata.push_back(build_entry_stratum(
        f, SkeletonEntry{full_rect_vector(n, k), delta, {0, 0}, std::nullopt, "A0 level 0"}));

    for (size_t j = 1; j + 3 <= k; ++j) {
        IdVector v = second_tier_vector(k, j, n);
        size_t w = n;
        for (size_t i = k - j; i <= k; ++i) w -= i;
        FerrersDiagram fd = ferrers_of_vector(v);
        size_t ell = fd.num_cols();
        require(w >= k && ell >= w, "second tier rectangle out of range");
        LinearMatrixCode mrd = gabidulin_mrd(k, w, delta, f);
        Stratum st{std::move(v), Matrix(f, k, ell), {}, {0, 0}, ""};
        for (const auto& b : mrd.basis) {
            Matrix mb(f, k, ell);
            for (size_t r = 0; r < k; ++r)
                for (size_t c = 0; c < w; ++c)
                    if (b.at(r, c) != 0) mb.set(r, c + ell - w, b.at(r, c));
            st.basis.push_back(std::move(mb));
        }
        st.label = "A0 level " + std::to_string(j);
        code.strata.push_back(std::move(st));
    }

    auto level_prefix = [&](size_t lvl) {
        IdVector p(s, 0);
        size_t c = 4 - lvl;
        size_t o = 0;
        for (size_t t = k; t >= 3; --t) {
            p[o + c - 1] = 1;
            o += t;
        }
        return p;
    };

    auto push_level = [&](size_t lvl, size_t cls, const char* name) {
        IdVector prefix = level_prefix(lvl);
        size_t fdigits = lvl - 1;
        std::vector<uint32_t> class_digits;
        if (lvl == 2) class_digits = {static_cast<uint32_t>(cls - 1)};
        if (lvl == 3) {
            uint64_t val = cls - q - 1;
            class_digits = {static_cast<uint32_t>(val % q),
                            static_cast<uint32_t>(val / q)};
        }
        uint64_t member = 0;
        for (const auto& suffix : part.classes[cls]) {
            IdVector v = concat(prefix, suffix);
            FerrersDiagram fd = ferrers_of_vector(v);
            const auto& rows = fd.row_lengths();
            size_t ell = fd.num_cols();
            size_t base = m - 2;
            size_t m1 = 0;
            while (m1 < rows.size() && rows[m1] > base) ++m1;
            size_t ell1 = rows[0] - base;
            Matrix bf(f, m1, ell1);
            for (size_t t = 0; t < m1; ++t) {
                size_t start = ell - rows[t];
                size_t lead = ell1 - start;
                require(lead >= fdigits, "block row too short for class digits");
                size_t pos = start;
                for (size_t d = 0; d < fdigits; ++d) bf.set(t, pos++, class_digits[d]);
                if (lead >= fdigits + 3) {
                    uint64_t rem = member;
                    for (size_t d = 0; d < 3; ++d) {
                        bf.set(t, pos++, static_cast<uint32_t>(rem % q));
                        rem /= q;
                    }
                }
            }
            std::string label = std::string(name) + " class " + std::to_string(cls) +
                                " pair " + pair_label(suffix);
            code.strata.push_back(build_entry_stratum(
                f, SkeletonEntry{std::move(v), delta, PendingBlockSpec{m1, ell1},
                                 std::move(bf), std::move(label)}));
            ++member;
        }
    };

    push_level(1, 0, "A1");
    size_t a2_end = std::min<size_t>(q + 1, L);
    for (size_t cls = 1; cls < a2_end; ++cls) push_level(2, cls, "A2");
    for (size_t cls = q + 1; cls < L; ++cls) push_level(3, cls, "A3");

    code.provenance = "construction_II " + param_tag(q, n, k);
    return code;
}

SubspaceCode extend_code(const SubspaceCode& base, size_t delta_cols) {
    require(delta_cols >= base.k, "delta_cols >= k violated");
    require(base.d >= 4, "base distance >= 4 violated");
    const Field& f = base.field;
    size_t k = base.k;
    LinearMatrixCode tail = gabidulin_mrd(k, delta_cols, 2, f);

    SubspaceCode out{f, base.n + delta_cols, k, 4, {},
                     base.provenance + " extended delta=" + std::to_string(delta_cols)};
    for (const auto& st : base.strata) {
        size_t ell = st.offset.cols();
        Stratum ns{st.v, Matrix(f, k, ell + delta_cols), {}, {0, 0}, ""};
        ns.v.insert(ns.v.end(), delta_cols, 0);
        auto widen = [&](const Matrix& src) {
            Matrix dst(f, k, ell + delta_cols);
            for (size_t i = 0; i < src.rows(); ++i)
                for (size_t c = 0; c < ell; ++c)
                    if (src.at(i, c) != 0) dst.set(i, c, src.at(i, c));
            return dst;
        };
        ns.offset = widen(st.offset);
        for (const auto& b : st.basis) ns.basis.push_back(widen(b));
        for (const auto& b : tail.basis) {
            Matrix mb(f, k, ell + delta_cols);
            for (size_t r = 0; r < k; ++r)
                for (size_t c = 0; c < delta_cols; ++c)
                    if (b.at(r, c) != 0) mb.set(r, c + ell, b.at(r, c));
            ns.basis.push_back(std::move(mb));
        }
        ns.block = st.block;
        ns.label = st.label;
        out.strata.push_back(std::move(ns));
    }
    return out;
}

uint64_t extended_size(uint64_t m, uint32_t q, size_t k, size_t delta_cols) {
    require(k >= 1, "k >= 1 violated");
    return checked_mul(m, checked_pow(q, static_cast<unsigned>(delta_cols * (k - 1))));
}

BoundValue bound_lifted_mrd(size_t n, size_t d, size_t k, uint32_t q) {
    BoundValue b = bound_shell("lifted_mrd", q, n, k, d);
    size_t delta = std::max<size_t>(1, (d + 1) / 2);
    if (k < delta) {
        b.reason = "k >= delta violated";
        return b;
    }
    if (n < 2 * k) {
        b.reason = "n >= 2k violated";
        return b;
    }
    try {
        b.value = checked_pow(q, static_cast<unsigned>((n - k) * (k - delta + 1)));
    } catch (const overflow_error&) {
        b.reason = "value exceeds 64 bits";
        return b;
    }
    b.terms = {{"lifted_mrd", b.value}};
    b.applicable = true;
    return b;
}

BoundValue bound_Ia(size_t n, size_t k, uint32_t q, uint64_t residual_value) {
    BoundValue b = bound_shell("construction_Ia", q, n, k, 4);
    if (k < 4) {
        b.reason = "k >= 4 violated";
        return b;
    }
    if (n < 2 * k + 2) {
        b.reason = "n >= 2k+2 violated";
        return b;
    }
    size_t m = n - k;
    uint64_t nu = nu_capacity(k, q).nu;
    if (suffix_class_count(m) > nu + 1) {
        b.reason = "number of suffix classes <= nu+1 violated";
        return b;
    }
    try {
        uint64_t lifted = checked_pow(q, static_cast<unsigned>((k - 1) * m));
        uint64_t levels =
            checked_mul(checked_pow(q, static_cast<unsigned>((m - 2) * (k - 3))),
                        gaussian_coefficient(m, 2, q));
        b.terms = {{"lifted_mrd", lifted}, {"suffix_levels", levels},
                   {"residual", residual_value}};
        b.value = sum_terms(b.terms);
    } catch (const overflow_error&) {
        b.terms.clear();
        b.reason = "value exceeds 64 bits";
        return b;
    }
    b.applicable = true;
    return b;
}

BoundValue bound_Ib(size_t n, size_t k, uint32_t q, uint64_t residual_value) {
    BoundValue b = bound_shell("construction_Ib", q, n, k, 4);
    BoundValue ia = bound_Ia(n, k, q, residual_value);
    if (!ia.applicable) {
        b.reason = ia.reason;
        return b;
    }
    size_t m = n - k;
    try {
        uint64_t nu1 = nu_capacity(k, q).nu + 1;
        uint64_t reserve = checked_add(
            checked_add(checked_pow(q, static_cast<unsigned>(2 * k - 4)),
                        checked_pow(q, static_cast<unsigned>(2 * k - 5))),
            checked_mul(2, checked_pow(q, static_cast<unsigned>(2 * k - 6))));
        if (nu1 < checked_add(reserve, m)) {
            b.reason = "(nu+1) - q^(2k-4) - q^(2k-5) - 2*q^(2k-6) >= n-k violated";
            return b;
        }
        uint64_t base_exp = (k - 1) * (m - 2);
        uint64_t gain_a =
            checked_mul(checked_pow(q, static_cast<unsigned>(2 * (k - 3))) - 1,
                        checked_pow(q, static_cast<unsigned>(base_exp)));
        uint64_t gain_b =
            checked_mul(checked_pow(q, static_cast<unsigned>(2 * (k - 3) - 1)) - 1,
                        checked_pow(q, static_cast<unsigned>(base_exp - 1)));
        uint64_t gain_c = checked_mul(
            checked_mul(2, checked_pow(q, static_cast<unsigned>(2 * (k - 4))) - 1),
            checked_pow(q, static_cast<unsigned>(base_exp - 2)));
        b.terms = ia.terms;
        b.terms.emplace_back("special_a", gain_a);
        b.terms.emplace_back("special_b", gain_b);
        b.terms.emplace_back("special_c", gain_c);
        b.value = sum_terms(b.terms);
    } catch (const overflow_error&) {
        b.terms.clear();
        b.reason = "value exceeds 64 bits";
        return b;
    }
    b.applicable = true;
    return b;
}

BoundValue bound_II(size_t n, size_t k, uint32_t q) {
    BoundValue b = bound_shell("construction_II", q, n, k, k >= 2 ? 2 * (k - 1) : 0);
    if (k < 3) {
        b.reason = "k >= 3 violated";
        return b;
    }
    size_t s = k * (k + 1) / 2 - 3;
    if (n < s + k + 2) {
        b.reason = "n >= s+k+2 violated";
        return b;
    }
    size_t m = n - s;
    if (suffix_class_count(m) > static_cast<size_t>(q) * q + q + 1) {
        b.reason = "number of suffix classes <= q^2+q+1 violated";
        return b;
    }
    try {
        for (size_t j = k;; --j) {
            size_t tail = 0;
            for (size_t i = j; i <= k; ++i) tail += i;
            b.terms.emplace_back("mrd_level_" + std::to_string(j),
                                 checked_pow(q, static_cast<unsigned>(2 * (n - tail))));
            if (j == 3) break;
        }
        b.terms.emplace_back("suffix_classes", gaussian_coefficient(m, 2, q));
        b.value = sum_terms(b.terms);
    } catch (const overflow_error&) {
        b.terms.clear();
        b.reason = "value exceeds 64 bits";
        return b;
    }
    b.applicable = true;
    return b;
}

namespace {

SubspaceCode dualize(const SubspaceCode& inner) {
    SubspaceCode out{inner.field, inner.n, inner.n - inner.k, inner.d, {}, ""};
    for (size_t si = 0; si < inner.strata.size(); ++si) {
        uint64_t count = inner.strata[si].count(inner.field.q());
        for (uint64_t u = 0; u < count; ++u) {
            Subspace w = inner.word(si, u);
            Subspace dual = subspace_from_matrix(w.basis().nullspace_basis());
            out.strata.push_back(Stratum{dual.id_vector(), filling_of(dual), {},
                                         {0, 0},
                                         "dual word " + std::to_string(out.strata.size())});
        }
    }
    return out;
}

SubspaceCode spread_code(size_t n, size_t k, const Field& f) {
    uint32_t q = f.q();
    uint64_t qn = checked_pow(q, static_cast<unsigned>(n));
    require(qn <= (uint64_t{1} << 20), "spread field too large");
    ExtField ext(f, static_cast<uint32_t>(n));

    Matrix fix(f, n, n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<uint32_t> unit(n, 0);
        unit[j] = 1;
        uint32_t e = ext.from_vector(unit);
        uint32_t img = e;
        for (size_t t = 0; t < k; ++t) img = ext.frobenius(img);
        std::vector<uint32_t> col = ext.to_vector(ext.sub(img, e));
        for (size_t i = 0; i < n; ++i) fix.set(i, j, col[i]);
    }
    Matrix null = fix.nullspace_basis();
    require(null.rows() == k, "subfield dimension mismatch");

    std::vector<uint32_t> sub_basis;
    for (size_t i = 0; i < k; ++i) {
        std::vector<uint32_t> row(n);
        for (size_t c = 0; c < n; ++c) row[c] = null.at(i, c);
        sub_basis.push_back(ext.from_vector(row));
    }
    uint64_t qk = checked_pow(q, static_cast<unsigned>(k));
    std::vector<uint32_t> subfield;
    subfield.reserve(qk);
    for (uint64_t idx = 0; idx < qk; ++idx) {
        uint32_t e = 0;
        uint64_t rem = idx;
        for (size_t i = 0; i < k; ++i) {
            uint32_t digit = static_cast<uint32_t>(rem % q);
            rem /= q;
            if (digit != 0) e = ext.add(e, ext.mul(digit, sub_basis[i]));
        }
        subfield.push_back(e);
    }

    SubspaceCode out{f, n, k, 2 * k, {}, ""};
    std::vector<uint8_t> visited(qn, 0);
    for (uint64_t rep = 1; rep < qn; ++rep) {
        if (visited[rep]) continue;
        for (uint32_t s : subfield)
            if (s != 0) visited[ext.mul(static_cast<uint32_t>(rep), s)] = 1;
        Matrix basis(f, k, n);
        for (size_t i = 0; i < k; ++i) {
            std::vector<uint32_t> row =
                ext.to_vector(ext.mul(static_cast<uint32_t>(rep), sub_basis[i]));
            for (size_t c = 0; c < n; ++c) basis.set(i, c, row[c]);
        }
        Subspace sp = subspace_from_matrix(std::move(basis));
        out.strata.push_back(Stratum{sp.id_vector(), filling_of(sp), {}, {0, 0},
                                     "spread coset " + std::to_string(out.strata.size())});
    }
    require(out.size() == (qn - 1) / (qk - 1), "spread coset count mismatch");
    return out;
}

SubspaceCode lifted_mrd_code(size_t n, size_t d, size_t k, const Field& f) {
    size_t delta = std::max<size_t>(1, (d + 1) / 2);
    require(delta <= k, "k >= delta violated");
    require(n >= 2 * k, "n >= 2k violated");
    SkeletonEntry e{full_rect_vector(n, k), delta, {0, 0}, std::nullopt, "lifted"};
    SubspaceCode out{f, n, k, 2 * delta, {build_entry_stratum(f, e)}, ""};
    return out;
}

} // namespace

SubspaceCode residual_registry(size_t n, size_t d, size_t k, const Field& f) {
    require(k >= 1 && k <= n, "1 <= k <= n violated");
    std::vector<std::pair<std::string, SubspaceCode>> candidates;
    auto attempt = [&](const char* rule, auto&& build) {
        try {
            candidates.emplace_back(rule, build());
        } catch (const std::exception&) {
        }
    };

    if (k > n - k)
        attempt("dual", [&] {
            SubspaceCode inner = residual_registry(n, d, n - k, f);
            require(inner.size() <= (uint64_t{1} << 20), "dual inner code too large");
            SubspaceCode dual = dualize(inner);
            dual.provenance = inner.provenance;
            return dual;
        });
    if (d <= 2 * k && k >= 1 && n % k == 0 && n > k)
        attempt("spread", [&] { return spread_code(n, k, f); });
    if (k == 3 && d == 4) attempt("construction_0", [&] { return construction_0(n, f); });
    if (k >= 4 && d == 4) {
        attempt("construction_Ia", [&] { return construction_Ia(n, k, f); });
        attempt("construction_Ib", [&] { return construction_Ib(n, k, f); });
    }
    if (k >= 4 && d == 2 * (k - 1))
        attempt("construction_II", [&] { return construction_II(n, k, f); });
    attempt("lifted_mrd", [&] { return lifted_mrd_code(n, d, k, f); });

    if (candidates.empty())
        attempt("trivial", [&] {
            IdVector v = full_rect_vector(n, k);
            FerrersDiagram fd = ferrers_of_vector(v);
            Stratum st{v, Matrix(f, k, fd.num_cols()), {}, {0, 0}, "trivial"};
            return SubspaceCode{f, n, k, 2 * k, {st}, ""};
        });
    require(!candidates.empty(), "no registry rule applies");

    size_t best = 0;
    for (size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i].second.size() > candidates[best].second.size()) best = i;

    SubspaceCode out = std::move(candidates[best].second);
    std::string tag = "registry n=" + std::to_string(n) + " d=" + std::to_string(d) +
                      " k=" + std::to_string(k) + " rule=" + candidates[best].first;
    if (d <= 2) tag += " out_of_scope_distance";
    out.provenance = out.provenance.empty() ? tag : tag + " | " + out.provenance;
    return out;
}

std::vector<RecipeLine> parse_recipe(const std::string& text) {
    std::vector<RecipeLine> out;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        auto fail = [&](const std::string& why) {
            throw domain_error("recipe line " + std::to_string(lineno) + ": " + why);
        };
        if (tok.size() != 6 || tok[0] != "prefix" || tok[2] != "classes" || tok[4] != "mode")
            fail("expected 'prefix <bits> classes <c1,c2,...> mode <ia|full|pending>'");
        RecipeLine rl;
        for (char c : tok[1]) {
            if (c != '0' && c != '1') fail("prefix must be a 0/1 string");
            rl.prefix.push_back(c == '1' ? 1 : 0);
        }
        std::string list = tok[3];
        size_t pos = 0;
        while (pos <= list.size()) {
            size_t comma = list.find(',', pos);
            std::string item = list.substr(pos, comma == std::string::npos
                                                    ? std::string::npos
                                                    : comma - pos);
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                fail("bad class list");
            rl.classes.push_back(std::strtoull(item.c_str(), nullptr, 10));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        rl.mode = tok[5];
        if (rl.mode != "ia" && rl.mode != "full" && rl.mode != "pending")
            fail("mode must be ia, full, or pending");
        out.push_back(std::move(rl));
    }
    require(!out.empty(), "recipe has no lines");
    return out;
}

SubspaceCode construction_recipe(size_t n, size_t k, const Field& f,
                                 const std::vector<RecipeLine>& lines,
                                 const ResidualProvider& residual) {
    require(k >= 4, "k >= 4 violated");
    require(n >= 2 * k + 2, "n >= 2k+2 violated");
    uint32_t q = f.q();
    size_t m = n - k;
    SuffixPartition part = one_factorization(m);
    size_t L = part.ell();

    for (size_t a = 0; a < lines.size(); ++a) {
        const RecipeLine& rl = lines[a];
        require(rl.prefix.size() == k, "prefix length mismatch");
        require(weight(rl.prefix) == k - 2, "prefix weight must be k-2");
        require(!rl.classes.empty(), "line schedules no classes");
        std::set<size_t> seen;
        for (size_t c : rl.classes) {
            require(c < L, "class index out of range");
            require(seen.insert(c).second, "class repeated in line");
        }
        for (size_t b = 0; b < a; ++b) {
            require(lines[b].prefix != rl.prefix, "duplicate prefix");
            bool shared = false;
            for (size_t c : rl.classes)
                shared |= std::count(lines[b].classes.begin(), lines[b].classes.end(), c) > 0;
            if (shared)
                require(hamming_distance(lines[b].prefix, rl.prefix) >= 4,
                        "classes shared between prefixes at Hamming distance < 4");
        }
        ZeroPair zp = zero_pair_of_prefix(rl.prefix);
        if (rl.mode == "full")
            require(rl.classes.size() == 1, "full mode takes exactly one class");
        if (rl.mode == "pending")
            require(rl.classes.size() <= q, "pending mode holds at most q classes");
        if (rl.mode == "ia")
            require(rl.classes.size() <=
                        checked_pow(q, static_cast<unsigned>(zero_pair_dots(zp))),
                    "number of classes <= q^dots violated");
    }

    std::vector<SkeletonEntry> entries;
    entries.push_back(SkeletonEntry{full_rect_vector(n, k), 2, {0, 0}, std::nullopt, "A0"});

    for (const RecipeLine& rl : lines) {
        ZeroPair zp = zero_pair_of_prefix(rl.prefix);
        for (size_t ordinal = 0; ordinal < rl.classes.size(); ++ordinal) {
            size_t cls = rl.classes[ordinal];
            for (const auto& suffix : part.classes[cls]) {
                std::string label = rl.mode + " " + id_to_string(rl.prefix) + " class " +
                                    std::to_string(cls) + " pair " + pair_label(suffix);
                if (rl.mode == "full") {
                    entries.push_back(SkeletonEntry{concat(rl.prefix, suffix), 2, {0, 0},
                                                    std::nullopt, std::move(label)});
                } else if (rl.mode == "pending") {
                    Matrix bf(f, 1, 1);
                    bf.set(0, 0, static_cast<uint32_t>(ordinal));
                    entries.push_back(SkeletonEntry{concat(rl.prefix, suffix), 2,
                                                    PendingBlockSpec{1, 1}, std::move(bf),
                                                    std::move(label)});
                } else {
                    entries.push_back(blocked_entry(f, rl.prefix, zp, suffix, ordinal,
                                                    std::move(label)));
                }
            }
        }
    }

    SubspaceCode code = multilevel(f, entries, 2);
    SubspaceCode res = run_residual(residual, m, 4, k, f);
    append_residual(code, res, k);
    code.d = 4;
    code.provenance = "construction_recipe " + param_tag(q, n, k) + " lines=" +
                      std::to_string(lines.size()) + " residual=[" + res.provenance + "]";
    return code;
}

} // namespace grasscode
