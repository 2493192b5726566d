#include "grasscode/skeleton.hpp"

#include <algorithm>

namespace grasscode {

namespace {

IdVector pair_vector(size_t m, size_t y1, size_t y2) {
    IdVector v(m, 0);
    v[y1 - 1] = 1;
    v[y2 - 1] = 1;
    return v;
}

} // namespace

SuffixPartition one_factorization(size_t m) {
    require(m >= 2, "one_factorization requires m >= 2");
    SuffixPartition part;
    part.m = m;
    if (m % 2 == 0) {
        // circle method: fix point m, rotate the others
        size_t r_count = m - 1;
        for (size_t r = 0; r < r_count; ++r) {
            std::vector<std::pair<size_t, size_t>> pairs;
            pairs.emplace_back(r + 1, m);
            for (size_t i = 1; i <= (m - 2) / 2; ++i) {
                size_t a = (r + i) % (m - 1) + 1;
                size_t b = (r + (m - 1) - i) % (m - 1) + 1;
                pairs.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(pairs.begin(), pairs.end());
            std::vector<IdVector> cls;
            for (auto [a, b] : pairs) cls.push_back(pair_vector(m, a, b));
            part.classes.push_back(std::move(cls));
        }
    } else {
        for (size_t r = 0; r < m; ++r) {
            std::vector<std::pair<size_t, size_t>> pairs;
            for (size_t i = 1; i <= (m - 1) / 2; ++i) {
                size_t a = (r + i) % m + 1;
                size_t b = (r + m - i) % m + 1;
                pairs.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(pairs.begin(), pairs.end());
            std::vector<IdVector> cls;
            for (auto [a, b] : pairs) cls.push_back(pair_vector(m, a, b));
            part.classes.push_back(std::move(cls));
        }
    }
    return part;
}

std::pair<size_t, size_t> ones_of_pair(const IdVector& v) {
    std::vector<size_t> ones;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) ones.push_back(i + 1);
    require(ones.size() == 2, "vector does not have weight 2");
    return {ones[0], ones[1]};
}

uint64_t SubspaceCode::size() const {
    uint64_t total = 0;
    for (const auto& s : strata) total = checked_add(total, s.count(field.q()));
    return total;
}

Subspace SubspaceCode::word(size_t stratum, uint64_t index) const {
    const Stratum& s = strata.at(stratum);
    Matrix filling = s.offset;
    uint64_t rem = index;
    for (const auto& b : s.basis) {
        uint32_t digit = static_cast<uint32_t>(rem % field.q());
        rem /= field.q();
        if (digit != 0) filling = filling + b.scaled(digit);
    }
    require(rem == 0, "word index out of range");
    return subspace_from_filling(s.v, filling);
}

std::vector<Subspace> SubspaceCode::materialize_stratum(size_t stratum) const {
    const Stratum& s = strata.at(stratum);
    uint64_t count = s.count(field.q());
    std::vector<Subspace> out;
    out.reserve(count);
    for (uint64_t u = 0; u < count; ++u) out.push_back(word(stratum, u));
    return out;
}

Stratum build_entry_stratum(const Field& f, const SkeletonEntry& entry) {
    require(entry.delta >= 1, "delta >= 1 violated");
    size_t k = weight(entry.v);
    FerrersDiagram fd = ferrers_of_vector(entry.v);
    size_t ell = fd.num_cols();
    auto rows = fd.row_lengths();

    Matrix offset(f, k, ell);
    size_t m1 = entry.block.m1, ell1 = entry.block.ell1;
    if (m1 > 0) {
        require(ell1 >= 1 && ell1 < ell, "block width must satisfy 1 <= ell1 < ell");
        require(m1 <= fd.num_rows(), "block height exceeds diagram");
        require(entry.block_filling.has_value(), "blocked entry needs a filling");
        const Matrix& bf = *entry.block_filling;
        require(bf.rows() == m1 && bf.cols() == ell1, "block filling shape mismatch");
        for (size_t i = 0; i < m1; ++i)
            for (size_t c = 0; c < ell1; ++c) {
                if (fd.has_dot(i, c)) offset.set(i, c, bf.at(i, c));
                else require(bf.at(i, c) == 0, "block filling outside diagram");
            }
    }

    std::vector<size_t> region_rows;
    for (size_t i = 0; i < fd.num_rows(); ++i) {
        size_t lead = 0;
        if (i < m1) {
            size_t start = ell - rows[i];
            lead = ell1 > start ? ell1 - start : 0;
            lead = std::min(lead, rows[i]);
        }
        region_rows.push_back(rows[i] - lead);
    }
    while (!region_rows.empty() && region_rows.back() == 0) region_rows.pop_back();

    std::vector<Matrix> basis;
    if (!region_rows.empty()) {
        FerrersDiagram region = FerrersDiagram::from_row_lengths(region_rows);
        FerrersCode rc = fdmrd_intersect(region, entry.delta, f);
        size_t shift = ell - region.num_cols();
        for (const auto& b : rc.code.basis) {
            Matrix mb(f, k, ell);
            for (size_t i = 0; i < b.rows(); ++i)
                for (size_t c = 0; c < b.cols(); ++c)
                    if (b.at(i, c) != 0) mb.set(i, c + shift, b.at(i, c));
            basis.push_back(std::move(mb));
        }
    }

    return Stratum{entry.v, std::move(offset), std::move(basis), entry.block, entry.label};
}

SubspaceCode multilevel(const Field& f, const std::vector<SkeletonEntry>& entries,
                        size_t delta) {
    require(delta >= 1, "delta >= 1 violated");
    require(!entries.empty(), "skeleton must be nonempty");
    size_t n = entries.front().v.size();
    size_t k = weight(entries.front().v);
    require(k >= 1 && k <= n, "identifying vector weight out of range");
    for (const auto& e : entries) {
        require(e.v.size() == n, "mixed ambient dimensions in skeleton");
        require(weight(e.v) == k, "mixed subspace dimensions in skeleton");
        require(e.delta == delta, "mixed deltas in skeleton");
    }
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = i + 1; j < entries.size(); ++j) {
            size_t dh = hamming_distance(entries[i].v, entries[j].v);
            if (dh < 2 * delta) {
                bool blocked = entries[i].block.m1 > 0 && entries[j].block.m1 > 0;
                require(blocked,
                        "identifying vectors at Hamming distance < 2*delta need "
                        "co-positioned value blocks");
            }
        }

    SubspaceCode code{f, n, k, 2 * delta, {}, "multilevel"};
    for (const auto& e : entries) code.strata.push_back(build_entry_stratum(f, e));
    return code;
}

SubspaceCode construction_0(size_t n, const Field& f) {
    require(n >= 8, "n >= 8 violated");
    uint32_t q = f.q();
    size_t m = n - 3;
    SuffixPartition part = one_factorization(m);
    size_t L = part.ell();
    require(L <= static_cast<size_t>(q) * q + q + 1,
            "number of suffix classes <= q^2+q+1 violated");

    std::vector<SkeletonEntry> entries;

    IdVector v0(n, 0);
    v0[0] = v0[1] = v0[2] = 1;
    entries.push_back(SkeletonEntry{v0, 2, {0, 0}, std::nullopt, "A0"});

    auto push_level = [&](const IdVector& prefix, size_t cls, size_t blk_dots,
                          uint64_t value, const char* name) {
        size_t ordinal = 0;
        for (const auto& suffix : part.classes[cls]) {
            IdVector v = prefix;
            v.insert(v.end(), suffix.begin(), suffix.end());
            SkeletonEntry e;
            e.v = std::move(v);
            e.delta = 2;
            auto [y1, y2] = ones_of_pair(suffix);
            e.label = std::string(name) + " class " + std::to_string(cls) + " pair " +
                      std::to_string(y1) + "," + std::to_string(y2);
            if (blk_dots > 0) {
                e.block = PendingBlockSpec{1, blk_dots};
                Matrix bf(f, 1, blk_dots);
                uint64_t rem = value;
                for (size_t c = 0; c < blk_dots; ++c) {
                    bf.set(0, c, static_cast<uint32_t>(rem % q));
                    rem /= q;
                }
                e.block_filling = std::move(bf);
            }
            entries.push_back(std::move(e));
            ++ordinal;
        }
        (void)ordinal;
    };

    IdVector p1{0, 0, 1}, p2{0, 1, 0}, p3{1, 0, 0};
    push_level(p1, 0, 0, 0, "A1");
    size_t a2_end = std::min<size_t>(q + 1, L);
    for (size_t cls = 1; cls < a2_end; ++cls) push_level(p2, cls, 1, cls - 1, "A2");
    for (size_t cls = q + 1; cls < L; ++cls) push_level(p3, cls, 2, cls - (q + 1), "A3");

    SubspaceCode code = multilevel(f, entries, 2);
    code.provenance =
        "construction_0 q=" + std::to_string(q) + " n=" + std::to_string(n);
    return code;
}

} // namespace grasscode
