#include "grasscode/verifier.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "grasscode/parallel.hpp"

namespace grasscode {

namespace {

constexpr uint64_t kMaterializeCap = uint64_t{1} << 22;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

uint64_t col_bit(size_t c) { return uint64_t{1} << (63 - c); }

// Words of one stratum as packed bit rows (q = 2, n <= 64 only):
// column c of the ambient space maps to bit 63-c.
struct StratumPack {
    size_t k = 0;
    uint64_t count = 0;
    std::vector<uint64_t> offset;
    std::vector<std::vector<uint64_t>> basis;

    void word(uint64_t u, uint64_t* out) const {
        std::copy(offset.begin(), offset.end(), out);
        size_t j = 0;
        for (uint64_t rem = u; rem != 0; rem >>= 1, ++j)
            if (rem & 1)
                for (size_t r = 0; r < k; ++r) out[r] ^= basis[j][r];
    }
};

StratumPack pack_stratum(const SubspaceCode& code, size_t idx) {
    const Stratum& s = code.strata[idx];
    require(code.field.q() == 2 && code.n <= 64, "packed path needs q=2, n<=64");
    size_t n = code.n, k = code.k;
    std::vector<size_t> pivots, nonpivots;
    for (size_t c = 0; c < n; ++c) (s.v[c] ? pivots : nonpivots).push_back(c);
    size_t ell = s.offset.cols();
    size_t shift = nonpivots.size() - ell;

    StratumPack p;
    p.k = k;
    p.count = s.count(2);
    p.offset.assign(k, 0);
    for (size_t i = 0; i < k; ++i) p.offset[i] |= col_bit(pivots[i]);
    for (size_t i = 0; i < k; ++i)
        for (size_t c = 0; c < ell; ++c)
            if (s.offset.at(i, c) != 0) p.offset[i] |= col_bit(nonpivots[shift + c]);
    for (const auto& b : s.basis) {
        std::vector<uint64_t> rows(k, 0);
        for (size_t i = 0; i < k; ++i)
            for (size_t c = 0; c < ell; ++c)
                if (b.at(i, c) != 0) rows[i] |= col_bit(nonpivots[shift + c]);
        p.basis.push_back(std::move(rows));
    }
    return p;
}

size_t packed_rank(const uint64_t* rows, size_t count) {
    return static_cast<size_t>(
        stacked_rank(rows, static_cast<int>(count), nullptr, 0));
}

struct PairFailure {
    size_t si, sj;
    uint64_t u, w;
    size_t dist;
};

constexpr size_t kFailureCap = 16;

void append_pair_failures(VerificationReport& rep, const std::vector<PairFailure>& fails,
                          const SubspaceCode& code) {
    for (const auto& f : fails) {
        if (rep.failures.size() >= kFailureCap) break;
        std::ostringstream os;
        if (f.dist == 0)
            os << "duplicate word: ";
        else
            os << "distance " << f.dist << " < " << code.d << ": ";
        os << "stratum " << f.si << " word " << f.u << " vs stratum " << f.sj
           << " word " << f.w;
        rep.failures.push_back(os.str());
    }
}

// Exact minimum over Gray-code enumeration of all nonzero combinations.
size_t packed_min_rank_exact(const std::vector<std::vector<uint64_t>>& basis, size_t m,
                             uint64_t total) {
    unsigned nw = worker_count();
    std::vector<size_t> mins(std::max<uint64_t>(1, std::min<uint64_t>(nw, total - 1)),
                             SIZE_MAX);
    parallel_chunks(total - 1, [&](unsigned w, uint64_t cb, uint64_t ce) {
        std::vector<uint64_t> cur(m, 0);
        uint64_t first = 1 + cb;
        uint64_t g = first ^ (first >> 1);
        size_t j = 0;
        for (uint64_t rem = g; rem != 0; rem >>= 1, ++j)
            if (rem & 1)
                for (size_t r = 0; r < m; ++r) cur[r] ^= basis[j][r];
        size_t local = packed_rank(cur.data(), m);
        for (uint64_t u = first + 1; u < 1 + ce; ++u) {
            size_t flip = static_cast<size_t>(std::countr_zero(u));
            for (size_t r = 0; r < m; ++r) cur[r] ^= basis[flip][r];
            local = std::min(local, packed_rank(cur.data(), m));
        }
        mins[w] = std::min(mins[w], local);
    });
    size_t best = SIZE_MAX;
    for (size_t v : mins) best = std::min(best, v);
    return best;
}

} // namespace

RankWeightResult rank_weight_enumerate(const LinearMatrixCode& code,
                                       uint64_t exact_limit, uint64_t sample_count,
                                       uint64_t seed) {
    if (code.dim() == 0) {
        RankWeightResult res;
        res.degenerate = true;
        return res;
    }
    const Field& f = code.field;
    uint32_t q = f.q();
    size_t dim = code.dim(), m = code.rows;
    bool fits_packed = q == 2 && code.cols <= 64;

    bool exact = true;
    uint64_t total = 0;
    try {
        total = checked_pow(q, dim);
        exact = total <= exact_limit;
    } catch (const overflow_error&) {
        exact = false;
    }

    RankWeightResult res;
    res.min_rank = SIZE_MAX;

    if (exact && fits_packed) {
        std::vector<std::vector<uint64_t>> pb;
        for (const auto& b : code.basis) {
            std::vector<uint64_t> rows(m, 0);
            for (size_t i = 0; i < m; ++i)
                for (size_t c = 0; c < code.cols; ++c)
                    if (b.at(i, c) != 0) rows[i] |= col_bit(c);
            pb.push_back(std::move(rows));
        }
        res.min_rank = packed_min_rank_exact(pb, m, total);
        res.words_checked = total - 1;
        return res;
    }

    if (exact) {
        std::vector<uint32_t> digits(dim, 0);
        Matrix cur(f, m, code.cols);
        for (uint64_t step = 1; step < total; ++step) {
            size_t pos = 0;
            while (true) {
                cur = cur + code.basis[pos];
                if (++digits[pos] == q) {
                    digits[pos] = 0;
                    ++pos;
                } else {
                    break;
                }
            }
            res.min_rank = std::min(res.min_rank, cur.rank());
        }
        res.words_checked = total - 1;
        return res;
    }

    res.sampled = true;
    auto consider = [&](const Matrix& w) {
        res.min_rank = std::min(res.min_rank, w.rank());
        ++res.words_checked;
    };
    for (const auto& b : code.basis) consider(b);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j) consider(code.basis[i] + code.basis[j]);

    std::mt19937_64 rng(seed);
    for (uint64_t s = 0; s < sample_count; ++s) {
        Matrix cur(f, m, code.cols);
        bool nonzero = false;
        for (size_t j = 0; j < dim; ++j) {
            uint32_t digit = static_cast<uint32_t>(rng() % q);
            if (digit != 0) {
                cur = cur + code.basis[j].scaled(digit);
                nonzero = true;
            }
        }
        if (!nonzero) {
            cur = code.basis[0];
        }
        consider(cur);
    }
    return res;
}

VerificationReport verify_exhaustive(const SubspaceCode& code, uint64_t threshold) {
    Timer timer;
    VerificationReport rep;
    rep.mode = "exhaustive";
    rep.q = code.field.q();
    rep.n = code.n;
    rep.k = code.k;
    rep.declared_d = code.d;
    uint64_t M = code.size();
    require(M <= threshold,
            "code size exceeds exhaustive threshold (use stratified mode)");
    rep.m = M;
    for (const auto& s : code.strata)
        rep.stratum_counts.emplace_back(s.label, s.count(code.field.q()));
    rep.exact = true;
    if (M <= 1) {
        rep.certified_min_distance = 2 * code.k;
        rep.elapsed_seconds = timer.seconds();
        return rep;
    }

    size_t k = code.k;
    bool packed = code.field.q() == 2 && code.n <= 64;
    if (packed) {
        std::vector<uint64_t> all(M * k);
        std::vector<std::pair<size_t, uint64_t>> origin(M);
        uint64_t pos = 0;
        for (size_t si = 0; si < code.strata.size(); ++si) {
            StratumPack p = pack_stratum(code, si);
            for (uint64_t u = 0; u < p.count; ++u, ++pos) {
                p.word(u, &all[pos * k]);
                origin[pos] = {si, u};
            }
        }

        std::vector<size_t> order(M);
        std::iota(order.begin(), order.end(), 0);
        auto lex_less = [&](size_t a, size_t b) {
            return std::lexicographical_compare(&all[a * k], &all[a * k + k],
                                                &all[b * k], &all[b * k + k]);
        };
        std::sort(order.begin(), order.end(), lex_less);
        for (size_t i = 1; i < M; ++i)
            if (std::equal(&all[order[i - 1] * k], &all[order[i - 1] * k + k],
                           &all[order[i] * k]))
                ++rep.duplicates;

        unsigned nw = worker_count();
        std::vector<size_t> mins(nw, SIZE_MAX);
        std::vector<std::vector<PairFailure>> fails(nw);
        std::vector<uint64_t> stacked_buffer;
        parallel_chunks(M, [&](unsigned w, uint64_t b, uint64_t e) {
            std::vector<uint64_t> buf(2 * k);
            size_t local = SIZE_MAX;
            for (uint64_t i = b; i < e; ++i) {
                std::copy(&all[i * k], &all[i * k + k], buf.begin());
                for (uint64_t j = i + 1; j < M; ++j) {
                    std::copy(&all[j * k], &all[j * k + k], buf.begin() + k);
                    size_t r = packed_rank(buf.data(), 2 * k);
                    size_t dist = 2 * (r - k);
                    local = std::min(local, dist);
                    if (dist < code.d && fails[w].size() < kFailureCap)
                        fails[w].push_back({origin[i].first, origin[j].first,
                                            origin[i].second, origin[j].second, dist});
                }
            }
            mins[w] = std::min(mins[w], local);
        });
        (void)stacked_buffer;
        size_t best = SIZE_MAX;
        for (size_t v : mins) best = std::min(best, v);
        rep.certified_min_distance = best;
        std::vector<PairFailure> merged;
        for (auto& fv : fails)
            for (auto& pf : fv) merged.push_back(pf);
        append_pair_failures(rep, merged, code);
        rep.elapsed_seconds = timer.seconds();
        return rep;
    }

    std::vector<Subspace> words;
    words.reserve(M);
    std::vector<std::pair<size_t, uint64_t>> origin;
    for (size_t si = 0; si < code.strata.size(); ++si) {
        uint64_t count = code.strata[si].count(code.field.q());
        for (uint64_t u = 0; u < count; ++u) {
            words.push_back(code.word(si, u));
            origin.emplace_back(si, u);
        }
    }
    size_t best = SIZE_MAX;
    std::vector<PairFailure> merged;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
            size_t dist = subspace_distance(words[i], words[j]);
            if (dist == 0) ++rep.duplicates;
            best = std::min(best, dist);
            if (dist < code.d && merged.size() < kFailureCap)
                merged.push_back({origin[i].first, origin[j].first, origin[i].second,
                                  origin[j].second, dist});
        }
    rep.certified_min_distance = best;
    append_pair_failures(rep, merged, code);
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_stratified(const SubspaceCode& code) {
    Timer timer;
    require(!code.strata.empty(),
            "provenance missing: stratified verification needs per-stratum structure");
    VerificationReport rep;
    rep.mode = "stratified";
    rep.q = code.field.q();
    rep.n = code.n;
    rep.k = code.k;
    rep.declared_d = code.d;
    rep.m = code.size();
    rep.exact = true;
    for (const auto& s : code.strata)
        rep.stratum_counts.emplace_back(s.label, s.count(code.field.q()));

    size_t k = code.k;
    size_t certified = SIZE_MAX;

    for (size_t i = 0; i < code.strata.size(); ++i) {
        const Stratum& s = code.strata[i];
        if (s.basis.empty()) continue;
        LinearMatrixCode lc{code.field, k, s.offset.cols(), s.basis, 0};
        RankWeightResult rw =
            rank_weight_enumerate(lc, uint64_t{1} << 24, 1000000, 0x100001 + i);
        ++rep.within_stratum_enumerations;
        if (rw.sampled) {
            rep.sampled_rank_checks = true;
            rep.exact = false;
        }
        size_t dist = 2 * rw.min_rank;
        certified = std::min(certified, dist);
        if (dist < code.d) {
            std::ostringstream os;
            os << "stratum " << i << " (" << s.label << "): rank weight gives distance "
               << dist << " < " << code.d;
            rep.failures.push_back(os.str());
        }
    }

    bool packed = code.field.q() == 2 && code.n <= 64;
    uint32_t q = code.field.q();

    // Identifying-vector index: strata sharing a vector form one group, and
    // vector-pair Hamming distances are computed once per group pair.
    struct Group {
        IdVector v;
        std::vector<size_t> strata;
        uint64_t words = 0;
    };
    std::vector<Group> groups;
    {
        std::map<IdVector, size_t> index;
        for (size_t i = 0; i < code.strata.size(); ++i) {
            auto [it, fresh] = index.try_emplace(code.strata[i].v, groups.size());
            if (fresh) groups.push_back(Group{code.strata[i].v, {}, 0});
            Group& g = groups[it->second];
            g.strata.push_back(i);
            g.words = checked_add(g.words, code.strata[i].count(q));
        }
    }

    struct PackedGroup {
        std::vector<uint64_t> words;
        std::vector<std::pair<size_t, uint64_t>> origin;
    };
    std::map<size_t, PackedGroup> pack_cache;
    std::map<size_t, std::vector<std::pair<Subspace, std::pair<size_t, uint64_t>>>>
        word_cache;
    auto packed_of = [&](size_t gi) -> const PackedGroup& {
        auto it = pack_cache.find(gi);
        if (it == pack_cache.end()) {
            const Group& g = groups[gi];
            require(g.words <= kMaterializeCap,
                    "word group too large to materialize exactly");
            PackedGroup pg;
            pg.words.reserve(g.words * k);
            pg.origin.reserve(g.words);
            std::vector<uint64_t> buf(k);
            for (size_t si : g.strata) {
                StratumPack p = pack_stratum(code, si);
                for (uint64_t u = 0; u < p.count; ++u) {
                    p.word(u, buf.data());
                    pg.words.insert(pg.words.end(), buf.begin(), buf.end());
                    pg.origin.emplace_back(si, u);
                }
            }
            it = pack_cache.emplace(gi, std::move(pg)).first;
        }
        return it->second;
    };
    auto words_of = [&](size_t gi)
        -> const std::vector<std::pair<Subspace, std::pair<size_t, uint64_t>>>& {
        auto it = word_cache.find(gi);
        if (it == word_cache.end()) {
            const Group& g = groups[gi];
            require(g.words <= kMaterializeCap,
                    "word group too large to materialize exactly");
            std::vector<std::pair<Subspace, std::pair<size_t, uint64_t>>> ws;
            ws.reserve(g.words);
            for (size_t si : g.strata) {
                std::vector<Subspace> sw = code.materialize_stratum(si);
                for (uint64_t u = 0; u < sw.size(); ++u)
                    ws.emplace_back(std::move(sw[u]), std::make_pair(si, u));
            }
            it = word_cache.emplace(gi, std::move(ws)).first;
        }
        return it->second;
    };

    size_t min_skipped_dh = SIZE_MAX;
    std::vector<PairFailure> merged;
    uint64_t duplicates = 0;

    // Same-vector groups: pivot columns coincide, so row-space differences are
    // supported on the free columns and distance is twice the rank of the
    // difference. When the group forms an affine space a single exact
    // rank-weight enumeration of the difference code certifies every pair.
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        const Group& g = groups[gi];
        if (g.strata.size() < 2) continue;
        uint64_t sum_sq = 0;
        for (size_t si : g.strata) {
            uint64_t c = code.strata[si].count(q);
            sum_sq = checked_add(sum_sq, checked_mul(c, c));
        }
        uint64_t inner = (checked_mul(g.words, g.words) - sum_sq) / 2;
        rep.dangerous_pairs = checked_add(rep.dangerous_pairs, inner);

        if (packed) {
            const PackedGroup& W = packed_of(gi);
            size_t cnt = W.origin.size();
            std::vector<size_t> order(cnt);
            std::iota(order.begin(), order.end(), 0);
            auto lex_less = [&](size_t a, size_t b) {
                return std::lexicographical_compare(
                    &W.words[a * k], &W.words[a * k + k], &W.words[b * k],
                    &W.words[b * k + k]);
            };
            std::sort(order.begin(), order.end(), lex_less);
            uint64_t local_dups = 0;
            for (size_t i = 1; i < cnt; ++i)
                if (std::equal(&W.words[order[i - 1] * k],
                               &W.words[order[i - 1] * k + k],
                               &W.words[order[i] * k])) {
                    ++local_dups;
                    if (merged.size() < 4 * kFailureCap)
                        merged.push_back({W.origin[order[i - 1]].first,
                                          W.origin[order[i]].first,
                                          W.origin[order[i - 1]].second,
                                          W.origin[order[i]].second, 0});
                }
            duplicates += local_dups;
            if (local_dups) certified = 0;

            bool affine = local_dups == 0;
            std::vector<std::vector<uint64_t>> dbasis;
            if (affine) {
                constexpr size_t kAffineDimCap = 24;
                std::map<size_t, size_t> lead_index;
                auto lead_of = [&](const std::vector<uint64_t>& x) -> size_t {
                    for (size_t r = 0; r < k; ++r)
                        if (x[r])
                            return r * 64 +
                                   static_cast<size_t>(std::countl_zero(x[r]));
                    return SIZE_MAX;
                };
                for (size_t i = 1; i < cnt && affine; ++i) {
                    std::vector<uint64_t> diff(k);
                    for (size_t r = 0; r < k; ++r)
                        diff[r] = W.words[i * k + r] ^ W.words[r];
                    while (true) {
                        size_t lp = lead_of(diff);
                        if (lp == SIZE_MAX) break;
                        auto it = lead_index.find(lp);
                        if (it == lead_index.end()) {
                            if (dbasis.size() >= kAffineDimCap) {
                                affine = false;
                            } else {
                                lead_index.emplace(lp, dbasis.size());
                                dbasis.push_back(diff);
                            }
                            break;
                        }
                        const auto& b = dbasis[it->second];
                        for (size_t r = 0; r < k; ++r) diff[r] ^= b[r];
                    }
                }
                affine = affine && (uint64_t{1} << dbasis.size()) == cnt;
            }
            if (affine) {
                size_t mr = packed_min_rank_exact(dbasis, k,
                                                  uint64_t{1} << dbasis.size());
                ++rep.within_stratum_enumerations;
                size_t dist = 2 * mr;
                certified = std::min(certified, dist);
                if (dist < code.d) {
                    std::ostringstream os;
                    os << "same-vector group at stratum " << g.strata.front() << " ("
                       << code.strata[g.strata.front()].label
                       << "): rank weight gives distance " << dist << " < " << code.d;
                    rep.failures.push_back(os.str());
                }
            } else {
                std::vector<uint64_t> buf(2 * k);
                for (size_t i = 0; i < cnt; ++i) {
                    std::copy(&W.words[i * k], &W.words[i * k + k], buf.begin());
                    for (size_t j = i + 1; j < cnt; ++j) {
                        std::copy(&W.words[j * k], &W.words[j * k + k],
                                  buf.begin() + k);
                        size_t r = packed_rank(buf.data(), 2 * k);
                        size_t dist = 2 * (r - k);
                        certified = std::min(certified, dist);
                        if (dist != 0 && dist < code.d &&
                            merged.size() < 4 * kFailureCap)
                            merged.push_back({W.origin[i].first, W.origin[j].first,
                                              W.origin[i].second, W.origin[j].second,
                                              dist});
                    }
                }
            }
        } else {
            const auto& W = words_of(gi);
            for (size_t i = 0; i < W.size(); ++i)
                for (size_t j = i + 1; j < W.size(); ++j) {
                    size_t dist = subspace_distance(W[i].first, W[j].first);
                    certified = std::min(certified, dist);
                    if (dist == 0) ++duplicates;
                    if (dist < code.d && merged.size() < 4 * kFailureCap)
                        merged.push_back({W[i].second.first, W[j].second.first,
                                          W[i].second.second, W[j].second.second,
                                          dist});
                }
        }
    }

    for (size_t gi = 0; gi < groups.size(); ++gi) {
        for (size_t gj = gi + 1; gj < groups.size(); ++gj) {
            size_t dh = hamming_distance(groups[gi].v, groups[gj].v);
            uint64_t pair_count = checked_mul(groups[gi].words, groups[gj].words);
            if (dh >= code.d) {
                rep.skipped_pairs = checked_add(rep.skipped_pairs, pair_count);
                min_skipped_dh = std::min(min_skipped_dh, dh);
                continue;
            }
            rep.dangerous_pairs = checked_add(rep.dangerous_pairs, pair_count);
            if (packed) {
                const PackedGroup& A = packed_of(gi);
                const PackedGroup& B = packed_of(gj);
                unsigned nw = worker_count();
                std::vector<size_t> mins(nw, SIZE_MAX);
                std::vector<uint64_t> dups(nw, 0);
                std::vector<std::vector<PairFailure>> fails(nw);
                parallel_chunks(A.origin.size(),
                                [&](unsigned w, uint64_t ub, uint64_t ue) {
                    std::vector<uint64_t> buf(2 * k);
                    size_t local = SIZE_MAX;
                    for (uint64_t u = ub; u < ue; ++u) {
                        std::copy(&A.words[u * k], &A.words[u * k + k], buf.begin());
                        for (uint64_t v = 0; v < B.origin.size(); ++v) {
                            std::copy(&B.words[v * k], &B.words[v * k + k],
                                      buf.begin() + k);
                            size_t r = packed_rank(buf.data(), 2 * k);
                            size_t dist = 2 * (r - k);
                            local = std::min(local, dist);
                            if (dist == 0) ++dups[w];
                            if (dist < code.d && fails[w].size() < kFailureCap)
                                fails[w].push_back({A.origin[u].first,
                                                    B.origin[v].first,
                                                    A.origin[u].second,
                                                    B.origin[v].second, dist});
                        }
                    }
                    mins[w] = std::min(mins[w], local);
                });
                for (size_t v : mins) certified = std::min(certified, v);
                for (uint64_t v : dups) duplicates += v;
                for (auto& fv : fails)
                    for (auto& pf : fv)
                        if (merged.size() < 4 * kFailureCap) merged.push_back(pf);
            } else {
                const auto& A = words_of(gi);
                const auto& B = words_of(gj);
                for (size_t u = 0; u < A.size(); ++u)
                    for (size_t v = 0; v < B.size(); ++v) {
                        size_t dist = subspace_distance(A[u].first, B[v].first);
                        certified = std::min(certified, dist);
                        if (dist == 0) ++duplicates;
                        if (dist < code.d && merged.size() < 4 * kFailureCap)
                            merged.push_back({A[u].second.first, B[v].second.first,
                                              A[u].second.second, B[v].second.second,
                                              dist});
                    }
            }
        }
    }

    certified = std::min(certified, min_skipped_dh);
    rep.duplicates = duplicates;
    rep.certified_min_distance = certified == SIZE_MAX ? 2 * k : certified;
    append_pair_failures(rep, merged, code);
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

AuditReport audit_theorem4(const SubspaceCode& code, uint64_t samples, uint64_t seed) {
    AuditReport rep;
    size_t S = code.strata.size();
    if (S < 2) return rep;

    struct Sig {
        bool blocked = false;
        size_t m1 = 0, ell1 = 0;
        std::vector<size_t> piv_prefix;
        std::vector<size_t> block_cols;
        bool row_cond = false;
    };
    std::vector<Sig> sigs(S);
    for (size_t i = 0; i < S; ++i) {
        const Stratum& s = code.strata[i];
        if (s.block.m1 == 0) continue;
        Sig sig;
        sig.blocked = true;
        sig.m1 = s.block.m1;
        sig.ell1 = s.block.ell1;
        FerrersDiagram fd = ferrers_of_vector(s.v);
        sig.row_cond = fd.row_length(sig.m1) < fd.row_length(sig.m1 - 1);
        std::vector<size_t> pivots;
        for (size_t c = 0; c < s.v.size(); ++c)
            if (s.v[c]) pivots.push_back(c);
        sig.piv_prefix.assign(pivots.begin(), pivots.begin() + sig.m1);
        for (size_t c = 0; c < sig.ell1; ++c)
            sig.block_cols.push_back(bb_column_position(s.v, c));
        sigs[i] = std::move(sig);
    }

    std::mt19937_64 rng(seed);
    uint64_t attempt_cap = samples * 64;
    while (rep.checked < samples && rep.attempts < attempt_cap) {
        ++rep.attempts;
        size_t i = rng() % S, j = rng() % S;
        if (i == j) continue;
        const Sig& a = sigs[i];
        const Sig& b = sigs[j];
        if (!a.blocked || !b.blocked) continue;
        if (a.m1 != b.m1 || a.ell1 != b.ell1) continue;
        if (a.piv_prefix != b.piv_prefix || a.block_cols != b.block_cols) continue;
        if (!a.row_cond || !b.row_cond) continue;
        uint64_t u = rng() % code.strata[i].count(code.field.q());
        uint64_t w = rng() % code.strata[j].count(code.field.q());
        Subspace X = code.word(i, u);
        Subspace Y = code.word(j, w);
        ++rep.checked;
        bool inequality_holds = check_theorem4(X, Y, code.strata[i].block);
        size_t dist = subspace_distance(X, Y);
        if (!inequality_holds || dist < code.d) {
            if (rep.failures.size() < 32) {
                std::ostringstream os;
                os << "stratum " << i << " word " << u << " vs stratum " << j << " word "
                   << w << ": ";
                if (!inequality_holds) os << "block distance inequality violated";
                if (!inequality_holds && dist < code.d) os << "; ";
                if (dist < code.d) os << "distance " << dist << " < " << code.d;
                rep.failures.push_back(os.str());
            }
        }
    }
    return rep;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "mode=" << mode << "\n";
    os << "q=" << q << " n=" << n << " k=" << k << "\n";
    os << "declared_d=" << declared_d << "\n";
    os << "m=" << m << "\n";
    os << "strata=" << stratum_counts.size() << "\n";
    os << "certified_min_distance=" << certified_min_distance << "\n";
    os << "exact=" << (exact ? "true" : "false") << "\n";
    os << "sampled_rank_checks=" << (sampled_rank_checks ? "true" : "false") << "\n";
    os << "within_stratum_enumerations=" << within_stratum_enumerations << "\n";
    os << "skipped_pairs=" << skipped_pairs << "\n";
    os << "dangerous_pairs=" << dangerous_pairs << "\n";
    os << "duplicates=" << duplicates << "\n";
    os << "failures=" << failures.size() << "\n";
    for (const auto& f : failures) os << "failure: " << f << "\n";
    return os.str();
}

} // namespace grasscode
