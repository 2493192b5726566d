#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grasscode/rank_metric.hpp"

namespace grasscode {

// Partition of all weight-2 vectors of length m into classes of pairwise
// position-disjoint vectors (a one-factorization of K_m, near-one-
// factorization for odd m).
struct SuffixPartition {
    size_t m = 0;
    std::vector<std::vector<IdVector>> classes;
    size_t ell() const { return classes.size(); }
};

SuffixPartition one_factorization(size_t m);

// The one-positions (1-based) of a weight-2 vector.
std::pair<size_t, size_t> ones_of_pair(const IdVector& v);

// One stratum of a constructed code: every subspace with identifying vector
// v whose bounding-box filling is offset + an F_q-combination of the basis
// matrices. All matrices are k x ell in bounding-box coordinates.
struct Stratum {
    IdVector v;
    Matrix offset;
    std::vector<Matrix> basis;
    PendingBlockSpec block{0, 0};
    std::string label;

    size_t dim() const { return basis.size(); }
    uint64_t count(uint32_t q) const { return checked_pow(q, basis.size()); }
};

struct SubspaceCode {
    Field field;
    size_t n = 0, k = 0, d = 0;
    std::vector<Stratum> strata;
    std::string provenance;

    uint64_t size() const;
    Subspace word(size_t stratum, uint64_t index) const;
    std::vector<Subspace> materialize_stratum(size_t stratum) const;
};

// One identifying vector of a multilevel skeleton, with an optional reserved
// top-left block: the block's dots are excluded from the free diagram code
// and carry the prescribed filling instead.
struct SkeletonEntry {
    IdVector v;
    size_t delta = 2;
    PendingBlockSpec block{0, 0};
    std::optional<Matrix> block_filling;
    std::string label;
};

// Builds the stratum of one entry: prescribed values on the block dots, a
// maximal diagram code (min rank distance >= delta) on the remaining dots.
Stratum build_entry_stratum(const Field& f, const SkeletonEntry& entry);

// Union of lifted diagram codes over the entries. Pairs of identifying
// vectors at Hamming distance < 2*delta must both carry co-positioned
// blocks (their value-distinctness is certified by the verifier).
SubspaceCode multilevel(const Field& f, const std::vector<SkeletonEntry>& entries,
                        size_t delta);

// The k=3, d=4 family: lifted MRD at 1110...0 plus one stratum per weight-2
// suffix, classes of a one-factorization distinguished by values planted in
// the leading dots of the top row.
SubspaceCode construction_0(size_t n, const Field& f);

} // namespace grasscode
