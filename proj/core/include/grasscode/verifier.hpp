#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grasscode/skeleton.hpp"

namespace grasscode {

struct RankWeightResult {
    size_t min_rank = 0;
    bool sampled = false;
    bool degenerate = false;
    uint64_t words_checked = 0;
};

// Minimum rank over the nonzero words of a linear matrix code. Enumerates
// exactly when the code has at most exact_limit words; otherwise checks the
// basis, all pairwise basis sums, and sample_count pseudo-random words and
// reports the result as sampled.
RankWeightResult rank_weight_enumerate(const LinearMatrixCode& code,
                                       uint64_t exact_limit = uint64_t{1} << 24,
                                       uint64_t sample_count = 1000000,
                                       uint64_t seed = 0x5deece66dULL);

struct VerificationReport {
    std::string mode;
    uint32_t q = 0;
    size_t n = 0, k = 0;
    size_t declared_d = 0;
    uint64_t m = 0;
    size_t certified_min_distance = 0;
    bool exact = false;
    bool sampled_rank_checks = false;
    uint64_t duplicates = 0;
    uint64_t within_stratum_enumerations = 0;
    uint64_t skipped_pairs = 0;
    uint64_t dangerous_pairs = 0;
    double elapsed_seconds = 0;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, uint64_t>> stratum_counts;

    bool ok(size_t expected_distance) const {
        return failures.empty() && duplicates == 0 &&
               certified_min_distance >= expected_distance;
    }
    std::string to_text() const;
};

// Materializes every word and takes the exact pairwise minimum distance.
// Errors when the code has more than threshold words.
VerificationReport verify_exhaustive(const SubspaceCode& code,
                                     uint64_t threshold = 20000);

// Certifies a lower bound on the minimum distance without enumerating all
// pairs: rank-weight enumeration inside each stratum, Hamming-distance
// separation between strata, and exact pairwise checks for the remaining
// dangerous stratum pairs (including same-identifying-vector duplicates).
VerificationReport verify_stratified(const SubspaceCode& code);

struct AuditReport {
    uint64_t checked = 0;
    uint64_t attempts = 0;
    std::vector<std::string> failures;
};

// Samples pairs of words from co-blocked strata and checks both the
// block-rank distance inequality and the declared minimum distance.
AuditReport audit_theorem4(const SubspaceCode& code, uint64_t samples,
                           uint64_t seed = 1);

} // namespace grasscode
