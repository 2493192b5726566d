#pragma once

#include <functional>
#include <string>
#include <vector>

#include "grasscode/skeleton.hpp"

namespace grasscode {

// Supplies the best known (n', M, d, k')_q code for the residual slot of
// Construction Ia/Ib. Defaults to residual_registry when empty.
using ResidualProvider =
    std::function<SubspaceCode(size_t n, size_t d, size_t k, const Field& f)>;

struct NuCapacity {
    uint64_t nu = 0;
    std::vector<size_t> prefix_dots;
};

// Capacity of the quasi-pending-block scheme over all C(k,2) weight-(k-2)
// prefixes (zeros at j < i, block holding (j-1)+(i-2) dots). The q-powers of
// the dot counts sum to nu+1.
NuCapacity nu_capacity(size_t k, uint32_t q);

SubspaceCode construction_Ia(size_t n, size_t k, const Field& f,
                             const ResidualProvider& residual = {});
SubspaceCode construction_Ib(size_t n, size_t k, const Field& f,
                             const ResidualProvider& residual = {});
SubspaceCode construction_II(size_t n, size_t k, const Field& f);

// Appends delta_cols MRD-coded columns to every word; M' = M * q^{delta_cols*(k-1)},
// distance 4.
SubspaceCode extend_code(const SubspaceCode& base, size_t delta_cols);
uint64_t extended_size(uint64_t m, uint32_t q, size_t k, size_t delta_cols);

struct BoundValue {
    std::string family;
    uint32_t q = 0;
    size_t n = 0, k = 0, d = 0;
    bool applicable = false;
    std::string reason;
    uint64_t value = 0;
    std::vector<std::pair<std::string, uint64_t>> terms;
};

BoundValue bound_Ia(size_t n, size_t k, uint32_t q, uint64_t residual_value);
BoundValue bound_Ib(size_t n, size_t k, uint32_t q, uint64_t residual_value);
BoundValue bound_II(size_t n, size_t k, uint32_t q);
BoundValue bound_lifted_mrd(size_t n, size_t d, size_t k, uint32_t q);

// Best code this toolkit can produce for the parameters; the winning rule is
// recorded in the provenance string ("rule=...").
SubspaceCode residual_registry(size_t n, size_t d, size_t k, const Field& f);

// Scripted multilevel assembly on top of the Ia skeleton: each line schedules
// classes of one_factorization(n-k) under one prefix.
//   prefix <bits> classes <c1,c2,...> mode <ia|full|pending>
struct RecipeLine {
    IdVector prefix;
    std::vector<size_t> classes;
    std::string mode;
};

std::vector<RecipeLine> parse_recipe(const std::string& text);
SubspaceCode construction_recipe(size_t n, size_t k, const Field& f,
                                 const std::vector<RecipeLine>& lines,
                                 const ResidualProvider& residual = {});

} // namespace grasscode
