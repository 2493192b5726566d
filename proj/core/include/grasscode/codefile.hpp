#pragma once

#include <iosfwd>
#include <string>

#include "grasscode/skeleton.hpp"

namespace grasscode {

// Plain-text serialization:
//   SUBSPACE-CODE v1
//   q=<q> n=<n> k=<k> d=<d> M=<M>
//   provenance=<free text>
// followed by M blocks separated by single blank lines, each k rows of n
// symbols of the reduced row echelon basis (joined digits for q <= 10,
// comma-separated codes otherwise). Words appear stratum by stratum in
// ascending enumeration order.
void write_code_file(std::ostream& out, const SubspaceCode& code);

// Parses the format above; every word becomes its own stratum. A basis that
// is not in canonical reduced row echelon form is a hard error; a header M
// that disagrees with the number of blocks is reported to `warnings` (stderr
// when null) and the actual count wins.
SubspaceCode read_code_file(std::istream& in, std::ostream* warnings = nullptr);

} // namespace grasscode
