#pragma once

// Single-value corruptions of the dataset, used as negative controls.
//
//   {"kind": "dictionary", "entry": "alpha_0", "value": [a1, .., a6]}
//   {"kind": "matrix", "matrix": "s3" | "s5", "row": r, "column": c, "value": v}
//   {"kind": "certificate", "id": "...", "part": "numerator" | "denominator",
//    "exponent": [i, j, k], "coefficient": ["c0", .., "c7"]}
//
// Matrix rows and columns are 1-based. Certificate coefficients are rationals
// in the power basis of Q(zeta_24).

#include <string>

#include "twist/dataset.hpp"

namespace twist {

/// Returns a corrupted copy. Throws std::invalid_argument on a malformed
/// description or an unknown target.
Dataset apply_mutation(Dataset ds, const std::string& json_text);

/// Reads the description from a file first.
Dataset apply_mutation_file(const Dataset& ds, const std::string& path);

}  // namespace twist
