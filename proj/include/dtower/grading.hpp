#pragma once

#include <string>
#include <vector>

#include "dtower/complex.hpp"
#include "dtower/truncation.hpp"

namespace dtower {

/// Complex with Maslov gradings filled on every generator reachable from the
/// pinned slice generator; the rest are listed in `ungraded` and tolerated
/// until a computation actually needs their grading.
struct GradedComplex {
    KnotComplex complex;
    std::vector<std::string> ungraded;
};

/// The quotient complex at i = 0: one translate U^{i0}·g per generator g at
/// (i0, j0), sitting at Alexander coordinate j0 - i0, keeping exactly the
/// arrows with both endpoints on the slice.  Throws DtError(kSliceRank) when
/// the total F2 homology rank differs from 1, and kInvalidInput when the
/// input fails validate_complex.
TruncatedComplex y_slice(const KnotComplex& c);

/// Deterministic representative of the slice homology generator: reduce the
/// cycle space modulo boundaries and take the echelon row with the smallest
/// pivot.
ChainElement slice_generator(const TruncatedComplex& slice);

/// Pins the slice generator's support to grading 0 and propagates along the
/// differential graph (arrows drop the grading by 1; U-translation is
/// implicit in the generator-level labels).  Components never reached stay
/// unlabeled.  Throws DtError(kGradingConflict) when propagation, or a
/// grading supplied on the input, is contradictory.
GradedComplex assign_gradings(const KnotComplex& c);

}  // namespace dtower
