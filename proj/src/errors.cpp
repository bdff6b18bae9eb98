#include "dtower/errors.hpp"

namespace dtower {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::kParse: return "PARSE";
        case Errc::kInvalidInput: return "INVALID_INPUT";
        case Errc::kSliceRank: return "SLICE_RANK";
        case Errc::kGradingConflict: return "GRADING_CONFLICT";
        case Errc::kKeyOutOfWindow: return "KEY_OUT_OF_WINDOW";
        case Errc::kUngradedTouched: return "UNGRADED_TOUCHED";
        case Errc::kNoTower: return "NO_TOWER";
        case Errc::kWindowExhausted: return "WINDOW_EXHAUSTED";
        case Errc::kNotACycle: return "NOT_A_CYCLE";
        case Errc::kPrecondition: return "PRECONDITION";
        case Errc::kOddSignature: return "ODD_SIGNATURE";
        case Errc::kTruncationTooSmall: return "TRUNCATION_TOO_SMALL";
        case Errc::kUnstable: return "UNSTABLE";
        case Errc::kInternal: return "INTERNAL";
    }
    return "UNKNOWN";
}

}  // namespace dtower
