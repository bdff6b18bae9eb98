#pragma once

#include <stdexcept>
#include <string>

namespace dtower {

enum class Errc {
    kParse,
    kInvalidInput,
    kSliceRank,
    kGradingConflict,
    kKeyOutOfWindow,
    kUngradedTouched,
    kNoTower,
    kWindowExhausted,
    kNotACycle,
    kPrecondition,
    kOddSignature,
    kTruncationTooSmall,
    kUnstable,
    kInternal,
};

const char* errc_name(Errc c);

/// Error type carried by every failure path in the library.  The code is
/// stable API; the message names the offending generators where possible.
class DtError : public std::runtime_error {
public:
    DtError(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Raised when a U-translate leaves the truncation window before the descent
/// terminates.  Callers treat this as "enlarge the window and retry".
class WindowExhausted : public DtError {
public:
    explicit WindowExhausted(const std::string& message)
        : DtError(Errc::kWindowExhausted, message) {}
};

}  // namespace dtower
