#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dtower/grading.hpp"
#include "dtower/truncation.hpp"

namespace dtower {

/// Window of U-translates of a graded complex restricted to a region.  The
/// basis is every U^k·g with -B <= k <= B whose position lies in the region.
TruncatedComplex truncate_region(const GradedComplex& c, Region region, int window);

/// A homogeneous cycle representing the image in tc of the generator of
/// H(CFK-infinity), placed at the most negative u_exp the window allows so
/// the descent starts strictly above its death point.  Deterministic via
/// echelon pivoting.  Throws DtError(kNoTower) when the generating homology
/// does not have rank 1 or when the class fails the survival diagnostic on
/// the sub-window [-B/2, B/2].
ChainElement tower_class(const TruncatedComplex& tc);

struct DescentStep {
    int u_power = 0;
    int grading = 0;
    bool died = false;
};

struct DescentResult {
    int steps = 0;         // smallest m >= 1 with U^m·x a boundary
    int last_grading = 0;  // grading of U^{m-1}·x
    std::vector<DescentStep> trace;
};

/// Pushes the cycle x down by U until its class dies in the quotient
/// homology.  Terms leaving the region are dropped before each test.  Throws
/// WindowExhausted when a term would pass the window edge first, and
/// DtError(kNotACycle) when x is not a cycle.
DescentResult descend(const TruncatedComplex& tc, const ChainElement& x);

struct DInvariantReport {
    int d_plus = 0;
    int d_minus = 0;
    std::pair<int, int> windows_used{0, 0};  // first stable window per side
    std::vector<DescentStep> trace_plus;
    std::vector<DescentStep> trace_minus;
};

/// d of +1-surgery: descent through the hook region {i>=0 or j>=0}, with the
/// window doubled until two consecutive window sizes agree.
int d_plus_one(const KnotComplex& c);

/// d of -1-surgery: the same descent through the first quadrant.
int d_minus_one(const KnotComplex& c);

/// Both invariants plus the per-side descent traces and windows.
DInvariantReport d_invariants(const KnotComplex& c);

/// Exact rational with positive reduced denominator (always a divisor of 4
/// for the shifted invariants).
struct Rational {
    long long num = 0;
    long long den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);
std::string to_string(const Rational& r);

/// Correction term of S^3 with +/-p surgery in the identified spin-c
/// structure, for p at least 2g-1: the unshifted hook (resp. quadrant) value
/// plus the shift (p-1)/4 (resp. (1-p)/4).
Rational large_surgery_d(const KnotComplex& c, int p, int sign);

/// Closed form for alternating knots from the signature:
/// 2·min(0, -ceil(-sigma/4)).  Used as a cross-check oracle.
int alt_signature_d(int sigma);

/// Window policy: max coordinate magnitude plus 4, overridable through the
/// DTOWER_WINDOW environment variable.
int initial_window(const KnotComplex& c);

}  // namespace dtower
