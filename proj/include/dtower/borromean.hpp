#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dtower/errors.hpp"
#include "dtower/f2.hpp"

namespace dtower {

/// The knot complex of the genus-g Borromean knot in #^{2g} S^2 x S^1: the
/// exterior algebra on 2g symbols tensored with F2[U,U^-1].  The (i,j) box
/// holds the degree g-i+j part, sits in grading i+j, and every differential
/// vanishes.
struct BorromeanComplex {
    int g = 1;

    explicit BorromeanComplex(int genus);

    int symbols() const { return 2 * g; }

    /// Rank of box (i,j): binom(2g, g-i+j), zero outside 0 <= g-i+j <= 2g.
    long long box_rank(int i, int j) const;

    /// Exterior monomials of box (i,j), as bitmasks over the 2g symbols.
    std::vector<std::uint32_t> box_masks(int i, int j) const;
};

long long binomial(int n, int k);

/// Truncated mapping cone X^+(n) for n = +-1 over the Borromean complex.
/// A-parts are C{i>=0 or j>=s}, B-parts are C{i>=0}, for s in [-b, b]; every
/// part is cut to a grading window wide enough that edge effects cannot
/// reach the gradings the tower scan looks at.
class ConeComplex {
public:
    struct Elem {
        bool b_side = false;
        int s = 0;
        int i = 0;
        int j = 0;
        std::uint32_t mask = 0;
        int grading = 0;
    };

    int g = 1;
    int n = -1;
    int b = 0;           // s ranges over [-b, b]
    int grading_lo = 0;  // per-part grading window
    int grading_hi = 0;

    std::vector<Elem> basis;
    /// Differential targets per element: v then h, -1 when absent.  B-side
    /// elements have none, so the cone differential squares to zero.
    std::vector<std::array<int, 2>> d_targets;
    /// U-translate of each element, -1 when it leaves region or window.
    std::vector<int> u_targets;

    int index_of(bool b_side, int s, int i, int j, std::uint32_t mask) const;

    /// Dense boundary matrix (rows = sources); intended for small cones.
    f2::F2Matrix boundary_matrix() const;

private:
    friend ConeComplex build_cone(int g, int n, int b);
    std::map<std::tuple<bool, int, int, int, std::uint32_t>, int> index_;
};

/// Builds the truncated cone.  Requires b >= g + 2
/// (DtError(kTruncationTooSmall) otherwise) and checks that every component
/// of the cone differential is homogeneous of degree -1.
ConeComplex build_cone(int g, int n, int b);

/// Multiset of bottom gradings of the U-nontorsion homology classes of the
/// cone: classes killed by U but reachable as U^t-images for at least
/// ceil(b/2) consecutive steps upward inside the window.
std::map<int, int> tower_multiset(const ConeComplex& cone);

/// Stable version: computed at b and b + 2, which must agree
/// (DtError(kUnstable) otherwise).
std::map<int, int> tower_multiset(int g, int n, int b);

/// Expected multiset from the closed form: binom(2g,g) towers at grading 0
/// and 2*binom(2g, g-k) at grading k (n = -1) or -k (n = +1), k = 1..g.
std::map<int, int> borromean_closed_form(int g, int n);

struct BorromeanReport {
    int g = 1;
    int n = -1;
    bool pass = false;
    std::map<int, int> multiset;
    std::map<int, int> expected;
    int d_b = 0;
    int d_b_expected = 0;
    std::string note;
};

/// Compares the computed tower multiset against the closed form and extracts
/// the bottom-most correction term d_b as the extreme tower bottom (maximum
/// for n = -1, minimum for n = +1), expected to equal -n*g.
BorromeanReport verify_borromean(int g, int n, int max_genus = 3);

}  // namespace dtower
