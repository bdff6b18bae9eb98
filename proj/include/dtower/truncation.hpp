#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dtower/complex.hpp"
#include "dtower/f2.hpp"

namespace dtower {

/// Plane regions whose complements are closed under the differential, so the
/// restriction is a quotient complex of CFK-infinity.
enum class Region {
    kHook,      // i >= 0 or j >= 0; computes large positive surgeries
    kQuadrant,  // i >= 0 and j >= 0; computes large negative surgeries
    kSlice,     // i == 0; a model for CF-hat of S^3, used to pin gradings
};

bool region_contains(Region r, Bifiltration p);
const char* region_name(Region r);

/// Finite window of U-translates restricted to a region.  Arrows whose
/// target leaves the region are dropped (quotient), never redirected.
///
/// The differential never changes u_exp, so the boundary matrix is block
/// diagonal by U-power; boundary membership queries are answered per block
/// against lazily built echelon forms.
class TruncatedComplex {
public:
    struct BasisElement {
        int gen = 0;  // index into base().generators()
        int u_exp = 0;
        Bifiltration filt;
        std::optional<int> grading;
    };

    TruncatedComplex(const KnotComplex& base, Region region, int window);

    const KnotComplex& base() const { return base_; }
    Region region() const { return region_; }
    int window() const { return window_; }

    const std::vector<BasisElement>& basis() const { return basis_; }
    std::optional<int> index_of(int gen, int u_exp) const;
    std::optional<int> index_of(const GeneratorKey& key) const;
    GeneratorKey key_of(int idx) const;

    /// Grading of a basis element; throws DtError(kUngradedTouched) when the
    /// underlying generator was never graded.
    int grading_of(int idx) const;

    /// Grading of a chain, which must be nonempty, fully graded, and
    /// homogeneous.
    int grading_of(const ChainElement& x) const;

    /// Boundary of the given chain inside the truncation.
    ChainElement boundary_of(const ChainElement& x) const;

    bool is_cycle(const ChainElement& x) const { return boundary_of(x).empty(); }

    /// True iff x lies in the image of the boundary map.  Every term of x
    /// must index a basis element, else DtError(kKeyOutOfWindow).
    bool is_boundary(const ChainElement& x) const;

    /// Applies U once: every term moves one step along the diagonal.  Terms
    /// that exit the region are dropped; a term that stays in the region but
    /// would exceed the window raises WindowExhausted.
    ChainElement u_shift(const ChainElement& x) const;

private:
    struct Block {
        std::vector<int> members;       // basis indices at one u_exp, ordered
        std::map<int, int> local_of;    // gen index -> local column
        f2::Reducer boundaries;         // echelon of the boundary image

        Block() : boundaries(0) {}
    };

    int require_index(const GeneratorKey& key) const;
    const Block& block(int u_exp) const;

    KnotComplex base_;
    Region region_;
    int window_;
    std::vector<BasisElement> basis_;
    std::map<std::pair<int, int>, int> index_;  // (gen, u_exp) -> basis index
    mutable std::map<int, Block> blocks_;
};

/// Homology of tc with explicit cycle representatives, one entry per grading
/// that supports basis elements, in ascending grading order.  Requires all
/// basis gradings to be assigned.
std::vector<std::pair<int, std::vector<ChainElement>>> homology_generators(const TruncatedComplex& tc);

/// Homology of the generating complex itself (all generators at u_exp 0,
/// every arrow kept).  By U-equivariance H(CFK-infinity) is this homology
/// tensored with F2[U,U^-1]; a valid knot complex model has rank 1 here.
std::vector<ChainElement> generating_homology(const KnotComplex& c);

}  // namespace dtower
