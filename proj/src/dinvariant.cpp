#include "dtower/dinvariant.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace dtower {

namespace {
constexpr int kMaxDoublings = 12;
}

TruncatedComplex truncate_region(const GradedComplex& c, Region region, int window) {
    return TruncatedComplex(c.complex, region, window);
}

int initial_window(const KnotComplex& c) {
    if (const char* env = std::getenv("DTOWER_WINDOW")) {
        int b = std::atoi(env);
        if (b > 0) return b;
    }
    int m = 0;
    for (const auto& g : c.generators())
        m = std::max({m, std::abs(g.filt.i), std::abs(g.filt.j)});
    return m + 4;
}

ChainElement tower_class(const TruncatedComplex& tc) {
    std::vector<ChainElement> h = generating_homology(tc.base());
    if (h.size() != 1) {
        std::ostringstream os;
        os << "homology of the generating complex has rank " << h.size()
           << "; a knot complex model needs rank 1";
        throw DtError(Errc::kNoTower, os.str());
    }

    // Pick up the generator's grading from the base complex and check
    // homogeneity; an inhomogeneous generator cannot head a tower.
    std::optional<int> gr;
    for (const auto& key : h[0].terms) {
        const auto& gen = tc.base().generator(std::size_t(*tc.base().index_of(key.base)));
        if (!gen.grading)
            throw DtError(Errc::kUngradedTouched,
                          "tower class touches ungraded generator '" + key.base + "'");
        if (gr && *gr != *gen.grading)
            throw DtError(Errc::kNoTower, "generator of H(CFK-infinity) is not grading-homogeneous");
        gr = *gen.grading;
    }

    int bottom = -tc.window();
    ChainElement cls;
    for (const auto& key : h[0].terms) {
        GeneratorKey shifted{key.base, bottom};
        if (!tc.index_of(shifted))
            throw DtError(Errc::kNoTower, "window too small: U^" + std::to_string(bottom) + "·" +
                                              key.base + " is outside the region");
        cls.toggle(shifted);
    }

    // Survival diagnostic across the sub-window [-B/2, B/2]: the class must
    // stay nonzero in homology somewhere in it, otherwise either the input
    // is invalid or the window is too small to see the tower.
    int lo = -(tc.window() / 2), hi = tc.window() / 2;
    int survived = 0;
    ChainElement cur = cls;
    for (int k = bottom; k <= hi; ++k) {
        if (k >= lo && !tc.is_boundary(cur)) ++survived;
        if (k == hi) break;
        cur = tc.u_shift(cur);
        if (cur.empty()) break;  // left the region entirely; dead from here on
    }
    if (survived == 0)
        throw DtError(Errc::kNoTower, "no class survives U-multiplication across the diagnostic sub-window");
    return cls;
}

DescentResult descend(const TruncatedComplex& tc, const ChainElement& x) {
    if (!tc.is_cycle(x)) throw DtError(Errc::kNotACycle, "descent input is not a cycle");
    if (tc.is_boundary(x))
        throw DtError(Errc::kPrecondition, "descent input is already a boundary");
    int gr0 = tc.grading_of(x);

    DescentResult out;
    ChainElement cur = x;
    for (int m = 1; m <= 2 * tc.window() + 2; ++m) {
        cur = tc.u_shift(cur);
        bool died = tc.is_boundary(cur);
        out.trace.push_back({m, gr0 - 2 * m, died});
        if (died) {
            out.steps = m;
            out.last_grading = gr0 - 2 * (m - 1);
            return out;
        }
    }
    throw DtError(Errc::kInternal, "descent failed to terminate inside the window");
}

namespace {

struct SideResult {
    int value = 0;
    int window = 0;
    std::vector<DescentStep> trace;
};

SideResult run_side(const GradedComplex& gc, Region region, int window) {
    TruncatedComplex tc = truncate_region(gc, region, window);
    ChainElement cls = tower_class(tc);
    DescentResult d = descend(tc, cls);
    return SideResult{d.last_grading, window, std::move(d.trace)};
}

/// Runs the descent at growing windows until two consecutive sizes agree.
SideResult stable_side(const GradedComplex& gc, Region region) {
    int window = initial_window(gc.complex);
    for (int attempt = 0; attempt < kMaxDoublings; ++attempt) {
        try {
            SideResult at_b = run_side(gc, region, window);
            SideResult at_2b = run_side(gc, region, 2 * window);
            if (at_b.value == at_2b.value) return at_b;
        } catch (const WindowExhausted&) {
            // fall through to doubling
        } catch (const DtError& e) {
            if (e.code() != Errc::kNoTower) throw;
        }
        window *= 2;
    }
    throw DtError(Errc::kWindowExhausted,
                  "window doubling did not stabilize; input is unlikely to model a knot complex");
}

}  // namespace

int d_plus_one(const KnotComplex& c) { return stable_side(assign_gradings(c), Region::kHook).value; }

int d_minus_one(const KnotComplex& c) {
    return stable_side(assign_gradings(c), Region::kQuadrant).value;
}

DInvariantReport d_invariants(const KnotComplex& c) {
    GradedComplex gc = assign_gradings(c);
    SideResult plus = stable_side(gc, Region::kHook);
    SideResult minus = stable_side(gc, Region::kQuadrant);
    DInvariantReport r;
    r.d_plus = plus.value;
    r.d_minus = minus.value;
    r.windows_used = {plus.window, minus.window};
    r.trace_plus = std::move(plus.trace);
    r.trace_minus = std::move(minus.trace);
    return r;
}

Rational make_rational(long long num, long long den) {
    if (den == 0) throw DtError(Errc::kInternal, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational large_surgery_d(const KnotComplex& c, int p, int sign) {
    if (sign != 1 && sign != -1) throw DtError(Errc::kPrecondition, "sign must be +1 or -1");
    if (p < 1) throw DtError(Errc::kPrecondition, "p must be a positive integer");
    int genus = 0;
    for (const auto& g : c.generators()) genus = std::max(genus, g.filt.j - g.filt.i);
    if (p < 2 * genus - 1) {
        std::ostringstream os;
        os << "p = " << p << " is below the bound 2g-1 = " << 2 * genus - 1;
        throw DtError(Errc::kPrecondition, os.str());
    }
    if (sign > 0) {
        int unshifted = d_plus_one(c);
        return make_rational(4LL * unshifted + p - 1, 4);
    }
    int unshifted = d_minus_one(c);
    return make_rational(4LL * unshifted + 1 - p, 4);
}

int alt_signature_d(int sigma) {
    if (sigma % 2 != 0) throw DtError(Errc::kOddSignature, "knot signatures are even");
    int a = -sigma;  // ceil(a/4)
    int q = a / 4;
    if (a % 4 > 0) ++q;
    return 2 * std::min(0, -q);
}

}  // namespace dtower
