#include "dtower/grading.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace dtower {

namespace {

int slice_window(const KnotComplex& c) {
    int w = 0;
    for (const auto& g : c.generators()) w = std::max(w, std::abs(g.filt.i));
    return w;
}

struct SliceHomology {
    int rank = 0;
    ChainElement generator;
};

SliceHomology slice_homology(const TruncatedComplex& slice) {
    std::size_t n = slice.basis().size();
    f2::F2Matrix d(n, n == 0 ? 1 : n);
    for (std::size_t s = 0; s < n; ++s) {
        const auto& e = slice.basis()[s];
        for (int t : slice.base().targets(std::size_t(e.gen))) {
            auto ti = slice.index_of(t, e.u_exp);
            if (ti) d.row[s].flip(std::size_t(*ti));
        }
    }
    std::vector<f2::BitVec> cycles = f2::left_kernel(d);
    f2::Reducer bnd(n == 0 ? 1 : n);
    for (std::size_t s = 0; s < n; ++s)
        if (d.row[s].any()) bnd.add(d.row[s]);

    f2::Reducer reps(n == 0 ? 1 : n);
    SliceHomology out;
    for (auto& z : cycles) {
        f2::BitVec reduced = bnd.reduce(z);
        if (reduced.none()) continue;
        if (!reps.add(reduced)) continue;
        if (out.rank == 0) {
            for (std::size_t k = 0; k < n; ++k)
                if (reduced.test(k)) out.generator.toggle(slice.key_of(int(k)));
        }
        ++out.rank;
    }
    return out;
}

}  // namespace

TruncatedComplex y_slice(const KnotComplex& c) {
    if (!validate_complex(c).ok())
        throw DtError(Errc::kInvalidInput, "y_slice requires an input that passes validate_complex");
    TruncatedComplex slice(c, Region::kSlice, slice_window(c));
    SliceHomology h = slice_homology(slice);
    if (h.rank != 1) {
        std::ostringstream os;
        os << "y-slice homology has rank " << h.rank << ", expected 1";
        throw DtError(Errc::kSliceRank, os.str());
    }
    return slice;
}

ChainElement slice_generator(const TruncatedComplex& slice) {
    SliceHomology h = slice_homology(slice);
    if (h.rank != 1)
        throw DtError(Errc::kSliceRank, "slice homology rank is not 1");
    return h.generator;
}

GradedComplex assign_gradings(const KnotComplex& c) {
    TruncatedComplex slice = y_slice(c);
    ChainElement pinned = slice_generator(slice);

    std::vector<std::optional<int>> grading(c.size());
    std::deque<int> queue;
    auto label = [&](int gen, int value) {
        if (grading[std::size_t(gen)]) {
            if (*grading[std::size_t(gen)] != value)
                throw DtError(Errc::kGradingConflict,
                              "generator '" + c.generator(std::size_t(gen)).id +
                                  "' receives two different gradings during traversal");
            return;
        }
        grading[std::size_t(gen)] = value;
        queue.push_back(gen);
    };

    // The slice generator lives in grading 0; each supporting translate
    // U^k·g forces gr(g) = 2k.
    for (const auto& key : pinned.terms) {
        auto g = c.index_of(key.base);
        label(*g, 2 * key.u_exp);
    }

    // Arrows at generator level relate stated positions directly, so the
    // only constraint to propagate is gr(target) = gr(source) - 1, walked in
    // both directions.
    std::vector<std::vector<int>> sources(c.size());
    for (auto [s, t] : c.arrows()) sources[std::size_t(t)].push_back(s);
    while (!queue.empty()) {
        int g = queue.front();
        queue.pop_front();
        int base = *grading[std::size_t(g)];
        for (int t : c.targets(std::size_t(g))) label(t, base - 1);
        for (int s : sources[std::size_t(g)]) label(s, base + 1);
    }

    GradedComplex out{c, {}};
    std::vector<std::optional<int>> merged(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto& given = c.generator(k).grading;
        if (grading[k]) {
            if (given && *given != *grading[k])
                throw DtError(Errc::kGradingConflict, "generator '" + c.generator(k).id +
                                                          "' carries grading " + std::to_string(*given) +
                                                          " but traversal derives " +
                                                          std::to_string(*grading[k]));
            merged[k] = grading[k];
        } else if (given) {
            merged[k] = given;  // user-supplied label on an unreachable component
        } else {
            out.ungraded.push_back(c.generator(k).id);
        }
    }
    out.complex = c.with_gradings(merged);
    return out;
}

}  // namespace dtower
