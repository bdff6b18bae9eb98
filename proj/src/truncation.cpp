#include "dtower/truncation.hpp"

#include <algorithm>
#include <sstream>

namespace dtower {

bool region_contains(Region r, Bifiltration p) {
    switch (r) {
        case Region::kHook: return p.i >= 0 || p.j >= 0;
        case Region::kQuadrant: return p.i >= 0 && p.j >= 0;
        case Region::kSlice: return p.i == 0;
    }
    return false;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::kHook: return "hook";
        case Region::kQuadrant: return "quadrant";
        case Region::kSlice: return "slice";
    }
    return "?";
}

TruncatedComplex::TruncatedComplex(const KnotComplex& base, Region region, int window)
    : base_(base), region_(region), window_(window) {
    if (window < 0) throw DtError(Errc::kPrecondition, "window must be nonnegative");
    // Basis ordered by (u_exp, generator index): deterministic, and grouped
    // into the per-u_exp blocks the boundary solver works with.
    for (int u = -window; u <= window; ++u) {
        for (std::size_t g = 0; g < base_.size(); ++g) {
            const auto& gen = base_.generator(g);
            Bifiltration pos{gen.filt.i - u, gen.filt.j - u};
            if (!region_contains(region, pos)) continue;
            std::optional<int> gr;
            if (gen.grading) gr = *gen.grading - 2 * u;
            index_[{int(g), u}] = int(basis_.size());
            basis_.push_back(BasisElement{int(g), u, pos, gr});
        }
    }
}

std::optional<int> TruncatedComplex::index_of(int gen, int u_exp) const {
    auto it = index_.find({gen, u_exp});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> TruncatedComplex::index_of(const GeneratorKey& key) const {
    auto g = base_.index_of(key.base);
    if (!g) return std::nullopt;
    return index_of(*g, key.u_exp);
}

GeneratorKey TruncatedComplex::key_of(int idx) const {
    const auto& e = basis_[std::size_t(idx)];
    return GeneratorKey{base_.generator(std::size_t(e.gen)).id, e.u_exp};
}

int TruncatedComplex::grading_of(int idx) const {
    const auto& e = basis_[std::size_t(idx)];
    if (!e.grading)
        throw DtError(Errc::kUngradedTouched,
                      "generator '" + base_.generator(std::size_t(e.gen)).id + "' has no grading");
    return *e.grading;
}

int TruncatedComplex::grading_of(const ChainElement& x) const {
    if (x.empty()) throw DtError(Errc::kPrecondition, "grading of the zero chain is undefined");
    std::optional<int> gr;
    for (const auto& key : x.terms) {
        int idx = require_index(key);
        int g = grading_of(idx);
        if (gr && *gr != g)
            throw DtError(Errc::kPrecondition, "chain is not grading-homogeneous");
        gr = g;
    }
    return *gr;
}

int TruncatedComplex::require_index(const GeneratorKey& key) const {
    auto idx = index_of(key);
    if (!idx) {
        std::ostringstream os;
        os << "term U^" << key.u_exp << "·" << key.base << " is not in the " << region_name(region_)
           << " window (B=" << window_ << ")";
        throw DtError(Errc::kKeyOutOfWindow, os.str());
    }
    return *idx;
}

ChainElement TruncatedComplex::boundary_of(const ChainElement& x) const {
    ChainElement out;
    for (const auto& key : x.terms) {
        int idx = require_index(key);
        const auto& e = basis_[std::size_t(idx)];
        for (int t : base_.targets(std::size_t(e.gen))) {
            if (index_of(t, e.u_exp))
                out.toggle(GeneratorKey{base_.generator(std::size_t(t)).id, e.u_exp});
        }
    }
    return out;
}

const TruncatedComplex::Block& TruncatedComplex::block(int u_exp) const {
    auto it = blocks_.find(u_exp);
    if (it != blocks_.end()) return it->second;

    Block blk;
    for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
        if (basis_[idx].u_exp == u_exp) {
            blk.local_of[basis_[idx].gen] = int(blk.members.size());
            blk.members.push_back(int(idx));
        }
    }
    blk.boundaries = f2::Reducer(blk.members.size());
    for (int idx : blk.members) {
        const auto& e = basis_[std::size_t(idx)];
        f2::BitVec image(blk.members.size());
        for (int t : base_.targets(std::size_t(e.gen))) {
            auto lit = blk.local_of.find(t);
            if (lit != blk.local_of.end()) image.flip(std::size_t(lit->second));
        }
        if (image.any()) blk.boundaries.add(std::move(image));
    }
    return blocks_.emplace(u_exp, std::move(blk)).first->second;
}

bool TruncatedComplex::is_boundary(const ChainElement& x) const {
    // The boundary preserves u_exp, so x is a boundary iff each of its
    // U-homogeneous components is one in its own block.
    std::map<int, std::vector<int>> by_u;  // u_exp -> gen indices
    for (const auto& key : x.terms) {
        int idx = require_index(key);
        by_u[basis_[std::size_t(idx)].u_exp].push_back(basis_[std::size_t(idx)].gen);
    }
    for (const auto& [u, gens] : by_u) {
        const Block& blk = block(u);
        f2::BitVec v(blk.members.size());
        for (int g : gens) v.flip(std::size_t(blk.local_of.at(g)));
        if (!blk.boundaries.contains(v)) return false;
    }
    return true;
}

ChainElement TruncatedComplex::u_shift(const ChainElement& x) const {
    ChainElement out;
    for (const auto& key : x.terms) {
        int idx = require_index(key);
        const auto& e = basis_[std::size_t(idx)];
        int u = e.u_exp + 1;
        Bifiltration pos{e.filt.i - 1, e.filt.j - 1};
        if (!region_contains(region_, pos)) continue;  // quotient: the term dies
        if (u > window_) {
            std::ostringstream os;
            os << "U·(U^" << e.u_exp << "·" << key.base << ") stays in the " << region_name(region_)
               << " region but leaves the window B=" << window_;
            throw WindowExhausted(os.str());
        }
        out.toggle(GeneratorKey{key.base, u});
    }
    return out;
}

std::vector<std::pair<int, std::vector<ChainElement>>> homology_generators(const TruncatedComplex& tc) {
    std::map<int, std::vector<int>> by_grading;
    for (std::size_t idx = 0; idx < tc.basis().size(); ++idx)
        by_grading[tc.grading_of(int(idx))].push_back(int(idx));

    std::vector<std::pair<int, std::vector<ChainElement>>> out;
    for (const auto& [m, members] : by_grading) {
        std::map<int, int> local_below;
        auto below_it = by_grading.find(m - 1);
        if (below_it != by_grading.end())
            for (std::size_t k = 0; k < below_it->second.size(); ++k)
                local_below[below_it->second[k]] = int(k);
        std::size_t below_n = local_below.size();

        auto image_bits = [&](int idx) {
            f2::BitVec v(below_n == 0 ? 1 : below_n);
            const auto& e = tc.basis()[std::size_t(idx)];
            for (int t : tc.base().targets(std::size_t(e.gen))) {
                auto ti = tc.index_of(t, e.u_exp);
                if (!ti) continue;
                auto lit = local_below.find(*ti);
                if (lit != local_below.end()) v.flip(std::size_t(lit->second));
            }
            return v;
        };

        // Cycles in grading m: left kernel of the boundary matrix rows.
        f2::F2Matrix d(members.size(), below_n == 0 ? 1 : below_n);
        for (std::size_t k = 0; k < members.size(); ++k) d.row[k] = image_bits(members[k]);
        std::vector<f2::BitVec> cycles = f2::left_kernel(d);

        // Boundaries arriving from grading m+1.
        f2::Reducer bnd(members.size());
        auto above_it = by_grading.find(m + 1);
        if (above_it != by_grading.end()) {
            std::map<int, int> local_here;
            for (std::size_t k = 0; k < members.size(); ++k) local_here[members[k]] = int(k);
            for (int src : above_it->second) {
                f2::BitVec v(members.size());
                const auto& e = tc.basis()[std::size_t(src)];
                for (int t : tc.base().targets(std::size_t(e.gen))) {
                    auto ti = tc.index_of(t, e.u_exp);
                    if (!ti) continue;
                    auto lit = local_here.find(*ti);
                    if (lit != local_here.end()) v.flip(std::size_t(lit->second));
                }
                if (v.any()) bnd.add(std::move(v));
            }
        }

        f2::Reducer reps(members.size());
        std::vector<ChainElement> classes;
        for (auto& z : cycles) {
            f2::BitVec reduced = bnd.reduce(z);
            if (reduced.none()) continue;
            if (!reps.add(reduced)) continue;
            ChainElement rep;
            for (std::size_t k = 0; k < members.size(); ++k)
                if (reduced.test(k)) rep.toggle(tc.key_of(members[k]));
            classes.push_back(std::move(rep));
        }
        if (!classes.empty()) out.emplace_back(m, std::move(classes));
    }
    return out;
}

std::vector<ChainElement> generating_homology(const KnotComplex& c) {
    std::size_t n = c.size();
    f2::F2Matrix d(n, n == 0 ? 1 : n);
    for (std::size_t s = 0; s < n; ++s)
        for (int t : c.targets(s)) d.row[s].flip(std::size_t(t));

    std::vector<f2::BitVec> cycles = f2::left_kernel(d);
    f2::Reducer bnd(n == 0 ? 1 : n);
    for (std::size_t s = 0; s < n; ++s)
        if (d.row[s].any()) bnd.add(d.row[s]);

    f2::Reducer reps(n == 0 ? 1 : n);
    std::vector<ChainElement> classes;
    for (auto& z : cycles) {
        f2::BitVec reduced = bnd.reduce(z);
        if (reduced.none()) continue;
        if (!reps.add(reduced)) continue;
        ChainElement rep;
        for (std::size_t k = 0; k < n; ++k)
            if (reduced.test(k)) rep.toggle(GeneratorKey{c.generator(k).id, 0});
        classes.push_back(std::move(rep));
    }
    return classes;
}

}  // namespace dtower
