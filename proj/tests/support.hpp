#pragma once

#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include "dtower/complex.hpp"
#include "dtower/models.hpp"
#include "dtower/truncation.hpp"

namespace dtest {

using namespace dtower;

inline KnotComplex rht_model() {
    return KnotComplex::create("rht",
                               {{"a", 0, 1, std::nullopt},
                                {"b", 1, 1, std::nullopt},
                                {"c", 1, 0, std::nullopt}},
                               {{"b", {"a", "c"}}});
}

inline ChainElement chain(std::initializer_list<GeneratorKey> keys) {
    ChainElement x;
    for (const auto& k : keys) x.toggle(k);
    return x;
}

/// Exhaustive homology dimension of a finite F2 complex given as boundary
/// bitmasks: counts cycles and boundaries by enumerating all chains.
/// Independent of the library's elimination path.
inline int brute_homology_dim(const std::vector<unsigned>& boundary, std::size_t n) {
    std::set<unsigned> boundaries;
    std::size_t cycles = 0;
    for (unsigned x = 0; x < (1u << n); ++x) {
        unsigned dx = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (x & (1u << k)) dx ^= boundary[k];
        if (dx == 0) ++cycles;
        boundaries.insert(dx);
    }
    int dim_cycles = 0;
    while ((1u << dim_cycles) < cycles) ++dim_cycles;
    int rank = 0;
    while ((1u << rank) < boundaries.size()) ++rank;
    return dim_cycles - rank;
}

/// Boundary masks of a truncated complex, for windows of at most 24 elements.
inline std::vector<unsigned> boundary_masks(const TruncatedComplex& tc) {
    std::vector<unsigned> out;
    for (std::size_t k = 0; k < tc.basis().size(); ++k) {
        ChainElement single;
        single.toggle(tc.key_of(int(k)));
        ChainElement img = tc.boundary_of(single);
        unsigned mask = 0;
        for (const auto& key : img.terms) mask |= 1u << unsigned(*tc.index_of(key));
        out.push_back(mask);
    }
    return out;
}

/// Exhaustive boundary test: x is a boundary iff it equals the boundary of
/// some chain; enumerates all chains of the window.
inline bool brute_is_boundary(const TruncatedComplex& tc, const ChainElement& x) {
    std::vector<unsigned> masks = boundary_masks(tc);
    std::size_t n = masks.size();
    unsigned target = 0;
    for (const auto& key : x.terms) target |= 1u << unsigned(*tc.index_of(key));
    for (unsigned combo = 0; combo < (1u << n); ++combo) {
        unsigned dx = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (combo & (1u << k)) dx ^= masks[k];
        if (dx == target) return true;
    }
    return false;
}

inline std::multiset<std::pair<int, int>> filtration_multiset(const KnotComplex& c) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& g : c.generators()) out.insert({g.filt.i, g.filt.j});
    return out;
}

/// Random valid knot complex built from presets under tensor and mirror,
/// capped in generator count so property suites stay fast.
inline KnotComplex random_complex(std::mt19937& rng, std::size_t max_gens = 36) {
    auto pick_atom = [&]() -> KnotComplex {
        switch (rng() % 5) {
            case 0: return unknot();
            case 1: return preset("rht");
            case 2: return preset("lht");
            case 3: {
                std::vector<int> steps;
                std::size_t len = 1 + rng() % 2;
                for (std::size_t k = 0; k < len; ++k) steps.push_back(1 + int(rng() % 3));
                return staircase({steps});
            }
            default: {
                std::size_t boxes = rng() % 3;
                std::vector<Bifiltration> offsets;
                for (std::size_t k = 0; k < boxes; ++k)
                    offsets.push_back({int(rng() % 5) - 2, int(rng() % 5) - 2});
                return box_sum(boxes, offsets);
            }
        }
    };
    KnotComplex c = pick_atom();
    for (int round = 0; round < 2; ++round) {
        if (rng() % 2 == 0) c = mirror(c);
        if (rng() % 2 == 0) {
            KnotComplex other = pick_atom();
            if (c.size() * other.size() <= max_gens) c = tensor_product(c, other);
        }
    }
    return c;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs a shell command, capturing stdout and stderr together.
inline CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = (status >= 256) ? status / 256 : status;
    return r;
}

inline std::string temp_path(const std::string& stem) {
    static int counter = 0;
    return "/tmp/dtower_test_" + std::to_string(getpid()) + "_" + stem + "_" +
           std::to_string(counter++) + ".complex";
}

}  // namespace dtest
