#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dtower/errors.hpp"

namespace dtower {

/// Plane position of a generator: i is the algebraic filtration, j the
/// Alexander filtration.  Multiplication by U sends (i,j) to (i-1,j-1).
struct Bifiltration {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Bifiltration&, const Bifiltration&) = default;
    friend Bifiltration operator+(Bifiltration a, Bifiltration b) {
        return {a.i + b.i, a.j + b.j};
    }
};

/// A U-translate of a named generator.  u_exp is the power of U applied, so
/// the translate of a generator at (i,j) sits at (i - u_exp, j - u_exp).
struct GeneratorKey {
    std::string base;
    int u_exp = 0;
    friend auto operator<=>(const GeneratorKey&, const GeneratorKey&) = default;
};

struct Generator {
    std::string id;
    Bifiltration filt;
    std::optional<int> grading;
};

using Arrow = std::pair<int, int>;  // (source index, target index)

/// A finitely generated bifiltered complex over F2[U,U^-1], presented by a
/// free basis of generators and the differential between them.  The full
/// complex is spanned by all U-translates; arrows act identically on every
/// translate, so the data below determines everything.
class KnotComplex {
public:
    struct GenSpec {
        std::string id;
        int i = 0;
        int j = 0;
        std::optional<int> grading;
    };

    /// Builds a complex, checking structure only: ids must be unique and
    /// every arrow endpoint declared.  Throws DtError(kParse) otherwise.
    static KnotComplex create(std::string name, const std::vector<GenSpec>& gens,
                              const std::vector<std::pair<std::string, std::vector<std::string>>>& arrows);

    const std::string& name() const { return name_; }
    std::size_t size() const { return gens_.size(); }
    const Generator& generator(std::size_t k) const { return gens_[k]; }
    const std::vector<Generator>& generators() const { return gens_; }

    std::optional<int> index_of(const std::string& id) const;

    /// Targets of the differential of generator k, as sorted indices.
    const std::vector<int>& targets(std::size_t k) const { return targets_[k]; }

    std::vector<Arrow> arrows() const;

    KnotComplex with_name(std::string name) const;
    KnotComplex with_gradings(const std::vector<std::optional<int>>& gradings) const;

private:
    std::string name_;
    std::vector<Generator> gens_;
    std::vector<std::vector<int>> targets_;
    std::unordered_map<std::string, int> index_;
};

/// F2-linear combination of U-translates; with F2 coefficients a set of keys
/// is enough.  Adding a term twice cancels it.
struct ChainElement {
    std::set<GeneratorKey> terms;

    bool empty() const { return terms.empty(); }
    void toggle(const GeneratorKey& k) {
        auto it = terms.find(k);
        if (it == terms.end())
            terms.insert(k);
        else
            terms.erase(it);
    }
    friend ChainElement operator^(ChainElement a, const ChainElement& b) {
        for (const auto& t : b.terms) a.toggle(t);
        return a;
    }
    friend bool operator==(const ChainElement&, const ChainElement&) = default;
};

struct ValidationReport {
    struct Violation {
        std::string kind;  // "d_squared" | "filtration" | "grading"
        std::vector<std::string> ids;
    };
    bool is_complex = true;
    bool is_filtered = true;
    bool grading_consistent = true;
    std::vector<Violation> violations;

    bool ok() const { return is_complex && is_filtered && grading_consistent; }
    std::string summary() const;
};

/// Checks d^2 = 0 over F2, filtration monotonicity of every arrow, and the
/// grading-drop-by-one rule where gradings are present.  Pure; never throws.
ValidationReport validate_complex(const KnotComplex& c);

/// Connected sum: generators are pairs, filtrations add, the differential
/// follows the Leibniz rule over F2.  Inputs must pass validate_complex.
KnotComplex tensor_product(const KnotComplex& a, const KnotComplex& b);

/// Dual complex: arrows reversed, filtration and grading negated.
KnotComplex mirror(const KnotComplex& c);

/// True iff the multiset of bifiltrations is invariant under (i,j) -> (j,i).
/// Necessary, not sufficient, for a genuine knot complex; callers warn only.
bool symmetry_check(const KnotComplex& c);

/// Composite id for a tensor generator.  Structured, never an arithmetic
/// pairing of integers, so products cannot overflow or collide.
std::string compose_pair_id(const std::string& left, const std::string& right);

}  // namespace dtower
