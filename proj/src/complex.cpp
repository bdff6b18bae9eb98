#include "dtower/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dtower {

KnotComplex KnotComplex::create(
    std::string name, const std::vector<GenSpec>& gens,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& arrows) {
    KnotComplex c;
    c.name_ = std::move(name);
    c.gens_.reserve(gens.size());
    for (const auto& g : gens) {
        if (c.index_.count(g.id))
            throw DtError(Errc::kParse, "duplicate generator id '" + g.id + "'");
        c.index_[g.id] = int(c.gens_.size());
        c.gens_.push_back(Generator{g.id, {g.i, g.j}, g.grading});
    }
    c.targets_.assign(c.gens_.size(), {});
    for (const auto& [from, tos] : arrows) {
        auto sit = c.index_.find(from);
        if (sit == c.index_.end())
            throw DtError(Errc::kParse, "differential source '" + from + "' is not a declared generator");
        auto& row = c.targets_[std::size_t(sit->second)];
        for (const auto& to : tos) {
            auto tit = c.index_.find(to);
            if (tit == c.index_.end())
                throw DtError(Errc::kParse, "arrow " + from + " -> " + to + " targets an undeclared generator");
            row.push_back(tit->second);
        }
    }
    for (std::size_t s = 0; s < c.targets_.size(); ++s) {
        auto& row = c.targets_[s];
        std::sort(row.begin(), row.end());
        for (std::size_t k = 1; k < row.size(); ++k)
            if (row[k] == row[k - 1])
                throw DtError(Errc::kParse, "repeated arrow " + c.gens_[s].id + " -> " +
                                                c.gens_[std::size_t(row[k])].id +
                                                " (F2 coefficients admit each target once)");
    }
    return c;
}

std::optional<int> KnotComplex::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Arrow> KnotComplex::arrows() const {
    std::vector<Arrow> out;
    for (std::size_t s = 0; s < gens_.size(); ++s)
        for (int t : targets_[s]) out.emplace_back(int(s), t);
    return out;
}

KnotComplex KnotComplex::with_name(std::string name) const {
    KnotComplex c = *this;
    c.name_ = std::move(name);
    return c;
}

KnotComplex KnotComplex::with_gradings(const std::vector<std::optional<int>>& gradings) const {
    KnotComplex c = *this;
    for (std::size_t k = 0; k < c.gens_.size() && k < gradings.size(); ++k)
        c.gens_[k].grading = gradings[k];
    return c;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << "complex: " << (is_complex ? "ok" : "FAIL") << ", filtered: " << (is_filtered ? "ok" : "FAIL")
       << ", gradings: " << (grading_consistent ? "ok" : "FAIL");
    for (const auto& v : violations) {
        os << "\n  " << v.kind << ":";
        for (const auto& id : v.ids) os << " " << id;
    }
    return os.str();
}

ValidationReport validate_complex(const KnotComplex& c) {
    ValidationReport r;
    // d^2 = 0: every generator must occur an even number of times in the
    // double boundary of each generator.
    for (std::size_t s = 0; s < c.size(); ++s) {
        std::map<int, int> counts;
        for (int t : c.targets(s))
            for (int u : c.targets(std::size_t(t))) counts[u] ^= 1;
        std::vector<std::string> odd;
        for (auto [idx, parity] : counts)
            if (parity) odd.push_back(c.generator(std::size_t(idx)).id);
        if (!odd.empty()) {
            r.is_complex = false;
            std::vector<std::string> ids{c.generator(s).id};
            ids.insert(ids.end(), odd.begin(), odd.end());
            r.violations.push_back({"d_squared", std::move(ids)});
        }
    }
    for (std::size_t s = 0; s < c.size(); ++s) {
        const auto& gs = c.generator(s);
        for (int t : c.targets(s)) {
            const auto& gt = c.generator(std::size_t(t));
            if (gt.filt.i > gs.filt.i || gt.filt.j > gs.filt.j) {
                r.is_filtered = false;
                r.violations.push_back({"filtration", {gs.id, gt.id}});
            }
            if (gs.grading && gt.grading && *gt.grading != *gs.grading - 1) {
                r.grading_consistent = false;
                r.violations.push_back({"grading", {gs.id, gt.id}});
            }
        }
    }
    return r;
}

std::string compose_pair_id(const std::string& left, const std::string& right) {
    auto escape = [](const std::string& s) {
        std::string out;
        out.reserve(s.size());
        for (char ch : s) {
            if (ch == '(' || ch == ')' || ch == '|' || ch == '\\') out.push_back('\\');
            out.push_back(ch);
        }
        return out;
    };
    return "(" + escape(left) + "|" + escape(right) + ")";
}

KnotComplex tensor_product(const KnotComplex& a, const KnotComplex& b) {
    if (!validate_complex(a).ok() || !validate_complex(b).ok())
        throw DtError(Errc::kInvalidInput, "tensor_product requires inputs that pass validate_complex");

    std::vector<KnotComplex::GenSpec> gens;
    gens.reserve(a.size() * b.size());
    auto pair_index = [&](std::size_t x, std::size_t y) { return x * b.size() + y; };
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            const auto& gx = a.generator(x);
            const auto& gy = b.generator(y);
            KnotComplex::GenSpec spec;
            spec.id = compose_pair_id(gx.id, gy.id);
            spec.i = gx.filt.i + gy.filt.i;
            spec.j = gx.filt.j + gy.filt.j;
            if (gx.grading && gy.grading) spec.grading = *gx.grading + *gy.grading;
            gens.push_back(std::move(spec));
        }
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> arrows;
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            std::vector<std::string> tos;
            for (int t : a.targets(x)) tos.push_back(gens[pair_index(std::size_t(t), y)].id);
            for (int t : b.targets(y)) tos.push_back(gens[pair_index(x, std::size_t(t))].id);
            if (!tos.empty()) arrows.emplace_back(gens[pair_index(x, y)].id, std::move(tos));
        }
    }
    return KnotComplex::create(a.name() + "#" + b.name(), gens, arrows);
}

KnotComplex mirror(const KnotComplex& c) {
    if (!validate_complex(c).ok())
        throw DtError(Errc::kInvalidInput, "mirror requires an input that passes validate_complex");
    std::vector<KnotComplex::GenSpec> gens;
    gens.reserve(c.size());
    for (const auto& g : c.generators()) {
        KnotComplex::GenSpec spec;
        spec.id = g.id;
        spec.i = -g.filt.i;
        spec.j = -g.filt.j;
        if (g.grading) spec.grading = -*g.grading;
        gens.push_back(std::move(spec));
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> arrows;
    for (std::size_t s = 0; s < c.size(); ++s) {
        for (int t : c.targets(s))
            arrows.push_back({c.generator(std::size_t(t)).id, {c.generator(s).id}});
    }
    return KnotComplex::create(c.name(), gens, arrows);
}

bool symmetry_check(const KnotComplex& c) {
    std::map<std::pair<int, int>, int> counts;
    for (const auto& g : c.generators()) {
        counts[{g.filt.i, g.filt.j}] += 1;
        counts[{g.filt.j, g.filt.i}] -= 1;
    }
    for (auto& [pos, n] : counts)
        if (n != 0) return false;
    return true;
}

}  // namespace dtower
