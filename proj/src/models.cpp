#include "dtower/models.hpp"

#include <algorithm>
#include <sstream>

namespace dtower {

namespace {

std::string stair_id(std::size_t k) {
    if (k < 26) return std::string(1, char('a' + k));
    return "g" + std::to_string(k);
}

}  // namespace

KnotComplex unknot() {
    return KnotComplex::create("unknot", {{"e", 0, 0, std::nullopt}}, {});
}

KnotComplex staircase(const StaircaseSpec& spec) {
    if (spec.steps.empty()) throw DtError(Errc::kPrecondition, "staircase spec must be nonempty");
    for (int s : spec.steps)
        if (s <= 0) throw DtError(Errc::kPrecondition, "staircase segment lengths must be positive");

    std::vector<int> segments = spec.steps;
    bool palindrome = std::equal(segments.begin(), segments.end(), segments.rbegin());
    if (segments.size() % 2 != 0 || !palindrome) {
        // Complete to a path symmetric about i = j.
        std::vector<int> tail(segments.rbegin(), segments.rend());
        segments.insert(segments.end(), tail.begin(), tail.end());
    }

    int height = 0;  // total vertical drop: the staircase starts on the j-axis
    for (std::size_t k = 1; k < segments.size(); k += 2) height += segments[k];

    std::vector<KnotComplex::GenSpec> gens;
    int i = 0, j = height;
    gens.push_back({stair_id(0), i, j, std::nullopt});
    for (std::size_t k = 0; k < segments.size(); ++k) {
        if (k % 2 == 0)
            i += segments[k];
        else
            j -= segments[k];
        gens.push_back({stair_id(k + 1), i, j, std::nullopt});
    }

    std::vector<std::pair<std::string, std::vector<std::string>>> arrows;
    for (std::size_t k = 1; k < gens.size(); k += 2)
        arrows.push_back({gens[k].id, {gens[k - 1].id, gens[k + 1].id}});

    std::ostringstream name;
    name << "staircase(";
    for (std::size_t k = 0; k < spec.steps.size(); ++k) name << (k ? "," : "") << spec.steps[k];
    name << ")";
    return KnotComplex::create(name.str(), gens, arrows);
}

KnotComplex box_sum(std::size_t n_boxes, const std::vector<Bifiltration>& offsets) {
    if (offsets.size() != n_boxes)
        throw DtError(Errc::kPrecondition, "box_sum: offsets length must equal n_boxes");
    std::vector<KnotComplex::GenSpec> gens{{"e", 0, 0, std::nullopt}};
    std::vector<std::pair<std::string, std::vector<std::string>>> arrows;
    for (std::size_t k = 0; k < n_boxes; ++k) {
        const auto& o = offsets[k];
        std::string suffix = std::to_string(k + 1);
        std::string x = "x" + suffix, y = "y" + suffix, z = "z" + suffix, w = "w" + suffix;
        gens.push_back({x, o.i, o.j, std::nullopt});
        gens.push_back({y, o.i - 1, o.j, std::nullopt});
        gens.push_back({z, o.i, o.j - 1, std::nullopt});
        gens.push_back({w, o.i - 1, o.j - 1, std::nullopt});
        arrows.push_back({x, {y, z}});
        arrows.push_back({y, {w}});
        arrows.push_back({z, {w}});
    }
    return KnotComplex::create("boxes(" + std::to_string(n_boxes) + ")", gens, arrows);
}

KnotComplex preset(const std::string& name) {
    if (name == "unknot") return unknot();
    if (name == "rht") return staircase({{1, 1}}).with_name("rht");
    if (name == "lht") return mirror(staircase({{1, 1}})).with_name("lht");
    if (name == "t34") return staircase({{1, 2}}).with_name("t34");
    if (name == "fig8") return box_sum(1, {{1, 1}}).with_name("fig8");
    if (name == "c21-model") {
        // Offsets chosen symmetric about i = j and matching the Alexander
        // multiset of the C_{2,1} knot Floer polynomial; d is offset
        // independent, so only the symmetry matters for the checks.
        std::vector<Bifiltration> offsets = {{0, 2}, {-1, 1}, {1, 2}, {0, 1},
                                             {2, 0}, {1, -1}, {2, 1}, {1, 0}};
        return box_sum(8, offsets).with_name("c21-model");
    }
    throw DtError(Errc::kPrecondition, "unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"unknot", "rht", "lht", "t34", "fig8", "c21-model"};
}

}  // namespace dtower
