#include "dtower/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dtower {

using nlohmann::ordered_json;

KnotComplex parse_complex(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw DtError(Errc::kParse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw DtError(Errc::kParse, "document must be a JSON object");
    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw DtError(Errc::kParse, "missing 'generators' array");

    std::string name = doc.value("name", std::string("unnamed"));
    std::vector<KnotComplex::GenSpec> gens;
    for (const auto& item : doc["generators"]) {
        if (!item.is_object() || !item.contains("id") || !item.contains("i") || !item.contains("j"))
            throw DtError(Errc::kParse, "each generator needs fields id, i, j");
        if (!item["id"].is_string() || !item["i"].is_number_integer() || !item["j"].is_number_integer())
            throw DtError(Errc::kParse, "generator fields must be (string, int, int)");
        gens.push_back({item["id"].get<std::string>(), item["i"].get<int>(), item["j"].get<int>(),
                        std::nullopt});
    }

    std::vector<std::pair<std::string, std::vector<std::string>>> arrows;
    if (doc.contains("differential")) {
        if (!doc["differential"].is_array())
            throw DtError(Errc::kParse, "'differential' must be an array");
        for (const auto& item : doc["differential"]) {
            if (!item.is_object() || !item.contains("from") || !item.contains("to") ||
                !item["from"].is_string() || !item["to"].is_array())
                throw DtError(Errc::kParse, "each differential entry needs 'from' and 'to':[...]");
            std::vector<std::string> tos;
            for (const auto& t : item["to"]) {
                if (!t.is_string()) throw DtError(Errc::kParse, "'to' entries must be generator ids");
                tos.push_back(t.get<std::string>());
            }
            arrows.emplace_back(item["from"].get<std::string>(), std::move(tos));
        }
    }
    return KnotComplex::create(std::move(name), gens, arrows);
}

KnotComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DtError(Errc::kParse, "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

std::string write_canonical(const KnotComplex& c) {
    std::vector<int> order(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) order[k] = int(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ga = c.generator(std::size_t(a));
        const auto& gb = c.generator(std::size_t(b));
        return std::tie(ga.filt.i, ga.filt.j, ga.id) < std::tie(gb.filt.i, gb.filt.j, gb.id);
    });

    ordered_json doc;
    doc["name"] = c.name();
    doc["generators"] = ordered_json::array();
    for (int idx : order) {
        const auto& g = c.generator(std::size_t(idx));
        doc["generators"].push_back({{"id", g.id}, {"i", g.filt.i}, {"j", g.filt.j}});
    }

    std::vector<std::pair<std::string, std::vector<std::string>>> entries;
    for (std::size_t s = 0; s < c.size(); ++s) {
        if (c.targets(s).empty()) continue;
        std::vector<std::string> tos;
        for (int t : c.targets(s)) tos.push_back(c.generator(std::size_t(t)).id);
        std::sort(tos.begin(), tos.end());
        entries.emplace_back(c.generator(s).id, std::move(tos));
    }
    std::sort(entries.begin(), entries.end());
    doc["differential"] = ordered_json::array();
    for (auto& [from, tos] : entries) doc["differential"].push_back({{"from", from}, {"to", tos}});

    return doc.dump(2) + "\n";
}

void save_complex_file(const KnotComplex& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DtError(Errc::kParse, "cannot open '" + path + "' for writing");
    out << write_canonical(c);
}

}  // namespace dtower
