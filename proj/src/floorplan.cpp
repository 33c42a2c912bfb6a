#include "pdnrel/floorplan.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "pdnrel/errors.hpp"

namespace pdnrel {

int Floorplan::tier_index(const std::string& id) const {
    for (size_t i = 0; i < tiers.size(); ++i)
        if (tiers[i].id == id) return static_cast<int>(i);
    throw ValidationError("floorplan: unknown tier '" + id + "'");
}

const Block& Floorplan::block(const std::string& id) const {
    for (const auto& b : blocks)
        if (b.id == id) return b;
    throw ValidationError("floorplan: unknown block '" + id + "'");
}

void Floorplan::validate() const {
    if (!(die_w > 0.0) || !(die_h > 0.0))
        throw ValidationError("floorplan: die dimensions must be > 0");
    if (tiers.empty()) throw ValidationError("floorplan: at least one tier required");

    std::set<int> zs;
    std::set<std::string> tier_ids;
    for (const auto& t : tiers) {
        if (!tier_ids.insert(t.id).second)
            throw ValidationError("floorplan: duplicate tier id '" + t.id + "'");
        if (!zs.insert(t.z).second)
            throw ValidationError("floorplan: duplicate tier z " + std::to_string(t.z));
    }
    // z-indices contiguous from 0
    int expect = 0;
    for (int z : zs) {
        if (z != expect)
            throw ValidationError("floorplan: tier z-indices must be contiguous from 0");
        ++expect;
    }

    std::set<std::string> block_ids;
    for (const auto& b : blocks) {
        if (!block_ids.insert(b.id).second)
            throw ValidationError("floorplan: duplicate block id '" + b.id + "'");
        if (!tier_ids.count(b.tier))
            throw ValidationError("floorplan: block '" + b.id + "' references unknown tier '" +
                                  b.tier + "'");
        if (!(b.w > 0.0) || !(b.h > 0.0))
            throw ValidationError("floorplan: block '" + b.id + "' has non-positive size");
        const double eps = 1e-12 * std::max(die_w, die_h);
        if (b.x < -eps || b.y < -eps || b.x + b.w > die_w + eps || b.y + b.h > die_h + eps)
            throw ValidationError("floorplan: block '" + b.id + "' extends past the die edge");
    }
}

Floorplan Floorplan::from_json(const nlohmann::json& j) {
    Floorplan fp;
    try {
        const auto& die = j.at("die");
        fp.die_w = die.at("w_m").get<double>();
        fp.die_h = die.at("h_m").get<double>();
        for (const auto& t : j.at("tiers")) {
            TierInfo ti;
            ti.id = t.at("id").get<std::string>();
            ti.z = t.at("z").get<int>();
            ti.bond = t.value("bond", "");
            fp.tiers.push_back(std::move(ti));
        }
        for (const auto& b : j.at("blocks")) {
            Block bl;
            bl.id = b.at("id").get<std::string>();
            bl.tier = b.at("tier").get<std::string>();
            bl.x = b.at("x_m").get<double>();
            bl.y = b.at("y_m").get<double>();
            bl.w = b.at("w_m").get<double>();
            bl.h = b.at("h_m").get<double>();
            bl.name = b.value("name", "");
            fp.blocks.push_back(std::move(bl));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("floorplan: ") + e.what());
    }
    std::sort(fp.tiers.begin(), fp.tiers.end(),
              [](const TierInfo& a, const TierInfo& b) { return a.z < b.z; });
    fp.validate();
    return fp;
}

nlohmann::json Floorplan::to_json() const {
    nlohmann::json j;
    j["die"] = {{"w_m", die_w}, {"h_m", die_h}};
    j["tiers"] = nlohmann::json::array();
    for (const auto& t : tiers) {
        nlohmann::json tj = {{"id", t.id}, {"z", t.z}};
        if (!t.bond.empty()) tj["bond"] = t.bond;
        j["tiers"].push_back(tj);
    }
    j["blocks"] = nlohmann::json::array();
    for (const auto& b : blocks) {
        nlohmann::json bj = {{"id", b.id}, {"tier", b.tier}, {"x_m", b.x},
                             {"y_m", b.y},  {"w_m", b.w},    {"h_m", b.h}};
        if (!b.name.empty()) bj["name"] = b.name;
        j["blocks"].push_back(bj);
    }
    return j;
}

void Floorplan::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ValidationError("floorplan: cannot write " + path);
    out << to_json().dump(2) << "\n";
}

Floorplan load_floorplan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("floorplan: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("floorplan: " + path + ": " + e.what());
    }
    return Floorplan::from_json(j);
}

}  // namespace pdnrel
