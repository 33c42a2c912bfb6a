#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace pdnrel {

struct TierInfo {
    std::string id;
    int z = 0;           // stacking index, 0 = bottom
    std::string bond;    // F2F / F2B / B2B label, informational
};

struct Block {
    std::string id;
    std::string tier;
    double x = 0, y = 0, w = 0, h = 0;  // meters, half-open [x, x+w) x [y, y+h)
    std::string name;
};

struct Floorplan {
    double die_w = 0, die_h = 0;  // meters
    std::vector<TierInfo> tiers;  // sorted by z after load/validate
    std::vector<Block> blocks;

    // Index into tiers for a tier id; throws ValidationError if unknown.
    int tier_index(const std::string& id) const;
    const Block& block(const std::string& id) const;

    void validate() const;

    static Floorplan from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    void save(const std::string& path) const;
};

Floorplan load_floorplan(const std::string& path);

}  // namespace pdnrel
