#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "field.hpp"
#include "floorplan.hpp"
#include "tech.hpp"

namespace pdnrel {

enum class PadStrategy { uniform, perimeter, explicit_list };

PadStrategy pad_strategy_from_string(const std::string& s);
std::string to_string(PadStrategy s);

struct LayerSpec {
    double pitch = 1e-4;  // stripe spacing (m)
    double width = 2e-6;  // default wire width (m)
};

struct PdnConfig {
    std::vector<LayerSpec> layers = {{1e-4, 2e-6}, {1e-4, 2e-6}};
    double via_resistance = 0.5;  // Ohm, intra- and inter-tier vias
    int pad_count = 4;
    PadStrategy pad_strategy = PadStrategy::uniform;
    std::vector<std::pair<double, double>> pad_xy;  // explicit strategy
    double vdd = 1.0;       // V
    double w_min = 1e-7;    // wire width bounds (m)
    double w_max = 1e-5;

    void validate() const;
    static PdnConfig from_json(const nlohmann::json& j);
    static PdnConfig load(const std::string& path);
    nlohmann::json to_json() const;
};

enum class EdgeKind { wire, via };

struct PdnNode {
    int id = -1;
    int tier = 0;
    int layer = 0;
    double x = 0, y = 0;  // meters
};

struct PdnEdge {
    int id = -1;
    int a = -1, b = -1;  // node ids, a < b
    EdgeKind kind = EdgeKind::wire;
    double length = 0, width = 0, thickness = 0;  // meters; zero for vias
    double resistance = 0;                        // Ohm at T_ref
};

struct PdnPad {
    int node = -1;
    double vdd = 1.0;
};

struct PdnSource {
    int node = -1;
    double current = 0;  // A drawn from the grid (sink)
};

// Die-centric resistive mesh. Node ids are dense [0, n) and the whole
// structure is deterministic for identical inputs: tiers ascend by z,
// layers ascend within a tier, node coordinates ascend y-major then x.
struct PdnGraph {
    std::vector<PdnNode> nodes;
    std::vector<PdnEdge> edges;
    std::vector<PdnPad> pads;
    std::vector<PdnSource> sources;
    int tier_count = 0;
    int layer_count = 0;  // layers per tier
    double die_w = 0, die_h = 0;

    bool is_pad(int node) const;
    double total_source_current() const;

    // Checks wire resistances against rho0*L/(w*t), rejects self loops and
    // duplicate edges, and verifies every source reaches a pad.
    void validate(const TechParams& tech) const;

    nlohmann::json to_json() const;
    static PdnGraph from_json(const nlohmann::json& j);
    void save(const std::string& path) const;
    static PdnGraph load(const std::string& path);
};

// Builds the per-layer stripe mesh with intra-tier and inter-tier via
// edges. Pads and sources are attached by the functions below.
PdnGraph synthesize_pdn(const Floorplan& fp, const TechParams& tech, const PdnConfig& cfg);

// Places cfg.pad_count pads on the top layer of the top tier.
void allocate_pads(PdnGraph& pdn, const PdnConfig& cfg);

// Converts per-cell power to current sinks (I = P/Vdd) on the nearest
// layer-0 node of each tier. Cells with zero power contribute nothing.
void attach_current_sources(PdnGraph& pdn, const PowerStack& maps, double vdd);

}  // namespace pdnrel
