#pragma once

#include "json.hpp"

#include "field.hpp"

namespace pdnrel {

// Lumped per-cell RC network: lateral conductances within a tier, vertical
// conductances between stacked tiers, heat extraction to ambient through
// the top tier only.
struct ThermalConfig {
    double g_lat = 0.5;     // W/K between lateral neighbor cells
    double g_z = 2.0;       // W/K between vertically adjacent cells
    double g_amb = 0.1;     // W/K from each top-tier cell to ambient
    double T_amb = 318.15;  // K
    double C_th = 1e-3;     // J/K per cell

    void validate() const;
    static ThermalConfig from_json(const nlohmann::json& j);
    static ThermalConfig load(const std::string& path);
    nlohmann::json to_json() const;
};

// Steady state: G*T = P + g_amb*T_amb. All tiers must share the grid size.
TierFields solve_steady_temperature(const PowerStack& maps, const ThermalConfig& cfg,
                                    double tol = 1e-10);

// One backward-Euler step: (C/dt + G)*T_next = C/dt*T + P + g_amb*T_amb.
TierFields transient_step(const TierFields& T, const PowerStack& maps, double dt,
                          const ThermalConfig& cfg, double tol = 1e-10);

// Total heat flowing to ambient, for energy-balance checks.
double ambient_heat_flow(const TierFields& T, const ThermalConfig& cfg);

}  // namespace pdnrel
