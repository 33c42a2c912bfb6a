#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "em.hpp"
#include "field.hpp"
#include "floorplan.hpp"
#include "ir.hpp"
#include "pdn.hpp"
#include "power_trace.hpp"
#include "tech.hpp"
#include "thermal.hpp"

namespace pdnrel {

struct DvfsSetting {
    double v_scale = 1.0;
    double f_scale = 1.0;
};

// Per-block dynamic-power scaling P' = P * f_scale * v_scale^2.
using DvfsPolicy = std::map<std::string, DvfsSetting>;

PowerTrace apply_dvfs(const PowerTrace& trace, const DvfsPolicy& policy);

enum class DegradationMode { none, resistance_step };

struct CoSimConfig {
    double interval_s = 0.0;  // damage-time quantum per sample; 0 = trace dt
    int max_iters = 20;
    double tol_K = 0.01;
    double relax = 0.7;  // omega in (0, 1]
    DegradationMode degradation = DegradationMode::none;
    double delta_r_frac = 0.1;  // resistance step on nucleation
    bool fast_mttf = false;     // Black-equation mode instead of physics t_nuc
    bool couple_resistivity = true;  // rho(T) feedback into IR
    bool couple_joule = true;        // I^2 R self-heating into thermal
    double black_a_hours = 1e3;
    double black_n = 2.0;
    int nx = 16, ny = 16;       // thermal/power grid
    int em_grid_points = 101;
    double uniform_T_ir = kDefaultIrTemperature;  // IR temp when decoupled

    void validate() const;
    static CoSimConfig from_json(const nlohmann::json& j);
    static CoSimConfig load(const std::string& path);
    nlohmann::json to_json() const;
};

struct TimelineRecord {
    int interval = 0;
    bool converged = false;
    int iterations = 0;
    double dT_last = 0;      // final fixed-point update magnitude (K)
    double peak_T = 0;       // K
    double worst_drop = 0;   // V
    double worst_j = 0;      // A/m^2 over wire edges
    int nucleated_count = 0;
    TierFields T;            // converged temperature field
};

struct TimelineResult {
    std::vector<TimelineRecord> records;
    std::vector<double> damage;     // per edge id; wires only accrue
    std::vector<int> nucleated_at;  // interval index, -1 if never
    double lifetime_s = kInfinity;
    double interval_s = 0.0;
};

// Bidirectional loop: per interval, iterate IR and thermal to a relaxed
// fixed point, then accrue Miner-rule EM damage from the converged fields.
class CoSim {
public:
    CoSim(const Floorplan& fp, const PdnGraph& pdn, const TechParams& tech,
          const ThermalConfig& thermal_cfg, const CoSimConfig& cfg);

    TimelineResult run_timeline(const PowerTrace& trace);

    struct IntervalState {
        TierFields T;
        std::vector<double> damage;      // per edge
        std::vector<int> nucleated_at;   // per edge, -1 = intact
        std::vector<double> resistance;  // working copy, degrades
        int interval = 0;
    };

    IntervalState initial_state() const;
    TimelineRecord run_interval(IntervalState& state, const PowerStack& maps,
                                double interval_len);

private:
    const Floorplan& fp_;
    PdnGraph pdn_;  // working copy; sources rewritten per interval
    TechParams tech_;
    ThermalConfig thermal_cfg_;
    CoSimConfig cfg_;
    std::map<std::tuple<int, uint64_t, uint64_t>, double> tnuc_memo_;  // (edge, j bits, T bits)

    double edge_nucleation_time(const PdnEdge& e, double j, double T);
};

}  // namespace pdnrel
