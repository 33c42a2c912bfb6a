#pragma once

#include <optional>
#include <vector>

#include "field.hpp"
#include "pdn.hpp"
#include "spd.hpp"
#include "tech.hpp"

namespace pdnrel {

// MNA system with pad (Dirichlet) nodes eliminated: their conductances are
// folded into neighbor diagonals and the right-hand side.
struct SpdSystem {
    CsrMatrix A;
    std::vector<double> b;          // A (g*Vdd and -I_source stamps)
    std::vector<int> row_of_node;   // -1 for pads
    std::vector<int> node_of_row;
};

SpdSystem assemble(const PdnGraph& pdn, const std::vector<double>& edge_resistance);

// Default uniform temperature when no field is supplied (85 C).
constexpr double kDefaultIrTemperature = 358.15;

struct IrSolution {
    std::vector<double> node_voltage;     // indexed by node id, pads exactly Vdd
    std::vector<double> edge_resistance;  // temperature-scaled, indexed by edge id
    double worst_drop = 0.0;
    int worst_node = -1;
    double vdd = 0.0;
    int cg_iterations = 0;
};

// Solves the PDN at the given temperature field (or a uniform temperature
// when temps is null). Edge resistance is scaled by rho(T_mid)/rho0 with
// T_mid the mean of the endpoint temperatures.
IrSolution ir_drop(const PdnGraph& pdn, const TechParams& tech,
                   const TierFields* temps = nullptr,
                   double uniform_T = kDefaultIrTemperature,
                   double tol = 1e-10);

struct BranchCurrents {
    std::vector<double> current;  // A, positive from lower to higher node id
    std::vector<double> density;  // |I|/(w*t) for wires, 0 for vias
};

BranchCurrents branch_currents(const PdnGraph& pdn, const IrSolution& sol);

// Max |sum of incident currents + source| over non-pad nodes.
double kcl_residual(const PdnGraph& pdn, const IrSolution& sol);

// Temperature at a node from its tier's grid, clamped to the die.
double field_value_at(const GridField& f, double x, double y, double die_w, double die_h);

}  // namespace pdnrel
