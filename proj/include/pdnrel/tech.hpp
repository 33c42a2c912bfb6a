#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace pdnrel {

// Technology/material parameters. Defaults are literature-typical copper
// values; all of them are overridable from a JSON config and none is
// normative for a particular process.
struct TechParams {
    double rho0 = 1.68e-8;       // resistivity at T_ref (Ohm*m)
    double alpha = 3.9e-3;       // resistivity temperature coefficient (1/K)
    double T_ref = 293.15;       // reference temperature (K)
    double Zstar = 1.0;          // effective charge number
    double Omega = 1.18e-29;     // atomic volume (m^3)
    double B_mod = 1.0e11;       // effective bulk modulus (Pa)
    double D0 = 1.3e-9;          // diffusivity pre-exponential (m^2/s)
    double Ea_eV = 0.86;         // activation energy (eV)
    double sigma_crit = 5.0e8;   // critical nucleation stress (Pa)
    // Per-metal-layer thickness (m). A single entry broadcasts to all layers.
    std::vector<double> layer_thickness = {5e-7};

    // rho(T) = rho0 * (1 + alpha * (T - T_ref))
    double resistivity(double T) const { return rho0 * (1.0 + alpha * (T - T_ref)); }

    double thickness_for_layer(int layer) const;

    void validate() const;

    static TechParams from_json(const nlohmann::json& j);
    static TechParams load(const std::string& path);
    nlohmann::json to_json() const;
};

}  // namespace pdnrel
