#include "pdnrel/tech.hpp"

#include <fstream>

#include "pdnrel/errors.hpp"
#include "pdnrel/numeric.hpp"

namespace pdnrel {

double TechParams::thickness_for_layer(int layer) const {
    if (layer_thickness.size() == 1) return layer_thickness[0];
    if (layer < 0 || static_cast<size_t>(layer) >= layer_thickness.size())
        throw ValidationError("tech: no thickness for layer " + std::to_string(layer));
    return layer_thickness[static_cast<size_t>(layer)];
}

void TechParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0))
            throw ValidationError(std::string("tech: ") + name + " must be > 0");
    };
    positive(rho0, "rho0");
    positive(T_ref, "T_ref");
    positive(Zstar, "Zstar");
    positive(Omega, "Omega");
    positive(B_mod, "B_mod");
    positive(D0, "D0");
    positive(Ea_eV, "Ea");
    positive(sigma_crit, "sigma_crit");
    if (alpha < 0.0) throw ValidationError("tech: alpha must be >= 0");
    if (layer_thickness.empty())
        throw ValidationError("tech: layer_thickness must not be empty");
    for (double t : layer_thickness) positive(t, "layer_thickness");
    // rho(T) stays positive over the supported temperature window
    if (resistivity(250.0) <= 0.0 || resistivity(450.0) <= 0.0)
        throw ValidationError("tech: rho(T) non-positive within [250, 450] K");
}

TechParams TechParams::from_json(const nlohmann::json& j) {
    TechParams p;
    auto get = [&j](const char* key, double& out) {
        if (j.contains(key)) out = j.at(key).get<double>();
    };
    get("rho0", p.rho0);
    get("alpha", p.alpha);
    get("T_ref", p.T_ref);
    get("Zstar", p.Zstar);
    get("Omega", p.Omega);
    get("B_mod", p.B_mod);
    get("D0", p.D0);
    get("Ea", p.Ea_eV);
    get("sigma_crit", p.sigma_crit);
    if (j.contains("layer_thickness")) {
        const auto& lt = j.at("layer_thickness");
        if (lt.is_number()) {
            p.layer_thickness = {lt.get<double>()};
        } else {
            p.layer_thickness = lt.get<std::vector<double>>();
        }
    }
    p.validate();
    return p;
}

TechParams TechParams::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("tech: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("tech: " + path + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json TechParams::to_json() const {
    nlohmann::json j;
    j["rho0"] = rho0;
    j["alpha"] = alpha;
    j["T_ref"] = T_ref;
    j["Zstar"] = Zstar;
    j["Omega"] = Omega;
    j["B_mod"] = B_mod;
    j["D0"] = D0;
    j["Ea"] = Ea_eV;
    j["sigma_crit"] = sigma_crit;
    j["layer_thickness"] = layer_thickness;
    return j;
}

}  // namespace pdnrel
