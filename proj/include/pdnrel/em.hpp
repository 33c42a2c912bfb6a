#pragma once

#include <limits>
#include <vector>

#include "field.hpp"
#include "ir.hpp"
#include "pdn.hpp"
#include "tech.hpp"

namespace pdnrel {

// One two-terminal interconnect segment under Korhonen-model analysis.
// x = 0 is the cathode; stress is positive tensile there.
struct EmSegment {
    int id = -1;
    double length = 0;     // m
    double width = 0;      // m
    double thickness = 0;  // m
    double j = 0;          // A/m^2, magnitude is what drives the model
    double T = 358.15;     // K
    int grid_points = 101;

    void validate() const;
};

struct StressProfile {
    std::vector<double> x;      // m, 0 = cathode
    std::vector<double> sigma;  // Pa
    double time = 0;            // s

    // Trapezoidal spatial mean; conserved by the blocked-boundary solver.
    double mean() const;
    double max_abs() const;
};

// Electron-wind stress gradient G = e*Z*rho(T)*|j|/Omega (Pa/m).
double drift_force(double j, double T, const TechParams& tech);

// Atomic diffusivity D(T) = D0*exp(-Ea*e/(kB*T)) (m^2/s).
double diffusivity(double T, const TechParams& tech);

// Stress diffusion coefficient kappa = D(T)*B*Omega/(kB*T) (m^2/s).
double kappa(double T, const TechParams& tech);

// Closed-form steady solution sigma(x) = G*(L/2 - x).
StressProfile steady_state(const EmSegment& seg, const TechParams& tech);
double steady_sigma_max(const EmSegment& seg, const TechParams& tech);

// Immortality per the Blech back-stress criterion: G*L/2 < sigma_crit.
// Exactly at the threshold counts as mortal.
bool blech_immortal(const EmSegment& seg, const TechParams& tech);

struct StressHistory {
    std::vector<StressProfile> samples;  // at requested times
    StressProfile final_profile;
    int steps = 0;
};

// Implicit backward-Euler finite differences on
//   dsigma/dt = d/dx [ kappa * (dsigma/dx + G) ]
// with zero-flux boundaries; one tridiagonal solve per step. sigma0 null
// means zero initial stress. sample_times must be ascending.
StressHistory transient_solve(const EmSegment& seg, const TechParams& tech,
                              double dt, double t_end,
                              const std::vector<double>* sigma0 = nullptr,
                              const std::vector<double>* sample_times = nullptr);

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// First time the cathode stress reaches sigma_crit; infinity when the
// Blech filter says immortal. Steps with linear interpolation at the
// crossing, then halves dt until the estimate moves by < 1%.
double nucleation_time(const EmSegment& seg, const TechParams& tech,
                       double dt0 = 0.0, int max_refinements = 12);

// Compact Black-equation MTTF in hours: A * j^-n * exp(Ea*e/(kB*T)).
// j = 0 yields infinity.
double mttf_black(double j, double T, double A_const, double n_exp, double Ea_eV);

struct SegmentEmResult {
    int id = -1;
    double j = 0;
    double T = 0;
    double G = 0;             // Pa/m
    double kappa = 0;         // m^2/s
    double sigma_max_ss = 0;  // Pa
    bool immortal = true;
    double t_nuc = kInfinity;  // s
};

struct EmAnalysisConfig {
    int grid_points = 101;
    double uniform_T = kDefaultIrTemperature;  // used when no field given
};

// Per-wire-edge EM screening: Blech filter first, transient nucleation
// solve only for mortal segments. Via edges carry no wire geometry and are
// skipped. Results sorted by ascending t_nuc, ties by segment id.
std::vector<SegmentEmResult> analyze_pdn(const PdnGraph& pdn, const BranchCurrents& currents,
                                         const TierFields* temps, const TechParams& tech,
                                         const EmAnalysisConfig& cfg = {}, int jobs = 1);

}  // namespace pdnrel
