#pragma once

#include <vector>

#include "ir.hpp"
#include "pdn.hpp"
#include "tech.hpp"

namespace pdnrel {

// Sizing variables are per-(tier, layer) width multipliers. Group index
// g = tier * layer_count + layer.
struct SizingConfig {
    double m_min = 0.5;
    double m_max = 4.0;
    double area_budget = 0.0;  // m^2 of total wire width*length; 0 = baseline area
    double w_ir = 0.5;
    double w_em = 0.5;
    double beta_scale = 50.0;  // beta = beta_scale / initial max per term
    int max_iters = 50;
    double tol = 1e-4;         // relative improvement stop
    double uniform_T = kDefaultIrTemperature;

    void validate() const;
};

// Width multipliers applied to wire edges: w -> m*w, R -> R/m, j -> j/m.
PdnGraph apply_sizing(const PdnGraph& pdn, const std::vector<double>& mult);

// Total wire metal area sum(w_e * L_e) under the given multipliers.
double wire_area(const PdnGraph& pdn, const std::vector<double>& mult);

int sizing_group_count(const PdnGraph& pdn);

struct ObjectiveTerms {
    double value = 0;
    double worst_drop = 0;
    double worst_sigma = 0;
    double area = 0;
};

// Smoothed-max objective
//   f = w_ir * softmax_beta(node drops) + w_em * softmax_beta(sigma_max_ss)
// with softmax_beta(v) = (1/beta) log sum exp(beta v). Betas are frozen
// from the baseline evaluation held in the evaluator.
class SizingObjective {
public:
    SizingObjective(const PdnGraph& pdn, const TechParams& tech, const SizingConfig& cfg);

    ObjectiveTerms evaluate(const std::vector<double>& mult) const;
    double operator()(const std::vector<double>& mult) const { return evaluate(mult).value; }

    // Central finite differences with step 1e-4 * m_g per group.
    std::vector<double> gradient(const std::vector<double>& mult, int jobs = 1) const;

    double beta_ir() const { return beta_ir_; }
    double beta_em() const { return beta_em_; }
    double baseline_area() const { return baseline_area_; }

private:
    const PdnGraph& pdn_;
    const TechParams& tech_;
    SizingConfig cfg_;
    double beta_ir_ = 50.0;
    double beta_em_ = 50.0;
    double baseline_area_ = 0.0;
};

struct OptRecord {
    int iter = 0;
    double objective = 0;
    double worst_drop = 0;
    double worst_sigma = 0;
    double area = 0;
};

struct OptResult {
    std::vector<double> multipliers;
    std::vector<OptRecord> history;  // accepted iterates, monotone objective
    PdnGraph sized;
    int iterations = 0;
};

// Projected gradient descent with Armijo backtracking. Projection clips to
// bounds, then scales down uniformly to meet the area budget.
OptResult optimize(const PdnGraph& pdn, const TechParams& tech, const SizingConfig& cfg,
                   const std::vector<double>& vars0, int jobs = 1);

}  // namespace pdnrel
