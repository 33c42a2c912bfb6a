#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tech.hpp"

namespace pdnrel {

// Feature layout: [ j (A/m^2), D (m^2/s), x_norm in [0,1], T (K) ].
constexpr int kEmFeatureCount = 4;
using EmFeatures = std::array<double, kEmFeatureCount>;

struct EmFeatureRow {
    EmFeatures f{};
    double target = 0;  // Pa

    void validate() const;
};

enum class TargetMode { steady_max, transient_sigma };

struct SamplingConfig {
    double j_min = 1e8, j_max = 5e10;    // A/m^2
    double T_min = 300.0, T_max = 420.0; // K
    double L_min = 1e-5, L_max = 2e-4;   // m
    int count = 10000;
    uint64_t seed = 42;
    TargetMode mode = TargetMode::steady_max;
    double t_query_frac = 0.1;  // transient mode: t = frac * L^2/kappa
    int grid_points = 101;

    void validate() const;
    static SamplingConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Draws rows from the configured ranges, computes targets with the physics
// engine, then shuffles with the seed. Deterministic for a fixed seed.
std::vector<EmFeatureRow> gen_dataset(const SamplingConfig& cfg, const TechParams& tech,
                                      int jobs = 1);

void save_dataset_csv(const std::vector<EmFeatureRow>& rows, const std::string& path);
std::vector<EmFeatureRow> load_dataset_csv(const std::string& path);

struct SurrogateHyper {
    int rounds = 200;
    int depth = 4;
    double learning_rate = 0.1;
    int min_leaf = 5;
    double subsample = 1.0;
    uint64_t seed = 0;

    void validate() const;
};

struct TreeNode {
    int feature = -1;        // -1 marks a leaf
    double threshold = 0;
    int left = -1, right = -1;
    double value = 0;        // leaf output

    bool is_leaf() const { return feature < 0; }
};

struct RegressionTree {
    std::vector<TreeNode> nodes;  // node 0 is the root
    double predict(const EmFeatures& f) const;
};

// Gradient-boosted regression trees with squared-error loss and exact
// greedy splits. Features are standardized with stats kept in the model.
struct SurrogateModel {
    double base = 0;  // mean training target
    double learning_rate = 0.1;
    EmFeatures feat_mean{};
    EmFeatures feat_std{};
    std::vector<RegressionTree> trees;
    SurrogateHyper hyper;
    std::vector<double> train_rmse;  // one entry per boosting round

    double predict(const EmFeatures& f) const;

    nlohmann::json to_json() const;
    static SurrogateModel from_json(const nlohmann::json& j);
    void save(const std::string& path) const;
    static SurrogateModel load(const std::string& path);
};

SurrogateModel train(const std::vector<EmFeatureRow>& rows, const SurrogateHyper& hyper);

struct EvalMetrics {
    double rmse = 0;
    double max_abs_err = 0;
    std::optional<double> r2;  // empty when held-out targets have zero variance
    size_t count = 0;
};

EvalMetrics evaluate(const SurrogateModel& model, const std::vector<EmFeatureRow>& rows);

struct ScreenEntry {
    int segment_id = -1;
    double predicted = 0;  // Pa
};

// Ranks segments by predicted stress, descending, ties by ascending id.
// Returns at most top_k entries.
std::vector<ScreenEntry> hotspot_screen(const std::vector<int>& segment_ids,
                                        const std::vector<EmFeatures>& features,
                                        const SurrogateModel& model, size_t top_k);

}  // namespace pdnrel
