#pragma once

#include <vector>

namespace pdnrel {

// Dense per-cell scalar grid, row-major with x fastest.
struct GridField {
    int nx = 0;
    int ny = 0;
    std::vector<double> v;

    GridField() = default;
    GridField(int nx_, int ny_, double fill = 0.0)
        : nx(nx_), ny(ny_), v(static_cast<size_t>(nx_) * ny_, fill) {}

    double& at(int i, int j) { return v[static_cast<size_t>(j) * nx + i]; }
    double at(int i, int j) const { return v[static_cast<size_t>(j) * nx + i]; }
    size_t size() const { return v.size(); }
};

// One grid per tier, ordered by tier z-index.
using TierFields = std::vector<GridField>;

// Per-tier rasterized power at one trace sample.
struct PowerMap {
    GridField density;  // W/m^2
    double dx = 0.0;    // cell width (m)
    double dy = 0.0;    // cell height (m)

    double cell_power(int i, int j) const { return density.at(i, j) * dx * dy; }
    double total_power() const;
};

using PowerStack = std::vector<PowerMap>;

double total_power(const PowerStack& maps);

}  // namespace pdnrel
