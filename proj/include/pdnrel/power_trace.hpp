#pragma once

#include <string>
#include <vector>

#include "field.hpp"
#include "floorplan.hpp"

namespace pdnrel {

// Per-block power samples with a uniform sample interval. Blocks absent
// from the trace dissipate zero power.
struct PowerTrace {
    double dt = 1.0;                           // sample interval (s)
    std::vector<std::string> block_ids;        // column order from the CSV
    std::vector<std::vector<double>> series;   // [block][sample], W

    size_t sample_count() const { return series.empty() ? 0 : series[0].size(); }
    double power(size_t block, size_t t) const { return series[block][t]; }

    void validate(const Floorplan& fp) const;
};

PowerTrace load_power_trace(const std::string& path, const Floorplan& fp);

// Rasterizes one trace sample onto an nx-by-ny grid per tier. Block power
// is spread uniformly over covered cells weighted by overlap area, so total
// power is conserved.
PowerStack rasterize_power(const Floorplan& fp, const PowerTrace& trace,
                           size_t t_index, int nx, int ny);

}  // namespace pdnrel
