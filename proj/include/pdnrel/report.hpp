#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "field.hpp"

namespace pdnrel {

// Writes an SVG heatmap: one rect per cell, linear palette over
// [min, max], legend with numeric bounds. Byte-deterministic for a fixed
// field. A degenerate field (min == max) produces a single-color map with
// an annotation.
std::string render_heatmap_svg(const GridField& field, const std::string& title);
void emit_heatmap(const GridField& field, const std::string& title, const std::string& path);

// CSV helpers; every number goes through fmt_g9.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

void write_json_file(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json_file(const std::string& path);

// Recursively rounds all numbers in a JSON document to 9 significant
// digits so emitted files are stable.
nlohmann::json round9_json(const nlohmann::json& j);

}  // namespace pdnrel
