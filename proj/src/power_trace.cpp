#include "pdnrel/power_trace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pdnrel/errors.hpp"

namespace pdnrel {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    std::stringstream ss(line);
    while (std::getline(ss, tok, ',')) {
        // trim surrounding whitespace
        size_t a = tok.find_first_not_of(" \t\r");
        size_t b = tok.find_last_not_of(" \t\r");
        out.push_back(a == std::string::npos ? "" : tok.substr(a, b - a + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_double(const std::string& s, size_t line_no, const std::string& path) {
    try {
        size_t idx = 0;
        double v = std::stod(s, &idx);
        if (idx != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("trace: " + path + ":" + std::to_string(line_no) +
                         ": invalid number '" + s + "'");
    }
}

}  // namespace

void PowerTrace::validate(const Floorplan& fp) const {
    if (series.size() != block_ids.size())
        throw ValidationError("trace: series/block count mismatch");
    if (sample_count() == 0) throw ValidationError("trace: at least one sample required");
    std::set<std::string> fp_blocks;
    for (const auto& b : fp.blocks) fp_blocks.insert(b.id);
    for (size_t c = 0; c < block_ids.size(); ++c) {
        if (!fp_blocks.count(block_ids[c]))
            throw ValidationError("trace: block '" + block_ids[c] + "' not in floorplan");
        if (series[c].size() != sample_count())
            throw ValidationError("trace: ragged series for block '" + block_ids[c] + "'");
        for (double p : series[c])
            if (p < 0.0 || !std::isfinite(p))
                throw ValidationError("trace: negative power for block '" + block_ids[c] + "'");
    }
    if (!(dt > 0.0)) throw ValidationError("trace: dt must be > 0");
}

PowerTrace load_power_trace(const std::string& path, const Floorplan& fp) {
    std::ifstream in(path);
    if (!in) throw ParseError("trace: cannot open " + path);

    PowerTrace tr;
    std::string line;
    size_t line_no = 0;
    std::vector<double> times;

    if (!std::getline(in, line)) throw ParseError("trace: " + path + ": empty file");
    ++line_no;
    auto header = split_csv_line(line);
    if (header.empty() || header[0] != "t_s")
        throw ParseError("trace: " + path + ":1: first column must be 't_s'");
    for (size_t c = 1; c < header.size(); ++c) {
        if (header[c].empty())
            throw ParseError("trace: " + path + ":1: empty block id in header");
        tr.block_ids.push_back(header[c]);
    }
    tr.series.assign(tr.block_ids.size(), {});

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw ParseError("trace: " + path + ":" + std::to_string(line_no) +
                             ": expected " + std::to_string(header.size()) + " columns, got " +
                             std::to_string(cells.size()));
        times.push_back(parse_double(cells[0], line_no, path));
        for (size_t c = 1; c < cells.size(); ++c)
            tr.series[c - 1].push_back(parse_double(cells[c], line_no, path));
    }

    if (times.size() >= 2) tr.dt = times[1] - times[0];
    if (!(tr.dt > 0.0)) tr.dt = 1.0;
    tr.validate(fp);
    return tr;
}

PowerStack rasterize_power(const Floorplan& fp, const PowerTrace& trace, size_t t_index,
                           int nx, int ny) {
    if (t_index >= trace.sample_count())
        throw ValidationError("rasterize: t_index " + std::to_string(t_index) +
                              " out of range (samples: " +
                              std::to_string(trace.sample_count()) + ")");
    if (nx < 1 || ny < 1) throw ValidationError("rasterize: grid must be at least 1x1");

    const double dx = fp.die_w / nx;
    const double dy = fp.die_h / ny;
    PowerStack maps(fp.tiers.size());
    for (auto& m : maps) {
        m.density = GridField(nx, ny, 0.0);
        m.dx = dx;
        m.dy = dy;
    }

    for (size_t c = 0; c < trace.block_ids.size(); ++c) {
        const double p = trace.power(c, t_index);
        if (p == 0.0) continue;
        const Block& b = fp.block(trace.block_ids[c]);
        const int tier = fp.tier_index(b.tier);
        GridField& grid = maps[static_cast<size_t>(tier)].density;
        const double area = b.w * b.h;

        int i0 = std::max(0, static_cast<int>(std::floor(b.x / dx)));
        int i1 = std::min(nx - 1, static_cast<int>(std::floor((b.x + b.w) / dx)));
        int j0 = std::max(0, static_cast<int>(std::floor(b.y / dy)));
        int j1 = std::min(ny - 1, static_cast<int>(std::floor((b.y + b.h) / dy)));
        for (int j = j0; j <= j1; ++j) {
            const double oy = std::min(b.y + b.h, (j + 1) * dy) - std::max(b.y, j * dy);
            if (oy <= 0.0) continue;
            for (int i = i0; i <= i1; ++i) {
                const double ox = std::min(b.x + b.w, (i + 1) * dx) - std::max(b.x, i * dx);
                if (ox <= 0.0) continue;
                grid.at(i, j) += p * (ox * oy / area) / (dx * dy);
            }
        }
    }
    return maps;
}

}  // namespace pdnrel
