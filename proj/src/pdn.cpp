#include "pdnrel/pdn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <set>

#include "pdnrel/errors.hpp"

namespace pdnrel {

PadStrategy pad_strategy_from_string(const std::string& s) {
    if (s == "uniform") return PadStrategy::uniform;
    if (s == "perimeter") return PadStrategy::perimeter;
    if (s == "explicit") return PadStrategy::explicit_list;
    throw ValidationError("pdn: unknown pad strategy '" + s + "'");
}

std::string to_string(PadStrategy s) {
    switch (s) {
        case PadStrategy::uniform: return "uniform";
        case PadStrategy::perimeter: return "perimeter";
        case PadStrategy::explicit_list: return "explicit";
    }
    return "uniform";
}

void PdnConfig::validate() const {
    if (layers.empty()) throw ValidationError("pdn: at least one layer required");
    for (const auto& l : layers) {
        if (!(l.pitch > 0.0)) throw ValidationError("pdn: layer pitch must be > 0");
        if (l.width < w_min || l.width > w_max)
            throw ValidationError("pdn: layer width outside [w_min, w_max]");
    }
    if (pad_count < 1) throw ValidationError("pdn: pad count must be >= 1");
    if (!(vdd > 0.0)) throw ValidationError("pdn: Vdd must be > 0");
    if (!(via_resistance > 0.0)) throw ValidationError("pdn: via resistance must be > 0");
    if (pad_strategy == PadStrategy::explicit_list &&
        static_cast<int>(pad_xy.size()) != pad_count)
        throw ValidationError("pdn: explicit pad list size != pad_count");
}

PdnConfig PdnConfig::from_json(const nlohmann::json& j) {
    PdnConfig c;
    if (j.contains("layers")) {
        c.layers.clear();
        for (const auto& l : j.at("layers"))
            c.layers.push_back({l.at("pitch_m").get<double>(), l.at("width_m").get<double>()});
    }
    if (j.contains("via_resistance_ohm")) c.via_resistance = j.at("via_resistance_ohm").get<double>();
    if (j.contains("pad_count")) c.pad_count = j.at("pad_count").get<int>();
    if (j.contains("pad_strategy"))
        c.pad_strategy = pad_strategy_from_string(j.at("pad_strategy").get<std::string>());
    if (j.contains("pad_xy")) {
        for (const auto& p : j.at("pad_xy"))
            c.pad_xy.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    if (j.contains("vdd_v")) c.vdd = j.at("vdd_v").get<double>();
    if (j.contains("w_min")) c.w_min = j.at("w_min").get<double>();
    if (j.contains("w_max")) c.w_max = j.at("w_max").get<double>();
    c.validate();
    return c;
}

PdnConfig PdnConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("pdn config: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("pdn config: " + path + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json PdnConfig::to_json() const {
    nlohmann::json j;
    j["layers"] = nlohmann::json::array();
    for (const auto& l : layers)
        j["layers"].push_back({{"pitch_m", l.pitch}, {"width_m", l.width}});
    j["via_resistance_ohm"] = via_resistance;
    j["pad_count"] = pad_count;
    j["pad_strategy"] = to_string(pad_strategy);
    if (!pad_xy.empty()) {
        j["pad_xy"] = nlohmann::json::array();
        for (const auto& p : pad_xy) j["pad_xy"].push_back({p.first, p.second});
    }
    j["vdd_v"] = vdd;
    j["w_min"] = w_min;
    j["w_max"] = w_max;
    return j;
}

namespace {

// Quantize a coordinate to 1 pm so lattice points from different layers
// compare exactly.
int64_t qcoord(double x) { return llround(x * 1e12); }

std::vector<double> lattice_positions(double extent, double pitch) {
    int count = static_cast<int>(std::floor(extent / pitch * (1.0 + 1e-12))) + 1;
    std::vector<double> pos(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) pos[static_cast<size_t>(k)] = k * pitch;
    return pos;
}

}  // namespace

bool PdnGraph::is_pad(int node) const {
    for (const auto& p : pads)
        if (p.node == node) return true;
    return false;
}

double PdnGraph::total_source_current() const {
    double sum = 0.0;
    for (const auto& s : sources) sum += s.current;
    return sum;
}

void PdnGraph::validate(const TechParams& tech) const {
    std::set<std::pair<int, int>> seen;
    const int n = static_cast<int>(nodes.size());
    for (const auto& e : edges) {
        if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n)
            throw ValidationError("pdn: edge " + std::to_string(e.id) + " has invalid endpoints");
        if (e.a == e.b)
            throw ValidationError("pdn: self loop at node " + std::to_string(e.a));
        if (!seen.insert({std::min(e.a, e.b), std::max(e.a, e.b)}).second)
            throw ValidationError("pdn: duplicate edge " + std::to_string(e.a) + "-" +
                                  std::to_string(e.b));
        if (!(e.resistance > 0.0))
            throw ValidationError("pdn: non-positive resistance on edge " + std::to_string(e.id));
        if (e.kind == EdgeKind::wire) {
            const double r_expect = tech.rho0 * e.length / (e.width * e.thickness);
            if (std::abs(e.resistance - r_expect) > 1e-12 * r_expect)
                throw ValidationError("pdn: edge " + std::to_string(e.id) +
                                      " resistance inconsistent with geometry");
        }
    }
    // every source reaches a pad
    if (!sources.empty()) {
        if (pads.empty()) throw ValidationError("pdn: sources present but no pads");
        std::vector<std::vector<int>> adj(nodes.size());
        for (const auto& e : edges) {
            adj[static_cast<size_t>(e.a)].push_back(e.b);
            adj[static_cast<size_t>(e.b)].push_back(e.a);
        }
        std::vector<char> visited(nodes.size(), 0);
        std::queue<int> q;
        for (const auto& p : pads) {
            visited[static_cast<size_t>(p.node)] = 1;
            q.push(p.node);
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[static_cast<size_t>(u)])
                if (!visited[static_cast<size_t>(v)]) {
                    visited[static_cast<size_t>(v)] = 1;
                    q.push(v);
                }
        }
        for (const auto& s : sources)
            if (!visited[static_cast<size_t>(s.node)])
                throw ValidationError("pdn: source at node " + std::to_string(s.node) +
                                      " cannot reach any pad");
    }
}

PdnGraph synthesize_pdn(const Floorplan& fp, const TechParams& tech, const PdnConfig& cfg) {
    fp.validate();
    cfg.validate();
    const int n_tiers = static_cast<int>(fp.tiers.size());
    const int n_layers = static_cast<int>(cfg.layers.size());
    if (n_layers == 0) throw ValidationError("pdn: zero layers");
    for (const auto& l : cfg.layers) {
        if (l.pitch > fp.die_w || l.pitch > fp.die_h)
            throw ValidationError("pdn: pitch exceeds die dimension");
    }
    if (tech.layer_thickness.size() != 1 &&
        tech.layer_thickness.size() < static_cast<size_t>(n_layers))
        throw ValidationError("pdn: tech layer_thickness does not cover all layers");

    PdnGraph g;
    g.tier_count = n_tiers;
    g.layer_count = n_layers;
    g.die_w = fp.die_w;
    g.die_h = fp.die_h;

    // nodes: tier asc, layer asc, y-major, x within
    struct LayerGrid {
        std::vector<double> xs, ys;
        int first_id = 0;
    };
    std::vector<std::vector<LayerGrid>> grids(static_cast<size_t>(n_tiers),
                                              std::vector<LayerGrid>(static_cast<size_t>(n_layers)));
    int next_id = 0;
    for (int t = 0; t < n_tiers; ++t) {
        for (int l = 0; l < n_layers; ++l) {
            LayerGrid& lg = grids[static_cast<size_t>(t)][static_cast<size_t>(l)];
            lg.xs = lattice_positions(fp.die_w, cfg.layers[static_cast<size_t>(l)].pitch);
            lg.ys = lattice_positions(fp.die_h, cfg.layers[static_cast<size_t>(l)].pitch);
            lg.first_id = next_id;
            for (double y : lg.ys)
                for (double x : lg.xs)
                    g.nodes.push_back({next_id++, t, l, x, y});
        }
    }

    auto node_id = [&grids](int t, int l, int ix, int iy) {
        const LayerGrid& lg = grids[static_cast<size_t>(t)][static_cast<size_t>(l)];
        return lg.first_id + iy * static_cast<int>(lg.xs.size()) + ix;
    };

    int next_edge = 0;
    auto add_edge = [&g, &next_edge](int a, int b, EdgeKind kind, double length, double width,
                                     double thickness, double resistance) {
        if (a > b) std::swap(a, b);
        g.edges.push_back({next_edge++, a, b, kind, length, width, thickness, resistance});
    };

    // wire edges along the stripe direction: vertical on even layers,
    // horizontal on odd
    for (int t = 0; t < n_tiers; ++t) {
        for (int l = 0; l < n_layers; ++l) {
            const LayerGrid& lg = grids[static_cast<size_t>(t)][static_cast<size_t>(l)];
            const double pitch = cfg.layers[static_cast<size_t>(l)].pitch;
            const double width = cfg.layers[static_cast<size_t>(l)].width;
            const double thick = tech.thickness_for_layer(l);
            const double r = tech.rho0 * pitch / (width * thick);
            const int nx = static_cast<int>(lg.xs.size());
            const int ny = static_cast<int>(lg.ys.size());
            if (l % 2 == 0) {
                for (int iy = 0; iy + 1 < ny; ++iy)
                    for (int ix = 0; ix < nx; ++ix)
                        add_edge(node_id(t, l, ix, iy), node_id(t, l, ix, iy + 1),
                                 EdgeKind::wire, pitch, width, thick, r);
            } else {
                for (int iy = 0; iy < ny; ++iy)
                    for (int ix = 0; ix + 1 < nx; ++ix)
                        add_edge(node_id(t, l, ix, iy), node_id(t, l, ix + 1, iy),
                                 EdgeKind::wire, pitch, width, thick, r);
            }
        }
    }

    // vias between adjacent layers within a tier, then between facing
    // layers of adjacent tiers, at exactly coincident (x, y)
    auto connect_layers = [&](int ta, int la, int tb, int lb) {
        const LayerGrid& ga = grids[static_cast<size_t>(ta)][static_cast<size_t>(la)];
        const LayerGrid& gb = grids[static_cast<size_t>(tb)][static_cast<size_t>(lb)];
        std::map<std::pair<int64_t, int64_t>, std::pair<int, int>> lookup;  // pos -> (ix, iy)
        for (size_t iy = 0; iy < gb.ys.size(); ++iy)
            for (size_t ix = 0; ix < gb.xs.size(); ++ix)
                lookup[{qcoord(gb.xs[ix]), qcoord(gb.ys[iy])}] = {static_cast<int>(ix),
                                                                  static_cast<int>(iy)};
        for (size_t iy = 0; iy < ga.ys.size(); ++iy)
            for (size_t ix = 0; ix < ga.xs.size(); ++ix) {
                auto it = lookup.find({qcoord(ga.xs[ix]), qcoord(ga.ys[iy])});
                if (it == lookup.end()) continue;
                add_edge(node_id(ta, la, static_cast<int>(ix), static_cast<int>(iy)),
                         node_id(tb, lb, it->second.first, it->second.second),
                         EdgeKind::via, 0.0, 0.0, 0.0, cfg.via_resistance);
            }
    };
    for (int t = 0; t < n_tiers; ++t)
        for (int l = 0; l + 1 < n_layers; ++l)
            connect_layers(t, l, t, l + 1);
    for (int t = 0; t + 1 < n_tiers; ++t)
        connect_layers(t, n_layers - 1, t + 1, 0);

    return g;
}

void allocate_pads(PdnGraph& pdn, const PdnConfig& cfg) {
    const int top_tier = pdn.tier_count - 1;
    const int top_layer = pdn.layer_count - 1;
    std::vector<const PdnNode*> cand;
    for (const auto& n : pdn.nodes)
        if (n.tier == top_tier && n.layer == top_layer) cand.push_back(&n);
    if (cand.empty()) throw ValidationError("pdn: no top-layer nodes for pads");
    if (cfg.pad_count > static_cast<int>(cand.size()))
        throw ValidationError("pdn: pad count " + std::to_string(cfg.pad_count) +
                              " exceeds top-layer node count " + std::to_string(cand.size()));

    std::vector<int> chosen;
    auto dist2 = [](const PdnNode* n, double x, double y) {
        const double dx = n->x - x, dy = n->y - y;
        return dx * dx + dy * dy;
    };

    switch (cfg.pad_strategy) {
        case PadStrategy::uniform: {
            // greedy farthest-point, seeded at the grid centroid
            double cx = 0, cy = 0;
            for (const auto* n : cand) {
                cx += n->x;
                cy += n->y;
            }
            cx /= static_cast<double>(cand.size());
            cy /= static_cast<double>(cand.size());
            std::vector<char> used(cand.size(), 0);
            size_t seed = 0;
            for (size_t i = 1; i < cand.size(); ++i)
                if (dist2(cand[i], cx, cy) < dist2(cand[seed], cx, cy)) seed = i;
            used[seed] = 1;
            chosen.push_back(cand[seed]->id);
            while (static_cast<int>(chosen.size()) < cfg.pad_count) {
                size_t best = cand.size();
                double best_min = -1.0;
                for (size_t i = 0; i < cand.size(); ++i) {
                    if (used[i]) continue;
                    double mind = std::numeric_limits<double>::max();
                    for (size_t k = 0; k < cand.size(); ++k)
                        if (used[k]) mind = std::min(mind, dist2(cand[i], cand[k]->x, cand[k]->y));
                    if (mind > best_min) {
                        best_min = mind;
                        best = i;
                    }
                }
                used[best] = 1;
                chosen.push_back(cand[best]->id);
            }
            break;
        }
        case PadStrategy::perimeter: {
            double xmin = cand[0]->x, xmax = cand[0]->x, ymin = cand[0]->y, ymax = cand[0]->y;
            for (const auto* n : cand) {
                xmin = std::min(xmin, n->x);
                xmax = std::max(xmax, n->x);
                ymin = std::min(ymin, n->y);
                ymax = std::max(ymax, n->y);
            }
            auto on = [](double a, double b) { return std::abs(a - b) < 1e-15 + 1e-9 * std::abs(b); };
            // clockwise walk from (xmin, ymin)
            std::vector<const PdnNode*> ring;
            std::vector<const PdnNode*> bottom, right, top, left;
            for (const auto* n : cand) {
                if (on(n->y, ymin)) bottom.push_back(n);
                else if (on(n->x, xmax)) right.push_back(n);
            }
            for (const auto* n : cand) {
                if (on(n->y, ymax) && !on(n->y, ymin)) top.push_back(n);
                else if (on(n->x, xmin) && !on(n->y, ymin) && !on(n->y, ymax)) left.push_back(n);
            }
            std::sort(bottom.begin(), bottom.end(),
                      [](const PdnNode* a, const PdnNode* b) { return a->x < b->x; });
            std::sort(right.begin(), right.end(),
                      [](const PdnNode* a, const PdnNode* b) { return a->y < b->y; });
            std::sort(top.begin(), top.end(),
                      [](const PdnNode* a, const PdnNode* b) { return a->x > b->x; });
            std::sort(left.begin(), left.end(),
                      [](const PdnNode* a, const PdnNode* b) { return a->y > b->y; });
            for (const auto* n : bottom) ring.push_back(n);
            for (const auto* n : right)
                if (!on(n->y, ymin)) ring.push_back(n);
            for (const auto* n : top)
                if (!on(n->x, xmax)) ring.push_back(n);
            for (const auto* n : left) ring.push_back(n);
            if (cfg.pad_count > static_cast<int>(ring.size()))
                throw ValidationError("pdn: pad count exceeds perimeter node count");
            const size_t m = ring.size();
            for (int i = 0; i < cfg.pad_count; ++i)
                chosen.push_back(ring[static_cast<size_t>(i) * m / static_cast<size_t>(cfg.pad_count)]->id);
            break;
        }
        case PadStrategy::explicit_list: {
            for (const auto& [px, py] : cfg.pad_xy) {
                size_t best = 0;
                for (size_t i = 1; i < cand.size(); ++i)
                    if (dist2(cand[i], px, py) < dist2(cand[best], px, py)) best = i;
                chosen.push_back(cand[best]->id);
            }
            std::set<int> uniq(chosen.begin(), chosen.end());
            if (uniq.size() != chosen.size())
                throw ValidationError("pdn: explicit pads snap to a shared node");
            break;
        }
    }

    std::sort(chosen.begin(), chosen.end());
    pdn.pads.clear();
    for (int id : chosen) pdn.pads.push_back({id, cfg.vdd});
}

void attach_current_sources(PdnGraph& pdn, const PowerStack& maps, double vdd) {
    if (!(vdd > 0.0)) throw ValidationError("pdn: Vdd must be > 0");
    if (static_cast<int>(maps.size()) != pdn.tier_count)
        throw ValidationError("pdn: power map tier count mismatch");

    std::map<int, double> per_node;
    for (int t = 0; t < pdn.tier_count; ++t) {
        const PowerMap& pm = maps[static_cast<size_t>(t)];
        if (pm.density.size() == 0) continue;
        // layer-0 lattice of this tier, sorted unique coordinates
        std::vector<double> xs, ys;
        std::map<std::pair<int64_t, int64_t>, int> id_at;
        for (const auto& n : pdn.nodes) {
            if (n.tier != t || n.layer != 0) continue;
            xs.push_back(n.x);
            ys.push_back(n.y);
            id_at[{qcoord(n.x), qcoord(n.y)}] = n.id;
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

        // nearest coordinate; ties resolve to the smaller value, which maps
        // to the lower node id
        auto nearest = [](const std::vector<double>& v, double q) {
            auto it = std::lower_bound(v.begin(), v.end(), q);
            if (it == v.begin()) return *it;
            if (it == v.end()) return v.back();
            double hi = *it, lo = *(it - 1);
            return (q - lo <= hi - q) ? lo : hi;
        };

        for (int j = 0; j < pm.density.ny; ++j) {
            for (int i = 0; i < pm.density.nx; ++i) {
                const double p = pm.cell_power(i, j);
                if (p == 0.0) continue;
                const double cxp = (i + 0.5) * pm.dx;
                const double cyp = (j + 0.5) * pm.dy;
                const double nxp = nearest(xs, cxp);
                const double nyp = nearest(ys, cyp);
                per_node[id_at.at({qcoord(nxp), qcoord(nyp)})] += p / vdd;
            }
        }
    }

    pdn.sources.clear();
    for (const auto& [node, current] : per_node)
        if (current != 0.0) pdn.sources.push_back({node, current});
}

nlohmann::json PdnGraph::to_json() const {
    nlohmann::json j;
    j["tier_count"] = tier_count;
    j["layer_count"] = layer_count;
    j["die"] = {{"w_m", die_w}, {"h_m", die_h}};
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : nodes)
        j["nodes"].push_back({{"id", n.id}, {"tier", n.tier}, {"layer", n.layer},
                              {"x_m", n.x}, {"y_m", n.y}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : edges)
        j["edges"].push_back({{"id", e.id},
                              {"a", e.a},
                              {"b", e.b},
                              {"kind", e.kind == EdgeKind::wire ? "wire" : "via"},
                              {"l_m", e.length},
                              {"w_m", e.width},
                              {"t_m", e.thickness},
                              {"r_ohm", e.resistance}});
    j["pads"] = nlohmann::json::array();
    for (const auto& p : pads) j["pads"].push_back({{"node", p.node}, {"vdd_v", p.vdd}});
    j["sources"] = nlohmann::json::array();
    for (const auto& s : sources)
        j["sources"].push_back({{"node", s.node}, {"i_a", s.current}});
    return j;
}

PdnGraph PdnGraph::from_json(const nlohmann::json& j) {
    PdnGraph g;
    try {
        g.tier_count = j.at("tier_count").get<int>();
        g.layer_count = j.at("layer_count").get<int>();
        g.die_w = j.at("die").at("w_m").get<double>();
        g.die_h = j.at("die").at("h_m").get<double>();
        for (const auto& n : j.at("nodes"))
            g.nodes.push_back({n.at("id").get<int>(), n.at("tier").get<int>(),
                               n.at("layer").get<int>(), n.at("x_m").get<double>(),
                               n.at("y_m").get<double>()});
        for (const auto& e : j.at("edges")) {
            PdnEdge pe;
            pe.id = e.at("id").get<int>();
            pe.a = e.at("a").get<int>();
            pe.b = e.at("b").get<int>();
            pe.kind = e.at("kind").get<std::string>() == "via" ? EdgeKind::via : EdgeKind::wire;
            pe.length = e.at("l_m").get<double>();
            pe.width = e.at("w_m").get<double>();
            pe.thickness = e.at("t_m").get<double>();
            pe.resistance = e.at("r_ohm").get<double>();
            g.edges.push_back(pe);
        }
        for (const auto& p : j.at("pads"))
            g.pads.push_back({p.at("node").get<int>(), p.at("vdd_v").get<double>()});
        for (const auto& s : j.at("sources"))
            g.sources.push_back({s.at("node").get<int>(), s.at("i_a").get<double>()});
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("pdn graph: ") + e.what());
    }
    return g;
}

void PdnGraph::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ValidationError("pdn: cannot write " + path);
    out << to_json().dump(2) << "\n";
}

PdnGraph PdnGraph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("pdn graph: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("pdn graph: " + path + ": " + e.what());
    }
    return from_json(j);
}

}  // namespace pdnrel
