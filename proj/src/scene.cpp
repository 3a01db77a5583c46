// SPDX-License-Identifier: Apache-2.0
#include "rmplan/scene.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rmplan/rng.hpp"

namespace rmplan {

namespace {
using json = nlohmann::ordered_json;
constexpr int kSceneFormatVersion = 1;
constexpr int kHeightResampleCap = 10000;
}  // namespace

bool region_valid(const Region& r) {
    return r.edge_length > 0.0 && 0.0 < r.h_gbs && r.h_gbs < r.h_min && r.h_min < r.h_max;
}

Scene generate_scene(const SceneConfig& config, std::uint64_t seed) {
    if (!region_valid(config.region)) throw std::invalid_argument("generate_scene: invalid region");
    if (config.n_gbs < 1) throw std::invalid_argument("generate_scene: need at least one GBS");
    if (config.n_obstacles < 0) throw std::invalid_argument("generate_scene: negative obstacle count");
    if (config.obstacle_size_min <= 0.0 || config.obstacle_size_max < config.obstacle_size_min)
        throw std::invalid_argument("generate_scene: bad obstacle size range");
    if (!config.loads.empty() && static_cast<int>(config.loads.size()) != config.n_gbs)
        throw std::invalid_argument("generate_scene: loads length must match n_gbs");
    for (double l : config.loads)
        if (l < 0.0 || l > 1.0) throw std::invalid_argument("generate_scene: load outside [0,1]");

    Scene scene;
    scene.region = config.region;
    scene.seed = seed;
    Rng rng(seed);

    const double L = config.region.edge_length;
    scene.gbs_list.resize(config.n_gbs);
    for (int m = 0; m < config.n_gbs; ++m) {
        Gbs& g = scene.gbs_list[m];
        g.id = m + 1;
        g.position.x = rng.uniform(0.0, L);
        g.position.y = rng.uniform(0.0, L);
        g.position.z = config.region.h_gbs;
    }
    for (int m = 0; m < config.n_gbs; ++m) {
        scene.gbs_list[m].loading_factor =
            config.loads.empty() ? rng.uniform01() : config.loads[m];
    }

    scene.obstacles.resize(config.n_obstacles);
    for (Obstacle& ob : scene.obstacles) {
        ob.cx = rng.uniform(0.0, L);
        ob.cy = rng.uniform(0.0, L);
        const double side = rng.uniform(config.obstacle_size_min, config.obstacle_size_max);
        ob.hx = side / 2.0;
        ob.hy = side / 2.0;
        double h = rng.rayleigh(config.obstacle_height_mean);
        for (int tries = 1; h > config.region.h_min && tries < kHeightResampleCap; ++tries)
            h = rng.rayleigh(config.obstacle_height_mean);
        ob.height = std::min(h, config.region.h_min);
    }
    return scene;
}

bool is_los(const Scene& scene, const Gbs& gbs, const Vec3& uav_pos) {
    for (const Obstacle& ob : scene.obstacles)
        if (segment_intersects_cuboid(gbs.position, uav_pos, ob)) return false;
    return true;
}

std::string scene_to_json(const Scene& scene) {
    json j;
    j["version"] = kSceneFormatVersion;
    j["seed"] = scene.seed;
    j["region"] = {{"L", scene.region.edge_length},
                   {"h_min", scene.region.h_min},
                   {"h_max", scene.region.h_max},
                   {"h_gbs", scene.region.h_gbs}};
    j["gbs"] = json::array();
    for (const Gbs& g : scene.gbs_list)
        j["gbs"].push_back(
            {{"id", g.id}, {"x", g.position.x}, {"y", g.position.y}, {"load", g.loading_factor}});
    j["obstacles"] = json::array();
    for (const Obstacle& ob : scene.obstacles)
        j["obstacles"].push_back(
            {{"cx", ob.cx}, {"cy", ob.cy}, {"hx", ob.hx}, {"hy", ob.hy}, {"h", ob.height}});
    return j.dump(2) + "\n";
}

Scene scene_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("version") || j["version"].get<int>() != kSceneFormatVersion)
        throw std::runtime_error("scene_from_json: unsupported version");
    Scene scene;
    scene.seed = j["seed"].get<std::uint64_t>();
    const json& r = j.at("region");
    scene.region.edge_length = r.at("L").get<double>();
    scene.region.h_min = r.at("h_min").get<double>();
    scene.region.h_max = r.at("h_max").get<double>();
    scene.region.h_gbs = r.at("h_gbs").get<double>();
    for (const json& g : j.at("gbs")) {
        Gbs gbs;
        gbs.id = g.at("id").get<int>();
        gbs.position = {g.at("x").get<double>(), g.at("y").get<double>(), scene.region.h_gbs};
        gbs.loading_factor = g.at("load").get<double>();
        scene.gbs_list.push_back(gbs);
    }
    for (const json& o : j.at("obstacles")) {
        Obstacle ob;
        ob.cx = o.at("cx").get<double>();
        ob.cy = o.at("cy").get<double>();
        ob.hx = o.at("hx").get<double>();
        ob.hy = o.at("hy").get<double>();
        ob.height = o.at("h").get<double>();
        scene.obstacles.push_back(ob);
    }
    for (std::size_t m = 0; m < scene.gbs_list.size(); ++m)
        if (scene.gbs_list[m].id != static_cast<int>(m) + 1)
            throw std::runtime_error("scene_from_json: GBS ids must be 1..M in order");
    return scene;
}

void save_scene(const Scene& scene, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_scene: cannot open " + path);
    out << scene_to_json(scene);
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_scene: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scene_from_json(buf.str());
}

}  // namespace rmplan
