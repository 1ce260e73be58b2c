/*
 * Copyright 2026 the bda authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bda/common.hpp"
#include "bda/geometry.hpp"
#include "bda/labels.hpp"

namespace bda {

struct BuildingFootprint {
    std::string id;
    Polygon polygon;
    Point2 barycentre; // area-weighted centroid, recomputable from the polygon
};

inline BuildingFootprint make_footprint(std::string id, Polygon polygon) {
    BuildingFootprint f;
    f.id = std::move(id);
    f.barycentre = centroid(polygon);
    f.polygon = std::move(polygon);
    return f;
}

enum class PointSource { External, Expert };

/// A georeferenced damage-assessment point (e.g. from an external analysis).
struct DamagePoint {
    Point2 location;
    DamageLabel label = DamageLabel::NoDamage;
    PointSource source = PointSource::External;
};

/// Footprints with their damage labels (kUnlabeled when none was assigned).
struct LabeledFootprintSet {
    std::vector<BuildingFootprint> footprints;
    std::vector<std::uint8_t> labels; // parallel to footprints
    std::uint32_t crs_id = 0;

    std::size_t size() const { return footprints.size(); }
};

struct FootprintCollection {
    std::vector<BuildingFootprint> footprints;
    std::vector<std::uint8_t> damage; // per feature, kUnlabeled when absent
    std::uint32_t crs_id = 0;
};

struct PointCollection {
    std::vector<DamagePoint> points;
    std::uint32_t crs_id = 0;
};

namespace detail {

inline std::uint32_t parse_crs_member(const nlohmann::json& j) {
    // Accepts the legacy GeoJSON "crs" member with an "EPSG:xxxx" name.
    if (!j.contains("crs")) return 0;
    try {
        std::string name = j["crs"]["properties"]["name"].get<std::string>();
        auto pos = name.rfind(':');
        if (pos != std::string::npos) name = name.substr(pos + 1);
        return static_cast<std::uint32_t>(std::stoul(name));
    } catch (...) {
        return 0;
    }
}

inline Polygon parse_polygon(const nlohmann::json& coords) {
    Polygon poly;
    for (const auto& ring_json : coords) {
        Ring ring;
        for (const auto& pt : ring_json) {
            require(pt.size() >= 2, "polygon coordinate needs [x, y]");
            ring.push_back({pt[0].get<double>(), pt[1].get<double>()});
        }
        poly.rings.push_back(std::move(ring));
    }
    require(!poly.rings.empty() && poly.rings[0].size() >= 3, "degenerate polygon ring");
    return poly;
}

} // namespace detail

/// Loads building footprints from a GeoJSON feature collection. Each feature
/// needs a Polygon geometry and an id (feature "id" or properties.id); an
/// optional integer property "damage" carries a pre-assigned label.
inline FootprintCollection load_footprints(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open footprints file: " + path);
    nlohmann::json j;
    in >> j;
    require(j.value("type", "") == "FeatureCollection", "expected a FeatureCollection: " + path);

    FootprintCollection out;
    out.crs_id = detail::parse_crs_member(j);
    int auto_id = 0;
    for (const auto& feat : j["features"]) {
        const auto& geom = feat.at("geometry");
        const std::string type = geom.value("type", "");
        require(type == "Polygon", "unsupported geometry type '" + type + "' in " + path);

        std::string id;
        if (feat.contains("id")) {
            id = feat["id"].is_string() ? feat["id"].get<std::string>()
                                        : std::to_string(feat["id"].get<std::int64_t>());
        } else if (feat.contains("properties") && feat["properties"].contains("id")) {
            const auto& pid = feat["properties"]["id"];
            id = pid.is_string() ? pid.get<std::string>()
                                 : std::to_string(pid.get<std::int64_t>());
        } else {
            id = "feature-" + std::to_string(auto_id);
        }
        ++auto_id;

        out.footprints.push_back(make_footprint(id, detail::parse_polygon(geom["coordinates"])));

        std::uint8_t dmg = kUnlabeled;
        if (feat.contains("properties") && feat["properties"].is_object() &&
            feat["properties"].contains("damage") && !feat["properties"]["damage"].is_null()) {
            const int d = feat["properties"]["damage"].get<int>();
            require(d >= 0 && d < kDamageClassCount, "damage property out of range in " + path);
            dmg = static_cast<std::uint8_t>(d);
        }
        out.damage.push_back(dmg);
    }
    return out;
}

inline void save_labeled_footprints(const std::string& path, const LabeledFootprintSet& set) {
    nlohmann::json features = nlohmann::json::array();
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& fp = set.footprints[i];
        nlohmann::json rings = nlohmann::json::array();
        for (const auto& ring : fp.polygon.rings) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& p : ring) r.push_back({p.x, p.y});
            rings.push_back(std::move(r));
        }
        nlohmann::json props;
        props["id"] = fp.id;
        if (set.labels[i] == kUnlabeled) {
            props["damage"] = nullptr;
        } else {
            props["damage"] = static_cast<int>(set.labels[i]);
        }
        features.push_back({{"type", "Feature"},
                            {"properties", std::move(props)},
                            {"geometry", {{"type", "Polygon"}, {"coordinates", std::move(rings)}}}});
    }
    nlohmann::json j = {{"type", "FeatureCollection"}, {"features", std::move(features)}};
    if (set.crs_id != 0) {
        j["crs"] = {{"type", "name"},
                    {"properties", {{"name", "EPSG:" + std::to_string(set.crs_id)}}}};
    }
    std::ofstream out(path);
    require(out.good(), "cannot write footprints file: " + path);
    out << j.dump(1) << "\n";
}

namespace detail {

inline PointSource parse_source(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "expert") return PointSource::Expert;
    return PointSource::External;
}

inline DamageLabel parse_point_label(int v, const std::string& path) {
    require(v >= 0 && v < kDamageClassCount,
            "point label out of range (" + std::to_string(v) + ") in " + path);
    return static_cast<DamageLabel>(v);
}

} // namespace detail

/// Loads damage points from GeoJSON (Point features with properties
/// label/source) or delimited text with an x,y,label,source header.
inline PointCollection load_damage_points(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open points file: " + path);

    PointCollection out;
    char first = 0;
    in >> first;
    in.seekg(0);
    if (first == '{') {
        nlohmann::json j;
        in >> j;
        out.crs_id = detail::parse_crs_member(j);
        for (const auto& feat : j["features"]) {
            const auto& geom = feat.at("geometry");
            require(geom.value("type", "") == "Point", "points file must contain Point features");
            DamagePoint p;
            p.location = {geom["coordinates"][0].get<double>(),
                          geom["coordinates"][1].get<double>()};
            const auto& props = feat.at("properties");
            p.label = detail::parse_point_label(props.at("label").get<int>(), path);
            p.source = detail::parse_source(props.value("source", "external"));
            out.points.push_back(p);
        }
        return out;
    }

    // CSV: header "x,y,label,source" (source optional); '#' lines skipped;
    // a "# crs: EPSG:xxxx" comment sets the CRS.
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("EPSG:");
            if (pos != std::string::npos) {
                out.crs_id = static_cast<std::uint32_t>(std::stoul(line.substr(pos + 5)));
            }
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!header_seen) {
            header_seen = true;
            if (!cells.empty() && (cells[0] == "x" || cells[0] == "X")) continue; // header row
        }
        require(cells.size() >= 3, "points row needs x,y,label: " + line);
        DamagePoint p;
        p.location = {std::stod(cells[0]), std::stod(cells[1])};
        p.label = detail::parse_point_label(std::stoi(cells[2]), path);
        p.source = cells.size() > 3 ? detail::parse_source(cells[3]) : PointSource::External;
        out.points.push_back(p);
    }
    return out;
}

} // namespace bda
