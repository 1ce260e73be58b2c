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

#include <algorithm>
#include <limits>
#include <vector>

#include "bda/footprints.hpp"
#include "bda/geometry.hpp"
#include "bda/labels.hpp"

namespace bda {

struct AssignmentStats {
    std::size_t assigned_points = 0;
    std::size_t unassigned_points = 0; // farther than the buffer from every footprint
    std::size_t labeled_footprints = 0;
};

/// Transfers damage labels from assessment points to building footprints.
///
/// A point is a candidate for every footprint whose polygon (interior or
/// boundary) lies within `buffer_m` meters. A multi-candidate point goes only
/// to the footprint with the nearest barycentre (exact ties break on the
/// lowest footprint id). A footprint hit by several points keeps the most
/// severe label. Points outside every buffer are dropped. The result is
/// independent of the input ordering of points and footprints.
inline LabeledFootprintSet assign_point_labels(const std::vector<BuildingFootprint>& footprints,
                                               const std::vector<DamagePoint>& points,
                                               double buffer_m = 7.5,
                                               AssignmentStats* stats = nullptr) {
    require(!footprints.empty(), "empty footprint list");
    require(buffer_m > 0.0, "buffer must be positive");

    LabeledFootprintSet out;
    out.footprints = footprints;
    out.labels.assign(footprints.size(), kUnlabeled);

    std::vector<Box> boxes;
    boxes.reserve(footprints.size());
    for (const auto& fp : footprints) boxes.push_back(bounding_box(fp.polygon).expanded(buffer_m));

    AssignmentStats st;
    for (const auto& pt : points) {
        std::size_t best = footprints.size();
        double best_bary = std::numeric_limits<double>::max();
        for (std::size_t i = 0; i < footprints.size(); ++i) {
            if (!boxes[i].contains(pt.location)) continue;
            if (distance_to_polygon(footprints[i].polygon, pt.location) > buffer_m) continue;
            const double bary = distance(footprints[i].barycentre, pt.location);
            if (bary < best_bary ||
                (bary == best_bary && best < footprints.size() &&
                 footprints[i].id < footprints[best].id)) {
                best = i;
                best_bary = bary;
            }
        }
        if (best == footprints.size()) {
            ++st.unassigned_points;
            continue;
        }
        ++st.assigned_points;
        const auto code = static_cast<std::uint8_t>(pt.label);
        if (out.labels[best] == kUnlabeled || code > out.labels[best]) {
            out.labels[best] = code; // worst severity wins
        }
    }
    st.labeled_footprints =
        static_cast<std::size_t>(std::count_if(out.labels.begin(), out.labels.end(),
                                               [](std::uint8_t v) { return v != kUnlabeled; }));
    if (stats) *stats = st;
    return out;
}

/// Collection-level wrapper that also enforces the shared-CRS precondition.
inline LabeledFootprintSet assign_point_labels(const FootprintCollection& footprints,
                                               const PointCollection& points,
                                               double buffer_m = 7.5,
                                               AssignmentStats* stats = nullptr) {
    if (footprints.crs_id != 0 && points.crs_id != 0) {
        require(footprints.crs_id == points.crs_id,
                "CRS mismatch between footprints (EPSG:" + std::to_string(footprints.crs_id) +
                    ") and points (EPSG:" + std::to_string(points.crs_id) + ")");
    }
    auto out = assign_point_labels(footprints.footprints, points.points, buffer_m, stats);
    out.crs_id = footprints.crs_id != 0 ? footprints.crs_id : points.crs_id;
    return out;
}

/// Applies a merge scheme to the per-footprint labels.
inline LabeledFootprintSet merge_footprint_labels(LabeledFootprintSet set, MergeScheme scheme) {
    for (auto& l : set.labels) l = merge_label(l, scheme);
    return set;
}

} // namespace bda
