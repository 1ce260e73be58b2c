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
#include <cmath>
#include <numeric>
#include <vector>

#include "bda/footprints.hpp"
#include "bda/geometry.hpp"
#include "bda/labels.hpp"
#include "bda/raster.hpp"

namespace bda {

/// Burns labeled footprints into a per-pixel mask on the grid of `grid`.
///
/// Membership is decided by the pixel-center-in-polygon test. Polygons are
/// painted in ascending severity (Unlabeled first, then damage codes 0..3,
/// id as the secondary order), so where footprints overlap the worst damage
/// wins. Background pixels stay kUnlabeled.
inline LabelMask rasterize_labels(const LabeledFootprintSet& labeled, const GeoRaster& grid) {
    if (labeled.crs_id != 0 && grid.crs_id != 0) {
        require(labeled.crs_id == grid.crs_id,
                "CRS mismatch between footprints (EPSG:" + std::to_string(labeled.crs_id) +
                    ") and grid (EPSG:" + std::to_string(grid.crs_id) + ")");
    }

    LabelMask mask(grid.width(), grid.height());
    mask.transform = grid.transform;
    mask.crs_id = grid.crs_id;

    std::vector<std::size_t> order(labeled.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        // kUnlabeled (255) sorts before labeled codes
        const int sa = labeled.labels[a] == kUnlabeled ? -1 : labeled.labels[a];
        const int sb = labeled.labels[b] == kUnlabeled ? -1 : labeled.labels[b];
        if (sa != sb) return sa < sb;
        return labeled.footprints[a].id < labeled.footprints[b].id;
    });

    for (std::size_t k : order) {
        const auto& fp = labeled.footprints[k];
        const std::uint8_t value = labeled.labels[k];
        const Box box = bounding_box(fp.polygon);

        // pixel range covering the bbox, robust to axis flips
        const Point2 p0 = grid.transform.world_to_pixel({box.x0, box.y0});
        const Point2 p1 = grid.transform.world_to_pixel({box.x1, box.y1});
        int x_lo = static_cast<int>(std::floor(std::min(p0.x, p1.x))) - 1;
        int x_hi = static_cast<int>(std::ceil(std::max(p0.x, p1.x))) + 1;
        int y_lo = static_cast<int>(std::floor(std::min(p0.y, p1.y))) - 1;
        int y_hi = static_cast<int>(std::ceil(std::max(p0.y, p1.y))) + 1;
        x_lo = std::max(x_lo, 0);
        y_lo = std::max(y_lo, 0);
        x_hi = std::min(x_hi, mask.width - 1);
        y_hi = std::min(y_hi, mask.height - 1);

        for (int y = y_lo; y <= y_hi; ++y) {
            for (int x = x_lo; x <= x_hi; ++x) {
                if (point_in_polygon(fp.polygon, grid.transform.pixel_center(x, y))) {
                    mask.at(y, x) = value;
                }
            }
        }
    }
    return mask;
}

/// Grayscale (severity-maximum) dilation restricted to labeled pixels:
/// each output pixel takes the most severe non-Unlabeled value inside the
/// kernel window, or stays kUnlabeled when the window holds none.
inline LabelMask dilate_mask(const LabelMask& mask, int kernel = 3) {
    require(kernel >= 1 && kernel % 2 == 1, "dilation kernel must be odd and >= 1");
    if (kernel == 1) return mask;
    const int r = kernel / 2;

    // separable max filter with kUnlabeled as -inf
    auto severity = [](std::uint8_t v) { return v == kUnlabeled ? -1 : static_cast<int>(v); };

    LabelMask horiz = mask;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            int best = -1;
            for (int dx = -r; dx <= r; ++dx) {
                const int xx = x + dx;
                if (xx < 0 || xx >= mask.width) continue;
                best = std::max(best, severity(mask.at(y, xx)));
            }
            horiz.at(y, x) = best < 0 ? kUnlabeled : static_cast<std::uint8_t>(best);
        }
    }
    LabelMask out = horiz;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            int best = -1;
            for (int dy = -r; dy <= r; ++dy) {
                const int yy = y + dy;
                if (yy < 0 || yy >= mask.height) continue;
                best = std::max(best, severity(horiz.at(yy, x)));
            }
            out.at(y, x) = best < 0 ? kUnlabeled : static_cast<std::uint8_t>(best);
        }
    }
    return out;
}

/// Remaps every pixel of a mask under a merge scheme; kUnlabeled unchanged.
inline LabelMask merge_classes(const LabelMask& mask, MergeScheme scheme) {
    LabelMask out = mask;
    for (auto& v : out.values) v = merge_label(v, scheme);
    return out;
}

} // namespace bda
