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

#include <vector>

#include "bda/common.hpp"

namespace bda {

/// Half-open pixel rectangle [x0, x1) x [y0, y1).
struct PixelRect {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }
    long long area() const { return static_cast<long long>(width()) * height(); }

    bool intersects(const PixelRect& o) const {
        return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1;
    }
    bool contains(const PixelRect& o) const {
        return o.x0 >= x0 && o.x1 <= x1 && o.y0 >= y0 && o.y1 <= y1;
    }
    bool operator==(const PixelRect&) const = default;
};

/// One leave-one-quarter-out fold: a held-out test quarter inside a scene.
/// The training region is everything outside it.
struct FoldSpec {
    int fold_index = 0;
    PixelRect test_quarter;
    PixelRect scene;
};

/// Splits the scene at floor(width/2), floor(height/2) into four quarters
/// (row-major: top-left, top-right, bottom-left, bottom-right). They are
/// pairwise disjoint and their union is the full extent.
inline std::vector<FoldSpec> quarter_split(int scene_width, int scene_height) {
    require(scene_width >= 2 && scene_height >= 2,
            "degenerate scene (each dimension must be >= 2)");
    const int mx = scene_width / 2;
    const int my = scene_height / 2;
    const PixelRect scene{0, 0, scene_width, scene_height};
    return {
        {0, {0, 0, mx, my}, scene},
        {1, {mx, 0, scene_width, my}, scene},
        {2, {0, my, mx, scene_height}, scene},
        {3, {mx, my, scene_width, scene_height}, scene},
    };
}

} // namespace bda
