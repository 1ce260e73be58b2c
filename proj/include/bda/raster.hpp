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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bda/common.hpp"
#include "bda/geometry.hpp"
#include "bda/image.hpp"
#include "bda/labels.hpp"
#include "bda/tiff.hpp"

namespace bda {

/// Affine pixel->world map: x = a*col + b*row + c, y = d*col + e*row + f.
struct Affine {
    double a = 1, b = 0, c = 0;
    double d = 0, e = 1, f = 0;

    Point2 apply(double col, double row) const {
        return {a * col + b * row + c, d * col + e * row + f};
    }

    /// World position of the center of pixel (col, row) under the
    /// pixel-is-area convention.
    Point2 pixel_center(int col, int row) const { return apply(col + 0.5, row + 0.5); }

    double det() const { return a * e - b * d; }
    bool invertible() const { return std::abs(det()) > 1e-300; }

    /// World -> fractional pixel coordinates.
    Point2 world_to_pixel(const Point2& w) const {
        const double dt = det();
        require(std::abs(dt) > 1e-300, "non-invertible geotransform");
        const double x = w.x - c, y = w.y - f;
        return {(e * x - b * y) / dt, (-d * x + a * y) / dt};
    }

    tiff::AffineCoeffs coeffs() const { return {a, b, c, d, e, f}; }
    static Affine from_coeffs(const tiff::AffineCoeffs& t) {
        return Affine{t[0], t[1], t[2], t[3], t[4], t[5]};
    }
};

/// A georeferenced multi-band 8-bit image.
struct GeoRaster {
    ImageU8 image;
    Affine transform;
    std::uint32_t crs_id = 0;

    int width() const { return image.width; }
    int height() const { return image.height; }
    int bands() const { return image.bands; }
};

/// A per-pixel label raster aligned with a GeoRaster grid. Values are damage
/// codes {0..3} or kUnlabeled.
struct LabelMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> values;
    Affine transform;
    std::uint32_t crs_id = 0;

    LabelMask() = default;
    LabelMask(int w, int h, std::uint8_t fill = kUnlabeled)
        : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t& at(int y, int x) {
        return values[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t at(int y, int x) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }

    std::size_t labeled_count() const {
        std::size_t n = 0;
        for (auto v : values) n += (v != kUnlabeled);
        return n;
    }
};

inline GeoRaster load_raster(const std::string& path) {
    tiff::GeoInfo geo;
    GeoRaster r;
    r.image = tiff::read(path, &geo);
    require(r.image.bands >= 3, "insufficient bands (need >= 3): " + path);
    require(geo.has_transform, "not georeferenced (no affine transform): " + path);
    r.transform = Affine::from_coeffs(geo.transform);
    require(r.transform.invertible(), "degenerate geotransform: " + path);
    r.crs_id = geo.epsg;
    return r;
}

inline void save_raster(const std::string& path, const GeoRaster& r) {
    tiff::GeoInfo geo;
    geo.transform = r.transform.coeffs();
    geo.has_transform = true;
    geo.epsg = r.crs_id;
    tiff::write(path, r.image, &geo);
}

inline LabelMask load_mask(const std::string& path) {
    tiff::GeoInfo geo;
    ImageU8 img = tiff::read(path, &geo);
    require(img.bands == 1, "label mask must be single-band: " + path);
    LabelMask m(img.width, img.height);
    m.values = std::move(img.data);
    for (auto v : m.values) {
        require(v == kUnlabeled || is_damage_code(v),
                "invalid label value " + std::to_string(v) + " in " + path);
    }
    if (geo.has_transform) m.transform = Affine::from_coeffs(geo.transform);
    m.crs_id = geo.epsg;
    return m;
}

inline void save_mask(const std::string& path, const LabelMask& m) {
    ImageU8 img(m.width, m.height, 1);
    img.data = m.values;
    tiff::GeoInfo geo;
    geo.transform = m.transform.coeffs();
    geo.has_transform = true;
    geo.epsg = m.crs_id;
    tiff::write(path, img, &geo);
}

} // namespace bda
