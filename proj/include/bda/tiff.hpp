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

// Minimal GeoTIFF codec: classic (non-Big) TIFF, 8-bit samples, uncompressed,
// band-interleaved, strip or tile layout, plus the GeoTIFF tags needed for an
// affine pixel->world transform and an EPSG code. Enough to round-trip every
// raster this toolkit produces and to ingest externally prepared uncompressed
// exports.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "bda/common.hpp"
#include "bda/image.hpp"

namespace bda::tiff {

/// Pixel->world affine coefficients: x = a*col + b*row + c, y = d*col + e*row + f.
using AffineCoeffs = std::array<double, 6>;

struct GeoInfo {
    AffineCoeffs transform{1, 0, 0, 0, 1, 0};
    std::uint32_t epsg = 0; // 0 = unknown
    bool has_transform = false;
};

namespace detail {

enum : std::uint16_t {
    kTagWidth = 256,
    kTagHeight = 257,
    kTagBitsPerSample = 258,
    kTagCompression = 259,
    kTagPhotometric = 262,
    kTagStripOffsets = 273,
    kTagSamplesPerPixel = 277,
    kTagRowsPerStrip = 278,
    kTagStripByteCounts = 279,
    kTagPlanarConfig = 284,
    kTagTileWidth = 322,
    kTagTileLength = 323,
    kTagTileOffsets = 324,
    kTagTileByteCounts = 325,
    kTagModelPixelScale = 33550,
    kTagModelTiepoint = 33922,
    kTagModelTransformation = 34264,
    kTagGeoKeyDirectory = 34735,
};

struct Entry {
    std::uint16_t type = 0;
    std::uint64_t count = 0;
    std::vector<std::uint8_t> raw; // value bytes, already in file order
};

inline std::size_t type_size(std::uint16_t t) {
    switch (t) {
        case 1: case 2: case 6: case 7: return 1; // BYTE, ASCII, SBYTE, UNDEF
        case 3: case 8: return 2;                 // SHORT, SSHORT
        case 4: case 9: case 11: return 4;        // LONG, SLONG, FLOAT
        case 5: case 10: case 12: return 8;       // RATIONAL, SRATIONAL, DOUBLE
        default: return 0;
    }
}

class Reader {
public:
    explicit Reader(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        require(in.good(), "cannot open file: " + path);
        bytes_.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        require(bytes_.size() >= 8, "not a TIFF file: " + path);
        if (bytes_[0] == 'I' && bytes_[1] == 'I') {
            big_endian_ = false;
        } else if (bytes_[0] == 'M' && bytes_[1] == 'M') {
            big_endian_ = true;
        } else {
            fail("not a TIFF file: " + path);
        }
        require(u16(2) == 42, "unsupported TIFF variant (BigTIFF?): " + path);
        parse_ifd(u32(4));
    }

    std::vector<std::uint64_t> values(std::uint16_t tag) const {
        auto it = entries_.find(tag);
        if (it == entries_.end()) return {};
        const Entry& e = it->second;
        std::vector<std::uint64_t> out;
        out.reserve(e.count);
        const std::size_t ts = type_size(e.type);
        for (std::uint64_t i = 0; i < e.count; ++i) {
            const std::uint8_t* p = e.raw.data() + i * ts;
            switch (ts) {
                case 1: out.push_back(p[0]); break;
                case 2: out.push_back(load16(p)); break;
                case 4: out.push_back(load32(p)); break;
                case 8: out.push_back(load32(p)); break; // rationals unused here
                default: out.push_back(0);
            }
        }
        return out;
    }

    std::vector<double> doubles(std::uint16_t tag) const {
        auto it = entries_.find(tag);
        if (it == entries_.end()) return {};
        const Entry& e = it->second;
        require(e.type == 12, "expected DOUBLE tag values");
        std::vector<double> out(e.count);
        for (std::uint64_t i = 0; i < e.count; ++i) {
            std::uint64_t bits = 0;
            const std::uint8_t* p = e.raw.data() + i * 8;
            if (big_endian_) {
                for (int k = 0; k < 8; ++k) bits = (bits << 8) | p[k];
            } else {
                for (int k = 7; k >= 0; --k) bits = (bits << 8) | p[k];
            }
            double d;
            std::memcpy(&d, &bits, 8);
            out[i] = d;
        }
        return out;
    }

    std::uint64_t scalar(std::uint16_t tag, std::uint64_t fallback) const {
        auto v = values(tag);
        return v.empty() ? fallback : v[0];
    }

    bool has(std::uint16_t tag) const { return entries_.count(tag) > 0; }

    const std::uint8_t* data_at(std::uint64_t off, std::uint64_t len) const {
        require(off + len <= bytes_.size(), "TIFF data block out of bounds");
        return bytes_.data() + off;
    }

private:
    void parse_ifd(std::uint32_t off) {
        require(off + 2 <= bytes_.size(), "truncated TIFF IFD");
        const std::uint16_t n = u16(off);
        std::uint64_t pos = off + 2;
        for (std::uint16_t i = 0; i < n; ++i, pos += 12) {
            require(pos + 12 <= bytes_.size(), "truncated TIFF IFD entry");
            Entry e;
            const std::uint16_t tag = u16(pos);
            e.type = u16(pos + 2);
            e.count = u32(pos + 4);
            const std::size_t ts = type_size(e.type);
            if (ts == 0) continue;
            const std::uint64_t nbytes = ts * e.count;
            std::uint64_t src = (nbytes <= 4) ? pos + 8 : u32(pos + 8);
            require(src + nbytes <= bytes_.size(), "TIFF tag value out of bounds");
            e.raw.assign(bytes_.begin() + src, bytes_.begin() + src + nbytes);
            entries_[tag] = std::move(e);
        }
    }

    std::uint16_t load16(const std::uint8_t* p) const {
        return big_endian_ ? std::uint16_t(p[0] << 8 | p[1])
                           : std::uint16_t(p[1] << 8 | p[0]);
    }
    std::uint32_t load32(const std::uint8_t* p) const {
        return big_endian_
                   ? (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
                         (std::uint32_t(p[2]) << 8) | p[3]
                   : (std::uint32_t(p[3]) << 24) | (std::uint32_t(p[2]) << 16) |
                         (std::uint32_t(p[1]) << 8) | p[0];
    }
    std::uint16_t u16(std::uint64_t off) const { return load16(bytes_.data() + off); }
    std::uint32_t u32(std::uint64_t off) const { return load32(bytes_.data() + off); }

    std::vector<std::uint8_t> bytes_;
    std::map<std::uint16_t, Entry> entries_;
    bool big_endian_ = false;
};

} // namespace detail

/// Reads an 8-bit uncompressed TIFF with optional GeoTIFF tags.
inline ImageU8 read(const std::string& path, GeoInfo* geo = nullptr) {
    using namespace detail;
    Reader r(path);

    const int width = static_cast<int>(r.scalar(kTagWidth, 0));
    const int height = static_cast<int>(r.scalar(kTagHeight, 0));
    require(width > 0 && height > 0, "TIFF missing dimensions: " + path);
    const int bands = static_cast<int>(r.scalar(kTagSamplesPerPixel, 1));
    require(r.scalar(kTagCompression, 1) == 1,
            "unsupported TIFF compression (only uncompressed supported): " + path);
    require(r.scalar(kTagPlanarConfig, 1) == 1,
            "unsupported planar configuration: " + path);
    for (auto bits : r.values(kTagBitsPerSample)) {
        require(bits == 8, "unsupported bit depth (8-bit only): " + path);
    }

    ImageU8 img(width, height, bands);
    const std::size_t row_bytes = static_cast<std::size_t>(width) * bands;

    if (r.has(kTagTileOffsets)) {
        const int tw = static_cast<int>(r.scalar(kTagTileWidth, 0));
        const int th = static_cast<int>(r.scalar(kTagTileLength, 0));
        require(tw > 0 && th > 0, "bad tile geometry: " + path);
        auto offsets = r.values(kTagTileOffsets);
        const int tiles_across = (width + tw - 1) / tw;
        const int tiles_down = (height + th - 1) / th;
        require(static_cast<int>(offsets.size()) >= tiles_across * tiles_down,
                "missing tiles: " + path);
        const std::size_t tile_row_bytes = static_cast<std::size_t>(tw) * bands;
        for (int ty = 0; ty < tiles_down; ++ty) {
            for (int tx = 0; tx < tiles_across; ++tx) {
                const auto* src =
                    r.data_at(offsets[ty * tiles_across + tx], tile_row_bytes * th);
                for (int y = 0; y < th; ++y) {
                    const int iy = ty * th + y;
                    if (iy >= height) break;
                    const int copy_w = std::min(tw, width - tx * tw);
                    std::memcpy(&img.at(iy, tx * tw, 0), src + y * tile_row_bytes,
                                static_cast<std::size_t>(copy_w) * bands);
                }
            }
        }
    } else {
        auto offsets = r.values(kTagStripOffsets);
        auto counts = r.values(kTagStripByteCounts);
        require(!offsets.empty(), "TIFF has no pixel data: " + path);
        const std::uint64_t rows_per_strip =
            r.scalar(kTagRowsPerStrip, static_cast<std::uint64_t>(height));
        std::size_t row = 0;
        for (std::size_t s = 0; s < offsets.size() && row < static_cast<std::size_t>(height); ++s) {
            const std::size_t rows =
                std::min<std::size_t>(rows_per_strip, height - row);
            const std::size_t nbytes = rows * row_bytes;
            if (s < counts.size()) require(counts[s] >= nbytes, "short strip: " + path);
            const auto* src = r.data_at(offsets[s], nbytes);
            std::memcpy(&img.at(static_cast<int>(row), 0, 0), src, nbytes);
            row += rows;
        }
        require(row == static_cast<std::size_t>(height), "missing strips: " + path);
    }

    if (geo) {
        *geo = GeoInfo{};
        auto xf = r.doubles(kTagModelTransformation);
        auto scale = r.doubles(kTagModelPixelScale);
        auto tie = r.doubles(kTagModelTiepoint);
        if (xf.size() >= 16) {
            geo->transform = {xf[0], xf[1], xf[3], xf[4], xf[5], xf[7]};
            geo->has_transform = true;
        } else if (scale.size() >= 2 && tie.size() >= 6) {
            // tiepoint: raster (i,j,k) -> model (X,Y,Z); Y axis points up
            geo->transform = {scale[0], 0.0, tie[3] - tie[0] * scale[0],
                              0.0, -scale[1], tie[4] + tie[1] * scale[1]};
            geo->has_transform = true;
        }
        auto keys = r.values(kTagGeoKeyDirectory);
        for (std::size_t i = 4; i + 3 < keys.size(); i += 4) {
            const std::uint64_t key = keys[i], loc = keys[i + 1], value = keys[i + 3];
            if (loc == 0 && (key == 3072 || key == 2048)) { // projected / geographic CRS
                geo->epsg = static_cast<std::uint32_t>(value);
            }
        }
    }
    return img;
}

namespace detail {

class Writer {
public:
    void add(std::uint16_t tag, std::uint16_t type, const std::vector<std::uint64_t>& vals) {
        Field f{tag, type, {}};
        for (auto v : vals) {
            const std::size_t ts = type_size(type);
            for (std::size_t k = 0; k < ts; ++k) f.raw.push_back((v >> (8 * k)) & 0xff);
        }
        f.count = vals.size();
        fields_.push_back(std::move(f));
    }

    void add_doubles(std::uint16_t tag, const std::vector<double>& vals) {
        Field f{tag, 12, {}};
        for (double d : vals) {
            std::uint64_t bits;
            std::memcpy(&bits, &d, 8);
            for (int k = 0; k < 8; ++k) f.raw.push_back((bits >> (8 * k)) & 0xff);
        }
        f.count = vals.size();
        fields_.push_back(std::move(f));
    }

    void write(const std::string& path, const std::uint8_t* pixels, std::size_t nbytes) {
        std::sort(fields_.begin(), fields_.end(),
                  [](const Field& a, const Field& b) { return a.tag < b.tag; });

        // layout: header(8) | pixel data | overflow values | IFD
        const std::uint64_t data_off = 8;
        std::uint64_t pos = data_off + nbytes;
        for (auto& f : fields_) {
            if (f.raw.size() > 4) {
                if (pos % 2) ++pos; // word alignment
                f.value_off = pos;
                pos += f.raw.size();
            }
        }
        if (pos % 2) ++pos;
        const std::uint64_t ifd_off = pos;

        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        require(out.good(), "cannot write file: " + path);
        const char header[4] = {'I', 'I', 42, 0};
        out.write(header, 4);
        put32(out, static_cast<std::uint32_t>(ifd_off));
        out.write(reinterpret_cast<const char*>(pixels), static_cast<std::streamsize>(nbytes));

        // overflow values
        std::uint64_t cur = data_off + nbytes;
        for (const auto& f : fields_) {
            if (f.raw.size() > 4) {
                if (cur % 2) { out.put(0); ++cur; }
                out.write(reinterpret_cast<const char*>(f.raw.data()),
                          static_cast<std::streamsize>(f.raw.size()));
                cur += f.raw.size();
            }
        }
        if (cur % 2) { out.put(0); ++cur; }

        put16(out, static_cast<std::uint16_t>(fields_.size()));
        for (const auto& f : fields_) {
            put16(out, f.tag);
            put16(out, f.type);
            put32(out, static_cast<std::uint32_t>(f.count));
            if (f.raw.size() > 4) {
                put32(out, static_cast<std::uint32_t>(f.value_off));
            } else {
                std::uint8_t buf[4] = {0, 0, 0, 0};
                std::memcpy(buf, f.raw.data(), f.raw.size());
                out.write(reinterpret_cast<const char*>(buf), 4);
            }
        }
        put32(out, 0); // no next IFD
        require(out.good(), "write failed: " + path);
    }

private:
    struct Field {
        std::uint16_t tag = 0;
        std::uint16_t type = 0;
        std::vector<std::uint8_t> raw;
        std::uint64_t count = 0;
        std::uint64_t value_off = 0;
    };

    static void put16(std::ofstream& o, std::uint16_t v) {
        char b[2] = {char(v & 0xff), char(v >> 8)};
        o.write(b, 2);
    }
    static void put32(std::ofstream& o, std::uint32_t v) {
        char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff),
                     char((v >> 24) & 0xff)};
        o.write(b, 4);
    }

    std::vector<Field> fields_;
};

} // namespace detail

/// Writes an 8-bit uncompressed striped TIFF; geo tags added when available.
inline void write(const std::string& path, const ImageU8& img, const GeoInfo* geo = nullptr) {
    using namespace detail;
    require(img.width > 0 && img.height > 0 && img.bands > 0, "empty image");
    Writer w;
    w.add(kTagWidth, 4, {static_cast<std::uint64_t>(img.width)});
    w.add(kTagHeight, 4, {static_cast<std::uint64_t>(img.height)});
    w.add(kTagBitsPerSample, 3, std::vector<std::uint64_t>(img.bands, 8));
    w.add(kTagCompression, 3, {1});
    w.add(kTagPhotometric, 3, {img.bands >= 3 ? 2ull : 1ull});
    w.add(kTagStripOffsets, 4, {8});
    w.add(kTagSamplesPerPixel, 3, {static_cast<std::uint64_t>(img.bands)});
    w.add(kTagRowsPerStrip, 4, {static_cast<std::uint64_t>(img.height)});
    w.add(kTagStripByteCounts, 4, {static_cast<std::uint64_t>(img.size())});
    w.add(kTagPlanarConfig, 3, {1});
    if (geo && geo->has_transform) {
        const auto& t = geo->transform;
        if (t[1] == 0.0 && t[3] == 0.0) {
            w.add_doubles(kTagModelPixelScale, {t[0], -t[4], 0.0});
            w.add_doubles(kTagModelTiepoint, {0.0, 0.0, 0.0, t[2], t[5], 0.0});
        } else {
            w.add_doubles(kTagModelTransformation,
                          {t[0], t[1], 0, t[2], t[3], t[4], 0, t[5], 0, 0, 0, 0, 0, 0, 0, 1});
        }
        if (geo->epsg != 0) {
            w.add(kTagGeoKeyDirectory, 3,
                  {1, 1, 0, 3,
                   1024, 0, 1, 1,          // model type: projected
                   1025, 0, 1, 1,          // raster type: pixel-is-area
                   3072, 0, 1, geo->epsg});
        }
    }
    w.write(path, img.data.data(), img.size());
}

} // namespace bda::tiff
